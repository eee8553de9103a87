#include "skisat/perturb.hpp"

namespace skisat {

std::string to_string(PerturbationMode mode) {
  switch (mode) {
    case PerturbationMode::ski_pulse: return "ski";
    case PerturbationMode::gaussian_noise: return "gaussian";
    case PerturbationMode::none: return "none";
  }
  throw std::logic_error("unreachable");
}

PerturbationMode perturbation_mode_from_string(const std::string& name) {
  if (name == "ski" || name == "ski_pulse") return PerturbationMode::ski_pulse;
  if (name == "gaussian" || name == "gaussian_noise") return PerturbationMode::gaussian_noise;
  if (name == "none") return PerturbationMode::none;
  throw std::invalid_argument("unknown perturbation mode: " + name);
}

void PerturbationConfig::validate() const {
  if (slot_steps < 1) throw std::invalid_argument("slot_steps must be >= 1");
  if (density_start < 0.0 || density_start > 1.0 || density_end < 0.0 || density_end > 1.0)
    throw std::invalid_argument("pulse densities must lie in [0, 1]");
  if (noise_rms < 0.0) throw std::invalid_argument("noise_rms must be >= 0");
}

PerturbationSchedule build_schedule(const PerturbationConfig& cfg, long max_steps,
                                    std::uint64_t seed) {
  if (cfg.mode != PerturbationMode::ski_pulse)
    throw std::invalid_argument("build_schedule requires mode = ski_pulse");
  cfg.validate();
  if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");

  const long slots = (max_steps + cfg.slot_steps - 1) / cfg.slot_steps;
  PerturbationSchedule schedule;
  schedule.slot_steps = cfg.slot_steps;
  schedule.seed = seed;
  schedule.slot_bits.resize(slots);
  Rng rng(seed);
  for (long s = 0; s < slots; ++s) {
    const Real frac = slots > 1 ? static_cast<Real>(s) / static_cast<Real>(slots - 1) : 0.0;
    const Real density = cfg.density_start + (cfg.density_end - cfg.density_start) * frac;
    schedule.slot_bits[s] = rng.next_bool(density) ? 1 : 0;
  }
  return schedule;
}

PerturbationSchedule zero_schedule(int slot_steps, long max_steps) {
  PerturbationSchedule schedule;
  schedule.slot_steps = slot_steps;
  schedule.slot_bits.assign((max_steps + slot_steps - 1) / slot_steps, 0);
  return schedule;
}

}  // namespace skisat
