#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "skisat/rng.hpp"
#include "skisat/types.hpp"

namespace skisat {

enum class PerturbationMode { ski_pulse, gaussian_noise, none };

std::string to_string(PerturbationMode mode);
PerturbationMode perturbation_mode_from_string(const std::string& name);

struct PerturbationConfig {
  PerturbationMode mode = PerturbationMode::ski_pulse;
  // One slot = one perturbation clock period; 16 steps of 20 ps = 320 ps.
  int slot_steps = 16;
  Real density_start = 0.5;
  Real density_end = 0.0;
  // gaussian_noise mode: RMS of one injection, applied once per slot.
  // 8 mV on a 0.6 V half-swing.
  Real noise_rms = 8.0 / 600.0;

  void validate() const;
};

// Precomputed slot bits; P(t) = slot_bits[t / slot_steps]. Precomputing the
// whole stream makes a run reproducible from (seed, config) alone.
struct PerturbationSchedule {
  std::vector<std::uint8_t> slot_bits;
  int slot_steps = 16;
  std::uint64_t seed = 0;

  bool bit_at(long step) const {
    const auto slot = static_cast<std::size_t>(step / slot_steps);
    return slot < slot_bits.size() && slot_bits[slot] != 0;
  }
  long covered_steps() const { return static_cast<long>(slot_bits.size()) * slot_steps; }
};

// Slot s is a pulse with probability interpolated linearly from
// density_start (first slot) to density_end (last slot).
PerturbationSchedule build_schedule(const PerturbationConfig& cfg, long max_steps,
                                    std::uint64_t seed);

// All-zero stream covering max_steps; used for the none and gaussian modes.
PerturbationSchedule zero_schedule(int slot_steps, long max_steps);

// One Gaussian injection on every node voltage, clamped to the rails; the
// comparator outputs are requantized against threshold. Declared here,
// defined with the dynamics (needs SolverState).
struct SolverState;
void apply_gaussian_noise(SolverState& state, Real noise_rms, Rng& rng, Real threshold = 0.5);

}  // namespace skisat
