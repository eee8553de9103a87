#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace skisat {

using Real = double;
using Vector = Eigen::VectorXd;
using IntVector = Eigen::VectorXi;

// Hamming-cube assignment: entries are 0 or 1, length = Cnf::num_vars.
using Assignment = Eigen::VectorXi;

}  // namespace skisat
