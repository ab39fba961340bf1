#pragma once

#include <Eigen/Dense>
#include <cstddef>

namespace toto {

struct SpectralEstimate {
  double radius = 0;
  double upper_bound = 0;  // Collatz-Wielandt bound from the final iterate
  double max_column_sum = 0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Perron root of a nonnegative square matrix by power iteration.
///
/// Iterates on A + I, whose Perron root rho(A) + 1 strictly dominates every
/// other eigenvalue in modulus, so periodic matrices converge too. A matrix
/// whose iterates vanish within n steps is nilpotent and reports 0.
/// Throws std::invalid_argument on negative entries and toto::Error if the
/// estimate exceeds the maximal column sum.
SpectralEstimate spectral_radius(const Eigen::MatrixXd& A, double tolerance = 1e-13,
                                 std::size_t max_iterations = 200000);

}  // namespace toto
