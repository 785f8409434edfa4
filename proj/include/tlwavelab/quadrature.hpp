// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace tlwavelab {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;  // estimated absolute error
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Raised when adaptive refinement exhausts its evaluation budget before
/// reaching the requested absolute tolerance.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved_error() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// Globally adaptive 15-point Gauss-Kronrod integration of `f` on [a, b].
/// Refines the interval with the largest error estimate until the summed
/// estimate drops below `abs_tol` or `max_evaluations` is spent.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol,
                           std::size_t max_evaluations = 2'000'000);

/// Same as `integrate` but throws QuadratureError on non-convergence.
double integrate_or_throw(const std::function<double(double)>& f, double a,
                          double b, double abs_tol,
                          std::size_t max_evaluations = 2'000'000);

}  // namespace tlwavelab
