// SPDX-License-Identifier: Apache-2.0
#include "tlwavelab/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <queue>
#include <sstream>
#include <vector>

namespace tlwavelab {
namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment apply_rule(const std::function<double(double)>& f, double a, double b) {
  double error = 0.0;
  // max_depth = 0 gives the plain K15 estimate with |K15 - G7| as error.
  const double value = Rule::integrate(f, a, b, 0, 0.0, &error);
  return {a, b, value, error};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol,
                           std::size_t max_evaluations) {
  if (!(abs_tol > 0.0)) {
    throw std::invalid_argument("integrate: tolerance must be positive");
  }
  QuadratureResult result;
  if (a == b) {
    result.converged = true;
    return result;
  }

  std::priority_queue<Segment> heap;
  heap.push(apply_rule(f, a, b));
  result.evaluations = 15;
  double total_value = heap.top().value;
  double total_error = heap.top().error;

  while (total_error > abs_tol && result.evaluations + 30 <= max_evaluations) {
    const Segment worst = heap.top();
    // Stop splitting once the interval can no longer be halved in double.
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;
    heap.pop();
    const Segment left = apply_rule(f, worst.a, mid);
    const Segment right = apply_rule(f, mid, worst.b);
    result.evaluations += 30;
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum to shed the drift of the running totals.
  total_value = 0.0;
  total_error = 0.0;
  std::vector<Segment> segments;
  segments.reserve(heap.size());
  while (!heap.empty()) {
    segments.push_back(heap.top());
    heap.pop();
  }
  for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
    total_value += it->value;
    total_error += it->error;
  }
  result.value = total_value;
  result.abs_error = total_error;
  result.converged = total_error <= abs_tol;
  return result;
}

double integrate_or_throw(const std::function<double(double)>& f, double a,
                          double b, double abs_tol,
                          std::size_t max_evaluations) {
  const QuadratureResult r = integrate(f, a, b, abs_tol, max_evaluations);
  if (!r.converged) {
    std::ostringstream msg;
    msg << "quadrature on [" << a << ", " << b << "] did not reach tolerance "
        << abs_tol << " within " << max_evaluations
        << " evaluations (achieved " << r.abs_error << ")";
    throw QuadratureError(msg.str(), r.abs_error);
  }
  return r.value;
}

}  // namespace tlwavelab
