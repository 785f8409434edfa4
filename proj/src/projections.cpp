// SPDX-License-Identifier: Apache-2.0
#include "tlwavelab/projections.hpp"

#include <stdexcept>
#include <string>

namespace tlwavelab {
namespace {

void check_t(int t, int n) {
  if (n < 0) throw std::invalid_argument("truncation: N must be nonnegative");
  if (t < 0 || t > n + 1) {
    throw std::invalid_argument("truncation: t=" + std::to_string(t) + " outside {0,...," +
                                std::to_string(n + 1) + "}");
  }
}

}  // namespace

CoefficientField project_P_sN(const CoefficientField& c, int s, int n) {
  return c.restrict_scales(s - n, s);
}

CoefficientField op_T1(const CoefficientField& c, int s, int t, int n) {
  check_t(t, n);
  return c.restrict_scales(s - t + 1, s);
}

CoefficientField op_T2(const CoefficientField& c, int s, int t, int n) {
  check_t(t, n);
  return c.restrict_scales(s - n, s - t);
}

CoefficientField project_Qj(const CoefficientField& c, int j) { return c.restrict_scales(j, j); }

}  // namespace tlwavelab
