// SPDX-License-Identifier: Apache-2.0
//
// Scale-window truncations of a coefficient field. All of them keep mother
// entries only; the father block is dropped.
#pragma once

#include "tlwavelab/grid.hpp"

namespace tlwavelab {

/// Mother entries with s - N <= j <= s.
CoefficientField project_P_sN(const CoefficientField& c, int s, int n);

/// Scales s - t + 1 .. s (empty when t = 0). Requires 0 <= t <= N + 1.
CoefficientField op_T1(const CoefficientField& c, int s, int t, int n);
/// Scales s - N .. s - t (empty when t = N + 1). Requires 0 <= t <= N + 1.
CoefficientField op_T2(const CoefficientField& c, int s, int t, int n);

/// Single-scale slice Q_j.
CoefficientField project_Qj(const CoefficientField& c, int j);

}  // namespace tlwavelab
