// Copyright 2026 beliefdec Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BELIEFDEC_OVERHEAD_H
#define BELIEFDEC_OVERHEAD_H

#include <stdexcept>

namespace beliefdec {

struct OverheadRangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AnsatzCoeffs {
    double a;
    double b;
};

/// Default coefficients for the eta = 100 biased noise model, fitted from
/// below-threshold belief-matching data.
constexpr AnsatzCoeffs kDefaultTailored{0.0419, 24.76};
constexpr AnsatzCoeffs kDefaultRectX{0.1015, 42.30};
constexpr AnsatzCoeffs kDefaultRectZ{0.0527, 1.69};

struct OverheadResult {
    int dim1 = 0, dim2 = 0;     // (L, L) or (d_x, d_z)
    long long qubit_count = 0;  // 2 dim1 dim2 - 1
    // Continuous relaxation: real-valued dimensions solving the ansatz with
    // equality, as on the smooth overhead curves.
    double cont_dim1 = 0.0, cont_dim2 = 0.0;
    double cont_qubits = 0.0;
};

/// Smallest odd L with a (b p)^{(L+1)/2} <= target; qubits = 2 L^2 - 1.
OverheadResult solve_overhead_xy(AnsatzCoeffs tailored, double p, double target, int max_dim = 201);

/// Square CSS lattice: smallest odd L with the summed X and Z ansatz rates
/// at d_X = d_Z = r = L below the target.
OverheadResult solve_overhead_square(AnsatzCoeffs ax, AnsatzCoeffs az, double p, double target, int max_dim = 201);

/// Rectangular CSS lattice: the odd pair (d_X, d_Z) of minimum qubit count
/// with both logical rates at or below target/2, using r = max(d_X, d_Z)
/// rounds.
OverheadResult solve_overhead_rect(AnsatzCoeffs ax, AnsatzCoeffs az, double p, double target, int max_dim = 201);

}  // namespace beliefdec

#endif
