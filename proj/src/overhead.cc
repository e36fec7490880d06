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

#include "beliefdec/overhead.h"

#include <algorithm>
#include <cmath>
#include <functional>

namespace beliefdec {

namespace {

void check_inputs(const AnsatzCoeffs &c, double p, double target) {
    if (!(c.a > 0) || !(c.b > 0)) {
        throw std::invalid_argument("ansatz coefficients must be positive");
    }
    if (!(p > 0) || !(target > 0) || !(target < 1)) {
        throw std::invalid_argument("need p > 0 and target in (0, 1)");
    }
    if (!(c.b * p < 1)) {
        throw OverheadRangeError("b*p >= 1: the ansatz does not decay at this noise strength");
    }
}

double xy_rate(const AnsatzCoeffs &c, double p, double L) {
    return c.a * std::pow(c.b * p, 0.5 * (L + 1.0));
}

double rect_rate_x(const AnsatzCoeffs &ax, double p, double dx, double dz, double r) {
    return ax.a * r * dz / (dx * dx) * std::pow(ax.b * p, 0.5 * (dx + 1.0));
}

double rect_rate_z(const AnsatzCoeffs &az, double p, double dx, double dz, double r) {
    return az.a * r * dx / (dz * dz) * std::pow(az.b * p, 0.5 * (dz + 1.0));
}

// Bisection for the real L where rate(L) = target (rate decreasing in L).
double solve_continuous(double lo, double hi, const std::function<double(double)> &rate, double target) {
    for (int it = 0; it < 200; it++) {
        double mid = 0.5 * (lo + hi);
        if (rate(mid) > target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

OverheadResult solve_overhead_xy(AnsatzCoeffs tailored, double p, double target, int max_dim) {
    check_inputs(tailored, p, target);
    OverheadResult res;
    for (int L = 3; L <= max_dim; L += 2) {
        if (xy_rate(tailored, p, double(L)) <= target) {
            res.dim1 = res.dim2 = L;
            res.qubit_count = 2LL * L * L - 1;
            break;
        }
    }
    if (res.dim1 == 0) {
        throw OverheadRangeError("target logical error rate unreachable below the size bound");
    }
    double Lc = solve_continuous(1.0, double(max_dim), [&](double L) { return xy_rate(tailored, p, L); }, target);
    res.cont_dim1 = res.cont_dim2 = Lc;
    res.cont_qubits = 2.0 * Lc * Lc - 1.0;
    return res;
}

OverheadResult solve_overhead_square(AnsatzCoeffs ax, AnsatzCoeffs az, double p, double target, int max_dim) {
    check_inputs(ax, p, target);
    check_inputs(az, p, target);
    auto rate = [&](double L) {
        return rect_rate_x(ax, p, L, L, L) + rect_rate_z(az, p, L, L, L);
    };
    OverheadResult res;
    for (int L = 3; L <= max_dim; L += 2) {
        if (rate(double(L)) <= target) {
            res.dim1 = res.dim2 = L;
            res.qubit_count = 2LL * L * L - 1;
            break;
        }
    }
    if (res.dim1 == 0) {
        throw OverheadRangeError("target logical error rate unreachable below the size bound");
    }
    double Lc = solve_continuous(1.0, double(max_dim), rate, target);
    res.cont_dim1 = res.cont_dim2 = Lc;
    res.cont_qubits = 2.0 * Lc * Lc - 1.0;
    return res;
}

OverheadResult solve_overhead_rect(AnsatzCoeffs ax, AnsatzCoeffs az, double p, double target, int max_dim) {
    check_inputs(ax, p, target);
    check_inputs(az, p, target);
    const double half = 0.5 * target;

    OverheadResult res;
    long long best = -1;
    for (int dx = 3; dx <= max_dim; dx += 2) {
        for (int dz = 3; dz <= max_dim; dz += 2) {
            double r = double(std::max(dx, dz));
            long long qubits = 2LL * dx * dz - 1;
            if (best >= 0 && qubits >= best) {
                continue;
            }
            if (rect_rate_x(ax, p, dx, dz, r) <= half && rect_rate_z(az, p, dx, dz, r) <= half) {
                best = qubits;
                res.dim1 = dx;
                res.dim2 = dz;
                res.qubit_count = qubits;
            }
        }
    }
    if (best < 0) {
        throw OverheadRangeError("target logical error rate unreachable below the size bound");
    }

    // Continuous relaxation: solve p_X = p_Z = target/2 exactly. Try both
    // round conventions (r = d_X and r = d_Z) and keep the consistent one.
    auto try_branch = [&](bool r_is_dx) -> std::pair<double, double> {
        // Given the driving dimension d, the other follows from its own
        // equation; scan for a sign change of the residual of the second
        // equation, then bisect.
        auto other_dim = [&](double d) {
            if (r_is_dx) {
                // p_X = ax.a * dx * dz / dx^2 * K = half -> dz
                double k = ax.a / d * std::pow(ax.b * p, 0.5 * (d + 1.0));
                return half / k;
            }
            double k = az.a / d * std::pow(az.b * p, 0.5 * (d + 1.0));
            return half / k;
        };
        auto residual = [&](double d) {
            double o = other_dim(d);
            if (!(o > 0) || !std::isfinite(o)) {
                return HUGE_VAL;
            }
            if (r_is_dx) {
                return rect_rate_z(az, p, d, o, d) - half;
            }
            return rect_rate_x(ax, p, o, d, d) - half;
        };
        double lo = 3.0, hi = double(max_dim) * 2.0;
        double rlo = residual(lo);
        double prev_d = lo, prev_r = rlo;
        double found_lo = 0, found_hi = 0;
        for (int k = 1; k <= 400; k++) {
            double d = lo + (hi - lo) * k / 400.0;
            double r = residual(d);
            if (std::isfinite(prev_r) && std::isfinite(r) && ((prev_r > 0) != (r > 0))) {
                found_lo = prev_d;
                found_hi = d;
                break;
            }
            prev_d = d;
            prev_r = r;
        }
        if (found_hi == 0) {
            return {0.0, 0.0};
        }
        for (int it = 0; it < 200; it++) {
            double mid = 0.5 * (found_lo + found_hi);
            if ((residual(mid) > 0) == (residual(found_lo) > 0)) {
                found_lo = mid;
            } else {
                found_hi = mid;
            }
        }
        double d = 0.5 * (found_lo + found_hi);
        double o = other_dim(d);
        return r_is_dx ? std::make_pair(d, o) : std::make_pair(o, d);
    };

    auto [dx1, dz1] = try_branch(true);
    auto [dx2, dz2] = try_branch(false);
    bool ok1 = dx1 > 0 && dx1 >= dz1;  // r = d_X branch consistent when d_X is the max
    bool ok2 = dx2 > 0 && dz2 >= dx2;
    double cx = 0, cz = 0;
    if (ok1 && (!ok2 || 2 * dx1 * dz1 <= 2 * dx2 * dz2)) {
        cx = dx1;
        cz = dz1;
    } else if (ok2) {
        cx = dx2;
        cz = dz2;
    } else if (dx1 > 0) {
        cx = dx1;
        cz = dz1;
    } else if (dx2 > 0) {
        cx = dx2;
        cz = dz2;
    }
    res.cont_dim1 = cx;
    res.cont_dim2 = cz;
    res.cont_qubits = cx > 0 ? 2.0 * cx * cz - 1.0 : 0.0;
    return res;
}

}  // namespace beliefdec
