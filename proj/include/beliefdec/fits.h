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

#ifndef BELIEFDEC_FITS_H
#define BELIEFDEC_FITS_H

#include <stdexcept>
#include <vector>

namespace beliefdec {

struct FitDomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One failure-rate estimate entering a threshold fit. p_cx is the noise
/// strength in CNOT-infidelity units.
struct ThresholdPoint {
    double p_cx;
    int size;  // lattice size L
    double failure_rate;
    double sigma;
};

/// Critical-exponent fit f = A + B x + C x^2 with x = (p - p_th) L^{1/nu}.
struct ThresholdFit {
    double p_th = 0.0;
    double nu = 0.0;
    double a = 0.0, b = 0.0, c = 0.0;
    double sigma_p_th = 0.0;  // jackknife over lattice sizes
    double chi2_dof = 0.0;
};

/// Weighted least squares over {p_th, nu, A, B, C}: the quadratic
/// coefficients are profiled out exactly and (p_th, nu) are found by
/// Levenberg-Marquardt with multiple starts of nu. Requires at least three
/// lattice sizes with four noise values each, spanning the crossing.
ThresholdFit fit_threshold(const std::vector<ThresholdPoint> &points);

enum class AnsatzFamily { xy, rect_x, rect_z };

/// One below-threshold point. For the xy family dx == dz == L; for the
/// rectangular families the prefactor uses rounds and both distances.
struct AnsatzPoint {
    double p;  // base noise strength (not p_cx)
    int dx, dz, rounds;
    double failure_rate;
    double sigma;
};

struct AnsatzFit {
    double a = 0.0, b = 0.0;
    double sigma_a = 0.0, sigma_b = 0.0;
    double chi2_dof = 0.0;
};

/// Least squares in log space against
///   xy:      p_log = a (b p)^{(L+1)/2}
///   rect_x:  p_log = (a r d_Z / d_X^2) (b p)^{(d_X+1)/2}
///   rect_z:  p_log = (a r d_X / d_Z^2) (b p)^{(d_Z+1)/2}
AnsatzFit fit_ansatz(const std::vector<AnsatzPoint> &points, AnsatzFamily family);

/// Per-size slope of log failure rate against log p; used to test the
/// (sqrt(n)+1)/2 decay exponent.
double fit_log_slope(const std::vector<std::pair<double, double>> &log_p_log_f);

}  // namespace beliefdec

#endif
