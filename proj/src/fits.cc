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

#include "beliefdec/fits.h"

#include <algorithm>
#include <cmath>
#include <set>

namespace beliefdec {

namespace {

// Solves the symmetric 3x3 system M x = rhs by Gaussian elimination.
bool solve3(double m[3][3], double rhs[3], double out[3]) {
    int idx[3] = {0, 1, 2};
    for (int col = 0; col < 3; col++) {
        int pivot = col;
        for (int r = col + 1; r < 3; r++) {
            if (std::fabs(m[idx[r]][col]) > std::fabs(m[idx[pivot]][col])) {
                pivot = r;
            }
        }
        std::swap(idx[col], idx[pivot]);
        if (std::fabs(m[idx[col]][col]) < 1e-300) {
            return false;
        }
        for (int r = col + 1; r < 3; r++) {
            double f = m[idx[r]][col] / m[idx[col]][col];
            for (int c = col; c < 3; c++) {
                m[idx[r]][c] -= f * m[idx[col]][c];
            }
            rhs[idx[r]] -= f * rhs[idx[col]];
        }
    }
    for (int col = 2; col >= 0; col--) {
        double v = rhs[idx[col]];
        for (int c = col + 1; c < 3; c++) {
            v -= m[idx[col]][c] * out[c];
        }
        out[col] = v / m[idx[col]][col];
    }
    return true;
}

// Profiled chi^2: for fixed (p_th, nu) the quadratic coefficients are a
// weighted linear least-squares problem.
double profiled_chi2(const std::vector<ThresholdPoint> &pts, double p_th, double nu, double abc[3]) {
    double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    double rhs[3] = {0, 0, 0};
    for (const auto &pt : pts) {
        double x = (pt.p_cx - p_th) * std::pow(double(pt.size), 1.0 / nu);
        double w = 1.0 / (pt.sigma * pt.sigma);
        double basis[3] = {1.0, x, x * x};
        for (int i = 0; i < 3; i++) {
            for (int j = 0; j < 3; j++) {
                m[i][j] += w * basis[i] * basis[j];
            }
            rhs[i] += w * basis[i] * pt.failure_rate;
        }
    }
    if (!solve3(m, rhs, abc)) {
        return HUGE_VAL;
    }
    double chi2 = 0.0;
    for (const auto &pt : pts) {
        double x = (pt.p_cx - p_th) * std::pow(double(pt.size), 1.0 / nu);
        double fhat = abc[0] + abc[1] * x + abc[2] * x * x;
        double r = (fhat - pt.failure_rate) / pt.sigma;
        chi2 += r * r;
    }
    return chi2;
}

// Levenberg-Marquardt on theta = (p_th, nu) over the profiled residuals.
void lm_minimize(const std::vector<ThresholdPoint> &pts, double &p_th, double &nu) {
    double lambda = 1e-3;
    double abc[3];
    double chi2 = profiled_chi2(pts, p_th, nu, abc);
    double hp = 1e-6, hn = 1e-5;
    for (int iter = 0; iter < 200; iter++) {
        // residuals and numeric Jacobian
        size_t n = pts.size();
        std::vector<double> r0(n), rp(n), rn(n);
        auto residuals = [&](double a, double b, std::vector<double> &out) {
            double coeffs[3];
            if (profiled_chi2(pts, a, b, coeffs) == HUGE_VAL) {
                return false;
            }
            for (size_t i = 0; i < n; i++) {
                double x = (pts[i].p_cx - a) * std::pow(double(pts[i].size), 1.0 / b);
                out[i] = (coeffs[0] + coeffs[1] * x + coeffs[2] * x * x - pts[i].failure_rate) / pts[i].sigma;
            }
            return true;
        };
        if (!residuals(p_th, nu, r0) || !residuals(p_th + hp, nu, rp) || !residuals(p_th, nu + hn, rn)) {
            break;
        }
        double jtj[2][2] = {{0, 0}, {0, 0}};
        double jtr[2] = {0, 0};
        for (size_t i = 0; i < n; i++) {
            double j0 = (rp[i] - r0[i]) / hp;
            double j1 = (rn[i] - r0[i]) / hn;
            jtj[0][0] += j0 * j0;
            jtj[0][1] += j0 * j1;
            jtj[1][1] += j1 * j1;
            jtr[0] += j0 * r0[i];
            jtr[1] += j1 * r0[i];
        }
        jtj[1][0] = jtj[0][1];
        bool improved = false;
        for (int tries = 0; tries < 8 && !improved; tries++) {
            double a00 = jtj[0][0] * (1 + lambda), a11 = jtj[1][1] * (1 + lambda), a01 = jtj[0][1];
            double det = a00 * a11 - a01 * a01;
            if (std::fabs(det) < 1e-300) {
                lambda *= 10;
                continue;
            }
            double dp = -(a11 * jtr[0] - a01 * jtr[1]) / det;
            double dn = -(-a01 * jtr[0] + a00 * jtr[1]) / det;
            double np = p_th + dp, nn = nu + dn;
            if (nn < 0.2) {
                nn = 0.2;
            }
            if (nn > 5.0) {
                nn = 5.0;
            }
            double c2 = profiled_chi2(pts, np, nn, abc);
            if (c2 < chi2) {
                p_th = np;
                nu = nn;
                double delta = chi2 - c2;
                chi2 = c2;
                lambda = std::max(lambda * 0.3, 1e-12);
                improved = true;
                if (delta < 1e-12 * (1 + chi2)) {
                    return;
                }
            } else {
                lambda *= 10;
            }
        }
        if (!improved) {
            return;
        }
    }
}

ThresholdFit fit_threshold_once(const std::vector<ThresholdPoint> &pts) {
    double p_min = HUGE_VAL, p_max = -HUGE_VAL;
    for (const auto &pt : pts) {
        p_min = std::min(p_min, pt.p_cx);
        p_max = std::max(p_max, pt.p_cx);
    }

    double best_chi2 = HUGE_VAL;
    ThresholdFit best;
    for (double nu0 : {0.7, 1.0, 1.4}) {
        // coarse scan for the crossing, then polish
        double best_p0 = 0.5 * (p_min + p_max);
        double best_scan = HUGE_VAL;
        double abc[3];
        for (int k = 0; k <= 40; k++) {
            double cand = p_min + (p_max - p_min) * k / 40.0;
            double c2 = profiled_chi2(pts, cand, nu0, abc);
            if (c2 < best_scan) {
                best_scan = c2;
                best_p0 = cand;
            }
        }
        double p_th = best_p0, nu = nu0;
        lm_minimize(pts, p_th, nu);
        double c2 = profiled_chi2(pts, p_th, nu, abc);
        if (c2 < best_chi2) {
            best_chi2 = c2;
            best.p_th = p_th;
            best.nu = nu;
            best.a = abc[0];
            best.b = abc[1];
            best.c = abc[2];
        }
    }
    size_t dof = pts.size() > 5 ? pts.size() - 5 : 1;
    best.chi2_dof = best_chi2 / double(dof);
    if (!(best.p_th > p_min && best.p_th < p_max)) {
        throw FitDomainError("no threshold crossing inside the scanned noise range");
    }
    return best;
}

}  // namespace

ThresholdFit fit_threshold(const std::vector<ThresholdPoint> &points) {
    std::set<int> sizes;
    std::set<double> ps;
    for (const auto &pt : points) {
        sizes.insert(pt.size);
        ps.insert(pt.p_cx);
        if (!(pt.sigma > 0)) {
            throw FitError("threshold fit requires positive uncertainties");
        }
    }
    if (sizes.size() < 3 || ps.size() < 4) {
        throw FitError("threshold fit requires >= 3 lattice sizes and >= 4 noise values");
    }

    ThresholdFit fit = fit_threshold_once(points);

    // Jackknife over lattice sizes.
    std::vector<double> estimates;
    for (int leave_out : sizes) {
        std::vector<ThresholdPoint> subset;
        for (const auto &pt : points) {
            if (pt.size != leave_out) {
                subset.push_back(pt);
            }
        }
        try {
            estimates.push_back(fit_threshold_once(subset).p_th);
        } catch (const FitDomainError &) {
            // a jackknife subset may lose the crossing; skip it
        }
    }
    if (estimates.size() >= 2) {
        double mean = 0.0;
        for (double e : estimates) {
            mean += e;
        }
        mean /= double(estimates.size());
        double var = 0.0;
        for (double e : estimates) {
            var += (e - mean) * (e - mean);
        }
        double k = double(estimates.size());
        fit.sigma_p_th = std::sqrt((k - 1.0) / k * var);
    }
    return fit;
}

AnsatzFit fit_ansatz(const std::vector<AnsatzPoint> &points, AnsatzFamily family) {
    if (points.size() < 3) {
        throw FitError("ansatz fit requires at least 3 points");
    }
    // Model: log f = alpha + k (beta + log p) + log(prefactor), linear in
    // alpha = log a and beta = log b.
    double s_ww = 0, s_wk = 0, s_kk = 0, s_wy = 0, s_ky = 0;
    std::set<int> exponents;
    for (const auto &pt : points) {
        if (!(pt.failure_rate > 0) || !(pt.sigma > 0)) {
            throw FitError("ansatz fit requires positive rates and uncertainties");
        }
        double k, logpref;
        switch (family) {
            case AnsatzFamily::xy:
                k = 0.5 * (pt.dx + 1);
                logpref = 0.0;
                break;
            case AnsatzFamily::rect_x:
                k = 0.5 * (pt.dx + 1);
                logpref = std::log(double(pt.rounds) * pt.dz / double(pt.dx) / double(pt.dx));
                break;
            case AnsatzFamily::rect_z:
                k = 0.5 * (pt.dz + 1);
                logpref = std::log(double(pt.rounds) * pt.dx / double(pt.dz) / double(pt.dz));
                break;
            default:
                throw FitError("bad family");
        }
        exponents.insert(int(2 * k));
        double y = std::log(pt.failure_rate) - logpref - k * std::log(pt.p);
        double sigma_log = pt.sigma / pt.failure_rate;
        double w = 1.0 / (sigma_log * sigma_log);
        s_ww += w;
        s_wk += w * k;
        s_kk += w * k * k;
        s_wy += w * y;
        s_ky += w * k * y;
    }
    if (exponents.size() < 2) {
        throw FitError("ansatz fit needs at least two distinct code sizes");
    }
    double det = s_ww * s_kk - s_wk * s_wk;
    if (std::fabs(det) < 1e-12) {
        throw FitError("degenerate design matrix in ansatz fit");
    }
    double alpha = (s_kk * s_wy - s_wk * s_ky) / det;
    double beta = (s_ww * s_ky - s_wk * s_wy) / det;

    AnsatzFit fit;
    fit.a = std::exp(alpha);
    fit.b = std::exp(beta);
    double var_alpha = s_kk / det;
    double var_beta = s_ww / det;
    fit.sigma_a = fit.a * std::sqrt(var_alpha);
    fit.sigma_b = fit.b * std::sqrt(var_beta);

    double chi2 = 0.0;
    for (const auto &pt : points) {
        double k, logpref;
        if (family == AnsatzFamily::xy) {
            k = 0.5 * (pt.dx + 1);
            logpref = 0;
        } else if (family == AnsatzFamily::rect_x) {
            k = 0.5 * (pt.dx + 1);
            logpref = std::log(double(pt.rounds) * pt.dz / double(pt.dx) / double(pt.dx));
        } else {
            k = 0.5 * (pt.dz + 1);
            logpref = std::log(double(pt.rounds) * pt.dx / double(pt.dz) / double(pt.dz));
        }
        double y = std::log(pt.failure_rate) - logpref - k * std::log(pt.p);
        double sigma_log = pt.sigma / pt.failure_rate;
        double r = (alpha + beta * k - y) / sigma_log;
        chi2 += r * r;
    }
    fit.chi2_dof = chi2 / double(std::max<size_t>(1, points.size() - 2));
    return fit;
}

double fit_log_slope(const std::vector<std::pair<double, double>> &pts) {
    if (pts.size() < 2) {
        throw FitError("slope fit requires at least two points");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double n = double(pts.size());
    double det = n * sxx - sx * sx;
    if (std::fabs(det) < 1e-12) {
        throw FitError("degenerate slope fit");
    }
    return (n * sxy - sx * sy) / det;
}

}  // namespace beliefdec
