#include "bialg/fit.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bialg {

int monomial_count(int deg) { return (deg + 1) * (deg + 2) / 2; }

std::vector<std::pair<int, int>> monomial_exponents(int deg) {
    std::vector<std::pair<int, int>> out;
    out.reserve(monomial_count(deg));
    for (int total = 0; total <= deg; ++total)
        for (int i = total; i >= 0; --i) out.emplace_back(i, total - i);
    return out;
}

double eval_poly(const std::vector<double>& coeffs, double x, double y) {
    int deg = 0;
    while (monomial_count(deg) < static_cast<int>(coeffs.size())) ++deg;
    auto mons = monomial_exponents(deg);
    double acc = 0;
    for (size_t k = 0; k < coeffs.size(); ++k)
        acc += coeffs[k] * std::pow(x, mons[k].first) * std::pow(y, mons[k].second);
    return acc;
}

namespace {

double binom(int n, int k) {
    double r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// Expand Q((x-cx)/s, (y-cy)/s) into the monomial basis of the original
// coordinates.
std::vector<double> back_substitute(const std::vector<double>& v, int deg, double cx,
                                    double cy, double s) {
    auto mons = monomial_exponents(deg);
    std::vector<double> out(mons.size(), 0.0);
    auto index_of = [&](int p, int q) {
        int total = p + q;
        int before = total == 0 ? 0 : monomial_count(total - 1);
        return before + (total - p);
    };
    for (size_t k = 0; k < mons.size(); ++k) {
        auto [i, j] = mons[k];
        if (v[k] == 0) continue;
        double scale = v[k] / std::pow(s, i + j);
        for (int p = 0; p <= i; ++p)
            for (int q = 0; q <= j; ++q) {
                double c = scale * binom(i, p) * binom(j, q) * std::pow(-cx, i - p) *
                           std::pow(-cy, j - q);
                out[index_of(p, q)] += c;
            }
    }
    double norm = std::sqrt(std::inner_product(out.begin(), out.end(), out.begin(), 0.0));
    if (norm > 0)
        for (double& c : out) c /= norm;
    // deterministic sign: first significant coefficient positive
    double vmax = 0;
    for (double c : out) vmax = std::max(vmax, std::abs(c));
    for (double c : out) {
        if (std::abs(c) > 1e-6 * vmax) {
            if (c < 0)
                for (double& x : out) x = -x;
            break;
        }
    }
    return out;
}

} // namespace

FitResult fit_vanishing_poly(const std::vector<std::array<double, 2>>& points,
                             int max_deg, const FitTolerances& tol, int snap_height) {
    if (max_deg < 1) throw std::invalid_argument("fit_vanishing_poly: max_deg must be >= 1");
    const int n = static_cast<int>(points.size());
    if (n < 4 * monomial_count(max_deg))
        throw std::invalid_argument("fit_vanishing_poly: too few points (need 4x monomials)");

    // center and isotropic unit scale; a single scale keeps degenerate
    // coordinates (a genuinely vanishing Y, say) recognizable
    double cx = 0, cy = 0;
    for (const auto& p : points) { cx += p[0]; cy += p[1]; }
    cx /= n; cy /= n;
    double s = 0;
    for (const auto& p : points)
        s = std::max({s, std::abs(p[0] - cx), std::abs(p[1] - cy)});
    if (s == 0) s = 1;  // all points identical

    std::vector<std::array<double, 2>> train, hold;
    for (int i = 0; i < n; ++i) {
        std::array<double, 2> q{(points[i][0] - cx) / s, (points[i][1] - cy) / s};
        if (i % 4 == 3) hold.push_back(q); else train.push_back(q);
    }

    FitResult res;
    double min_ratio = 1.0;
    bool any_below_high = false;
    for (int d = 1; d <= max_deg; ++d) {
        auto mons = monomial_exponents(d);
        const int cols = static_cast<int>(mons.size());
        Eigen::MatrixXd m(train.size(), cols);
        for (size_t r = 0; r < train.size(); ++r)
            for (int c = 0; c < cols; ++c)
                m(r, c) = std::pow(train[r][0], mons[c].first) *
                          std::pow(train[r][1], mons[c].second);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinV);
        const auto& sv = svd.singularValues();
        double smax = sv(0);
        double smin = sv(cols - 1);
        double ratio = smax > 0 ? smin / smax : 0.0;
        min_ratio = std::min(min_ratio, ratio);
        if (ratio <= tol.tol_high) any_below_high = true;
        if (ratio < tol.tol_low) {
            Eigen::VectorXd v = svd.matrixV().col(cols - 1);
            double resid = 0;
            for (const auto& p : hold) {
                double acc = 0;
                for (int c = 0; c < cols; ++c)
                    acc += v(c) * std::pow(p[0], mons[c].first) * std::pow(p[1], mons[c].second);
                resid = std::max(resid, std::abs(acc));
            }
            if (resid < tol.tol_hold) {
                res.verdict = FitVerdict::Vanishing;
                res.degree = d;
                res.sv_ratio = ratio;
                res.holdout_residual = resid;
                std::vector<double> vn(v.data(), v.data() + cols);
                res.coeffs = back_substitute(vn, d, cx, cy, s);
                res.exact = snap_integer_relation(res.coeffs, snap_height);
                return res;
            }
        }
    }
    res.sv_ratio = min_ratio;
    res.verdict = any_below_high ? FitVerdict::Inconclusive : FitVerdict::NoRelation;
    return res;
}

std::optional<std::vector<long long>> snap_integer_relation(
    const std::vector<double>& coeffs, int height) {
    if (height < 1) return std::nullopt;
    double vmax = 0;
    double norm2 = 0;
    for (double c : coeffs) {
        vmax = std::max(vmax, std::abs(c));
        norm2 += c * c;
    }
    if (vmax == 0) return std::nullopt;
    double norm = std::sqrt(norm2);

    for (int k = 1; k <= height; ++k) {
        std::vector<long long> w(coeffs.size());
        double wnorm2 = 0, dot = 0;
        bool nonzero = false;
        for (size_t i = 0; i < coeffs.size(); ++i) {
            w[i] = std::llround(coeffs[i] / vmax * k);
            if (w[i] != 0) nonzero = true;
            wnorm2 += double(w[i]) * double(w[i]);
            dot += double(w[i]) * coeffs[i];
        }
        if (!nonzero) continue;
        double wnorm = std::sqrt(wnorm2);
        // sin(angle) between the unit vectors
        double cosang = dot / (wnorm * norm);
        double sin2 = std::max(0.0, 1.0 - cosang * cosang);
        if (std::sqrt(sin2) < 1e-6) {
            long long g = 0;
            for (long long c : w) g = std::gcd(g, c);
            for (long long& c : w) c /= g;
            for (long long c : w) {
                if (c != 0) {
                    if (c < 0)
                        for (long long& x : w) x = -x;
                    break;
                }
            }
            return w;
        }
    }
    return std::nullopt;
}

ComplexFitResult fit_vanishing_poly_complex(
    const std::vector<std::array<std::complex<double>, 2>>& points, int max_deg,
    const FitTolerances& tol) {
    using Cd = std::complex<double>;
    if (max_deg < 1) throw std::invalid_argument("fit max_deg must be >= 1");
    const int n = static_cast<int>(points.size());
    if (n < 4 * monomial_count(max_deg))
        throw std::invalid_argument("fit_vanishing_poly_complex: too few points");

    Cd cu = 0, cv = 0;
    for (const auto& p : points) { cu += p[0]; cv += p[1]; }
    cu /= double(n); cv /= double(n);
    double s = 0;
    for (const auto& p : points)
        s = std::max({s, std::abs(p[0] - cu), std::abs(p[1] - cv)});
    if (s == 0) s = 1;

    std::vector<std::array<Cd, 2>> train, hold;
    for (int i = 0; i < n; ++i) {
        std::array<Cd, 2> q{(points[i][0] - cu) / s, (points[i][1] - cv) / s};
        if (i % 4 == 3) hold.push_back(q); else train.push_back(q);
    }

    ComplexFitResult res;
    double min_ratio = 1.0;
    bool any_below_high = false;
    for (int d = 1; d <= max_deg; ++d) {
        auto mons = monomial_exponents(d);
        const int cols = static_cast<int>(mons.size());
        // complex coefficients a = alpha + i beta as 2*cols real unknowns;
        // each point contributes a real and an imaginary row
        Eigen::MatrixXd m(2 * train.size(), 2 * cols);
        for (size_t r = 0; r < train.size(); ++r) {
            for (int c = 0; c < cols; ++c) {
                Cd mon = std::pow(train[r][0], mons[c].first) *
                         std::pow(train[r][1], mons[c].second);
                m(2 * r, c) = mon.real();
                m(2 * r, cols + c) = -mon.imag();
                m(2 * r + 1, c) = mon.imag();
                m(2 * r + 1, cols + c) = mon.real();
            }
        }
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinV);
        const auto& sv = svd.singularValues();
        double smax = sv(0);
        double smin = sv(2 * cols - 1);
        double ratio = smax > 0 ? smin / smax : 0.0;
        min_ratio = std::min(min_ratio, ratio);
        if (ratio <= tol.tol_high) any_below_high = true;
        if (ratio < tol.tol_low) {
            Eigen::VectorXd v = svd.matrixV().col(2 * cols - 1);
            std::vector<Cd> a(cols);
            for (int c = 0; c < cols; ++c) a[c] = Cd(v(c), v(cols + c));
            double resid = 0;
            for (const auto& p : hold) {
                Cd acc = 0;
                for (int c = 0; c < cols; ++c)
                    acc += a[c] * std::pow(p[0], mons[c].first) * std::pow(p[1], mons[c].second);
                resid = std::max(resid, std::abs(acc));
            }
            if (resid < tol.tol_hold) {
                // phase-normalize: largest coefficient real positive
                int arg = 0;
                for (int c = 1; c < cols; ++c)
                    if (std::abs(a[c]) > std::abs(a[arg])) arg = c;
                Cd phase = a[arg] / std::abs(a[arg]);
                for (Cd& c : a) c /= phase;
                res.verdict = FitVerdict::Vanishing;
                res.degree = d;
                res.sv_ratio = ratio;
                res.holdout_residual = resid;
                res.coeffs = std::move(a);
                return res;
            }
        }
    }
    res.sv_ratio = min_ratio;
    res.verdict = any_below_high ? FitVerdict::Inconclusive : FitVerdict::NoRelation;
    return res;
}

} // namespace bialg
