#include "bialg/weierstrass.hpp"

#include <stdexcept>

namespace bialg {

namespace {

// sigma_k(n) for the Eisenstein q-series terms.
Int divisor_sum(int n, int k) {
    Int s = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        Int p = 1;
        for (int i = 0; i < k; ++i) p *= d;
        s += p;
    }
    return s;
}

} // namespace

Weierstrass::Weierstrass(Lattice lat, PrecisionCfg cfg)
    : lat_(std::move(lat)), cfg_(std::move(cfg)) {
    cfg_.validate();
    ScopedPrecision sp(cfg_.working_digits());
    setup();
}

void Weierstrass::setup() {
    Cplx tau = lat_.tau();
    TauReduction red = normalize_tau(tau);
    tau_red_ = red.tau_reduced;
    // <1, tau> = (c tau + d) <1, tau_red>
    Cplx lam = Real(red.m.c) * tau + Cplx(Real(red.m.d));
    mu_ = lat_.omega1 * lam;
    lat_red_ = Lattice::from_basis(Cplx(1), tau_red_);

    const Real eps = pow10(-(cfg_.working_digits() + 8));

    // Weight-4 and weight-6 Eisenstein q-series on the reduced lattice:
    // g2 = (2 pi)^4 / 12 * (1 + 240 sum sigma_3(n) q^n)
    // g3 = (2 pi)^6 / 216 * (1 - 504 sum sigma_5(n) q^n)
    const Real two_pi = 2 * pi_val();
    const Cplx q = exp(Cplx(-two_pi * tau_red_.im, two_pi * tau_red_.re));  // e^{2 pi i tau}
    Cplx e4 = Cplx(1), e6 = Cplx(1);
    Cplx qn = Cplx(1);
    const Real qabs = abs(q);
    Real qn_abs = 1;
    int n = 1;
    for (;; ++n) {
        if (n > cfg_.series_terms_cap)
            throw std::runtime_error("Eisenstein series cap exceeded");
        qn = qn * q;
        qn_abs *= qabs;
        Real s5(divisor_sum(n, 5));
        Real s3(divisor_sum(n, 3));
        e4 += (240 * s3) * qn;
        e6 -= (504 * s5) * qn;
        if (504 * s5 * qn_abs < eps) break;
    }
    Real p4 = pow(two_pi, 4), p6 = pow(two_pi, 6);
    g2_red_ = (p4 / 12) * e4;
    g3_red_ = (p6 / 216) * e6;

    // Laurent coefficients of wp about 0: c_2 = g2/20, c_3 = g3/28,
    // c_k = 3/((2k+1)(k-3)) sum_{m=2}^{k-2} c_m c_{k-m}.
    seed_radius_ = Real(0.4);  // shortest vector of the reduced lattice is 1
    laurent_.assign(4, Cplx(0));
    laurent_[2] = g2_red_ / Real(20);
    laurent_[3] = g3_red_ / Real(28);
    Real rpow = pow(seed_radius_, 6);  // r^{2k-2} at k = 4
    const Real r2 = seed_radius_ * seed_radius_;
    int quiet = 0;
    for (int k = 4;; ++k) {
        if (k > cfg_.series_terms_cap)
            throw std::runtime_error("Laurent series cap exceeded");
        Cplx acc(0);
        for (int m = 2; m <= k - 2; ++m) acc += laurent_[m] * laurent_[k - m];
        laurent_.push_back((Real(3) / Real((2 * k + 1) * (k - 3))) * acc);
        if (abs(laurent_[k]) * rpow * (2 * k) < eps) {
            if (++quiet >= 3) break;
        } else {
            quiet = 0;
        }
        rpow *= r2;
    }

    // Invariants of the original lattice via homogeneity (weights -4, -6).
    Cplx mu2 = mu_ * mu_;
    Cplx mu4 = mu2 * mu2;
    inv_.g2 = g2_red_ / mu4;
    inv_.g3 = g3_red_ / (mu4 * mu2);
    Cplx g2c = inv_.g2 * inv_.g2 * inv_.g2;
    inv_.disc = g2c - Real(27) * inv_.g3 * inv_.g3;
    inv_.j = Real(1728) * g2c / inv_.disc;
    const Cplx half(Real(0.5));
    inv_.roots[0] = wp(half * lat_.omega1).value;
    inv_.roots[1] = wp(half * (lat_.omega1 + lat_.omega2)).value;
    inv_.roots[2] = wp(half * lat_.omega2).value;
}

std::pair<Cplx, Cplx> Weierstrass::series_at(const Cplx& u) const {
    const Cplx u2 = u * u;
    const int top = static_cast<int>(laurent_.size()) - 1;
    Cplx p_acc(0), dp_acc(0);
    for (int k = top; k >= 2; --k) {
        p_acc = p_acc * u2 + laurent_[k];
        dp_acc = dp_acc * u2 + Real(2 * k - 2) * laurent_[k];
    }
    Cplx inv_u2 = inv(u2);
    Cplx p = inv_u2 + u2 * p_acc;
    Cplx dp = Real(-2) * inv_u2 * inv(u) + u * dp_acc;
    return {p, dp};
}

std::pair<Cplx, Cplx> Weierstrass::eval_reduced(const Cplx& w) const {
    // scale down into the series disk, then double back up on the curve
    // y^2 = 4x^3 - g2 x - g3
    Real mag = abs(w);
    int doublings = 0;
    Real bound = seed_radius_;
    while (mag > bound) {
        bound *= 2;
        ++doublings;
    }
    Cplx u = w;
    if (doublings > 0) {
        Real scale = pow(Real(2), -doublings);
        u = w * scale;
    }
    auto [x, y] = series_at(u);
    for (int i = 0; i < doublings; ++i) {
        Cplx m = (Real(12) * x * x - g2_red_) / (Real(2) * y);
        Cplx x2 = Real(0.25) * m * m - Real(2) * x;
        Cplx y2 = m * (x - x2) - y;
        x = x2;
        y = y2;
    }
    return {x, y};
}

std::pair<WpValue, WpValue> Weierstrass::wp_pair(const Cplx& z) const {
    ScopedPrecision sp(cfg_.working_digits());
    if (!isfinite(z)) throw std::invalid_argument("wp: non-finite argument");
    Cplx w = z / mu_;
    CellReduction cell = reduce_to_cell(w, lat_red_);
    if (abs(cell.z0) < Real(cfg_.pole_radius_factor))
        return {WpValue{true, Cplx(0)}, WpValue{true, Cplx(0)}};
    auto [x, y] = eval_reduced(cell.z0);
    Cplx mu2 = mu_ * mu_;
    WpValue p{false, x / mu2};
    WpValue dp{false, y / (mu2 * mu_)};
    return {p, dp};
}

WpValue Weierstrass::wp(const Cplx& z) const { return wp_pair(z).first; }
WpValue Weierstrass::wp_prime(const Cplx& z) const { return wp_pair(z).second; }

std::optional<std::array<Real, 2>> Weierstrass::p_map(const Real& x, const Real& y) const {
    WpValue v = wp(Cplx(x, y));
    if (v.is_pole) return std::nullopt;
    return std::array<Real, 2>{v.value.re, v.value.im};
}

Real Weierstrass::pole_radius() const {
    ScopedPrecision sp(cfg_.working_digits());
    return Real(cfg_.pole_radius_factor) * abs(mu_);
}

Real Weierstrass::shortest_len() const {
    ScopedPrecision sp(cfg_.working_digits());
    return abs(mu_);  // shortest vector of the reduced lattice is 1
}

Real homogeneity_check(const Cplx& z, const Cplx& rho, const Lattice& lat,
                       const PrecisionCfg& cfg) {
    ScopedPrecision sp(cfg.working_digits());
    Weierstrass w1(lat, cfg);
    Weierstrass w2(lat.scaled(rho), cfg);
    WpValue a = w1.wp(inv(rho) * z);
    WpValue b = w2.wp(z);
    if (a.is_pole || b.is_pole) throw std::domain_error("homogeneity_check: pole input");
    Cplx rhs = rho * rho * b.value;
    Real scale = Real(1) + std::max(abs(a.value), abs(rhs));
    return abs(a.value - rhs) / scale;
}

} // namespace bialg
