#include "bialg/rational.hpp"

#include <stdexcept>

namespace bialg {

void PrecisionCfg::validate() const {
    if (digits < 15) throw std::invalid_argument("precision digits must be >= 15");
    if (series_terms_cap < 16) throw std::invalid_argument("series_terms_cap too small");
    if (pole_radius_factor <= 0 || pole_radius_factor >= 0.5)
        throw std::invalid_argument("pole_radius_factor must lie in (0, 0.5)");
}

Real PrecisionCfg::tolerance() const { return pow10(5 - digits); }
Real PrecisionCfg::membership_tol() const { return pow10(-(digits - 10)); }

ScopedPrecision::ScopedPrecision(int decimal_digits) : prev_(Real::default_precision()) {
    Real::default_precision(static_cast<unsigned>(decimal_digits));
}
ScopedPrecision::~ScopedPrecision() { Real::default_precision(prev_); }

Real pow10(int e) {
    Real t = 10;
    return pow(t, e);
}

Real pi_val() { return acos(Real(-1)); }

bool is_perfect_square(const Int& n, Int* root) {
    if (n < 0) return false;
    Int r = sqrt(n);
    if (r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

Rat exact_rational(const Real& x) {
    if (!mpfr_number_p(x.backend().data()))
        throw std::invalid_argument("exact_rational: non-finite input");
    return Rat(x);  // binary floats convert exactly
}

std::optional<Rat> recognize_rational(const Real& x, const Int& max_height, double tol) {
    if (!mpfr_number_p(x.backend().data()))
        throw std::invalid_argument("recognize_rational: non-finite input");
    if (max_height < 1)
        throw std::invalid_argument("recognize_rational: max_height must be >= 1");

    const Rat target = exact_rational(x);
    const Rat tol_r = exact_rational(Real(tol));

    // Continued-fraction expansion of the exact binary value; all arithmetic
    // exact, so the scan is deterministic.
    Rat rem = target;
    Int h_prev = 1, k_prev = 0;   // h_{-1}, k_{-1}
    Int h_prev2 = 0, k_prev2 = 1; // h_{-2}, k_{-2}
    for (int iter = 0; iter < 20000; ++iter) {
        Int a = Int(numerator(rem) / denominator(rem));
        if (rem < 0 && Rat(a) != rem) a -= 1;  // floor
        Int h = a * h_prev + h_prev2;
        Int k = a * k_prev + k_prev2;
        if (k > max_height) break;
        h_prev2 = h_prev; k_prev2 = k_prev;
        h_prev = h; k_prev = k;

        Rat conv(h, k);
        Rat err = target - conv;
        if (err < 0) err = -err;
        // accept when within 10 * tol / q^2
        if (err * k * k * Rat(1, 10) < tol_r) return conv;

        Rat frac = rem - Rat(a);
        if (frac == 0) break;
        rem = Rat(1) / frac;
    }
    return std::nullopt;
}

} // namespace bialg
