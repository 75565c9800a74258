#ifndef BIALG_PRECISION_HPP
#define BIALG_PRECISION_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace bialg {

namespace mp = boost::multiprecision;

// Variable-precision real; the working precision is set through
// ScopedPrecision and applies to every operation performed in scope.
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using Int = mp::mpz_int;
using Rat = mp::mpq_rational;

struct PrecisionCfg {
    int digits = 40;              // user-facing decimal working precision P
    int series_terms_cap = 4096;  // hard cap on series length
    double pole_radius_factor = 0.05;  // pole neighborhood, x shortest lattice vector
    int guard_digits = 15;

    int working_digits() const { return digits + guard_digits; }

    // 10^(5-P), the residual contract for evaluation identities.
    Real tolerance() const;
    // 10^-(P-10), the lattice-membership tolerance used in invariant checks.
    Real membership_tol() const;

    void validate() const;  // digits >= 15 etc.
};

// Sets the boost/mpfr default precision for the current scope and restores
// the previous value on destruction.
class ScopedPrecision {
public:
    explicit ScopedPrecision(int decimal_digits);
    ~ScopedPrecision();
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned prev_;
};

Real pow10(int e);  // 10^e at current working precision
Real pi_val();      // pi at current working precision

} // namespace bialg

#endif
