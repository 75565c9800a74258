#ifndef BIALG_COMPLEXMP_HPP
#define BIALG_COMPLEXMP_HPP

#include <string>

#include "bialg/precision.hpp"

namespace bialg {

// Complex number over the variable-precision Real.  std::complex is not
// specified for user-defined scalars, so the few operations we need are
// spelled out here.
struct Cplx {
    Real re, im;

    Cplx() : re(0), im(0) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Cplx(Real r) : re(std::move(r)), im(0) {}
    Cplx(double r, double i) : re(r), im(i) {}
    explicit Cplx(double r) : re(r), im(0) {}
    explicit Cplx(int r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
};

Cplx operator+(const Cplx& a, const Cplx& b);
Cplx operator-(const Cplx& a, const Cplx& b);
Cplx operator-(const Cplx& a);
Cplx operator*(const Cplx& a, const Cplx& b);
Cplx operator/(const Cplx& a, const Cplx& b);
Cplx operator*(const Real& a, const Cplx& b);
Cplx operator*(const Cplx& a, const Real& b);
Cplx operator/(const Cplx& a, const Real& b);
Cplx& operator+=(Cplx& a, const Cplx& b);
Cplx& operator-=(Cplx& a, const Cplx& b);
Cplx& operator*=(Cplx& a, const Cplx& b);

Cplx conj(const Cplx& z);
Real abs(const Cplx& z);
Real norm_sq(const Cplx& z);  // |z|^2
Real arg(const Cplx& z);      // atan2(im, re)
Cplx sqrt(const Cplx& z);     // principal branch, Re >= 0
Cplx exp(const Cplx& z);
Cplx inv(const Cplx& z);
Cplx polar(const Real& r, const Real& theta);

bool isfinite(const Cplx& z);

std::string to_string(const Cplx& z, int digits);

} // namespace bialg

#endif
