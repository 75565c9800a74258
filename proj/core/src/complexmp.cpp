#include "bialg/complexmp.hpp"

#include <sstream>

namespace bialg {

Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }

Cplx operator*(const Cplx& a, const Cplx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Cplx operator/(const Cplx& a, const Cplx& b) {
    // mpfr's exponent range makes the naive formula safe.
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Cplx operator*(const Real& a, const Cplx& b) { return {a * b.re, a * b.im}; }
Cplx operator*(const Cplx& a, const Real& b) { return {a.re * b, a.im * b}; }
Cplx operator/(const Cplx& a, const Real& b) { return {a.re / b, a.im / b}; }

Cplx& operator+=(Cplx& a, const Cplx& b) { a.re += b.re; a.im += b.im; return a; }
Cplx& operator-=(Cplx& a, const Cplx& b) { a.re -= b.re; a.im -= b.im; return a; }
Cplx& operator*=(Cplx& a, const Cplx& b) { a = a * b; return a; }

Cplx conj(const Cplx& z) { return {z.re, -z.im}; }
Real abs(const Cplx& z) { return hypot(z.re, z.im); }
Real norm_sq(const Cplx& z) { return z.re * z.re + z.im * z.im; }
Real arg(const Cplx& z) { return atan2(z.im, z.re); }

Cplx sqrt(const Cplx& z) {
    if (z.re == 0 && z.im == 0) return Cplx(0);
    Real m = abs(z);
    Real w = mp::sqrt((m + mp::abs(z.re)) / 2);
    if (z.re >= 0) {
        return {w, z.im / (2 * w)};
    }
    Real v = (z.im >= 0) ? w : -w;
    return {z.im / (2 * v), v};
}

Cplx exp(const Cplx& z) {
    Real e = mp::exp(z.re);
    return {e * cos(z.im), e * sin(z.im)};
}

Cplx inv(const Cplx& z) {
    Real d = norm_sq(z);
    return {z.re / d, -z.im / d};
}

Cplx polar(const Real& r, const Real& theta) { return {r * cos(theta), r * sin(theta)}; }

bool isfinite(const Cplx& z) {
    return mpfr_number_p(z.re.backend().data()) && mpfr_number_p(z.im.backend().data());
}

std::string to_string(const Cplx& z, int digits) {
    std::ostringstream os;
    os << z.re.str(digits) << (z.im < 0 ? " - " : " + ") << mp::abs(z.im).str(digits) << "i";
    return os.str();
}

} // namespace bialg
