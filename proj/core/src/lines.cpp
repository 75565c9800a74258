#include "bialg/lines.hpp"

#include <stdexcept>

#include "bialg/errors.hpp"

namespace bialg {

Cplx RealLine::direction() const {
    Cplx u = inv(rho);
    return u / abs(u);
}

RealLine line_from_rho(const Cplx& rho, const Cplx& offset) {
    if (rho.is_zero()) throw std::invalid_argument("line_from_rho: rho must be nonzero");
    RealLine line;
    line.rho = rho;
    line.r = rho / conj(rho);
    line.offset = offset;
    return line;
}

RealLine rho_from_lattice_direction(long long m, long long n, const TauSpec& spec) {
    if (m == 0 && n == 0)
        throw std::invalid_argument("lattice direction (m, n) must be nonzero");
    Cplx u = Cplx(Real(m)) + Real(n) * spec.tau();
    RealLine line = line_from_rho(inv(u));
    line.lattice_dir = {m, n};
    return line;
}

bool lines_parallel(const Cplx& u, const Cplx& v, const Real& tol) {
    Real cross = u.re * v.im - u.im * v.re;  // |u||v| sin(angle)
    return abs(cross) < tol * abs(u) * abs(v);
}

ComplexLine complex_bialgebraic_line(const std::array<Cplx, 2>& w1,
                                     const std::array<Cplx, 2>& w2,
                                     const std::array<Cplx, 2>& sigma,
                                     const Lattice& lat, const Real& tol) {
    const Lattice lat_conj = lat.conjugate();
    if (!lattice_membership(w1[0], lat, tol) || !lattice_membership(w2[0], lat, tol))
        throw NotLatticePointError("first coordinates must lie in Lambda");
    if (!lattice_membership(w1[1], lat_conj, tol) || !lattice_membership(w2[1], lat_conj, tol))
        throw NotLatticePointError("second coordinates must lie in conj(Lambda)");

    if (abs(w1[0]) < tol || abs(w2[0]) < tol)
        throw NotComplexLineError(
            "slope undefined: a generator has vanishing first coordinate (W would be {0} x C)");

    Cplx r1 = w1[1] / w1[0];
    Cplx r2 = w2[1] / w2[0];
    if (abs(r1 - r2) > tol * (Real(1) + abs(r1)))
        throw NotComplexLineError("generators have inconsistent slopes; <w1,w2>_R is not a C-line");

    Cplx t = w1[0] / w2[0];
    if (abs(t.im) <= tol * (Real(1) + abs(t)))
        throw NotComplexLineError("t = w1/w2 is real; generators are R-dependent");

    ComplexLine cl;
    cl.w1 = w1;
    cl.w2 = w2;
    cl.sigma = sigma;
    cl.r = r1;
    cl.t = t;
    return cl;
}

PushforwardResult pushforward_line(const RealLine& line, const Lattice& sub,
                                   const Lattice& super, const Real& tol) {
    auto index = sublattice_index(sub, super, tol);
    if (!index)
        throw NotSublatticeError("sub is not a finite-index sublattice of super");
    RealLine out = line;
    out.lattice_dir.reset();  // the (m, n) tag referred to the sub basis
    return {out, *index};
}

} // namespace bialg
