#ifndef BIALG_LINES_HPP
#define BIALG_LINES_HPP

#include <optional>
#include <utility>

#include "bialg/lattice.hpp"

namespace bialg {

// A real line rho^{-1} R + offset.  The slope parameter r = rho/conj(rho)
// has |r| = 1, and points (x, y) of the offset-free line satisfy
// x - i y = r (x + i y).
struct RealLine {
    Cplx rho;
    Cplx r;
    Cplx offset;  // point of R^2 as x + iy
    std::optional<std::pair<long long, long long>> lattice_dir;  // direction m + n*tau

    Cplx direction() const;  // unit vector along the line
};

RealLine line_from_rho(const Cplx& rho, const Cplx& offset = Cplx(0));

// The line R*(m + n*tau) through the origin, i.e. rho = (m + n*tau)^{-1}.
RealLine rho_from_lattice_direction(long long m, long long n, const TauSpec& spec);

// Parallel up to sign, |sin(angle)| < tol.
bool lines_parallel(const Cplx& u, const Cplx& v, const Real& tol);

// A complex bialgebraic candidate curve W + sigma with W = <w1, w2>_R a
// one-dimensional C-subspace of C^2 and w1, w2 in Lambda x conj(Lambda).
struct ComplexLine {
    std::array<Cplx, 2> w1, w2;
    std::array<Cplx, 2> sigma;
    Cplx r;  // w_i2 = r * w_i1
    Cplx t;  // w1 = t * w2, t not real
};

// Validates the hypotheses and reports which one fails.
ComplexLine complex_bialgebraic_line(const std::array<Cplx, 2>& w1,
                                     const std::array<Cplx, 2>& w2,
                                     const std::array<Cplx, 2>& sigma,
                                     const Lattice& lat, const Real& tol);

struct PushforwardResult {
    RealLine line;
    Int index;  // [super : sub]
};

// A line known to be weakly bialgebraic for sub is weakly bialgebraic for
// any super-lattice containing sub; the point set is unchanged.
PushforwardResult pushforward_line(const RealLine& line, const Lattice& sub,
                                   const Lattice& super, const Real& tol);

} // namespace bialg

#endif
