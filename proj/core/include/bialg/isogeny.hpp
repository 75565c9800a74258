#ifndef BIALG_ISOGENY_HPP
#define BIALG_ISOGENY_HPP

#include <optional>

#include "bialg/lattice.hpp"

namespace bialg {

// Integer matrix ((-d, b), (c, d)) attached to gamma = c*conj(tau) + d in
// Isog(Lambda, conj(Lambda)); trace zero, negative determinant.
struct TraceZeroMat {
    Int a, b, c, d;
    Int det() const { return a * d - b * c; }
    Int trace() const { return a + d; }
};

// The group Isog(Lambda, conj(Lambda)) for Lambda = <1, tau>, described by
// the integer relation lattice {(b,c,d) : c*s + 2*d*x - b = 0}.
struct IsogenySet {
    IntKernelBasis basis;
    std::vector<Cplx> gammas;          // c*conj(tau) + d per basis row
    std::vector<TraceZeroMat> matrices;
    std::vector<Int> abs_sq;           // |gamma|^2 = d^2 + b*c, exact
    std::optional<Triple> generator;   // rank 1: primitive generator, c >= 0
                                       // (d > 0 when c = 0)
    std::vector<std::string> warnings;

    int rank() const { return basis.rank(); }
};

IsogenySet isog_conj_set(const TauSpec& spec);

struct CmInfo {
    std::array<Int, 3> minpoly;  // A tau^2 + B tau + C = 0, A > 0, primitive
    Int disc;                    // B^2 - 4AC < 0
};

// CM detection: rank(Isog(Lambda, conj(Lambda))) = 2, equivalently
// 2x and s both rational.
std::optional<CmInfo> is_cm(const TauSpec& spec);

enum class EndpointClass { Rational, ConjRealQuadratic };

struct GeodesicData {
    enum class Kind { Vertical, Circle } kind;
    Triple triple;                // primitive, c*s + 2d*x - b = 0
    EndpointClass endpoint_class;
    Rat x_or_center;              // vertical: x = b/(2d); circle: center -d/c
    Rat radius_sq;                // circle: (d^2 + bc)/c^2; vertical: 0
    std::optional<std::pair<Rat, Rat>> rational_endpoints;  // when Rational (circle)
};

// The special geodesic through tau, or nullopt when Lambda is not isogenous
// to its conjugate.  CM points get the vertical line through x.
std::optional<GeodesicData> geodesic_through(const TauSpec& spec);

struct AbsWitness {
    Triple triple;
    Cplx gamma;
    Rat abs;      // |gamma|, rational (integer in fact)
};

// A nonzero element of Isog(Lambda, conj(Lambda)) with rational absolute
// value, when one exists.
std::optional<AbsWitness> rational_abs_witness(const IsogenySet& iso, const TauSpec& spec);

// gamma = c*conj(tau) + d for a relation triple.
Cplx gamma_of_triple(const Triple& t, const TauSpec& spec);

} // namespace bialg

#endif
