#ifndef BIALG_LATTICE_HPP
#define BIALG_LATTICE_HPP

#include <array>
#include <optional>

#include "bialg/tauspec.hpp"

namespace bialg {

// Integer 2x2 matrix acting on H by Mobius transformations.
struct Sl2Mat {
    long long a = 1, b = 0, c = 0, d = 1;
    long long det() const { return a * d - b * c; }
};

struct Lattice {
    Cplx omega1, omega2;  // Im(omega2/omega1) > 0
    std::optional<TauSpec> spec;

    static Lattice from_tau(const TauSpec& s);      // <1, tau>
    static Lattice from_basis(Cplx w1, Cplx w2);    // reorients so Im(w2/w1) > 0

    Cplx tau() const;  // omega2/omega1
    Lattice conjugate() const;
    Lattice scaled(const Cplx& factor) const;
};

struct TauReduction {
    Cplx tau_reduced;  // |Re| <= 1/2, |tau| >= 1
    Sl2Mat m;          // tau_reduced = (a tau + b) / (c tau + d), det = 1
};

// SL2(Z) reduction of tau into the standard fundamental domain.
TauReduction normalize_tau(const Cplx& tau);

// z written in the (omega1, omega2) basis: z = alpha*omega1 + beta*omega2.
std::array<Real, 2> basis_coords(const Cplx& z, const Lattice& lat);

struct CellReduction {
    Cplx z0;          // z - m*omega1 - n*omega2, coefficients rounded
    long long m, n;
};

// Rounds the basis coordinates to the nearest integers, ties toward the
// origin.
CellReduction reduce_to_cell(const Cplx& z, const Lattice& lat);

// dist(z, Lambda) < tol, distance estimated by rounding basis coordinates.
bool lattice_membership(const Cplx& z, const Lattice& lat, const Real& tol);

// Length of a shortest nonzero vector (Gauss-reduced basis minimum).
Real shortest_vector_len(const Lattice& lat);

// [super : sub] when sub is a finite-index sublattice of super, else nullopt.
std::optional<Int> sublattice_index(const Lattice& sub, const Lattice& super, const Real& tol);

} // namespace bialg

#endif
