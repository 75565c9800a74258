#include "bialg/lattice.hpp"

#include <stdexcept>

namespace bialg {

namespace {

// round-half-toward-zero on the fractional part
Real round_ties_to_origin(const Real& t) {
    Real f = floor(t);
    Real frac = t - f;
    if (frac > Real(0.5)) return f + 1;
    if (frac < Real(0.5)) return f;
    return t > 0 ? f : f + 1;  // tie: toward 0
}

} // namespace

Lattice Lattice::from_tau(const TauSpec& s) {
    Lattice lat;
    lat.omega1 = Cplx(1);
    lat.omega2 = s.tau();
    lat.spec = s;
    return lat;
}

Lattice Lattice::from_basis(Cplx w1, Cplx w2) {
    Real orient = w1.re * w2.im - w1.im * w2.re;  // Im(conj(w1) w2)
    if (orient == 0) throw std::invalid_argument("lattice generators are R-dependent");
    Lattice lat;
    if (orient > 0) {
        lat.omega1 = std::move(w1);
        lat.omega2 = std::move(w2);
    } else {
        lat.omega1 = std::move(w2);
        lat.omega2 = std::move(w1);
    }
    return lat;
}

Cplx Lattice::tau() const { return omega2 / omega1; }

Lattice Lattice::conjugate() const {
    Lattice lat = from_basis(conj(omega1), conj(omega2));
    if (spec) lat.spec = spec->conjugate();
    return lat;
}

Lattice Lattice::scaled(const Cplx& factor) const {
    if (factor.is_zero()) throw std::invalid_argument("lattice scale factor must be nonzero");
    Lattice lat;
    lat.omega1 = factor * omega1;
    lat.omega2 = factor * omega2;
    return lat;
}

TauReduction normalize_tau(const Cplx& tau) {
    if (!(tau.im > 0)) throw std::invalid_argument("tau must lie in the upper half-plane");
    Cplx t = tau;
    Sl2Mat m;
    const int max_iter = 10000;
    for (int i = 0; i < max_iter; ++i) {
        Real n = round_ties_to_origin(t.re);
        if (n != 0) {
            long long k = n.convert_to<long long>();
            t.re -= Real(k);
            // left-multiply by [[1, -k], [0, 1]]
            m.a -= k * m.c;
            m.b -= k * m.d;
        }
        if (norm_sq(t) < 1) {
            t = -inv(t);
            // left-multiply by [[0, -1], [1, 0]]
            std::swap(m.a, m.c);
            std::swap(m.b, m.d);
            m.a = -m.a;
            m.b = -m.b;
            continue;
        }
        return {t, m};
    }
    throw std::runtime_error("normalize_tau did not converge");
}

std::array<Real, 2> basis_coords(const Cplx& z, const Lattice& lat) {
    const Cplx &w1 = lat.omega1, &w2 = lat.omega2;
    Real det = w1.re * w2.im - w1.im * w2.re;
    if (det == 0) throw std::invalid_argument("degenerate lattice");
    Real alpha = (z.re * w2.im - z.im * w2.re) / det;
    Real beta = (w1.re * z.im - w1.im * z.re) / det;
    return {alpha, beta};
}

CellReduction reduce_to_cell(const Cplx& z, const Lattice& lat) {
    auto [alpha, beta] = basis_coords(z, lat);
    Real ra = round_ties_to_origin(alpha);
    Real rb = round_ties_to_origin(beta);
    long long m = ra.convert_to<long long>();
    long long n = rb.convert_to<long long>();
    Cplx z0 = z - Real(m) * lat.omega1 - Real(n) * lat.omega2;
    return {z0, m, n};
}

bool lattice_membership(const Cplx& z, const Lattice& lat, const Real& tol) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    return abs(reduce_to_cell(z, lat).z0) < tol;
}

Real shortest_vector_len(const Lattice& lat) {
    // Gauss reduction on the basis.
    Cplx u = lat.omega1, v = lat.omega2;
    if (norm_sq(u) > norm_sq(v)) std::swap(u, v);
    for (int i = 0; i < 1000; ++i) {
        Real mu = (v.re * u.re + v.im * u.im) / norm_sq(u);
        Real k = round_ties_to_origin(mu);
        if (k != 0) v = v - Real(k.convert_to<long long>()) * u;
        if (norm_sq(v) >= norm_sq(u)) break;
        std::swap(u, v);
    }
    return abs(u);
}

std::optional<Int> sublattice_index(const Lattice& sub, const Lattice& super, const Real& tol) {
    // generators of sub must be integer combinations of super's
    auto c1 = basis_coords(sub.omega1, super);
    auto c2 = basis_coords(sub.omega2, super);
    long long a = round_ties_to_origin(c1[0]).convert_to<long long>();
    long long b = round_ties_to_origin(c1[1]).convert_to<long long>();
    long long c = round_ties_to_origin(c2[0]).convert_to<long long>();
    long long d = round_ties_to_origin(c2[1]).convert_to<long long>();
    if (abs(c1[0] - Real(a)) > tol || abs(c1[1] - Real(b)) > tol ||
        abs(c2[0] - Real(c)) > tol || abs(c2[1] - Real(d)) > tol)
        return std::nullopt;
    Int det = Int(a) * d - Int(b) * c;
    if (det == 0) return std::nullopt;
    return abs(det);
}

} // namespace bialg
