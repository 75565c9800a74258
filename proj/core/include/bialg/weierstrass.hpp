#ifndef BIALG_WEIERSTRASS_HPP
#define BIALG_WEIERSTRASS_HPP

#include <vector>

#include "bialg/lattice.hpp"

namespace bialg {

struct WpValue {
    bool is_pole = false;
    Cplx value;
};

struct LatticeInvariants {
    Cplx g2, g3;
    Cplx disc;                   // g2^3 - 27 g3^2
    Cplx j;                      // 1728 g2^3 / disc
    std::array<Cplx, 3> roots;   // wp at omega1/2, (omega1+omega2)/2, omega2/2
};

// Evaluator for wp, wp' and the lattice invariants of one lattice, at the
// configured precision.  Construction reduces tau into the fundamental
// domain, computes g2/g3 from the weight-4/6 Eisenstein q-series and the
// Laurent coefficients of wp about 0; evaluation reduces the argument into
// the fundamental cell, seeds the Laurent series inside its radius and
// doubles back up.  All cached state is immutable after construction.
class Weierstrass {
public:
    Weierstrass(Lattice lat, PrecisionCfg cfg);

    const LatticeInvariants& invariants() const { return inv_; }
    const Lattice& lattice() const { return lat_; }
    const PrecisionCfg& cfg() const { return cfg_; }

    WpValue wp(const Cplx& z) const;
    WpValue wp_prime(const Cplx& z) const;
    std::pair<WpValue, WpValue> wp_pair(const Cplx& z) const;  // (wp, wp')

    // The real map (x, y) -> (Re wp(x+iy), Im wp(x+iy)); POLE as nullopt.
    std::optional<std::array<Real, 2>> p_map(const Real& x, const Real& y) const;

    Real pole_radius() const;        // in Lambda units
    Real shortest_len() const;       // shortest nonzero lattice vector

private:
    void setup();
    // wp and wp' on the reduced lattice <1, tau_red>.
    std::pair<Cplx, Cplx> eval_reduced(const Cplx& w) const;
    std::pair<Cplx, Cplx> series_at(const Cplx& u) const;

    Lattice lat_;
    PrecisionCfg cfg_;
    Cplx mu_;        // Lambda = mu * <1, tau_red>
    Cplx tau_red_;
    Lattice lat_red_;
    Cplx g2_red_, g3_red_;
    std::vector<Cplx> laurent_;  // laurent_[k] = c_k, valid for k >= 2
    Real seed_radius_;
    LatticeInvariants inv_;
};

// |wp_L(rho^{-1} z) - rho^2 wp_{rho L}(z)| / (1 + max magnitude).
Real homogeneity_check(const Cplx& z, const Cplx& rho, const Lattice& lat,
                       const PrecisionCfg& cfg);

} // namespace bialg

#endif
