#ifndef BIALG_CLASSIFY_HPP
#define BIALG_CLASSIFY_HPP

#include "bialg/isogeny.hpp"
#include "bialg/lines.hpp"

namespace bialg {

enum class Branch { OnlySingletons, TwoLineFamily, CmFamily };
enum class SingletonReason { NotIsogenous, AbsGammaIrrational };

// The complete description of the weakly bialgebraic sets of the real
// Weierstrass map for Lambda = <1, tau>: besides singletons there are
// either no curves, the translates of two lines, or the translates of all
// lines through a nonzero lattice point.  Translate closure always holds.
struct Classification {
    Branch branch;
    std::optional<SingletonReason> reason;

    IsogenySet isog;
    std::optional<GeodesicData> geodesic;

    // TwoLineFamily data
    std::optional<Triple> gamma_triple;  // primitive generator of the relation lattice
    std::optional<Cplx> gamma;
    std::optional<Cplx> sqrt_gamma;      // principal branch
    std::optional<RealLine> line1;       // {sqrt(gamma) z in R}
    std::optional<RealLine> line2;       // {sqrt(gamma) z in iR}

    // CmFamily data
    std::optional<CmInfo> cm;
    std::optional<std::string> direction_rule;

    bool isog_to_self_conjugate = false;  // Lambda isogenous to a self-conjugate lattice
    std::vector<std::string> warnings;
};

Classification classify(const TauSpec& spec);

// The family of bialgebraic line directions through the origin: the exact
// pair for TwoLineFamily, or the primitive lattice directions m + n*tau
// with max(|m|, |n|) <= height_bound for CmFamily (deduplicated by sign).
// OnlySingletons yields an empty list and a warning.
std::vector<RealLine> bialgebraic_lines(const Classification& cls, const TauSpec& spec,
                                        int height_bound,
                                        std::vector<std::string>* warnings = nullptr);

} // namespace bialg

#endif
