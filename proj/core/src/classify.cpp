#include "bialg/classify.hpp"

#include <numeric>
#include <stdexcept>

namespace bialg {

Classification classify(const TauSpec& spec) {
    Classification cls;
    cls.isog = isog_conj_set(spec);
    cls.warnings = cls.isog.warnings;
    cls.geodesic = geodesic_through(spec);

    switch (cls.isog.rank()) {
    case 0:
        cls.branch = Branch::OnlySingletons;
        cls.reason = SingletonReason::NotIsogenous;
        cls.isog_to_self_conjugate = false;
        return cls;
    case 1: {
        auto witness = rational_abs_witness(cls.isog, spec);
        if (!witness) {
            cls.branch = Branch::OnlySingletons;
            cls.reason = SingletonReason::AbsGammaIrrational;
            cls.isog_to_self_conjugate = false;
            return cls;
        }
        cls.branch = Branch::TwoLineFamily;
        cls.gamma_triple = witness->triple;
        cls.gamma = witness->gamma;
        Cplx sg = sqrt(*cls.gamma);
        cls.sqrt_gamma = sg;
        cls.line1 = line_from_rho(sg);                      // {sqrt(g) z in R}
        cls.line2 = line_from_rho(Cplx(0, -1) * sg);        // {sqrt(g) z in iR}
        cls.isog_to_self_conjugate = true;
        return cls;
    }
    case 2:
        cls.branch = Branch::CmFamily;
        cls.cm = is_cm(spec);
        cls.direction_rule = "m + n*tau, (m, n) in Z^2 primitive";
        cls.isog_to_self_conjugate = true;
        return cls;
    default:
        throw std::logic_error("isogeny rank out of range");
    }
}

std::vector<RealLine> bialgebraic_lines(const Classification& cls, const TauSpec& spec,
                                        int height_bound,
                                        std::vector<std::string>* warnings) {
    std::vector<RealLine> lines;
    switch (cls.branch) {
    case Branch::OnlySingletons:
        if (warnings)
            warnings->push_back("classification admits only singletons; no bialgebraic lines");
        return lines;
    case Branch::TwoLineFamily:
        lines.push_back(*cls.line1);
        lines.push_back(*cls.line2);
        return lines;
    case Branch::CmFamily: {
        if (height_bound < 1) throw std::invalid_argument("height_bound must be >= 1");
        // primitive (m, n), deduplicated by sign: n > 0, or n = 0 and m > 0
        for (long long n = 0; n <= height_bound; ++n) {
            for (long long m = -height_bound; m <= height_bound; ++m) {
                if (n == 0 && m <= 0) continue;
                if (std::gcd(m, n) != 1) continue;
                lines.push_back(rho_from_lattice_direction(m, n, spec));
            }
        }
        return lines;
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace bialg
