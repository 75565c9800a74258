#ifndef BIALG_SAMPLE_HPP
#define BIALG_SAMPLE_HPP

#include <cstdint>

#include "bialg/lines.hpp"
#include "bialg/weierstrass.hpp"

namespace bialg {

// Images are stored in double precision: they feed the double-precision
// relation fitter, whose tolerances sit far above double rounding.
struct SampleSet {
    std::vector<double> params;
    std::vector<std::array<double, 2>> points;
    std::vector<std::array<double, 2>> images;
    int dropped = 0;
};

// Uniform parameters over a range covering at least three fundamental-cell
// crossings; points within the pole radius are dropped, images clipped at
// magnitude 1e12 are dropped and counted.  If more than half the samples
// drop, the range is re-jittered once.
SampleSet sample_line(const RealLine& line, int n, const Weierstrass& eng,
                      std::uint64_t seed);

} // namespace bialg

#endif
