#include "bialg/sample.hpp"

#include <stdexcept>

#include "bialg/rng.hpp"

namespace bialg {

namespace {

SampleSet run_pass(const RealLine& line, int n, const Weierstrass& eng,
                   std::uint64_t seed, double range) {
    ScopedPrecision sp(eng.cfg().working_digits());
    Rng rng(seed);
    const Cplx u = line.direction();
    SampleSet set;
    const double clip = 1e12;
    for (int i = 0; i < n; ++i) {
        double t = rng.uniform(-range, range);
        Cplx z = line.offset + Real(t) * u;
        WpValue v = eng.wp(z);
        if (v.is_pole) {
            ++set.dropped;
            continue;
        }
        double xr = v.value.re.convert_to<double>();
        double xi = v.value.im.convert_to<double>();
        if (std::abs(xr) > clip || std::abs(xi) > clip) {
            ++set.dropped;
            continue;
        }
        set.params.push_back(t);
        set.points.push_back({z.re.convert_to<double>(), z.im.convert_to<double>()});
        set.images.push_back({xr, xi});
    }
    return set;
}

} // namespace

SampleSet sample_line(const RealLine& line, int n, const Weierstrass& eng,
                      std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_line: need n >= 1");
    ScopedPrecision sp(eng.cfg().working_digits());
    double cell = (abs(eng.lattice().omega1) + abs(eng.lattice().omega2)).convert_to<double>();
    double range = 1.5 * cell;  // total span 3 cell diameters

    SampleSet set = run_pass(line, n, eng, seed, range);
    if (set.dropped * 2 > n) {
        // one re-jitter with a perturbed seed and slightly stretched range
        SampleSet retry = run_pass(line, n, eng, seed ^ 0x9e3779b97f4a7c15ull, range * 1.17);
        if (retry.images.size() > set.images.size()) set = std::move(retry);
    }
    if (set.images.empty())
        throw std::runtime_error("sample_line: every sample fell in a pole neighborhood");
    return set;
}

} // namespace bialg
