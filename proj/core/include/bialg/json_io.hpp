#ifndef BIALG_JSON_IO_HPP
#define BIALG_JSON_IO_HPP

#include <json.hpp>

#include "bialg/verify.hpp"

namespace bialg {

// Reports keep key insertion order and carry high-precision reals as decimal
// strings, so identical invocations serialize byte-identically.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json tau_spec_to_json(const TauSpec& spec);
TauSpec tau_spec_from_json(const Json& j);

Json real_line_to_json(const RealLine& line, int digits);
RealLine real_line_from_json(const Json& j, const TauSpec& spec);

Json isogeny_to_json(const IsogenySet& iso, int digits);
Json geodesic_to_json(const GeodesicData& g);
Json classification_to_json(const Classification& cls, const TauSpec& spec,
                            int height_bound, int digits);
Json invariants_to_json(const LatticeInvariants& inv, int digits);
Json fit_to_json(const FitResult& fit);
Json complex_fit_to_json(const ComplexFitResult& fit);
Json line_verdict_to_json(const LineVerdict& v);
Json density_to_json(const DensityReport& rep);
Json halfline_to_json(const HalflineReport& rep);

// Structural validation against the shipped report schema; returns the list
// of violations (empty = valid).
std::vector<std::string> validate_report(const std::string& kind, const Json& j);

std::string cplx_str(const Cplx& z, int digits);

} // namespace bialg

#endif
