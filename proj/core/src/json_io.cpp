#include "bialg/json_io.hpp"

#include <stdexcept>

namespace bialg {

namespace {

std::string real_str(const Real& x, int digits) {
    return x.str(digits, std::ios_base::scientific);
}

Json cplx_json(const Cplx& z, int digits) {
    return Json{{"re", real_str(z.re, digits)}, {"im", real_str(z.im, digits)}};
}

Json rat_json(const Rat& r) { return Json(r.str()); }

long long as_ll(const Int& v) { return v.convert_to<long long>(); }

Json triple_json(const Triple& t) { return Json{as_ll(t[0]), as_ll(t[1]), as_ll(t[2])}; }

Triple triple_from(const Json& j) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("certificate rows must be integer triples");
    return Triple{Int(j[0].get<long long>()), Int(j[1].get<long long>()),
                  Int(j[2].get<long long>())};
}

} // namespace

std::string cplx_str(const Cplx& z, int digits) { return to_string(z, digits); }

Json tau_spec_to_json(const TauSpec& spec) {
    Json j;
    switch (spec.mode()) {
    case TauMode::ExactQuadratic: {
        // tau = (p + sqrt(D)) / q with integer p, q > 0 and D = (b q)^2 d
        const QuadElem& t = spec.exact_tau();
        Int q = lcm(denominator(t.a()), denominator(t.b()));
        Int p = numerator(t.a()) * (q / denominator(t.a()));
        Int bq = numerator(t.b()) * (q / denominator(t.b()));
        Int dd = bq * bq * t.d();
        j["mode"] = "exact_quadratic";
        j["p"] = as_ll(p);
        j["q"] = as_ll(q);
        j["d"] = as_ll(dd);
        return j;
    }
    case TauMode::Geodesic: {
        Triple t = spec.geodesic_triple();
        j["mode"] = "geodesic";
        j["b"] = as_ll(t[0]);
        j["c"] = as_ll(t[1]);
        j["d"] = as_ll(t[2]);
        j["position"] = spec.position();
        j["generic"] = spec.generic();
        return j;
    }
    case TauMode::Numeric: {
        j["mode"] = "numeric";
        j["x"] = spec.numeric_x();
        j["y"] = spec.numeric_y();
        if (spec.certificate()) {
            Json rows = Json::array();
            for (const Triple& t : *spec.certificate()) rows.push_back(triple_json(t));
            j["certificate"] = rows;
        }
        return j;
    }
    }
    throw std::logic_error("unreachable");
}

TauSpec tau_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("mode"))
        throw std::invalid_argument("tau spec JSON must be an object with a \"mode\"");
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "exact_quadratic") {
        long long p = j.at("p").get<long long>();
        long long q = j.at("q").get<long long>();
        long long d = j.at("d").get<long long>();
        if (q <= 0) throw std::invalid_argument("exact_quadratic: q must be positive");
        if (d >= 0) throw std::invalid_argument("exact_quadratic: d must be negative");
        auto [core, f] = squarefree_core(d);  // tau = p/q + (f/q) sqrt(core)
        return TauSpec::exact_quadratic(QuadElem(Rat(p, q), Rat(f, q), core));
    }
    if (mode == "geodesic") {
        return TauSpec::geodesic(j.at("b").get<long long>(), j.at("c").get<long long>(),
                                 j.at("d").get<long long>(), j.at("position").get<double>(),
                                 j.value("generic", false));
    }
    if (mode == "numeric") {
        std::optional<std::vector<Triple>> cert;
        if (j.contains("certificate") && !j.at("certificate").is_null()) {
            cert = std::vector<Triple>();
            for (const Json& row : j.at("certificate")) cert->push_back(triple_from(row));
        }
        return TauSpec::numeric(j.at("x").get<double>(), j.at("y").get<double>(),
                                std::move(cert));
    }
    throw std::invalid_argument("unknown tau spec mode: " + mode);
}

Json real_line_to_json(const RealLine& line, int digits) {
    Json j;
    j["rho"] = cplx_json(line.rho, digits);
    j["r"] = cplx_json(line.r, digits);
    j["direction"] = cplx_json(line.direction(), digits);
    j["offset"] = cplx_json(line.offset, digits);
    if (line.lattice_dir) {
        j["m"] = line.lattice_dir->first;
        j["n"] = line.lattice_dir->second;
    }
    return j;
}

RealLine real_line_from_json(const Json& j, const TauSpec& spec) {
    Cplx offset(0);
    if (j.contains("offset")) {
        const Json& o = j.at("offset");
        if (o.is_array() && o.size() == 2)
            offset = Cplx(Real(o[0].get<double>()), Real(o[1].get<double>()));
        else
            offset = Cplx(Real(o.at("x").get<double>()), Real(o.at("y").get<double>()));
    }
    if (j.contains("m") || j.contains("n")) {
        RealLine line = rho_from_lattice_direction(j.value("m", 0ll), j.value("n", 0ll), spec);
        line.offset = offset;
        return line;
    }
    if (j.contains("direction")) {
        const Json& d = j.at("direction");
        Cplx u(Real(d.at("re").get<double>()), Real(d.at("im").get<double>()));
        if (u.is_zero()) throw std::invalid_argument("line direction must be nonzero");
        return line_from_rho(inv(u), offset);
    }
    if (j.contains("rho")) {
        const Json& d = j.at("rho");
        Cplx rho(Real(d.at("re").get<double>()), Real(d.at("im").get<double>()));
        return line_from_rho(rho, offset);
    }
    throw std::invalid_argument("line JSON needs (m, n), direction, or rho");
}

Json isogeny_to_json(const IsogenySet& iso, int digits) {
    Json j;
    j["rank"] = iso.rank();
    Json basis = Json::array();
    for (const Triple& t : iso.basis.rows) basis.push_back(triple_json(t));
    j["basis"] = basis;
    Json gammas = Json::array();
    for (const Cplx& g : iso.gammas) gammas.push_back(cplx_json(g, digits));
    j["gammas"] = gammas;
    Json mats = Json::array();
    for (const TraceZeroMat& m : iso.matrices)
        mats.push_back(Json{as_ll(m.a), as_ll(m.b), as_ll(m.c), as_ll(m.d)});
    j["matrices"] = mats;
    Json abs2 = Json::array();
    for (const Int& v : iso.abs_sq) abs2.push_back(as_ll(v));
    j["abs_sq"] = abs2;
    if (iso.generator) j["generator"] = triple_json(*iso.generator);
    return j;
}

Json geodesic_to_json(const GeodesicData& g) {
    Json j;
    j["kind"] = g.kind == GeodesicData::Kind::Vertical ? "VERTICAL" : "CIRCLE";
    j["triple"] = triple_json(g.triple);
    j["endpoint_class"] =
        g.endpoint_class == EndpointClass::Rational ? "RATIONAL" : "CONJ_REAL_QUADRATIC";
    if (g.kind == GeodesicData::Kind::Vertical) {
        j["x"] = rat_json(g.x_or_center);
        j["endpoints"] = Json{rat_json(g.x_or_center), "inf"};
    } else {
        j["center"] = rat_json(g.x_or_center);
        j["radius_sq"] = rat_json(g.radius_sq);
        if (g.rational_endpoints)
            j["endpoints"] = Json{rat_json(g.rational_endpoints->first),
                                  rat_json(g.rational_endpoints->second)};
    }
    return j;
}

Json classification_to_json(const Classification& cls, const TauSpec& spec,
                            int height_bound, int digits) {
    ScopedPrecision sp(digits + 10);
    Json j;
    j["schema_version"] = kSchemaVersion;
    switch (cls.branch) {
    case Branch::OnlySingletons: j["branch"] = "ONLY_SINGLETONS"; break;
    case Branch::TwoLineFamily: j["branch"] = "TWO_LINE_FAMILY"; break;
    case Branch::CmFamily: j["branch"] = "CM_FAMILY"; break;
    }
    if (cls.reason)
        j["reason"] = *cls.reason == SingletonReason::NotIsogenous ? "NOT_ISOGENOUS"
                                                                   : "ABS_GAMMA_IRRATIONAL";
    j["isog"] = isogeny_to_json(cls.isog, digits);
    if (cls.geodesic) j["geodesic"] = geodesic_to_json(*cls.geodesic);
    if (cls.gamma) j["gamma"] = cplx_json(*cls.gamma, digits);
    if (cls.gamma_triple) j["gamma_triple"] = triple_json(*cls.gamma_triple);
    if (cls.sqrt_gamma) j["sqrt_gamma"] = cplx_json(*cls.sqrt_gamma, digits);
    if (cls.cm) {
        j["minpoly"] = Json{as_ll(cls.cm->minpoly[0]), as_ll(cls.cm->minpoly[1]),
                            as_ll(cls.cm->minpoly[2])};
        j["disc"] = as_ll(cls.cm->disc);
    }
    if (cls.direction_rule) j["direction_rule"] = *cls.direction_rule;

    std::vector<std::string> warnings = cls.warnings;
    std::vector<RealLine> lines = bialgebraic_lines(cls, spec, height_bound, &warnings);
    Json jl = Json::array();
    for (const RealLine& l : lines) jl.push_back(real_line_to_json(l, digits));
    j["lines"] = jl;
    j["isogenous_to_self_conjugate"] = cls.isog_to_self_conjugate;
    j["translate_closure"] = true;
    j["warnings"] = warnings;
    return j;
}

Json invariants_to_json(const LatticeInvariants& inv, int digits) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["g2"] = cplx_json(inv.g2, digits);
    j["g3"] = cplx_json(inv.g3, digits);
    j["disc"] = cplx_json(inv.disc, digits);
    j["j"] = cplx_json(inv.j, digits);
    Json roots = Json::array();
    for (const Cplx& e : inv.roots) roots.push_back(cplx_json(e, digits));
    j["roots"] = roots;
    return j;
}

namespace {

const char* verdict_str(FitVerdict v) {
    switch (v) {
    case FitVerdict::Vanishing: return "VANISHING";
    case FitVerdict::NoRelation: return "NO_RELATION";
    case FitVerdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

} // namespace

Json fit_to_json(const FitResult& fit) {
    Json j;
    j["verdict"] = verdict_str(fit.verdict);
    if (fit.degree) j["degree"] = *fit.degree;
    j["sv_ratio"] = fit.sv_ratio;
    j["holdout_residual"] = fit.holdout_residual;
    if (!fit.coeffs.empty()) j["coeffs"] = fit.coeffs;
    if (fit.exact) j["exact_poly"] = *fit.exact;
    return j;
}

Json complex_fit_to_json(const ComplexFitResult& fit) {
    Json j;
    j["verdict"] = verdict_str(fit.verdict);
    if (fit.degree) j["degree"] = *fit.degree;
    j["sv_ratio"] = fit.sv_ratio;
    j["holdout_residual"] = fit.holdout_residual;
    if (!fit.coeffs.empty()) {
        Json cs = Json::array();
        for (const auto& c : fit.coeffs) cs.push_back(Json{c.real(), c.imag()});
        j["coeffs"] = cs;
    }
    return j;
}

Json line_verdict_to_json(const LineVerdict& v) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["predicted"] = v.predicted;
    Json f = fit_to_json(v.fit);
    for (auto& [k, val] : f.items()) j[k] = val;
    if (v.agree)
        j["agree"] = *v.agree;
    else
        j["agree"] = nullptr;
    j["samples_used"] = v.samples.images.size();
    j["samples_dropped"] = v.samples.dropped;
    j["warnings"] = v.warnings;
    return j;
}

Json density_to_json(const DensityReport& rep) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["coverage"] = rep.coverage;
    j["coverage_half"] = rep.coverage_half;
    j["closed_orbit"] = rep.closed_orbit;
    j["fit"] = fit_to_json(rep.fit);
    return j;
}

Json halfline_to_json(const HalflineReport& rep) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["min_X"] = rep.min_x;
    j["max_X"] = rep.max_x;
    j["e_root"] = rep.e_root;
    j["matches_e_root"] = rep.matches_e_root;
    j["bounded_below"] = rep.bounded_below;
    j["is_half_line"] = rep.is_half_line;
    return j;
}

namespace {

struct Field {
    const char* key;
    const char* type;  // "string" | "number" | "integer" | "boolean" | "array" | "object" | "boolean_or_null"
};

bool type_ok(const Json& v, const std::string& t) {
    if (t == "string") return v.is_string();
    if (t == "number") return v.is_number();
    if (t == "integer") return v.is_number_integer();
    if (t == "boolean") return v.is_boolean();
    if (t == "array") return v.is_array();
    if (t == "object") return v.is_object();
    if (t == "boolean_or_null") return v.is_boolean() || v.is_null();
    return false;
}

const std::vector<Field>& schema_for(const std::string& kind) {
    static const std::vector<Field> classification{
        {"schema_version", "string"}, {"branch", "string"},      {"isog", "object"},
        {"lines", "array"},           {"translate_closure", "boolean"},
        {"isogenous_to_self_conjugate", "boolean"}, {"warnings", "array"}};
    static const std::vector<Field> verify{
        {"schema_version", "string"}, {"predicted", "boolean"},
        {"verdict", "string"},        {"sv_ratio", "number"},
        {"holdout_residual", "number"}, {"agree", "boolean_or_null"},
        {"samples_used", "integer"},  {"samples_dropped", "integer"}};
    static const std::vector<Field> fit{
        {"verdict", "string"}, {"sv_ratio", "number"}, {"holdout_residual", "number"}};
    static const std::vector<Field> density{
        {"schema_version", "string"}, {"coverage", "number"},
        {"closed_orbit", "boolean"},  {"fit", "object"}};
    static const std::vector<Field> invariants{
        {"schema_version", "string"}, {"g2", "object"}, {"g3", "object"},
        {"disc", "object"},           {"j", "object"},  {"roots", "array"}};
    static const std::vector<Field> isog{
        {"rank", "integer"}, {"basis", "array"}, {"gammas", "array"},
        {"matrices", "array"}, {"abs_sq", "array"}};
    static const std::vector<Field> empty{};
    if (kind == "classification") return classification;
    if (kind == "verify") return verify;
    if (kind == "fit") return fit;
    if (kind == "density") return density;
    if (kind == "invariants") return invariants;
    if (kind == "isog") return isog;
    return empty;
}

} // namespace

std::vector<std::string> validate_report(const std::string& kind, const Json& j) {
    std::vector<std::string> errs;
    const auto& fields = schema_for(kind);
    if (fields.empty()) {
        errs.push_back("unknown report kind: " + kind);
        return errs;
    }
    if (!j.is_object()) {
        errs.push_back("report must be a JSON object");
        return errs;
    }
    for (const Field& f : fields) {
        if (!j.contains(f.key)) {
            errs.push_back(std::string("missing field: ") + f.key);
        } else if (!type_ok(j.at(f.key), f.type)) {
            errs.push_back(std::string("field has wrong type: ") + f.key);
        }
    }
    return errs;
}

} // namespace bialg
