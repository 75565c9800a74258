#include "bialg/isogeny.hpp"

#include <stdexcept>

namespace bialg {

namespace {

// Sign convention for generators: c >= 0, and d > 0 when c = 0.
Triple orient_generator(Triple t) {
    bool flip = t[1] < 0 || (t[1] == 0 && t[2] < 0);
    if (flip)
        for (Int& v : t) v = -v;
    return t;
}

IntKernelBasis relation_kernel(const RelationStructure& rel) {
    IntKernelBasis basis;
    switch (rel.rank) {
    case 0:
        return basis;
    case 1:
        basis.rows.push_back(*rel.relation);
        return basis;
    case 2: {
        const auto& [two_x, s] = *rel.xs;
        return integer_kernel({QuadElem(Rat(-1)), QuadElem(s), QuadElem(two_x)});
    }
    default:
        throw std::logic_error("relation rank out of range");
    }
}

} // namespace

Cplx gamma_of_triple(const Triple& t, const TauSpec& spec) {
    Cplx tau_bar = conj(spec.tau());
    return Real(t[1]) * tau_bar + Cplx(Real(t[2]));
}

IsogenySet isog_conj_set(const TauSpec& spec) {
    RelationStructure rel = spec.relations();
    IsogenySet iso;
    iso.warnings = rel.warnings;
    iso.basis = relation_kernel(rel);
    for (const Triple& row : iso.basis.rows) {
        iso.gammas.push_back(gamma_of_triple(row, spec));
        iso.matrices.push_back(TraceZeroMat{-row[2], row[0], row[1], row[2]});
        iso.abs_sq.push_back(row[2] * row[2] + row[0] * row[1]);
    }
    if (iso.rank() == 1) iso.generator = orient_generator(iso.basis.rows[0]);
    return iso;
}

std::optional<CmInfo> is_cm(const TauSpec& spec) {
    RelationStructure rel = spec.relations();
    if (rel.rank != 2) return std::nullopt;
    const auto& [two_x, s] = *rel.xs;
    // tau^2 - (2x) tau + s = 0, cleared and made primitive with A > 0
    Int l = lcm(denominator(two_x), denominator(s));
    Int a = l;
    Int b = -numerator(two_x) * (l / denominator(two_x));
    Int c = numerator(s) * (l / denominator(s));
    Int g = gcd(gcd(abs(a), abs(b)), abs(c));
    a /= g; b /= g; c /= g;
    CmInfo info;
    info.minpoly = {a, b, c};
    info.disc = b * b - 4 * a * c;
    return info;
}

std::optional<GeodesicData> geodesic_through(const TauSpec& spec) {
    RelationStructure rel = spec.relations();
    if (rel.rank == 0) return std::nullopt;

    Triple t;
    if (rel.rank == 1) {
        t = orient_generator(*rel.relation);
    } else {
        // Canonical choice for CM points: the vertical line through x.
        const Rat& two_x = rel.xs->first;
        t = Triple{numerator(two_x), 0, denominator(two_x)};
    }

    GeodesicData data;
    data.triple = t;
    if (t[1] == 0) {
        data.kind = GeodesicData::Kind::Vertical;
        data.endpoint_class = EndpointClass::Rational;
        data.x_or_center = Rat(t[0], 2 * t[2]);
        data.radius_sq = 0;
        return data;
    }
    data.kind = GeodesicData::Kind::Circle;
    data.x_or_center = Rat(-t[2], t[1]);
    Int disc = t[2] * t[2] + t[0] * t[1];
    data.radius_sq = Rat(disc, t[1] * t[1]);
    Int root;
    if (is_perfect_square(disc, &root)) {
        data.endpoint_class = EndpointClass::Rational;
        Rat r(root, abs(t[1]));
        data.rational_endpoints = {data.x_or_center - r, data.x_or_center + r};
    } else {
        data.endpoint_class = EndpointClass::ConjRealQuadratic;
    }
    return data;
}

std::optional<AbsWitness> rational_abs_witness(const IsogenySet& iso, const TauSpec& spec) {
    if (iso.rank() == 0) return std::nullopt;
    if (iso.rank() == 1) {
        Triple t = *iso.generator;
        Int abs2 = t[2] * t[2] + t[0] * t[1];
        Int root;
        if (!is_perfect_square(abs2, &root)) return std::nullopt;
        return AbsWitness{t, gamma_of_triple(t, spec), Rat(root)};
    }
    // Rank 2: the vertical-geodesic element has c = 0, so gamma is the
    // integer d and |gamma| = d.
    const Triple &r1 = iso.basis.rows[0], &r2 = iso.basis.rows[1];
    Int c1 = r1[1], c2 = r2[1];
    Triple t;
    if (c1 == 0) {
        t = r1;
    } else if (c2 == 0) {
        t = r2;
    } else {
        Int g = gcd(abs(c1), abs(c2));
        Int n1 = c2 / g, n2 = -c1 / g;
        t = Triple{n1 * r1[0] + n2 * r2[0], Int(0), n1 * r1[2] + n2 * r2[2]};
    }
    t = orient_generator(primitive_part(t));
    return AbsWitness{t, gamma_of_triple(t, spec), Rat(abs(t[2]))};
}

} // namespace bialg
