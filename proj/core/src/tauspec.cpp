#include "bialg/tauspec.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bialg {

void validate_geodesic_triple(const Triple& t) {
    const Int &b = t[0], &c = t[1], &d = t[2];
    if (b == 0 && c == 0 && d == 0)
        throw std::invalid_argument("geodesic triple must be nonzero");
    Int g = gcd(gcd(abs(b), abs(c)), abs(d));
    if (g != 1) throw std::invalid_argument("geodesic triple must be primitive");
    if (c == 0) {
        if (d == 0)
            throw std::invalid_argument("degenerate geodesic triple (c = d = 0)");
    } else {
        if (d * d + b * c <= 0)
            throw std::invalid_argument("geodesic triple does not describe a real circle");
    }
}

TauSpec TauSpec::exact_quadratic(const QuadElem& tau) {
    if (tau.d() >= 0 || tau.b() <= 0)
        throw std::invalid_argument("exact quadratic tau must have d < 0 and b > 0 (upper half-plane)");
    TauSpec spec;
    spec.mode_ = TauMode::ExactQuadratic;
    spec.tau_exact_ = tau;
    return spec;
}

TauSpec TauSpec::geodesic(long long b, long long c, long long d, double position,
                          bool generic) {
    Triple t{Int(b), Int(c), Int(d)};
    validate_geodesic_triple(t);
    if (c == 0) {
        if (position <= 0) throw std::invalid_argument("vertical geodesic position must be y > 0");
    } else {
        if (!(position > 0 && position < 3.14159265358979323846))
            throw std::invalid_argument("circle geodesic position must be an angle in (0, pi)");
    }
    TauSpec spec;
    spec.mode_ = TauMode::Geodesic;
    spec.triple_ = t;
    spec.position_ = position;
    spec.generic_ = generic;
    return spec;
}

TauSpec TauSpec::numeric(double x, double y, std::optional<std::vector<Triple>> certificate) {
    if (!(y > 0) || !std::isfinite(x) || !std::isfinite(y))
        throw std::invalid_argument("numeric tau must satisfy y > 0");
    TauSpec spec;
    spec.mode_ = TauMode::Numeric;
    spec.x_in_ = x;
    spec.y_in_ = y;
    if (certificate) {
        // Certificate rows must be consistent with the numeric position.
        for (const Triple& t : *certificate) {
            if (t[0] == 0 && t[1] == 0 && t[2] == 0)
                throw std::invalid_argument("certificate rows must be nonzero");
            double s = x * x + y * y;
            double res = -double(t[0]) + double(t[1]) * s + double(t[2]) * 2 * x;
            double scale = 1 + std::abs(double(t[0])) + std::abs(double(t[1])) * s +
                           std::abs(double(t[2])) * 2 * std::abs(x);
            if (std::abs(res) > 1e-9 * scale)
                throw std::invalid_argument("certificate row inconsistent with numeric tau");
        }
        if (certificate->size() > 2)
            throw std::invalid_argument("certificate rank cannot exceed 2");
    }
    spec.certificate_ = std::move(certificate);
    return spec;
}

Cplx TauSpec::tau() const {
    switch (mode_) {
    case TauMode::ExactQuadratic:
        return tau_exact_.value();
    case TauMode::Geodesic: {
        const Int &b = triple_[0], &c = triple_[1], &d = triple_[2];
        if (c == 0) {
            // vertical line x = b/(2d)
            Real xv = Real(Rat(b, 2 * d));
            return Cplx(xv, Real(position_));
        }
        Real center = Real(Rat(-d, c));
        Real r = sqrt(Real(Rat(d * d + b * c, c * c)));
        Real theta = Real(position_);
        return Cplx(center + r * cos(theta), r * sin(theta));
    }
    case TauMode::Numeric:
        return Cplx(Real(x_in_), Real(y_in_));
    }
    throw std::logic_error("unreachable");
}

Real TauSpec::x() const { return tau().re; }
Real TauSpec::y() const { return tau().im; }
Real TauSpec::s() const {
    Cplx t = tau();
    return t.re * t.re + t.im * t.im;
}

RelationStructure TauSpec::relations() const {
    RelationStructure rel;
    switch (mode_) {
    case TauMode::ExactQuadratic: {
        Rat two_x = 2 * tau_exact_.a();
        Rat s_val = tau_exact_.norm();  // a^2 - b^2 d = x^2 + y^2 for d < 0
        rel.rank = 2;
        rel.xs = {two_x, s_val};
        return rel;
    }
    case TauMode::Geodesic: {
        if (!generic_)
            throw UndecidableError(
                "geodesic position not asserted generic; supply generic=true, an exact "
                "quadratic tau, or a certificate");
        rel.rank = 1;
        rel.relation = primitive_part(triple_);
        // CM points are dense on every special geodesic: warn (do not fail)
        // if the free coordinate looks rational.  On a vertical line x is
        // rational by construction and CM means s is too; on a circle it is
        // the other way around.
        ScopedPrecision sp(30);
        if (triple_[1] == 0) {
            if (auto rs = recognize_rational(s(), Int(1000000)))
                rel.warnings.push_back("position has x^2+y^2 ~ " + rs->str() +
                                       "; if exact, the point is CM and generic=true is wrong");
        } else {
            if (auto r = recognize_rational(x(), Int(1000000)))
                rel.warnings.push_back("position has x ~ " + r->str() +
                                       "; if exact, the point is CM and generic=true is wrong");
        }
        return rel;
    }
    case TauMode::Numeric: {
        if (!certificate_)
            throw UndecidableError(
                "numeric tau carries no relation certificate; classification refuses to "
                "guess from floats");
        const auto& rows = *certificate_;
        if (rows.empty()) {
            rel.rank = 0;
            return rel;
        }
        if (rows.size() == 1) {
            Triple t = primitive_part(rows[0]);
            validate_geodesic_triple(t);
            rel.rank = 1;
            rel.relation = t;
            return rel;
        }
        // Two independent relations pin down (2x, s) exactly.
        const Triple &r1 = rows[0], &r2 = rows[1];
        Int det = r1[1] * r2[2] - r2[1] * r1[2];
        if (det == 0)
            throw std::invalid_argument("certificate rows are dependent");
        Rat s_val = Rat(r1[0] * r2[2] - r2[0] * r1[2], det);
        Rat two_x = Rat(r1[1] * r2[0] - r2[1] * r1[0], det);
        // y^2 = s - x^2 must be positive
        Rat y2 = s_val - two_x * two_x / 4;
        if (y2 <= 0) throw std::invalid_argument("certificate implies tau outside H");
        rel.rank = 2;
        rel.xs = {two_x, s_val};
        return rel;
    }
    }
    throw std::logic_error("unreachable");
}

TauSpec TauSpec::conjugate() const {
    // -conj(tau) = -x + iy; relation triples map (b, c, d) -> (b, c, -d).
    switch (mode_) {
    case TauMode::ExactQuadratic:
        return exact_quadratic(QuadElem(-tau_exact_.a(), tau_exact_.b(), tau_exact_.d()));
    case TauMode::Geodesic: {
        Triple t = triple_;
        double pos = position_;
        if (t[1] == 0) {
            t[0] = -t[0];  // x = b/(2d) -> -x keeps d, flips b
        } else {
            pos = 3.14159265358979323846 - pos;  // mirror the angle
            t[2] = -t[2];
        }
        Triple p = primitive_part(t);
        return geodesic(p[0].convert_to<long long>(), p[1].convert_to<long long>(),
                        p[2].convert_to<long long>(), pos, generic_);
    }
    case TauMode::Numeric: {
        std::optional<std::vector<Triple>> cert;
        if (certificate_) {
            cert = std::vector<Triple>();
            for (const Triple& t : *certificate_) cert->push_back(Triple{t[0], t[1], -t[2]});
        }
        return numeric(-x_in_, y_in_, std::move(cert));
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace bialg
