#ifndef BIALG_TAUSPEC_HPP
#define BIALG_TAUSPEC_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bialg/complexmp.hpp"
#include "bialg/errors.hpp"
#include "bialg/intkernel.hpp"
#include "bialg/quadfield.hpp"

namespace bialg {

enum class TauMode { ExactQuadratic, Geodesic, Numeric };

// Exact knowledge of the Q-linear relations among {1, 2x, s} where
// tau = x + iy and s = x^2 + y^2.  This is all the classification needs.
struct RelationStructure {
    int rank = 0;                                // of the relation lattice in Z^3
    std::optional<std::pair<Rat, Rat>> xs;       // (2x, s), present iff rank 2
    std::optional<Triple> relation;              // primitive triple, present iff rank 1
    std::vector<std::string> warnings;
};

// The lattice parameter tau with its arithmetic provenance.  Only inputs
// whose relation structure is known exactly can be classified; floats alone
// raise UndecidableError.
class TauSpec {
public:
    // tau = a + b*sqrt(d), d < 0 squarefree, b > 0.
    static TauSpec exact_quadratic(const QuadElem& tau);
    // tau on the geodesic c*(x^2+y^2) + 2*d*x - b = 0.  For a vertical line
    // (c = 0) the position is y > 0; for a circle it is the angle in (0, pi)
    // measured from the positive x-direction at the center.  generic asserts
    // that the declared relation is the only one.
    static TauSpec geodesic(long long b, long long c, long long d, double position,
                            bool generic);
    // Floating tau with an optional certificate listing an exact basis of
    // the relation lattice (empty list certifies rank 0).
    static TauSpec numeric(double x, double y,
                           std::optional<std::vector<Triple>> certificate);

    TauMode mode() const { return mode_; }

    // Numeric coordinates at the current working precision.  The value is
    // lifted exactly from the declared arithmetic data, so it lies on the
    // declared geodesic (or quadratic point) to full precision.
    Cplx tau() const;
    Real x() const;
    Real y() const;
    Real s() const;  // x^2 + y^2

    // Exact relation structure; throws UndecidableError for bare floats or
    // a geodesic not asserted generic.
    RelationStructure relations() const;

    // Spec of the conjugate lattice parameter -conj(tau) (upper half-plane).
    TauSpec conjugate() const;

    const QuadElem& exact_tau() const { return tau_exact_; }
    Triple geodesic_triple() const { return triple_; }
    double position() const { return position_; }
    bool generic() const { return generic_; }
    double numeric_x() const { return x_in_; }
    double numeric_y() const { return y_in_; }
    const std::optional<std::vector<Triple>>& certificate() const { return certificate_; }

private:
    TauSpec() = default;

    TauMode mode_ = TauMode::Numeric;
    QuadElem tau_exact_;
    Triple triple_{0, 0, 0};
    double position_ = 0;
    bool generic_ = false;
    double x_in_ = 0, y_in_ = 0;
    std::optional<std::vector<Triple>> certificate_;
};

// Validity of a geodesic triple: primitive, and either vertical (c = 0,
// d != 0) or a real circle (c != 0, d^2 + b*c > 0).
void validate_geodesic_triple(const Triple& t);

} // namespace bialg

#endif
