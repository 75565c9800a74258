#ifndef BIALG_FIT_HPP
#define BIALG_FIT_HPP

#include <array>
#include <complex>
#include <optional>
#include <vector>

namespace bialg {

struct FitTolerances {
    double tol_low = 1e-10;   // sv_ratio below this suggests a vanishing relation
    double tol_high = 1e-4;   // sv_ratio above this at every degree refutes one
    double tol_hold = 1e-6;   // holdout residual bound for confirmation
};

enum class FitVerdict { Vanishing, NoRelation, Inconclusive };

// Monomials x^i y^j ordered by total degree, then x-exponent descending:
// 1, X, Y, X^2, XY, Y^2, ...
int monomial_count(int deg);
std::vector<std::pair<int, int>> monomial_exponents(int deg);

struct FitResult {
    FitVerdict verdict = FitVerdict::Inconclusive;
    std::optional<int> degree;
    std::vector<double> coeffs;  // original coordinates, unit norm
    double sv_ratio = 1.0;       // at the decided degree, else min over degrees
    double holdout_residual = 0.0;
    std::optional<std::vector<long long>> exact;  // snapped integer polynomial
};

// Minimal-degree search for a polynomial vanishing on the points: per
// degree, the smallest/largest singular value ratio of the monomial matrix
// of 75% of the (centered, isotropically unit-scaled) points decides a
// candidate, which must then validate on the held-out 25%.
FitResult fit_vanishing_poly(const std::vector<std::array<double, 2>>& points,
                             int max_deg, const FitTolerances& tol,
                             int snap_height = 50);

// Integer coefficient vector of height <= height within angle 1e-6 of the
// given direction; scanning the exhaustive scale-and-round candidates covers
// every collinear integer vector up to that height.
std::optional<std::vector<long long>> snap_integer_relation(
    const std::vector<double>& coeffs, int height);

double eval_poly(const std::vector<double>& coeffs, double x, double y);

// Complex bivariate variant used for curves of wp x wp_conj: the same
// nullspace method on real-and-imaginary stacked rows.
struct ComplexFitResult {
    FitVerdict verdict = FitVerdict::Inconclusive;
    std::optional<int> degree;
    std::vector<std::complex<double>> coeffs;  // original coordinates, phase-normalized
    double sv_ratio = 1.0;
    double holdout_residual = 0.0;
};

ComplexFitResult fit_vanishing_poly_complex(
    const std::vector<std::array<std::complex<double>, 2>>& points, int max_deg,
    const FitTolerances& tol);

} // namespace bialg

#endif
