#ifndef BIALG_INTKERNEL_HPP
#define BIALG_INTKERNEL_HPP

#include <array>
#include <vector>

#include "bialg/quadfield.hpp"

namespace bialg {

using Triple = std::array<Int, 3>;

// Basis of the integer solution lattice of a single linear relation over a
// quadratic field or Q.  Rows are in Hermite normal form (positive pivots,
// entries above a pivot reduced), ordered by pivot column, so the output is
// canonical.
struct IntKernelBasis {
    std::vector<Triple> rows;

    int rank() const { return static_cast<int>(rows.size()); }
    bool in_span(const Triple& v) const;  // membership in the Z-span
};

bool operator==(const IntKernelBasis& a, const IntKernelBasis& b);

// Kernel {v in Z^3 : v0*c0 + v1*c1 + v2*c2 = 0} for exact coefficients over
// one quadratic field (rational entries interoperate with any d).
IntKernelBasis integer_kernel(const std::vector<QuadElem>& coeffs);

// Same Z-module?
bool same_span(const IntKernelBasis& a, const IntKernelBasis& b);

Triple primitive_part(const Triple& v);  // content-reduced, first nonzero > 0

namespace detail {
// Row-style Hermite normal form; returns nonzero rows, pivots positive and
// in increasing column order.
std::vector<std::vector<Int>> hnf_rows(std::vector<std::vector<Int>> rows);
// Kernel basis (as rows) of an m x n integer matrix.
std::vector<std::vector<Int>> kernel_of_matrix(const std::vector<std::vector<Int>>& a, int n);
} // namespace detail

} // namespace bialg

#endif
