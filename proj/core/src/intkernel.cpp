#include "bialg/intkernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace bialg {

namespace detail {

std::vector<std::vector<Int>> hnf_rows(std::vector<std::vector<Int>> rows) {
    if (rows.empty()) return rows;
    const size_t n = rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < n && r < rows.size(); ++col) {
        // Euclidean elimination below row r in this column.
        while (true) {
            size_t best = rows.size();
            for (size_t i = r; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
            }
            if (best == rows.size()) break;  // column is zero below r
            std::swap(rows[r], rows[best]);
            bool others = false;
            for (size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Int q = rows[i][col] / rows[r][col];  // truncated division
                if (q != 0)
                    for (size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][col] != 0) others = true;
            }
            if (!others) break;
        }
        if (rows[r][col] == 0) continue;
        if (rows[r][col] < 0)
            for (size_t j = 0; j < n; ++j) rows[r][j] = -rows[r][j];
        // Reduce entries above the pivot into [0, pivot).
        for (size_t i = 0; i < r; ++i) {
            Int q = rows[i][col] / rows[r][col];
            if (rows[i][col] - q * rows[r][col] < 0) q -= 1;  // floor
            if (q != 0)
                for (size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::vector<std::vector<Int>> kernel_of_matrix(const std::vector<std::vector<Int>>& a, int n) {
    // Column elimination A*U = H with U unimodular; kernel columns of U are
    // those mapped to zero columns of H.
    const size_t m = a.size();
    std::vector<std::vector<Int>> h = a;
    std::vector<std::vector<Int>> u(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) u[i][i] = 1;

    auto addmul_col = [&](int dst, int src, const Int& q) {
        for (size_t i = 0; i < m; ++i) h[i][dst] -= q * h[i][src];
        for (int i = 0; i < n; ++i) u[i][dst] -= q * u[i][src];
    };

    int lead = 0;
    for (size_t row = 0; row < m && lead < n; ++row) {
        while (true) {
            int best = -1;
            for (int j = lead; j < n; ++j) {
                if (h[row][j] == 0) continue;
                if (best < 0 || abs(h[row][j]) < abs(h[row][best])) best = j;
            }
            if (best < 0) break;
            if (best != lead) {
                for (size_t i = 0; i < m; ++i) std::swap(h[i][best], h[i][lead]);
                for (int i = 0; i < n; ++i) std::swap(u[i][best], u[i][lead]);
            }
            bool others = false;
            for (int j = lead + 1; j < n; ++j) {
                if (h[row][j] == 0) continue;
                Int q = h[row][j] / h[row][lead];
                if (q != 0) addmul_col(j, lead, q);
                if (h[row][j] != 0) others = true;
            }
            if (!others) break;
        }
        if (h[row][lead] != 0) ++lead;
    }

    std::vector<std::vector<Int>> kernel;
    for (int j = lead; j < n; ++j) {
        std::vector<Int> v(n);
        for (int i = 0; i < n; ++i) v[i] = u[i][j];
        kernel.push_back(std::move(v));
    }
    return hnf_rows(std::move(kernel));
}

} // namespace detail

Triple primitive_part(const Triple& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    if (g == 0) throw std::invalid_argument("primitive_part: zero vector");
    Triple w{v[0] / g, v[1] / g, v[2] / g};
    for (const Int& x : w) {
        if (x != 0) {
            if (x < 0) { w[0] = -w[0]; w[1] = -w[1]; w[2] = -w[2]; }
            break;
        }
    }
    return w;
}

namespace {

std::vector<std::vector<Int>> to_hnf(const std::vector<Triple>& rows) {
    std::vector<std::vector<Int>> m;
    for (const Triple& r : rows) m.push_back({r[0], r[1], r[2]});
    return detail::hnf_rows(std::move(m));
}

} // namespace

bool IntKernelBasis::in_span(const Triple& v) const {
    // The HNF's staircase makes reduction well-defined for any input basis.
    auto h = to_hnf(rows);
    std::vector<Int> rem(v.begin(), v.end());
    for (const auto& row : h) {
        int p = 0;
        while (p < 3 && row[p] == 0) ++p;
        if (p == 3) continue;
        if (rem[p] % row[p] != 0) return false;
        Int q = rem[p] / row[p];
        for (int j = 0; j < 3; ++j) rem[j] -= q * row[j];
    }
    return rem[0] == 0 && rem[1] == 0 && rem[2] == 0;
}

bool operator==(const IntKernelBasis& a, const IntKernelBasis& b) { return a.rows == b.rows; }

bool same_span(const IntKernelBasis& a, const IntKernelBasis& b) {
    // The row HNF is a canonical form of the Z-module.
    return to_hnf(a.rows) == to_hnf(b.rows);
}

IntKernelBasis integer_kernel(const std::vector<QuadElem>& coeffs) {
    if (coeffs.size() != 3)
        throw std::invalid_argument("integer_kernel: expected exactly three coefficients");

    // Validate the common field (throws on mismatched d).
    QuadElem sum = coeffs[0];
    for (size_t i = 1; i < coeffs.size(); ++i) sum = sum + coeffs[i];

    // Split into rational-basis components: sum v_i (a_i + b_i sqrt(d)) = 0
    // iff sum v_i a_i = 0 and sum v_i b_i = 0.
    std::vector<Rat> arow(3), brow(3);
    bool has_irrational = false;
    for (int i = 0; i < 3; ++i) {
        arow[i] = coeffs[i].a();
        brow[i] = coeffs[i].b();
        if (brow[i] != 0) has_irrational = true;
    }

    auto clear_denoms = [](const std::vector<Rat>& row) {
        Int l = 1;
        for (const Rat& x : row) l = lcm(l, denominator(x));
        std::vector<Int> out(row.size());
        for (size_t i = 0; i < row.size(); ++i)
            out[i] = numerator(row[i]) * (l / denominator(row[i]));
        return out;
    };

    std::vector<std::vector<Int>> a;
    a.push_back(clear_denoms(arow));
    if (has_irrational) a.push_back(clear_denoms(brow));

    auto rows = detail::kernel_of_matrix(a, 3);
    IntKernelBasis basis;
    for (auto& r : rows) basis.rows.push_back(Triple{r[0], r[1], r[2]});
    return basis;
}

} // namespace bialg
