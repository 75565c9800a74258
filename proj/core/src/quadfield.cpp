#include "bialg/quadfield.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace bialg {

std::pair<long long, long long> squarefree_core(long long d) {
    if (d == 0) throw std::invalid_argument("squarefree_core: d must be nonzero");
    long long core = d < 0 ? -1 : 1;
    long long f = 1;
    long long n = std::llabs(d);
    for (long long p = 2; p * p <= n && p <= 1000000; p == 2 ? p = 3 : p += 2) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        for (int i = 0; i < e / 2; ++i) f *= p;
        if (e % 2) core *= p;
    }
    // Remaining cofactor has at most two prime factors > 1e6: either a
    // square p^2 or squarefree.
    Int root;
    if (n > 1 && is_perfect_square(Int(n), &root)) {
        f *= root.convert_to<long long>();
    } else {
        core *= n;
    }
    return {core, f};
}

bool is_squarefree(long long d) { return squarefree_core(d).second == 1; }

QuadElem::QuadElem(Rat a, Rat b, long long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ == 0 || d_ == 1)
        throw std::invalid_argument("QuadElem: d must be a nonzero squarefree integer != 1");
    if (!is_squarefree(d_)) throw std::invalid_argument("QuadElem: d must be squarefree");
    if (b_ == 0) d_ = d;  // keep declared field for rational elements
}

long long QuadElem::common_d(const QuadElem& u, const QuadElem& v) {
    if (u.b_ == 0) return v.d_;
    if (v.b_ == 0) return u.d_;
    if (u.d_ != v.d_)
        throw std::invalid_argument("QuadElem: mismatched quadratic fields (d differ)");
    return u.d_;
}

QuadElem operator+(const QuadElem& u, const QuadElem& v) {
    long long d = QuadElem::common_d(u, v);
    return QuadElem(u.a_ + v.a_, u.b_ + v.b_, d, QuadElem::no_check{});
}

QuadElem operator-(const QuadElem& u, const QuadElem& v) {
    long long d = QuadElem::common_d(u, v);
    return QuadElem(u.a_ - v.a_, u.b_ - v.b_, d, QuadElem::no_check{});
}

QuadElem operator-(const QuadElem& u) {
    return QuadElem(-u.a_, -u.b_, u.d_, QuadElem::no_check{});
}

QuadElem operator*(const QuadElem& u, const QuadElem& v) {
    long long d = QuadElem::common_d(u, v);
    return QuadElem(u.a_ * v.a_ + u.b_ * v.b_ * Rat(d), u.a_ * v.b_ + u.b_ * v.a_, d,
                    QuadElem::no_check{});
}

QuadElem QuadElem::inv() const {
    if (is_zero()) throw std::domain_error("QuadElem: division by zero");
    Rat n = norm();
    return QuadElem(a_ / n, -b_ / n, d_, no_check{});
}

QuadElem operator/(const QuadElem& u, const QuadElem& v) { return u * v.inv(); }

bool operator==(const QuadElem& u, const QuadElem& v) {
    if (u.a_ != v.a_ || u.b_ != v.b_) return false;
    return u.b_ == 0 || u.d_ == v.d_;
}

Cplx QuadElem::value() const {
    Real a = Real(a_);
    Real rb = Real(b_);
    Real s = sqrt(Real(std::llabs(d_)));
    if (d_ > 0) return Cplx(a + rb * s, Real(0));
    return Cplx(a, rb * s);
}

Real QuadElem::real_value() const {
    if (d_ < 0 && b_ != 0)
        throw std::domain_error("QuadElem: complex value where a real one is required");
    return Real(a_) + Real(b_) * sqrt(Real(std::llabs(d_)));
}

std::string QuadElem::str() const {
    std::ostringstream os;
    if (b_ == 0) {
        os << a_;
    } else {
        os << a_ << (b_ < 0 ? " - " : " + ") << mp::abs(b_) << "*sqrt(" << d_ << ")";
    }
    return os.str();
}

} // namespace bialg
