#ifndef BIALG_QUADFIELD_HPP
#define BIALG_QUADFIELD_HPP

#include <string>
#include <utility>

#include "bialg/complexmp.hpp"
#include "bialg/rational.hpp"

namespace bialg {

// Element a + b*sqrt(d) of a quadratic field, d squarefree and nonzero.
// d < 0 is allowed; then sqrt(d) = i*sqrt(|d|).  A value with b = 0 is
// rational and interoperates with any d; otherwise the two operands must
// live over the same d.  Mixed-field expressions are rejected.
class QuadElem {
public:
    QuadElem() : a_(0), b_(0), d_(1) {}
    explicit QuadElem(Rat a) : a_(std::move(a)), b_(0), d_(1) {}
    QuadElem(Rat a, Rat b, long long d);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    long long d() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadElem conj() const { return QuadElem(a_, -b_, d_, no_check{}); }
    Rat norm() const { return a_ * a_ - b_ * b_ * Rat(d_); }
    QuadElem inv() const;

    // Numeric value at the current working precision (d < 0 gives the
    // upper-half-plane convention a + i*b*sqrt(|d|)).
    Cplx value() const;
    Real real_value() const;  // requires d > 0 or b == 0

    std::string str() const;

    friend QuadElem operator+(const QuadElem& u, const QuadElem& v);
    friend QuadElem operator-(const QuadElem& u, const QuadElem& v);
    friend QuadElem operator-(const QuadElem& u);
    friend QuadElem operator*(const QuadElem& u, const QuadElem& v);
    friend QuadElem operator/(const QuadElem& u, const QuadElem& v);
    friend bool operator==(const QuadElem& u, const QuadElem& v);

private:
    struct no_check {};
    QuadElem(Rat a, Rat b, long long d, no_check) : a_(std::move(a)), b_(std::move(b)), d_(d) {}
    static long long common_d(const QuadElem& u, const QuadElem& v);

    Rat a_, b_;
    long long d_;
};

// Squarefree factorization d = core * f^2 (core squarefree, f > 0).
// Handles |d| up to ~1e15.
std::pair<long long, long long> squarefree_core(long long d);

bool is_squarefree(long long d);

} // namespace bialg

#endif
