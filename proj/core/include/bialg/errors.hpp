#ifndef BIALG_ERRORS_HPP
#define BIALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bialg {

// Classification refuses to guess the Q-linear relation structure of a tau
// given only as floating-point coordinates.  Machine-readable code for the
// CLI: exit status 2.
class UndecidableError : public std::runtime_error {
public:
    explicit UndecidableError(const std::string& what)
        : std::runtime_error(what) {}
    static constexpr const char* code = "UNDECIDABLE_FROM_FLOATS";
};

class NotLatticePointError : public std::runtime_error {
public:
    explicit NotLatticePointError(const std::string& what)
        : std::runtime_error(what) {}
    static constexpr const char* code = "NOT_LATTICE_POINT";
};

class NotComplexLineError : public std::runtime_error {
public:
    explicit NotComplexLineError(const std::string& what)
        : std::runtime_error(what) {}
    static constexpr const char* code = "NOT_COMPLEX_LINE";
};

class NotSublatticeError : public std::runtime_error {
public:
    explicit NotSublatticeError(const std::string& what)
        : std::runtime_error(what) {}
    static constexpr const char* code = "NOT_SUBLATTICE";
};

} // namespace bialg

#endif
