#ifndef QINV_ERRORS_HPP
#define QINV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qinv {

// Input text did not conform to the polynomial grammar.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// An internal invariant failed: a solver produced a result the surrounding
// theory says is impossible. Always a bug, never a user error.
class contract_error : public std::logic_error {
public:
    explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace qinv

#endif
