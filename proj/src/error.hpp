#ifndef MWPLET_ERROR_HPP
#define MWPLET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mwplet {

// Error categories shared between the C++ core and the C API status codes.
enum class Err {
    Parse,            // malformed input text
    Domain,           // precondition violation (division by zero, point off curve, ...)
    TowerOverflow,    // arithmetic would need more than two quadratic radicals
    UnsupportedPlace, // place of residue degree we cannot split or represent
    UnsupportedFiber, // additive fiber, or component data undecidable at first order
    NodeMeeting,      // two sections meet at a fiber node; multiplicity needs blow-up data
    Degenerate,       // degenerate family member (vanishing discriminant, shared component)
    ScanExhausted,    // good-parameter scan ran out of candidates
    VerifyFailed,     // an internal consistency assertion failed (implementation fault)
    Internal,
};

class MwpError : public std::runtime_error {
public:
    MwpError(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw MwpError(code, what); }

} // namespace mwplet

#endif
