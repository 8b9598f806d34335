#ifndef ENDOSTAR_ERROR_HPP
#define ENDOSTAR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace endostar {

enum class ErrorCode {
    InvalidArgument,
    UnsupportedPair,     // index classification not available for the pair
    NotFound,            // witness search hit its iteration cap
    EmptyDomain,
    ThetaZero,           // conditional expectation vanishes
    HypothesisViolation, // no phi^k(G) inside the intersection of the bases
    NotDiagonal,         // norm requested for a non-diagonal element
    VerificationFailure, // an emitted certificate failed its own re-check
    ParseError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace endostar

#endif
