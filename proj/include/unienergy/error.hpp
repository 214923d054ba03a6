#ifndef UNIENERGY_ERROR_HPP
#define UNIENERGY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace unienergy {

enum class ErrorCode {
    InvalidGraph,
    MultipleCycles,
    Disconnected,
    SizeLimit,
    UnsupportedStructure,
    OutOfClass,
    NotAForest,
    NotATree,
    PendantEdge,
    NonConvergent,
    MismatchedOrder,
    DomainError,
    InvalidOrder,
    PreconditionViolated,
    LengthMismatch,
    ParseError,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace unienergy

#endif
