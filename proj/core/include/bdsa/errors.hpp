#pragma once

#include <stdexcept>
#include <string>

namespace bdsa {

enum class ErrorKind {
    MalformedSyntax,
    UnknownAtom,
    UnknownLabel,
    NotDisjoint,
    IdealTooSmall,
    JNotRegular,
    NotHereditary,
    InvalidTail,
    TailAxiomFailure,
    CrossCheckMismatch,
    RelativeJNotSupported,
    TooLarge,
};

const char* to_string(ErrorKind kind);

/// Library error; what() is pre-formatted as "line L[, col C]: Kind detail".
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail, int line = -1, int column = -1);

    ErrorKind kind() const { return kind_; }
    const std::string& detail() const { return detail_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    ErrorKind kind_;
    std::string detail_;
    int line_;
    int column_;
};

}  // namespace bdsa
