#include "bdsa/errors.hpp"

namespace bdsa {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedSyntax: return "MalformedSyntax";
        case ErrorKind::UnknownAtom: return "UnknownAtom";
        case ErrorKind::UnknownLabel: return "UnknownLabel";
        case ErrorKind::NotDisjoint: return "NotDisjoint";
        case ErrorKind::IdealTooSmall: return "IdealTooSmall";
        case ErrorKind::JNotRegular: return "JNotRegular";
        case ErrorKind::NotHereditary: return "NotHereditary";
        case ErrorKind::InvalidTail: return "InvalidTail";
        case ErrorKind::TailAxiomFailure: return "TailAxiomFailure";
        case ErrorKind::CrossCheckMismatch: return "CrossCheckMismatch";
        case ErrorKind::RelativeJNotSupported: return "RelativeJNotSupported";
        case ErrorKind::TooLarge: return "TooLarge";
    }
    return "Error";
}

namespace {

std::string format_message(ErrorKind kind, const std::string& detail, int line, int column) {
    std::string out;
    if (line >= 0) {
        out += "line " + std::to_string(line);
        if (column >= 0) out += ", col " + std::to_string(column);
        out += ": ";
    }
    out += to_string(kind);
    if (!detail.empty()) {
        out += ' ';
        out += detail;
    }
    return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& detail, int line, int column)
    : std::runtime_error(format_message(kind, detail, line, column)),
      kind_(kind),
      detail_(detail),
      line_(line),
      column_(column) {}

}  // namespace bdsa
