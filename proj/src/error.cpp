#include "ecol/error.hpp"

namespace ecol {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::NotSphere: return "not-sphere";
    case ErrorKind::Disconnected: return "disconnected";
    case ErrorKind::NotAnEdge: return "not-an-edge";
    case ErrorKind::UnknownElement: return "unknown-element";
    case ErrorKind::Generator: return "generator";
    case ErrorKind::Budget: return "budget";
    case ErrorKind::Malformed: return "malformed";
    case ErrorKind::RulesApplied: return "rules-applied";
    case ErrorKind::UnknownVariant: return "unknown-variant";
    }
    return "error";
}

static std::string with_line(const std::string& message, int line) {
    if (line <= 0) return message;
    return "line " + std::to_string(line) + ": " + message;
}

Error::Error(ErrorKind kind, const std::string& message, int line)
    : std::runtime_error(with_line(message, line)), kind_(kind), line_(line) {}

} // namespace ecol
