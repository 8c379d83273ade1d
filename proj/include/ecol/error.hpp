#pragma once

#include <stdexcept>
#include <string>

namespace ecol {

enum class ErrorKind {
    Parse,
    NotSphere,
    Disconnected,
    NotAnEdge,
    UnknownElement,
    Generator,
    Budget,
    Malformed,
    RulesApplied,
    UnknownVariant,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, int line = 0);

    ErrorKind kind() const { return kind_; }
    // Input line the error refers to, or 0 when not tied to a line.
    int line() const { return line_; }

private:
    ErrorKind kind_;
    int line_;
};

} // namespace ecol
