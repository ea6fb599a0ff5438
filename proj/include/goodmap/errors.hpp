#pragma once

#include <stdexcept>
#include <string>

namespace goodmap {

// Raised when a degree/term-count/branch guard trips. The CLI maps this to
// exit code 3.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Caller violated a documented precondition (e.g. generic_points on a set
// that is not irreducible closed).
class MisuseError : public std::logic_error {
public:
    explicit MisuseError(const std::string& what) : std::logic_error(what) {}
};

// Malformed input file. Carries a 1-based line/column when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0, int column = 0)
        : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& what, int line, int column) {
        if (line <= 0) return what;
        return what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
    }

    int line_;
    int column_;
};

}  // namespace goodmap
