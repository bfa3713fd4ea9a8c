#pragma once

#include <stdexcept>
#include <string>

namespace wedge {

// Input-file errors carry the failing line number (1-based, 0 = whole file).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string kind, std::size_t line, const std::string& detail)
        : std::runtime_error(kind + (line ? " at line " + std::to_string(line) : "") +
                             ": " + detail),
          kind_(std::move(kind)),
          line_(line) {}

    const std::string& kind() const { return kind_; }
    std::size_t line() const { return line_; }

private:
    std::string kind_;
    std::size_t line_;
};

// Numerical/domain violations in the measurement chain.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

} // namespace wedge
