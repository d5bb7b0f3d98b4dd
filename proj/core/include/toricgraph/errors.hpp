// Exception types shared across the toolkit.
#pragma once

#include <stdexcept>
#include <string>

namespace toricgraph {

// Input is well formed but exceeds a configured size or budget cap.
class CapabilityError : public std::runtime_error {
public:
    explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// A certified mathematical invariant failed to hold on concrete data.
// Reaching this indicates a bug (or a falsified invariant), never bad input.
class StructuralViolation : public std::logic_error {
public:
    explicit StructuralViolation(const std::string& what) : std::logic_error(what) {}
};

// Graph file rejected; `line` is 1-based within the input.
class ParseError : public std::runtime_error {
public:
    enum class Kind {
        malformed_line,
        vertex_out_of_range,
        self_loop,
        duplicate_edge,
        missing_header,
    };

    ParseError(Kind kind, int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          kind_(kind),
          line_(line) {}

    Kind kind() const { return kind_; }
    int line() const { return line_; }

private:
    Kind kind_;
    int line_;
};

}  // namespace toricgraph
