#ifndef CMGRAPH_ERRORS_HPP
#define CMGRAPH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmg {

/// Malformed graph or complex input (loops, unknown vertices, duplicates).
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The instance is too large for the configured limit. This means
/// "intractable here", never "the property is false".
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string what_cap, std::size_t limit, std::size_t actual)
      : std::runtime_error(what_cap + " cap exceeded: " + std::to_string(actual) + " > " +
                           std::to_string(limit)),
        cap_(std::move(what_cap)),
        limit_(limit),
        actual_(actual) {}

  const std::string& cap() const noexcept { return cap_; }
  std::size_t limit() const noexcept { return limit_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::string cap_;
  std::size_t limit_;
  std::size_t actual_;
};

/// Text input error carrying a 1-based line number (0 when not line-specific).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cmg

#endif
