#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace argroth {

/// Malformed input text. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &message,
             const std::string &file = {})
      : std::runtime_error(render(file, line, message)), line_(line),
        message_(message) {}

  std::size_t line() const { return line_; }
  const std::string &message() const { return message_; }

  ParseError in_file(const std::string &file) const {
    return ParseError(line_, message_, file);
  }

private:
  static std::string render(const std::string &file, std::size_t line,
                            const std::string &message) {
    std::string out = file;
    if (line)
      out += (file.empty() ? "line " : ":") + std::to_string(line);
    if (!out.empty())
      out += ": ";
    return out + message;
  }

  std::size_t line_;
  std::string message_;
};

/// Structurally parsed data that violates a domain invariant (bad ranks,
/// free vertex at the end of a sequence, inconsistent table, ...).
class InvariantError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A matrix that does not descend to the quotient groups.
class IllDefinedHomError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation was asked to rely on a hypothesis its input does not assert.
class HypothesisError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace argroth
