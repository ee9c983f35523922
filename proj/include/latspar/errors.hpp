#pragma once

#include <stdexcept>
#include <string>

namespace latspar {

// Bad problem data: malformed files, dimension mismatches, singular bases,
// violated preconditions the caller is responsible for.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntactically malformed input text; carries a line number for diagnostics.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A condition the underlying theory guarantees failed to hold.  Always a bug.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace latspar
