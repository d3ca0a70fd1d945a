#pragma once

#include <stdexcept>
#include <string>

namespace misinfo {

// Bad input data (malformed files, invariant violations). The CLI maps this
// to exit code 2; everything else derived from std::exception exits 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
  ValidationError(const std::string& what, long line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  long line() const { return line_; }

 private:
  long line_ = -1;
};

}  // namespace misinfo
