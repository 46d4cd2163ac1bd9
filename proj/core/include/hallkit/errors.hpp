#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>

namespace hallkit {

// Violated precondition, arithmetic that left the supported domain, or a
// search that exhausted its stated bound.  CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Bad user-supplied text (words, configs).  CLI maps this to exit code 2.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}
