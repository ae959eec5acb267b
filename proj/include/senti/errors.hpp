#pragma once

#include <stdexcept>
#include <string>

namespace senti {

// Unreadable/unwritable files, malformed schemas, bad configuration.
// The CLI maps this to exit code 2.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Inputs outside an operation's domain: single-class labels, rating
// outside 1..5, dimension or descriptor mismatches. CLI exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace senti
