#pragma once

#include <stdexcept>
#include <string>

namespace capset {

// Malformed point-set, trace or certificate text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A request exceeds a configured size or dimension limit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace capset
