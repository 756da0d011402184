#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace castella {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Not divisible, not castlable, not positive, bad domain for a partial map.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : DomainError(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

struct Limits {
  std::size_t node_cap = 1'000'000;
};

}  // namespace castella
