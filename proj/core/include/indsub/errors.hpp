#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace indsub {

// Malformed or out-of-range arguments (bad vertex ids, wrong input length, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A desk-scale work guard refused to start or aborted a search.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t estimate)
      : std::runtime_error(what), estimate_(estimate) {}

  std::uint64_t estimate() const noexcept { return estimate_; }

 private:
  std::uint64_t estimate_;
};

// A node program or two-party protocol broke the communication rules.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An assertion about our own construction failed; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace indsub
