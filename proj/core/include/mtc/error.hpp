#pragma once

#include <stdexcept>
#include <string>

namespace mtc {

// Failure categories surfaced through the library. The CLI maps
// parse/schema/shape/usage/guard errors to exit code 1 and
// data/consistency errors to exit code 2.
enum class errc {
  data_invalid,
  not_modular,
  parse_error,
  schema_error,
  shape_error,
  size_guard,
  inconsistency,
  degenerate_gauss_sum,
  invalid_action,
  unsupported,
  usage,
};

class Error : public std::runtime_error {
 public:
  Error(errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  errc kind() const noexcept { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace mtc
