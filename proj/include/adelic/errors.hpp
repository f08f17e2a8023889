#pragma once

#include <stdexcept>
#include <string>

namespace adelic {

// Error categories surfaced by the library. The CLI maps these to exit
// codes: parse errors -> 2, math errors -> 3, insufficient precision -> 4.
enum class errc {
  not_prime,
  zero_ideal,
  zero_element,
  place_mismatch,
  spec_mismatch,
  shape_mismatch,
  archimedean_place,
  wrong_family,
  not_invertible,
  not_a_unit,
  unsupported_field,
  insufficient_precision,
  invalid_argument,
};

class math_error : public std::runtime_error {
 public:
  math_error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw math_error(code, what);
}

}  // namespace adelic
