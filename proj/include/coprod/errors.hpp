#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coprod {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad tables, signature mismatch, axiom
/// violations, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured size or work limit was hit. The analysis result is unknown,
/// not negative.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string what, std::size_t required, std::size_t cap)
      : Error(what + ": requires " + std::to_string(required) + ", cap is " +
              std::to_string(cap)),
        required_(required),
        cap_(cap) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t required_;
  std::size_t cap_;
};

/// Limits shared by the enumeration routines. All violations raise
/// CapExceeded, nothing is truncated silently.
struct Caps {
  std::size_t product_elements = 1'000'000;
  std::size_t table_entries = std::size_t{1} << 27;
  std::size_t structure_points = 5000;
  std::size_t e_search_nodes = 10'000'000;
  std::size_t subalgebra_source_size = 12;
  std::size_t upsets = 1'000'000;
};

}  // namespace coprod
