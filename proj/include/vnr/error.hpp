#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace vnr {

/// Exact integer used for every count that can outgrow 64 bits.
using BigInt = boost::multiprecision::cpp_int;

enum class ErrorKind {
  validation,      // malformed input or violated precondition
  size_cap,        // a configured enumeration or order cap was exceeded
  not_regular,     // operation requires a von Neumann regular element
  not_invertible,  // operation requires a bijective automaton
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Sizing knobs shared by every enumerating operation.
struct Limits {
  std::size_t max_group_order = 64;
  std::uint64_t max_configurations = std::uint64_t{1} << 24;
  std::uint64_t max_automata = 1'000'000;
};

namespace detail {

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::validation, what);
}

/// base^exp, or nullopt-like sentinel 0 when the result exceeds `cap`.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return 0;
    r *= base;
  }
  return r <= cap ? r : 0;
}

}  // namespace detail
}  // namespace vnr
