#pragma once

// F_{p^k} with elements coded as integers sum_i c_i p^i over the coefficients
// of their residue modulo a monic irreducible polynomial of degree k.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vnr/error.hpp"

namespace vnr {

namespace detail {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense polynomials over F_p, constant term first, no trailing zeros.
using PrimePoly = std::vector<std::uint32_t>;

inline void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PrimePoly prime_poly_rem(PrimePoly a, const PrimePoly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  std::uint32_t lead_inv = 1;
  for (std::uint32_t e = p - 2, base = b.back(); e; e >>= 1, base = std::uint32_t(std::uint64_t(base) * base % p))
    if (e & 1) lead_inv = std::uint32_t(std::uint64_t(lead_inv) * base % p);
  while (a.size() > db) {
    const std::uint32_t c = std::uint32_t(std::uint64_t(a.back()) * lead_inv % p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = std::uint32_t((a[shift + i] + std::uint64_t(p - c) * b[i]) % p);
    trim(a);
  }
  return a;
}

// Monic polynomial of degree `deg` whose lower coefficients are the base-p digits of `code`.
inline PrimePoly monic_from_code(std::uint64_t code, std::size_t deg, std::uint32_t p) {
  PrimePoly f(deg + 1);
  for (std::size_t i = 0; i < deg; ++i, code /= p) f[i] = std::uint32_t(code % p);
  f[deg] = 1;
  return f;
}

inline bool prime_poly_irreducible(const PrimePoly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c)
      if (prime_poly_rem(f, monic_from_code(c, d, p), p).empty()) return false;
  }
  return true;
}

}  // namespace detail

class FiniteField {
 public:
  using value_type = std::uint32_t;

  /// Defaults to the monic irreducible of degree k with the least lower-coefficient code.
  FiniteField(std::uint32_t p, std::size_t k, std::optional<std::vector<std::uint32_t>> modulus = std::nullopt)
      : p_(p), k_(k) {
    detail::require(detail::is_prime(p), "characteristic " + std::to_string(p) + " is not prime");
    detail::require(k >= 1, "extension degree must be at least 1");
    const std::uint64_t q = detail::checked_pow(p, k, std::uint64_t{1} << 16);
    if (q == 0) detail::fail(ErrorKind::size_cap, "field size exceeds 2^16");
    q_ = static_cast<std::uint32_t>(q);
    if (modulus) {
      auto m = *modulus;
      detail::require(m.size() == k + 1 && m.back() == 1, "modulus must be monic of degree k");
      for (auto c : m) detail::require(c < p, "modulus coefficient out of range");
      detail::require(detail::prime_poly_irreducible(m, p), "modulus is reducible");
      modulus_ = std::move(m);
    } else {
      for (std::uint64_t c = 0;; ++c) {
        auto m = detail::monic_from_code(c, k, p);
        if (detail::prime_poly_irreducible(m, p)) {
          modulus_ = std::move(m);
          break;
        }
      }
    }
    build_tables();
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  std::size_t degree() const noexcept { return k_; }
  std::uint32_t size() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }

  value_type add(value_type a, value_type b) const {
    value_type r = 0, place = 1;
    for (std::size_t i = 0; i < k_; ++i, a /= p_, b /= p_, place *= p_) r += ((a % p_ + b % p_) % p_) * place;
    return r;
  }
  value_type neg(value_type a) const {
    value_type r = 0, place = 1;
    for (std::size_t i = 0; i < k_; ++i, a /= p_, place *= p_) r += ((p_ - a % p_) % p_) * place;
    return r;
  }
  value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }
  value_type mul(value_type a, value_type b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  value_type inv(value_type a) const {
    if (a == 0) detail::fail(ErrorKind::validation, "division by zero in finite field");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  value_type pow(value_type a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[(std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
  }
  /// Unique b with b^p = a.
  value_type pth_root(value_type a) const {
    std::uint64_t e = 1;
    for (std::size_t i = 1; i < k_; ++i) e *= p_;
    return pow(a, e);
  }

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
  }

 private:
  // Schoolbook product of residues modulo the field polynomial.
  value_type mul_slow(value_type a, value_type b) const {
    detail::PrimePoly x(k_), y(k_), prod(2 * k_ - 1);
    for (std::size_t i = 0; i < k_; ++i, a /= p_, b /= p_) x[i] = a % p_, y[i] = b % p_;
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j) prod[i + j] = std::uint32_t((prod[i + j] + std::uint64_t(x[i]) * y[j]) % p_);
    prod = detail::prime_poly_rem(prod, modulus_, p_);
    value_type r = 0;
    for (std::size_t i = prod.size(); i-- > 0;) r = r * p_ + prod[i];
    return r;
  }

  void build_tables() {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    if (q_ == 2) {
      exp_[0] = 1;
      return;
    }
    for (value_type g = 2; g < q_; ++g) {
      value_type x = 1;
      std::uint32_t order = 0;
      do {
        x = mul_slow(x, g);
        ++order;
      } while (x != 1);
      if (order != q_ - 1) continue;
      x = 1;
      for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = mul_slow(x, g);
      }
      return;
    }
  }

  std::uint32_t p_;
  std::size_t k_;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<value_type> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace vnr
