#pragma once

// Dense univariate polynomials over a finite field.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "vnr/error.hpp"
#include "vnr/finite_field.hpp"

namespace vnr {

template <class F>
concept FiniteFieldLike = requires(const F& f, typename F::value_type a, std::uint64_t e) {
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.add(a, a) } -> std::same_as<typename F::value_type>;
  { f.sub(a, a) } -> std::same_as<typename F::value_type>;
  { f.mul(a, a) } -> std::same_as<typename F::value_type>;
  { f.inv(a) } -> std::same_as<typename F::value_type>;
  { f.pow(a, e) } -> std::same_as<typename F::value_type>;
  { f.pth_root(a) } -> std::same_as<typename F::value_type>;
  { f.size() } -> std::convertible_to<std::uint64_t>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
};

/// Coefficients constant term first, never with a trailing zero; the zero
/// polynomial has no coefficients and no degree.
template <FiniteFieldLike F>
class Polynomial {
 public:
  using value_type = typename F::value_type;
  using FieldPtr = std::shared_ptr<const F>;

  explicit Polynomial(FieldPtr field, std::vector<value_type> coeffs = {})
      : field_(std::move(field)), c_(std::move(coeffs)) {
    for (auto v : c_) detail::require(v < field_->size(), "polynomial coefficient out of range");
    trim();
  }

  static Polynomial constant(FieldPtr f, value_type v) { return Polynomial(std::move(f), {v}); }
  static Polynomial one(FieldPtr f) { return constant(f, f->one()); }
  static Polynomial monomial(FieldPtr f, value_type v, std::size_t deg) {
    std::vector<value_type> c(deg + 1, f->zero());
    c[deg] = v;
    return Polynomial(std::move(f), std::move(c));
  }
  static Polynomial x(FieldPtr f) { return monomial(f, f->one(), 1); }

  const F& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  const std::vector<value_type>& coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == field_->one(); }

  /// Throws std::domain_error for the zero polynomial.
  std::size_t degree() const {
    if (is_zero()) throw std::domain_error("degree of the zero polynomial");
    return c_.size() - 1;
  }
  value_type leading() const { return is_zero() ? field_->zero() : c_.back(); }
  value_type operator[](std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    const auto li = field_->inv(leading());
    auto c = c_;
    for (auto& v : c) v = field_->mul(v, li);
    return Polynomial(field_, std::move(c));
  }

  Polynomial derivative() const {
    std::vector<value_type> c(c_.size() > 1 ? c_.size() - 1 : 0);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      value_type ii = field_->zero();
      for (std::size_t r = 0; r < i % field_->characteristic(); ++r) ii = field_->add(ii, field_->one());
      c[i - 1] = field_->mul(ii, c_[i]);
    }
    return Polynomial(field_, std::move(c));
  }

  /// g with g^p = f; requires f' = 0, i.e. only exponents divisible by p.
  Polynomial pth_root() const {
    const std::size_t p = field_->characteristic();
    std::vector<value_type> c;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i % p == 0)
        c.push_back(field_->pth_root(c_[i]));
      else if (c_[i] != field_->zero())
        throw std::domain_error("pth_root of a polynomial with nonzero derivative");
    }
    return Polynomial(field_, std::move(c));
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_same(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_->zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->add(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_same(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_->zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->sub(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    const F& f = *a.field_;
    std::vector<value_type> c(a.c_.size() + b.c_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == f.zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    return Polynomial(a.field_, std::move(c));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// (quotient, remainder) with deg remainder < deg divisor.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    if (b.is_zero()) detail::fail(ErrorKind::validation, "division by the zero polynomial");
    const F& f = *a.field_;
    std::vector<value_type> r = a.c_;
    const std::size_t db = b.c_.size() - 1;
    std::vector<value_type> qc(r.size() > db ? r.size() - db : 0, f.zero());
    const auto li = f.inv(b.leading());
    for (std::size_t top = r.size(); top-- > db;) {
      const auto coef = f.mul(r[top], li);
      if (coef == f.zero()) continue;
      const std::size_t shift = top - db;
      qc[shift] = coef;
      for (std::size_t i = 0; i <= db; ++i) r[shift + i] = f.sub(r[shift + i], f.mul(coef, b.c_[i]));
    }
    r.resize(std::min(r.size(), db));
    return {Polynomial(a.field_, std::move(qc)), Polynomial(a.field_, std::move(r))};
  }
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_ && *a.field_ == *b.field_;
  }
  /// Canonical order: by degree, then lexicographically on coefficients (constant term first).
  friend bool operator<(const Polynomial& a, const Polynomial& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return a.c_ < b.c_;
  }

  /// Comma-separated coefficient codes, constant term first; "0" for zero.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == field_->zero()) c_.pop_back();
  }
  void check_same(const Polynomial& o) const {
    detail::require(field_ == o.field_ || *field_ == *o.field_, "polynomials over different fields");
  }

  FieldPtr field_;
  std::vector<value_type> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// (d, u, v) with u a + v b = d = gcd(a, b), d monic.
template <class F>
std::tuple<Polynomial<F>, Polynomial<F>, Polynomial<F>> extended_gcd(const Polynomial<F>& a, const Polynomial<F>& b) {
  const auto& fp = a.field_ptr();
  Polynomial<F> r0 = a, r1 = b;
  Polynomial<F> u0 = Polynomial<F>::one(fp), u1(fp), v0(fp), v1 = Polynomial<F>::one(fp);
  while (!r1.is_zero()) {
    auto [quo, rem] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(rem));
    u0 = std::exchange(u1, u0 - quo * u1);
    v0 = std::exchange(v1, v0 - quo * v1);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  const auto scale = Polynomial<F>::constant(fp, a.field().inv(r0.leading()));
  return {r0 * scale, u0 * scale, v0 * scale};
}

/// base^e mod m, exponent given by its binary digits (most significant first).
template <class F>
Polynomial<F> pow_mod(const Polynomial<F>& base, const BigInt& e, const Polynomial<F>& m) {
  auto result = Polynomial<F>::one(base.field_ptr()) % m;
  if (e == 0) return result;
  const auto b = base % m;
  for (std::size_t bit = boost::multiprecision::msb(e) + 1; bit-- > 0;) {
    result = (result * result) % m;
    if (boost::multiprecision::bit_test(e, bit)) result = (result * b) % m;
  }
  return result;
}

}  // namespace vnr
