#pragma once

// The group ring F_q[Z_n] = F_q[x]/(x^n - 1), identified with the linear
// cellular automata over Z_n with alphabet F_q.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vnr/cellular_automaton.hpp"
#include "vnr/error.hpp"
#include "vnr/factorization.hpp"
#include "vnr/finite_field.hpp"
#include "vnr/polynomial.hpp"

namespace vnr {

using FieldPtr = std::shared_ptr<const FiniteField>;
using Poly = Polynomial<FiniteField>;

inline FieldPtr make_field(std::uint32_t p, std::size_t k = 1) { return std::make_shared<const FiniteField>(p, k); }

/// sum_i coeffs[i] x^i, exactly n coefficients.
struct GroupRingElement {
  std::vector<FiniteField::value_type> coeffs;

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;
  friend auto operator<=>(const GroupRingElement&, const GroupRingElement&) = default;
};

/// Residues of an element modulo each p_i^m_i of x^n - 1.
struct CrtComponents {
  Factorization<FiniteField> factors;
  std::vector<Poly> residues;
};

class CyclicGroupRing {
 public:
  CyclicGroupRing(std::size_t n, FieldPtr field)
      : n_(n), field_(std::move(field)), modulus_(check_n(n, field_)), factors_(factor(modulus_)),
        crt_(factors_, field_) {}

  std::size_t n() const noexcept { return n_; }
  const FiniteField& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::uint64_t q() const noexcept { return field_->size(); }
  /// x^n - 1
  const Poly& modulus() const noexcept { return modulus_; }
  const Factorization<FiniteField>& factorization() const noexcept { return factors_; }
  const CrtBasis<FiniteField>& crt() const noexcept { return crt_; }

  /// q^n, or 0 when it exceeds 2^63.
  std::uint64_t element_count() const { return detail::checked_pow(q(), n_, ~std::uint64_t{0} / 2); }

  GroupRingElement element(std::vector<FiniteField::value_type> coeffs) const {
    detail::require(coeffs.size() == n_, "group ring element needs exactly n coefficients");
    for (auto c : coeffs) detail::require(c < q(), "coefficient out of range for the field");
    return {std::move(coeffs)};
  }
  GroupRingElement zero() const { return {std::vector<FiniteField::value_type>(n_, 0)}; }
  GroupRingElement one() const { return x_power(0); }
  GroupRingElement x_power(std::size_t k) const {
    auto e = zero();
    e.coeffs[k % n_] = field_->one();
    return e;
  }
  /// s = sum over all group elements
  GroupRingElement sum_element() const { return {std::vector<FiniteField::value_type>(n_, field_->one())}; }

  /// Element with base-q little-endian code `code` (coefficient i is digit i).
  GroupRingElement element_at(std::uint64_t code) const {
    auto e = zero();
    for (auto& c : e.coeffs) c = static_cast<FiniteField::value_type>(code % q()), code /= q();
    return e;
  }
  std::uint64_t code_of(const GroupRingElement& a) const {
    std::uint64_t code = 0;
    for (std::size_t i = n_; i-- > 0;) code = code * q() + a.coeffs[i];
    return code;
  }

  Poly to_poly(const GroupRingElement& a) const { return Poly(field_, a.coeffs); }
  GroupRingElement from_poly(const Poly& f) const {
    const auto r = f % modulus_;
    auto e = zero();
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) e.coeffs[i] = r.coeffs()[i];
    return e;
  }

  GroupRingElement add(const GroupRingElement& a, const GroupRingElement& b) const {
    check(a), check(b);
    auto r = a;
    for (std::size_t i = 0; i < n_; ++i) r.coeffs[i] = field_->add(a.coeffs[i], b.coeffs[i]);
    return r;
  }
  GroupRingElement sub(const GroupRingElement& a, const GroupRingElement& b) const {
    check(a), check(b);
    auto r = a;
    for (std::size_t i = 0; i < n_; ++i) r.coeffs[i] = field_->sub(a.coeffs[i], b.coeffs[i]);
    return r;
  }
  /// Cyclic convolution: (ab)_k = sum_{i+j = k mod n} a_i b_j.
  GroupRingElement mul(const GroupRingElement& a, const GroupRingElement& b) const {
    check(a), check(b);
    auto r = zero();
    for (std::size_t i = 0; i < n_; ++i) {
      if (a.coeffs[i] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        auto& slot = r.coeffs[(i + j) % n_];
        slot = field_->add(slot, field_->mul(a.coeffs[i], b.coeffs[j]));
      }
    }
    return r;
  }

  CrtComponents components(const GroupRingElement& a) const { return {factors_, crt_.split(to_poly(a))}; }

  bool is_unit(const GroupRingElement& a) const { return gcd(to_poly(a), modulus_).is_one(); }

  /// Nonzero with every irreducible factor of x^n - 1 dividing it.
  bool is_nilpotent(const GroupRingElement& a) const {
    const auto f = to_poly(a);
    if (f.is_zero()) return false;
    for (const auto& [p, m] : factors_)
      if (!(f % p).is_zero()) return false;
    return true;
  }

  /// Index of the first factor whose local component is a nonzero non-unit.
  std::optional<std::size_t> nonregular_factor(const GroupRingElement& a) const {
    const auto f = to_poly(a);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const bool zero_component = (f % crt_.moduli()[i]).is_zero();
      const bool unit_component = !(f % factors_[i].poly).is_zero();
      if (!zero_component && !unit_component) return i;
    }
    return std::nullopt;
  }

  /// Regular iff each local component is zero or a unit.
  bool is_regular(const GroupRingElement& a) const { return !nonregular_factor(a).has_value(); }

  /// b with aba = a and bab = b: local inverse on unit components, zero on zero components.
  GroupRingElement generalized_inverse(const GroupRingElement& a) const {
    if (auto i = nonregular_factor(a))
      detail::fail(ErrorKind::not_regular,
                   "not regular: component modulo factor " + factors_[*i].poly.to_string() + " is nilpotent");
    auto residues = crt_.split(to_poly(a));
    for (std::size_t i = 0; i < residues.size(); ++i) {
      if (residues[i].is_zero()) continue;
      auto [d, u, v] = extended_gcd(residues[i], crt_.moduli()[i]);
      residues[i] = u % crt_.moduli()[i];
    }
    return from_poly(crt_.join(residues));
  }

  /// prod_i ((q^d_i - 1) q^(d_i (m_i - 1)) + 1)
  BigInt count_regular() const {
    BigInt total = 1;
    for (const auto& [p, m] : factors_) {
      const std::size_t d = p.degree();
      BigInt qd = boost::multiprecision::pow(BigInt(q()), static_cast<unsigned>(d));
      BigInt local = (qd - 1) * boost::multiprecision::pow(qd, static_cast<unsigned>(m - 1)) + 1;
      total *= local;
    }
    return total;
  }

 private:
  static Poly check_n(std::size_t n, const FieldPtr& field) {
    detail::require(n >= 1, "group ring needs n >= 1");
    detail::require(field != nullptr, "group ring needs a field");
    return x_pow_n_minus_one<FiniteField>(field, n);
  }
  void check(const GroupRingElement& a) const {
    detail::require(a.coeffs.size() == n_, "group ring element has the wrong length");
  }

  std::size_t n_;
  FieldPtr field_;
  Poly modulus_;
  Factorization<FiniteField> factors_;
  CrtBasis<FiniteField> crt_;
};

inline BigInt count_regular_lca(std::size_t n, const FieldPtr& field) { return CyclicGroupRing(n, field).count_regular(); }

/// Number of a with aba = a for some b, by scanning every pair (a, b).
inline std::uint64_t brute_force_regular_count(const CyclicGroupRing& ring) {
  const std::uint64_t total = ring.element_count();
  if (total == 0 || total > (std::uint64_t{1} << 20))
    detail::fail(ErrorKind::size_cap, "brute-force regular count needs q^n <= 2^20");
  std::uint64_t count = 0;
  for (std::uint64_t ai = 0; ai < total; ++ai) {
    const auto a = ring.element_at(ai);
    for (std::uint64_t bi = 0; bi < total; ++bi) {
      if (ring.mul(ring.mul(a, ring.element_at(bi)), a) == a) {
        ++count;
        break;
      }
    }
  }
  return count;
}

/// Multiplication by a as a transformation of (F_q)^(Z_n): configuration x,
/// read as sum_h x_h x^h, maps to x a.
inline CellularAutomaton lca_to_ca(const CyclicGroupRing& ring, const GroupRingElement& a, const Limits& limits = {}) {
  auto space = make_space(group_from_spec("Z" + std::to_string(ring.n()), limits), ring.q(), limits);
  space->require_enumerable();
  ImageTable image(space->size());
  for (std::uint64_t i = 0; i < image.size(); ++i)
    image[i] = static_cast<ConfigIndex>(ring.code_of(ring.mul(ring.element_at(i), a)));
  return CellularAutomaton(detail::trusted, std::move(space), std::move(image));
}

}  // namespace vnr
