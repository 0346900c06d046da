#pragma once

// Factorisation over F_q: square-free decomposition (with p-th root
// extraction in characteristic p), distinct-degree, then deterministic
// equal-degree splitting. Also the polynomial Chinese remainder maps.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vnr/error.hpp"
#include "vnr/polynomial.hpp"

namespace vnr {

template <class F>
struct Factor {
  Polynomial<F> poly;  // monic irreducible
  std::size_t multiplicity = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Sorted by degree, then coefficients; product of poly^multiplicity is the input.
template <class F>
using Factorization = std::vector<Factor<F>>;

template <class F>
Polynomial<F> expand(const Factorization<F>& fac, const typename Polynomial<F>::FieldPtr& field) {
  auto out = Polynomial<F>::one(field);
  for (const auto& [p, m] : fac)
    for (std::size_t i = 0; i < m; ++i) out *= p;
  return out;
}

/// x^n - 1
template <class F>
Polynomial<F> x_pow_n_minus_one(const typename Polynomial<F>::FieldPtr& field, std::size_t n) {
  return Polynomial<F>::monomial(field, field->one(), n) - Polynomial<F>::one(field);
}

namespace detail {

// Polynomial whose coefficients are the base-q digits of code, constant term first.
template <class F>
Polynomial<F> poly_from_code(const typename Polynomial<F>::FieldPtr& field, std::uint64_t code) {
  std::vector<typename F::value_type> c;
  for (; code; code /= field->size()) c.push_back(static_cast<typename F::value_type>(code % field->size()));
  return Polynomial<F>(field, std::move(c));
}

}  // namespace detail

/// True iff f has no monic divisor of degree in [1, deg f / 2], by trial division.
template <class F>
bool is_irreducible(const Polynomial<F>& f) {
  if (f.is_zero() || f.degree() == 0) detail::fail(ErrorKind::validation, "irreducibility of a constant");
  const auto& field = f.field_ptr();
  const std::uint64_t q = field->size();
  for (std::size_t d = 1; 2 * d <= f.degree(); ++d) {
    const std::uint64_t count = detail::checked_pow(q, d, ~std::uint64_t{0} / 2);
    if (count == 0) detail::fail(ErrorKind::size_cap, "trial division search too large");
    for (std::uint64_t c = 0; c < count; ++c) {
      auto divisor = detail::poly_from_code<F>(field, c) + Polynomial<F>::monomial(field, field->one(), d);
      if ((f % divisor).is_zero()) return false;
    }
  }
  return true;
}

/// Rabin-style test: gcd(x^(q^i) - x, f) = 1 for i <= deg/2 and f | x^(q^deg) - x.
template <class F>
bool passes_distinct_degree_test(const Polynomial<F>& f) {
  if (f.is_zero() || f.degree() == 0) detail::fail(ErrorKind::validation, "irreducibility of a constant");
  const auto& field = f.field_ptr();
  const auto mf = f.monic();
  const auto x = Polynomial<F>::x(field) % mf;
  auto h = x;
  for (std::size_t i = 1; i <= mf.degree(); ++i) {
    h = pow_mod(h, BigInt(field->size()), mf);
    if (2 * i <= mf.degree() && !gcd(h - x, mf).is_one()) return false;
  }
  return h == x;
}

/// (g_i, i) with f = prod g_i^i, each g_i square-free and pairwise coprime; f monic.
template <class F>
std::vector<std::pair<Polynomial<F>, std::size_t>> square_free_decomposition(const Polynomial<F>& f) {
  std::vector<std::pair<Polynomial<F>, std::size_t>> out;
  if (f.degree() == 0) return out;
  const std::size_t p = f.field().characteristic();
  auto c = gcd(f, f.derivative());
  auto w = f / c;
  for (std::size_t i = 1; !w.is_one(); ++i) {
    auto y = gcd(w, c);
    auto z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), i);
    w = std::move(y);
    c = c / w;
  }
  if (!c.is_zero() && c.degree() > 0) {
    for (auto& [g, j] : square_free_decomposition(c.monic().pth_root().monic())) out.emplace_back(g, j * p);
  }
  return out;
}

/// (h_d, d) where h_d is the product of the degree-d irreducible factors of square-free monic f.
template <class F>
std::vector<std::pair<Polynomial<F>, std::size_t>> distinct_degree_factorization(const Polynomial<F>& f) {
  std::vector<std::pair<Polynomial<F>, std::size_t>> out;
  const auto& field = f.field_ptr();
  auto rest = f;
  auto h = Polynomial<F>::x(field) % rest;
  for (std::size_t d = 1; rest.degree() >= 2 * d; ++d) {
    h = pow_mod(h, BigInt(field->size()), rest);
    auto g = gcd(h - Polynomial<F>::x(field), rest);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
  return out;
}

/// Splits a square-free monic product of irreducibles of degree d, trying
/// candidates t = x, x+1, ... in code order until a proper gcd appears.
template <class F>
std::vector<Polynomial<F>> equal_degree_split(const Polynomial<F>& f, std::size_t d) {
  if (f.degree() == d) return {f};
  const auto& field = f.field_ptr();
  const std::uint64_t q = field->size();
  const std::uint64_t p = field->characteristic();
  std::size_t field_bits = 0;  // q = 2^field_bits when p = 2
  for (std::uint64_t v = q; v > 1; v /= 2) ++field_bits;

  BigInt half_order = 1;  // (q^d - 1) / 2 for odd q
  for (std::size_t i = 0; i < d; ++i) half_order *= q;
  half_order = (half_order - 1) / 2;

  for (std::uint64_t code = q;; ++code) {
    const auto t = detail::poly_from_code<F>(field, code);
    if (t.degree() >= f.degree()) break;
    Polynomial<F> probe(field);
    if (p == 2) {
      auto term = t % f;
      probe = term;
      for (std::size_t j = 1; j < field_bits * d; ++j) {
        term = (term * term) % f;
        probe += term;
      }
    } else {
      probe = pow_mod(t, half_order, f) - Polynomial<F>::one(field);
    }
    for (const auto& cand : {gcd(t, f), gcd(probe, f)}) {
      if (cand.degree() > 0 && cand.degree() < f.degree()) {
        auto left = equal_degree_split(cand, d);
        auto right = equal_degree_split(f / cand, d);
        left.insert(left.end(), right.begin(), right.end());
        return left;
      }
    }
  }
  throw std::logic_error("equal-degree splitting found no separating candidate");
}

/// Complete factorisation of monic f with deg f >= 1.
template <class F>
Factorization<F> factor(const Polynomial<F>& f) {
  detail::require(!f.is_zero() && f.degree() >= 1, "factor requires a nonconstant polynomial");
  detail::require(f.leading() == f.field().one(), "factor requires a monic polynomial");
  Factorization<F> out;
  for (const auto& [g, mult] : square_free_decomposition(f))
    for (const auto& [h, d] : distinct_degree_factorization(g))
      for (auto& irreducible : equal_degree_split(h, d)) out.push_back({irreducible.monic(), mult});
  std::sort(out.begin(), out.end(), [](const Factor<F>& a, const Factor<F>& b) { return a.poly < b.poly; });
  return out;
}

/// Residues modulo the prime powers p_i^m_i of a factorisation, and back.
template <class F>
class CrtBasis {
 public:
  explicit CrtBasis(const Factorization<F>& fac, typename Polynomial<F>::FieldPtr field)
      : product_(Polynomial<F>::one(field)) {
    for (const auto& [p, m] : fac) {
      auto pm = Polynomial<F>::one(field);
      for (std::size_t i = 0; i < m; ++i) pm *= p;
      moduli_.push_back(pm);
      product_ *= pm;
    }
    for (const auto& pm : moduli_) {
      const auto cofactor = product_ / pm;
      auto [d, u, v] = extended_gcd(cofactor, pm);
      detail::require(d.is_one(), "CRT moduli are not pairwise coprime");
      idempotents_.push_back((cofactor * u) % product_);
    }
  }

  const std::vector<Polynomial<F>>& moduli() const noexcept { return moduli_; }
  const Polynomial<F>& product() const noexcept { return product_; }

  std::vector<Polynomial<F>> split(const Polynomial<F>& a) const {
    std::vector<Polynomial<F>> r;
    for (const auto& m : moduli_) r.push_back(a % m);
    return r;
  }

  Polynomial<F> join(const std::vector<Polynomial<F>>& residues) const {
    detail::require(residues.size() == moduli_.size(), "residue count does not match factorisation");
    Polynomial<F> a(product_.field_ptr());
    for (std::size_t i = 0; i < residues.size(); ++i) a += residues[i] * idempotents_[i];
    return a % product_;
  }

 private:
  std::vector<Polynomial<F>> moduli_;
  std::vector<Polynomial<F>> idempotents_;
  Polynomial<F> product_;
};

template <class F>
std::vector<Polynomial<F>> crt_split(const Polynomial<F>& a, const Factorization<F>& fac) {
  return CrtBasis<F>(fac, a.field_ptr()).split(a);
}

template <class F>
Polynomial<F> crt_join(const std::vector<Polynomial<F>>& residues, const Factorization<F>& fac,
                       const typename Polynomial<F>::FieldPtr& field) {
  return CrtBasis<F>(fac, field).join(residues);
}

}  // namespace vnr
