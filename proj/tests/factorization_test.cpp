#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "vnr/factorization.hpp"
#include "vnr/group_ring.hpp"

namespace vnr {
namespace {

Factorization<FiniteField> fac(const FieldPtr& f, std::vector<std::pair<std::vector<std::uint32_t>, std::size_t>> parts) {
  Factorization<FiniteField> out;
  for (auto& [c, m] : parts) out.push_back({Poly(f, c), m});
  return out;
}

TEST(Irreducible, Examples) {
  const auto f2 = make_field(2);
  EXPECT_TRUE(is_irreducible(Poly::x(f2)));
  EXPECT_TRUE(is_irreducible(Poly::x(make_field(3))));
  EXPECT_TRUE(is_irreducible(Poly(f2, {1, 1, 1})));
  EXPECT_FALSE(is_irreducible(Poly(f2, {1, 0, 1})));
  EXPECT_THROW(is_irreducible(Poly::one(f2)), Error);
}

TEST(Irreducible, TrialDivisionAgreesWithDistinctDegreeTest) {
  for (auto field : {make_field(2), make_field(3), make_field(2, 2)}) {
    const std::uint64_t q = field->size();
    for (std::size_t deg = 1; deg <= 5; ++deg) {
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < deg; ++i) count *= q;
      for (std::uint64_t code = 0; code < std::min<std::uint64_t>(count, 300); ++code) {
        const auto f = detail::poly_from_code<FiniteField>(field, code) + Poly::monomial(field, 1, deg);
        EXPECT_EQ(is_irreducible(f), passes_distinct_degree_test(f)) << f.to_string();
      }
    }
  }
}

TEST(Factor, Examples) {
  const auto f2 = make_field(2);
  EXPECT_EQ(factor(x_pow_n_minus_one<FiniteField>(f2, 2)), fac(f2, {{{1, 1}, 2}}));
  EXPECT_EQ(factor(x_pow_n_minus_one<FiniteField>(f2, 3)), fac(f2, {{{1, 1}, 1}, {{1, 1, 1}, 1}}));
  EXPECT_EQ(factor(x_pow_n_minus_one<FiniteField>(f2, 6)), fac(f2, {{{1, 1}, 2}, {{1, 1, 1}, 2}}));
  EXPECT_THROW(factor(Poly::one(f2)), Error);
  EXPECT_THROW(factor(Poly(make_field(3), {1, 2})), Error);
}

TEST(Factor, XToTheNMinusOneOverF3) {
  const auto f3 = make_field(3);
  // x^3 - 1 = (x - 1)^3 = (x + 2)^3
  EXPECT_EQ(factor(x_pow_n_minus_one<FiniteField>(f3, 3)), fac(f3, {{{2, 1}, 3}}));
  // x^4 - 1 = (x + 1)(x + 2)(x^2 + 1)
  EXPECT_EQ(factor(x_pow_n_minus_one<FiniteField>(f3, 4)), fac(f3, {{{1, 1}, 1}, {{2, 1}, 1}, {{1, 0, 1}, 1}}));
}

TEST(Factor, AgreesWithTrialFactorisation) {
  for (auto field : {make_field(2), make_field(3), make_field(2, 2), make_field(5)}) {
    for (std::size_t n = 1; n <= 16; ++n) {
      const auto f = x_pow_n_minus_one<FiniteField>(field, n);
      const auto got = factor(f);
      auto want = oracle::trial_factor(f);
      std::sort(want.begin(), want.end(), [](const auto& a, const auto& b) { return a.poly < b.poly; });
      EXPECT_EQ(got, want) << "n=" << n << " q=" << field->size();
      EXPECT_EQ(expand(got, field), f);
      for (const auto& [p, m] : got) {
        EXPECT_TRUE(is_irreducible(p));
        EXPECT_EQ(p.leading(), 1u);
      }
    }
  }
}

TEST(Factor, GeneralPolynomialsOverF2AndF3) {
  for (auto field : {make_field(2), make_field(3)}) {
    const std::uint64_t q = field->size();
    for (std::size_t deg = 1; deg <= 7; ++deg) {
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < deg; ++i) count *= q;
      for (std::uint64_t code = 0; code < count; code += (deg > 5 ? 7 : 1)) {
        const auto f = detail::poly_from_code<FiniteField>(field, code) + Poly::monomial(field, 1, deg);
        const auto got = factor(f);
        EXPECT_EQ(expand(got, field), f) << f.to_string();
        EXPECT_TRUE(std::is_sorted(got.begin(), got.end(), [](const auto& a, const auto& b) { return a.poly < b.poly; }));
        for (std::size_t i = 0; i < got.size(); ++i) {
          EXPECT_TRUE(is_irreducible(got[i].poly));
          for (std::size_t j = 0; j < i; ++j) EXPECT_NE(got[i].poly, got[j].poly);
        }
      }
    }
  }
}

TEST(Factor, HighPowerOfCharacteristic) {
  const auto f2 = make_field(2);
  const auto got = factor(x_pow_n_minus_one<FiniteField>(f2, 16));
  EXPECT_EQ(got, fac(f2, {{{1, 1}, 16}}));
  const auto f3 = make_field(3);
  EXPECT_EQ(factor(x_pow_n_minus_one<FiniteField>(f3, 9)), fac(f3, {{{2, 1}, 9}}));
}

TEST(Crt, Examples) {
  const auto f2 = make_field(2);
  const auto F = factor(x_pow_n_minus_one<FiniteField>(f2, 6));
  for (const auto& r : crt_split(Poly(f2), F)) EXPECT_TRUE(r.is_zero());
  for (const auto& r : crt_split(Poly::one(f2), F)) EXPECT_TRUE(r.is_one());
  const CrtBasis<FiniteField> basis(F, f2);
  for (std::uint64_t code = 0; code < 64; ++code) {
    const auto a = detail::poly_from_code<FiniteField>(f2, code);
    EXPECT_EQ(basis.join(basis.split(a)), a);
    EXPECT_EQ(crt_join(crt_split(a, F), F, f2), a);
  }
}

TEST(Crt, RingHomomorphism) {
  const auto f2 = make_field(2);
  const auto F = factor(x_pow_n_minus_one<FiniteField>(f2, 6));
  const CrtBasis<FiniteField> basis(F, f2);
  for (std::uint64_t a = 0; a < 64; ++a) {
    for (std::uint64_t b = 0; b < 64; ++b) {
      const auto pa = detail::poly_from_code<FiniteField>(f2, a), pb = detail::poly_from_code<FiniteField>(f2, b);
      const auto sa = basis.split(pa), sb = basis.split(pb);
      const auto ssum = basis.split(pa + pb), sprod = basis.split(pa * pb);
      for (std::size_t i = 0; i < sa.size(); ++i) {
        EXPECT_EQ(ssum[i], (sa[i] + sb[i]) % basis.moduli()[i]);
        EXPECT_EQ(sprod[i], (sa[i] * sb[i]) % basis.moduli()[i]);
      }
    }
  }
}

TEST(Crt, MismatchedResidues) {
  const auto f2 = make_field(2);
  const auto F = factor(x_pow_n_minus_one<FiniteField>(f2, 3));
  EXPECT_THROW(crt_join(std::vector<Poly>{Poly(f2)}, F, f2), Error);
}

}  // namespace
}  // namespace vnr
