// Acceptance checks. One line per criterion; exit status is nonzero when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vnr.hpp"

using namespace vnr;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

using Criterion = std::function<void(Check&)>;

void z_spaces(std::initializer_list<std::pair<const char*, std::size_t>> list,
              const std::function<void(const SpacePtr&, const std::string&)>& f) {
  for (auto [spec, q] : list) f(make_space(spec, q), std::string(spec) + ",q=" + std::to_string(q));
}

// 1: product formula for the regular count against the brute-force pair scan.
void counting(Check& c) {
  struct Case {
    std::size_t n;
    std::uint32_t q;
    std::uint64_t expected;
  };
  for (const Case& k : {Case{2, 2, 3}, Case{3, 2, 8}, Case{4, 2, 9}, Case{5, 2, 32}, Case{6, 2, 39}, Case{2, 3, 9},
                        Case{3, 3, 19}}) {
    const CyclicGroupRing ring(k.n, make_field(k.q));
    const auto formula = ring.count_regular();
    const auto brute = brute_force_regular_count(ring);
    c.expect(formula == brute && brute == k.expected,
             "(n=" + std::to_string(k.n) + ",q=" + std::to_string(k.q) + ") formula " + formula.str() + " brute " +
                 std::to_string(brute));
  }
}

// 2: stabiliser criterion versus exhaustive search for a weak inverse.
void oracle_equivalence(Check& c) {
  z_spaces({{"Z2", 2}, {"Z3", 2}, {"Z2", 3}}, [&](const SpacePtr& sp, const std::string& name) {
    const auto all = enumerate_ca(sp);
    std::vector<ImageTable> tables;
    all.for_each([&](std::uint64_t, const CellularAutomaton& t) { tables.push_back(t.table()); });
    all.for_each([&](std::uint64_t i, const CellularAutomaton& tau) {
      c.expect(is_regular_ca(tau).regular == oracle::has_weak_inverse_among(tau.table(), tables),
               name + " automaton " + std::to_string(i));
    });
  });
  z_spaces({{"Z2xZ2", 2}}, [&](const SpacePtr& sp, const std::string& name) {
    const auto all = enumerate_ca(sp);
    all.for_each([&](std::uint64_t i, const CellularAutomaton& tau) {
      c.expect(is_regular_ca(tau).regular == oracle::has_weak_inverse_factored(tau, all),
               name + " automaton " + std::to_string(i));
    });
  });
}

// 3: the three-automaton construction is never regular.
void construction(Check& c) {
  z_spaces({{"Z2", 2}, {"Z3", 2}, {"Z4", 2}, {"Z2xZ2", 2}}, [&](const SpacePtr& sp, const std::string& name) {
    const auto w = nonregular_construction(sp);
    c.expect(!is_regular_ca(w.tau).regular, name + " construction is regular");
    c.expect(w.tau(sp->constant_index(0)) == sp->constant_index(1), name + " (0)tau != 1");
    c.expect(constant_witness_nonregular(w.tau) == std::optional<Symbol>(0), name + " no constant witness 0");
    // z only reaches 0 when g generates G; off <g> the all-zero neighbourhoods are switched on by tau2
    if (closure(sp->group(), {w.g}).size() == sp->group().order())
      c.expect(w.tau(sp->index_of(w.z)) == sp->constant_index(0), name + " (z)tau != 0");
  });
  auto z2 = make_space("Z2", 2);
  const auto w = nonregular_construction(z2);
  std::vector<ImageTable> tables;
  enumerate_ca(z2).for_each([&](std::uint64_t, const CellularAutomaton& t) { tables.push_back(t.table()); });
  c.expect(tables.size() == 16, "CA(Z2;2) does not have 16 elements");
  std::size_t weak = 0;
  for (const auto& s : tables) {
    bool ok = true;
    for (ConfigIndex x = 0; x < 4; ++x) ok = ok && w.tau(s[w.tau(x)]) == w.tau(x);
    weak += ok;
  }
  c.expect(weak == 0, "W(tau) nonempty on Z2");
}

// 4: generalised inverses satisfy both identities.
void inverse_contracts(Check& c) {
  z_spaces({{"Z2", 2}, {"Z3", 2}}, [&](const SpacePtr& sp, const std::string& name) {
    enumerate_ca(sp).for_each([&](std::uint64_t i, const CellularAutomaton& tau) {
      if (!is_regular_ca(tau).regular) return;
      const auto s = generalized_inverse_ca(tau);
      const auto& t = tau.table();
      const auto& st = s.table();
      bool ok = true;
      for (std::size_t x = 0; x < t.size(); ++x) ok = ok && st[t[st[x]]] == st[x] && t[st[t[x]]] == t[x];
      c.expect(ok, name + " automaton " + std::to_string(i));
    });
  });
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    std::uint32_t p = q, k = 1;
    for (std::uint32_t d = 2; d <= q; ++d)
      if (q % d == 0) {
        p = d;
        break;
      }
    for (std::uint32_t v = q; v > p; v /= p) ++k;
    const auto field = make_field(p, k);
    for (std::size_t n = 1;; ++n) {
      const CyclicGroupRing ring(n, field);
      const auto total = ring.element_count();
      if (total > 4096) break;
      for (std::uint64_t code = 0; code < total; ++code) {
        const auto a = ring.element_at(code);
        if (!ring.is_regular(a)) continue;
        const auto b = ring.generalized_inverse(a);
        c.expect(ring.mul(ring.mul(a, b), a) == a && ring.mul(ring.mul(b, a), b) == b,
                 "ring n=" + std::to_string(n) + " q=" + std::to_string(q) + " element " + std::to_string(code));
      }
    }
  }
}

// 5: V(tau) by filtering equals { s tau s' : s, s' in W(tau) }.
void v_w_identity(Check& c) {
  auto sp = make_space("Z2", 2);
  std::size_t seen = 0;
  enumerate_ca(sp).for_each([&](std::uint64_t i, const CellularAutomaton& tau) {
    ++seen;
    const auto sets = generalized_inverse_set(tau);
    const std::set<ImageTable> filtered(sets.generalized.begin(), sets.generalized.end());
    std::set<ImageTable> products;
    for (const auto& s : sets.weak)
      for (const auto& s2 : sets.weak) {
        ImageTable p(s.size());
        for (std::size_t x = 0; x < p.size(); ++x) p[x] = s2[tau(s[x])];
        products.insert(p);
      }
    c.expect(filtered == products, "automaton " + std::to_string(i));
    c.expect(sets.generalized_from_weak == std::vector<ImageTable>(products.begin(), products.end()),
             "library product set, automaton " + std::to_string(i));
  });
  c.expect(seen == 16, "expected 16 automata");
}

// 6: the stabiliser-preserving submonoid R.
void regular_submonoid(Check& c) {
  const std::vector<std::pair<const char*, std::uint64_t>> cases{{"Z2", 8}, {"Z3", 144}};
  for (auto [spec, expected] : cases) {
    auto sp = make_space(spec, 2);
    std::vector<CellularAutomaton> R;
    enumerate_ca(sp).for_each([&](std::uint64_t, const CellularAutomaton& t) {
      if (is_invertible(t)) c.expect(in_regular_submonoid(t), std::string(spec) + " unit outside R");
      if (in_regular_submonoid(t)) R.push_back(t);
    });
    c.expect(R.size() == expected, std::string(spec) + " |R| by filter = " + std::to_string(R.size()));
    c.expect(regular_submonoid_order(*sp) == expected, std::string(spec) + " |R| formula");
    for (const auto& a : R) {
      c.expect(is_regular_ca(a).regular, std::string(spec) + " element of R not regular");
      for (const auto& b : R) c.expect(in_regular_submonoid(compose(a, b)), std::string(spec) + " R not closed");
    }
  }
}

// 7: min/max, rule 110, and the augmentation element s.
void named_examples(Check& c) {
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::size_t q : {2u, 3u}) {
      const auto t1 = min_rule(n, q), t2 = max_rule(n, q);
      c.expect(compose(compose(t1, t2), t1) == t1 && compose(compose(t2, t1), t2) == t2,
               "min/max n=" + std::to_string(n) + " q=" + std::to_string(q));
    }
  for (std::size_t n : {4u, 6u}) {
    const auto r = rule110(n);
    c.expect(!is_regular_ca(r).regular, "rule 110 regular at n=" + std::to_string(n));
    c.expect(constant_witness_nonregular(r) == std::optional<Symbol>(1), "rule 110 witness at n=" + std::to_string(n));
  }
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::size_t n = p; n <= 12; n += p) {
      const CyclicGroupRing ring(n, make_field(p));
      const auto s = ring.sum_element();
      c.expect(ring.mul(s, s) == ring.zero() && !ring.is_regular(s),
               "s at n=" + std::to_string(n) + " p=" + std::to_string(p));
    }
}

// 8: linear CA as CA.
void bridge(Check& c) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const CyclicGroupRing ring(n, make_field(2));
    for (std::uint64_t code = 0; code < ring.element_count(); ++code) {
      const auto a = ring.element_at(code);
      const auto tau = lca_to_ca(ring, a);
      const auto& sp = tau.space();
      const std::string name = "n=" + std::to_string(n) + " a=" + std::to_string(code);
      c.expect(is_equivariant(sp, tau.table()), name + " not equivariant");
      c.expect(is_regular_ca(tau).regular == ring.is_regular(a), name + " verdicts differ");
      bool additive = true;
      for (ConfigIndex x = 0; x < sp.size(); ++x)
        for (ConfigIndex y = 0; y < sp.size(); ++y) additive = additive && tau(x ^ y) == (tau(x) ^ tau(y));
      c.expect(additive, name + " not additive");
    }
  }
}

// 9: factorisation and CRT.
void algebra(Check& c) {
  for (auto field : {make_field(2), make_field(3), make_field(2, 2)}) {
    for (std::size_t n = 1; n <= 16; ++n) {
      const auto f = x_pow_n_minus_one<FiniteField>(field, n);
      const auto fac = factor(f);
      const std::string name = "n=" + std::to_string(n) + " q=" + std::to_string(field->size());
      c.expect(expand(fac, field) == f, name + " does not reconstruct");
      for (const auto& [p, m] : fac) c.expect(is_irreducible(p), name + " factor " + p.to_string() + " reducible");
    }
  }
  const auto f2 = make_field(2);
  const auto fac = factor(x_pow_n_minus_one<FiniteField>(f2, 6));
  for (std::uint64_t code = 0; code < 64; ++code) {
    const auto a = detail::poly_from_code<FiniteField>(f2, code);
    c.expect(crt_join(crt_split(a, fac), fac, f2) == a, "CRT round trip at code " + std::to_string(code));
  }
}

// 10: Life on the 4x4 torus.
void life(Check& c) {
  const auto L = game_of_life(4, 4);
  const auto& sp = L.space();
  const auto zero = sp.constant_index(0), one = sp.constant_index(1);
  c.expect(L(zero) == zero && L(one) == zero, "constants do not die");
  std::uint64_t preimages = 0;
  for (ConfigIndex x = 0; x < sp.size(); ++x) preimages += L(x) == one;
  const auto report = is_regular_ca(L);
  c.expect(preimages == 0, "constant 1 has " + std::to_string(preimages) + " preimages");
  c.expect(preimages == 0 || !report.regular, "constant 1 in image but verdict regular");
  c.expect(!report.regular && report.offending.has_value(), "verdict regular");
  if (report.offending) {
    // confirm the reported orbit directly: it is in the image, and no preimage has its stabiliser
    const auto y = *report.offending;
    const auto gy = oracle::stabilizer(sp.group(), sp.config_at(y));
    bool hit = false, good = false;
    for (ConfigIndex x = 0; x < sp.size(); ++x)
      if (L(x) == y) hit = true, good = good || oracle::stabilizer(sp.group(), sp.config_at(x)) == gy;
    c.expect(hit && !good, "reported orbit is not a failure of the criterion");
  }
}

}  // namespace

int main() {
  struct Entry {
    std::string name;
    Criterion run;
    double budget_ms;  // 0: no time limit
  };
  const std::vector<Entry> criteria{
      {"1 regular count formula matches brute force", counting, 10'000},
      {"2 stabiliser criterion matches exhaustive weak-inverse search", oracle_equivalence, 60'000},
      {"3 nonregular construction", construction, 0},
      {"4 generalised inverse contracts", inverse_contracts, 0},
      {"5 V equals products of W", v_w_identity, 0},
      {"6 regular submonoid R", regular_submonoid, 0},
      {"7 min/max, rule 110, augmentation element", named_examples, 30'000},
      {"8 linear CA bridge", bridge, 0},
      {"9 factorisation and CRT", algebra, 0},
      {"10 Life on the 4x4 torus", life, 60'000},
  };
  int failed = 0;
  for (const auto& [name, run, budget] : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (budget > 0) c.expect(ms <= budget, "over the time budget of " + std::to_string(budget / 1000) + " s");
    std::printf("%s criterion %s (%.0f ms)%s%s\n", c.ok ? "PASS" : "FAIL", name.c_str(), ms, c.ok ? "" : ": ",
                c.why.str().c_str());
    failed += !c.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
