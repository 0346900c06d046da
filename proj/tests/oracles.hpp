#pragma once

// Brute-force reference computations for the tests. None of them touch the
// code path they are compared against.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "vnr.hpp"

namespace vnr::oracle {

/// Decodes index i of A^G (base-q little-endian).
inline std::vector<Symbol> decode(std::uint64_t i, std::size_t n, std::size_t q) {
  std::vector<Symbol> x(n);
  for (auto& v : x) v = static_cast<Symbol>(i % q), i /= q;
  return x;
}

inline std::uint64_t encode(const std::vector<Symbol>& x, std::size_t q) {
  std::uint64_t i = 0;
  for (std::size_t h = x.size(); h-- > 0;) i = i * q + x[h];
  return i;
}

/// x . g evaluated straight from (h)(x.g) = (h g^-1)x.
inline std::vector<Symbol> shift(const FiniteGroup& G, const std::vector<Symbol>& x, Element g) {
  std::vector<Symbol> y(x.size());
  for (Element h = 0; h < x.size(); ++h) y[h] = x[G.mul(h, G.inv(g))];
  return y;
}

/// Subgroup of g with x . g = x, checked cell by cell.
inline std::vector<Element> stabilizer(const FiniteGroup& G, const std::vector<Symbol>& x) {
  std::vector<Element> s;
  for (Element g = 0; g < G.order(); ++g)
    if (shift(G, x, g) == x) s.push_back(g);
  return s;
}

/// Number of maps A^G -> A^G commuting with the action, by testing every map.
inline std::uint64_t count_equivariant_maps(const FiniteGroup& G, std::size_t q) {
  const std::size_t n = G.order();
  std::uint64_t N = 1;
  for (std::size_t i = 0; i < n; ++i) N *= q;
  std::vector<std::vector<std::uint64_t>> act(N, std::vector<std::uint64_t>(n));
  for (std::uint64_t x = 0; x < N; ++x)
    for (Element g = 0; g < n; ++g) act[x][g] = encode(shift(G, decode(x, n, q), g), q);
  std::vector<std::uint64_t> map(N, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::uint64_t x = 0; x < N && ok; ++x)
      for (Element g = 0; g < n && ok; ++g) ok = map[act[x][g]] == act[map[x]][g];
    count += ok;
    std::size_t pos = 0;
    while (pos < N && ++map[pos] == N) map[pos++] = 0;
    if (pos == N) break;
  }
  return count;
}

/// Exists sigma among `candidates` with tau sigma tau = tau, scanning every candidate.
inline bool has_weak_inverse_among(const ImageTable& tau, const std::vector<ImageTable>& candidates) {
  std::set<ConfigIndex> image(tau.begin(), tau.end());
  for (const auto& s : candidates) {
    bool ok = true;
    for (ConfigIndex y : image)
      if (tau[s[y]] != y) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

/// Same question, searched one orbit at a time: sigma is fixed by its values on
/// orbit representatives, and tau sigma tau = tau only constrains sigma on the
/// image of tau, orbit by orbit. Each orbit's admissible targets are scanned
/// exhaustively.
inline bool has_weak_inverse_factored(const CellularAutomaton& tau, const CaEnumerator& all) {
  const auto& sp = tau.space();
  const auto& t = sp.orbits();
  std::vector<bool> in_image(tau.table().size());
  for (ConfigIndex y : tau.table()) in_image[y] = true;
  for (std::size_t i = 0; i < t.reps.size(); ++i) {
    const ConfigIndex r = t.reps[i];
    if (!in_image[r]) continue;
    bool found = false;
    for (ConfigIndex c : all.choices()[i]) {
      bool ok = true;
      for (Element g = 0; g < sp.cells() && ok; ++g) ok = tau(sp.act(c, g)) == sp.act(r, g);
      if (ok) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

/// Rank of a matrix over a finite field by Gaussian elimination.
inline std::size_t rank(const FiniteField& f, std::vector<std::vector<std::uint32_t>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const auto inv = f.inv(m[r][c]);
    for (auto& v : m[r]) v = f.mul(v, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const auto factor = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
    }
    ++r;
  }
  return r;
}

/// a is regular iff a^2 b = a is solvable for b (commutative ring), decided
/// by comparing ranks of the multiplication-by-a^2 matrix with and without a.
inline bool regular_by_linear_algebra(const CyclicGroupRing& ring, const GroupRingElement& a) {
  const auto a2 = ring.mul(a, a);
  const std::size_t n = ring.n();
  std::vector<std::vector<std::uint32_t>> m(n, std::vector<std::uint32_t>(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = ring.mul(a2, ring.x_power(j));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coeffs[i];
  }
  for (std::size_t i = 0; i < n; ++i) m[i][n] = a.coeffs[i];
  auto plain = m;
  for (auto& row : plain) row.pop_back();
  return rank(ring.field(), plain) == rank(ring.field(), m);
}

/// Factorisation by repeatedly dividing out the least monic divisor of degree >= 1.
inline Factorization<FiniteField> trial_factor(Poly f) {
  Factorization<FiniteField> out;
  const auto& field = f.field_ptr();
  const std::uint64_t q = field->size();
  for (std::size_t d = 1; f.degree() > 0; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= q;
    for (std::uint64_t code = 0; code < count && f.degree() >= d; ++code) {
      std::vector<std::uint32_t> c(d + 1, 0);
      std::uint64_t cc = code;
      for (std::size_t i = 0; i < d; ++i) c[i] = static_cast<std::uint32_t>(cc % q), cc /= q;
      c[d] = 1;
      const Poly p(field, c);
      std::size_t m = 0;
      while (f.degree() >= d && (f % p).is_zero()) f = f / p, ++m;
      if (m) out.push_back({p, m});
    }
  }
  return out;
}

}  // namespace vnr::oracle
