#pragma once

// Ready-made automata: the min/max rules (elementary rules 128 and 254 for
// q = 2), rule 110, Conway's Life on a torus, and the three-automaton
// construction of a non-regular element for any nontrivial G and A.
//
// Rules on Z are realised on the cyclic quotient Z_n, Life on Z_r x Z_c.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vnr/cellular_automaton.hpp"
#include "vnr/config_space.hpp"
#include "vnr/error.hpp"
#include "vnr/group.hpp"

namespace vnr {

namespace detail {

inline std::vector<Element> dedup(std::vector<Element> s) {
  std::vector<Element> out;
  for (Element e : s)
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  return out;
}

// Local table of `f` applied to the decoded pattern (one symbol per memory-set element).
inline LocalRule tabulate(std::vector<Element> memory_set, std::size_t q,
                          const std::function<Symbol(const std::vector<Symbol>&)>& f) {
  LocalRule rule{std::move(memory_set), {}};
  const std::uint64_t patterns = checked_pow(q, rule.memory_set.size(), std::uint64_t{1} << 32);
  require(patterns != 0, "local rule too large");
  std::vector<Symbol> pat(rule.memory_set.size());
  rule.table.resize(patterns);
  for (std::uint64_t code = 0; code < patterns; ++code) {
    std::uint64_t c = code;
    for (auto& v : pat) v = static_cast<Symbol>(c % q), c /= q;
    rule.table[code] = f(pat);
  }
  return rule;
}

inline std::vector<Element> radius_one(std::size_t n) {
  return dedup({static_cast<Element>((n - 1) % n), 0, static_cast<Element>(1 % n)});
}

}  // namespace detail

/// (x)mu = min{(-1)x, (0)x, (1)x} on Z_n.
inline CellularAutomaton min_rule(std::size_t n, std::size_t q, const Limits& limits = {}) {
  detail::require(n >= 1, "min rule needs n >= 1");
  auto space = make_space(group_from_spec("Z" + std::to_string(n), limits), q, limits);
  return ca_from_local_rule(space, detail::tabulate(detail::radius_one(n), q, [](const std::vector<Symbol>& p) {
                              return *std::min_element(p.begin(), p.end());
                            }));
}

/// (x)mu = max{(-1)x, (0)x, (1)x} on Z_n.
inline CellularAutomaton max_rule(std::size_t n, std::size_t q, const Limits& limits = {}) {
  detail::require(n >= 1, "max rule needs n >= 1");
  auto space = make_space(group_from_spec("Z" + std::to_string(n), limits), q, limits);
  return ca_from_local_rule(space, detail::tabulate(detail::radius_one(n), q, [](const std::vector<Symbol>& p) {
                              return *std::max_element(p.begin(), p.end());
                            }));
}

/// Wolfram rule 110 on Z_n: neighbourhood (left, centre, right) = (x[i-1], x[i], x[i+1]),
/// new state is bit 4l + 2c + r of 110.
inline CellularAutomaton rule110(std::size_t n, const Limits& limits = {}) {
  detail::require(n >= 3, "rule 110 needs n >= 3");
  auto space = make_space(group_from_spec("Z" + std::to_string(n), limits), 2, limits);
  return ca_from_local_rule(space, detail::tabulate(detail::radius_one(n), 2, [](const std::vector<Symbol>& p) {
                              return static_cast<Symbol>((110u >> (4 * p[0] + 2 * p[1] + p[2])) & 1u);
                            }));
}

/// B3/S23 on the Moore neighbourhood of the torus Z_rows x Z_cols.
inline CellularAutomaton game_of_life(std::size_t rows, std::size_t cols, const Limits& limits = {}) {
  detail::require(rows >= 3 && cols >= 3, "game of life needs a torus of at least 3x3");
  auto space = make_space(group_from_spec("Z" + std::to_string(rows) + "xZ" + std::to_string(cols), limits), 2, limits);
  std::vector<Element> moore;
  for (std::size_t dr : {rows - 1, std::size_t{0}, std::size_t{1}})
    for (std::size_t dc : {cols - 1, std::size_t{0}, std::size_t{1}}) moore.push_back(static_cast<Element>(dr * cols + dc));
  return ca_from_local_rule(space, detail::tabulate(moore, 2, [](const std::vector<Symbol>& p) {
                              const bool alive = p[4] != 0;
                              const auto live = std::count(p.begin(), p.end(), Symbol{1}) - (alive ? 1 : 0);
                              return static_cast<Symbol>(live == 3 || (alive && live == 2));
                            }));
}

struct NonregularConstruction {
  Element g;                 // least non-identity element
  CellularAutomaton tau1;    // keeps (e)x when x agrees on {e, g, g^-1}, else 0
  CellularAutomaton tau2;    // writes 1 where x vanishes on {e, g, g^-1}, else keeps (e)x
  CellularAutomaton tau;     // tau2 first, then tau1
  Configuration z;           // (g^m)z = m mod 2 for minimal m >= 0, zero off <g>
};

inline NonregularConstruction nonregular_construction(const SpacePtr& space) {
  const auto& G = space->group();
  detail::require(G.order() >= 2, "construction needs a nontrivial group");
  detail::require(space->alphabet_size() >= 2, "construction needs at least two symbols");
  const Element e = G.identity();
  const Element g = e == 0 ? 1 : 0;
  const auto S = detail::dedup({e, g, G.inv(g)});
  const std::size_t q = space->alphabet_size();

  auto all_equal = [](const std::vector<Symbol>& p) { return std::adjacent_find(p.begin(), p.end(), std::not_equal_to<>()) == p.end(); };
  auto tau1 = ca_from_local_rule(space, detail::tabulate(S, q, [&](const std::vector<Symbol>& p) {
                                   return all_equal(p) ? p[0] : Symbol{0};
                                 }));
  auto tau2 = ca_from_local_rule(space, detail::tabulate(S, q, [&](const std::vector<Symbol>& p) {
                                   return all_equal(p) && p[0] == 0 ? Symbol{1} : p[0];
                                 }));
  auto tau = compose(tau2, tau1);

  Configuration z(G.order(), 0);
  std::vector<bool> seen(G.order());
  Element h = e;
  for (std::size_t m = 0; !seen[h]; ++m, h = G.mul(h, g)) {
    seen[h] = true;
    z[h] = static_cast<Symbol>(m % 2);
  }
  return {g, std::move(tau1), std::move(tau2), std::move(tau), std::move(z)};
}

}  // namespace vnr
