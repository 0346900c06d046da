#pragma once

// Finite groups given by Cayley tables, their subgroup lattice and the
// conjugacy classes of subgroups.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vnr/error.hpp"

namespace vnr {

/// Index of a group element, in [0, order).
using Element = std::uint32_t;

class FiniteGroup {
 public:
  using Table = std::vector<std::vector<Element>>;

  /// Validates `table` (square, Latin, identity, associativity for order <= 64).
  explicit FiniteGroup(Table table, std::string name = "table", const Limits& limits = {})
      : name_(std::move(name)) {
    const std::size_t n = table.size();
    detail::require(n > 0, "Cayley table is empty");
    if (n > limits.max_group_order)
      detail::fail(ErrorKind::size_cap, "group too large: order " + std::to_string(n) +
                                            " exceeds cap " + std::to_string(limits.max_group_order));
    for (const auto& row : table) {
      detail::require(row.size() == n, "Cayley table is not square");
      for (Element e : row) detail::require(e < n, "Cayley table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<bool> row_seen(n), col_seen(n);
      for (std::size_t b = 0; b < n; ++b) {
        detail::require(!row_seen[table[a][b]] && !col_seen[table[b][a]], "not a Latin square");
        row_seen[table[a][b]] = true;
        col_seen[table[b][a]] = true;
      }
    }
    bool found = false;
    for (Element e = 0; e < n && !found; ++e) {
      bool ok = true;
      for (Element g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
      if (ok) {
        identity_ = e;
        found = true;
      }
    }
    detail::require(found, "no identity element");
    if (n <= 64) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c)
            detail::require(table[table[a][b]][c] == table[a][table[b][c]], "not associative");
    }
    inverses_.resize(n);
    for (Element g = 0; g < n; ++g)
      for (Element h = 0; h < n; ++h)
        if (table[g][h] == identity_) inverses_[g] = h;
    table_ = std::move(table);
  }

  std::size_t order() const noexcept { return table_.size(); }
  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const { return table_[a][b]; }
  Element inv(Element a) const { return inverses_[a]; }
  const Table& cayley() const noexcept { return table_; }
  const std::string& name() const noexcept { return name_; }

  bool is_abelian() const {
    for (Element a = 0; a < order(); ++a)
      for (Element b = 0; b < a; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// Equality of the underlying tables; the display name is ignored.
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  std::string name_;
  Table table_;
  Element identity_ = 0;
  std::vector<Element> inverses_;
};

struct Subgroup {
  std::vector<Element> members;  // sorted

  std::size_t size() const noexcept { return members.size(); }
  bool contains(Element g) const { return std::binary_search(members.begin(), members.end(), g); }
  bool is_subset_of(const Subgroup& other) const {
    return std::includes(other.members.begin(), other.members.end(), members.begin(), members.end());
  }

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  /// Ordered by size first, then by member list.
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members < b.members;
  }
};

struct SubgroupClass {
  Subgroup representative;          // least conjugate
  std::vector<Subgroup> conjugates;  // sorted, contains representative
};

namespace detail {

inline FiniteGroup::Table cyclic_table(std::size_t n) {
  FiniteGroup::Table t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>((a + b) % n);
  return t;
}

// r^i at index i, s r^i at index n + i; (s^a r^i)(s^b r^j) = s^(a+b) r^((-1)^b i + j).
inline FiniteGroup::Table dihedral_table(std::size_t n) {
  FiniteGroup::Table t(2 * n, std::vector<Element>(2 * n));
  for (std::size_t x = 0; x < 2 * n; ++x)
    for (std::size_t y = 0; y < 2 * n; ++y) {
      const std::size_t a = x / n, i = x % n, b = y / n, j = y % n;
      const std::size_t rot = (b == 0 ? i + j : n - i + j) % n;
      t[x][y] = static_cast<Element>(((a + b) % 2) * n + rot);
    }
  return t;
}

// Lexicographic over factor indices: (i, j) sits at i * |right| + j.
inline FiniteGroup::Table direct_product_table(const FiniteGroup::Table& l, const FiniteGroup::Table& r) {
  const std::size_t m = r.size(), n = l.size() * m;
  FiniteGroup::Table t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x][y] = static_cast<Element>(l[x / m][y / m] * m + r[x % m][y % m]);
  return t;
}

}  // namespace detail

/// Parses `Z<n>`, `D<n>` (dihedral of order 2n) and products such as `Z2xZ2`.
inline FiniteGroup group_from_spec(const std::string& spec, const Limits& limits = {}) {
  static const std::regex factor_re("^([ZD])([0-9]{1,6})$");
  std::vector<std::pair<char, std::size_t>> factors;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = spec.find('x', start);
    const std::string token = spec.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    std::smatch m;
    detail::require(std::regex_match(token, m, factor_re), "malformed group spec '" + spec + "'");
    const std::size_t n = std::stoul(m[2].str());
    detail::require(n > 0, "group spec '" + spec + "' has a factor of order 0");
    factors.emplace_back(m[1].str()[0], n);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  std::uint64_t order = 1;
  for (auto [kind, n] : factors) {
    order *= (kind == 'D' ? 2 * n : n);
    if (order > limits.max_group_order)
      detail::fail(ErrorKind::size_cap, "group too large: '" + spec + "' exceeds order cap " +
                                            std::to_string(limits.max_group_order));
  }
  FiniteGroup::Table table = {{0}};
  for (auto [kind, n] : factors)
    table = detail::direct_product_table(table, kind == 'Z' ? detail::cyclic_table(n) : detail::dihedral_table(n));
  return FiniteGroup(std::move(table), spec, limits);
}

inline FiniteGroup group_from_cayley_table(FiniteGroup::Table table, const Limits& limits = {}) {
  return FiniteGroup(std::move(table), "table", limits);
}

inline std::size_t element_order(const FiniteGroup& G, Element g) {
  std::size_t k = 1;
  for (Element x = g; x != G.identity(); x = G.mul(x, g)) ++k;
  return k;
}

/// g^-1 H g
inline Subgroup conjugate(const FiniteGroup& G, const Subgroup& H, Element g) {
  Subgroup out;
  out.members.reserve(H.size());
  for (Element h : H.members) out.members.push_back(G.mul(G.mul(G.inv(g), h), g));
  std::sort(out.members.begin(), out.members.end());
  return out;
}

/// Subgroup generated by `gens`.
inline Subgroup closure(const FiniteGroup& G, const std::vector<Element>& gens) {
  std::vector<bool> seen(G.order());
  std::vector<Element> members{G.identity()};
  seen[G.identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Element t : gens) {
      const Element y = G.mul(members[i], t);
      if (!seen[y]) {
        seen[y] = true;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members)};
}

/// Every subgroup exactly once, sorted by (size, members).
inline std::vector<Subgroup> subgroups(const FiniteGroup& G) {
  std::map<std::vector<Element>, std::vector<Element>> found;  // members -> generators
  std::deque<std::pair<Subgroup, std::vector<Element>>> queue;
  Subgroup trivial = closure(G, {});
  found.emplace(trivial.members, std::vector<Element>{});
  queue.emplace_back(std::move(trivial), std::vector<Element>{});
  while (!queue.empty()) {
    auto [H, gens] = std::move(queue.front());
    queue.pop_front();
    for (Element g = 0; g < G.order(); ++g) {
      if (H.contains(g)) continue;
      auto ext = gens;
      ext.push_back(g);
      Subgroup K = closure(G, ext);
      if (found.emplace(K.members, ext).second) queue.emplace_back(std::move(K), std::move(ext));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& [members, gens] : found) out.push_back(Subgroup{members});
  std::sort(out.begin(), out.end());
  return out;
}

/// Partition of subgroups(G) into conjugacy classes, in the order of their least member.
inline std::vector<SubgroupClass> conjugacy_classes_of_subgroups(const FiniteGroup& G) {
  const auto all = subgroups(G);
  std::vector<bool> assigned(all.size());
  std::vector<SubgroupClass> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (assigned[i]) continue;
    std::set<Subgroup> conj;
    for (Element g = 0; g < G.order(); ++g) conj.insert(conjugate(G, all[i], g));
    SubgroupClass cls{all[i], {conj.begin(), conj.end()}};
    for (const auto& H : cls.conjugates) {
      const auto it = std::lower_bound(all.begin(), all.end(), H);
      assigned[static_cast<std::size_t>(it - all.begin())] = true;
    }
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace vnr
