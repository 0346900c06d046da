#pragma once

// Cellular automata over a finite group and a finite alphabet, stored as full
// image tables over the configuration space, with the regularity machinery
// built on orbits and stabilisers.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vnr/config_space.hpp"
#include "vnr/error.hpp"
#include "vnr/group.hpp"

namespace vnr {

/// Memory set S and local function mu : A^S -> A. Patterns are indexed base-q
/// little-endian in memory-set order: sum_j x[S_j] * q^j.
struct LocalRule {
  std::vector<Element> memory_set;
  std::vector<Symbol> table;
};

/// Entry i is the index of the image of configuration i.
using ImageTable = std::vector<ConfigIndex>;

namespace detail {
struct trusted_t {};
inline constexpr trusted_t trusted{};
}  // namespace detail

inline bool is_equivariant(const ConfigSpace& space, const ImageTable& image) {
  space.require_enumerable();
  if (image.size() != space.size()) return false;
  for (ConfigIndex y : image)
    if (y >= space.size()) return false;
  for (std::uint64_t xi = 0; xi < space.size(); ++xi) {
    const auto x = static_cast<ConfigIndex>(xi);
    for (Element g = 0; g < space.cells(); ++g)
      if (image[space.act(x, g)] != space.act(image[x], g)) return false;
  }
  return true;
}

class CellularAutomaton {
 public:
  /// Throws validation when `image` is not a G-equivariant map of the space.
  CellularAutomaton(SpacePtr space, ImageTable image) : space_(std::move(space)), image_(std::move(image)) {
    detail::require(is_equivariant(*space_, image_), "image table is not G-equivariant");
  }

  CellularAutomaton(detail::trusted_t, SpacePtr space, ImageTable image, std::optional<LocalRule> rule = {})
      : space_(std::move(space)), image_(std::move(image)), provenance_(std::move(rule)) {}

  const ConfigSpace& space() const noexcept { return *space_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }
  const ImageTable& table() const noexcept { return image_; }
  const std::optional<LocalRule>& provenance() const noexcept { return provenance_; }

  ConfigIndex operator()(ConfigIndex x) const { return image_[x]; }
  Configuration operator()(const Configuration& x) const { return space_->config_at(image_[space_->index_of(x)]); }

  friend bool operator==(const CellularAutomaton& a, const CellularAutomaton& b) {
    return a.image_ == b.image_ && *a.space_ == *b.space_;
  }

 private:
  SpacePtr space_;
  ImageTable image_;
  std::optional<LocalRule> provenance_;
};

inline CellularAutomaton identity_ca(SpacePtr space) {
  space->require_enumerable();
  ImageTable t(space->size());
  for (std::uint64_t i = 0; i < t.size(); ++i) t[i] = static_cast<ConfigIndex>(i);
  return CellularAutomaton(detail::trusted, std::move(space), std::move(t));
}

/// (g)(x)tau = mu( s -> (s g)x ), evaluated at every cell of every configuration.
inline CellularAutomaton ca_from_local_rule(SpacePtr space, LocalRule rule) {
  const auto& G = space->group();
  const std::size_t q = space->alphabet_size();
  detail::require(!rule.memory_set.empty(), "memory set is empty");
  std::vector<bool> seen(G.order());
  for (Element s : rule.memory_set) {
    detail::require(s < G.order(), "memory set element out of range");
    detail::require(!seen[s], "memory set has duplicate elements");
    seen[s] = true;
  }
  const std::uint64_t patterns = detail::checked_pow(q, rule.memory_set.size(), std::uint64_t{1} << 32);
  detail::require(patterns != 0 && rule.table.size() == patterns,
                  "local rule table must cover all q^|S| patterns");
  for (Symbol v : rule.table) detail::require(v < q, "local rule output symbol out of range");
  space->require_enumerable();

  const std::size_t n = space->cells();
  std::vector<std::vector<Element>> nbr(n);  // nbr[g][j] = S_j g
  for (Element g = 0; g < n; ++g)
    for (Element s : rule.memory_set) nbr[g].push_back(G.mul(s, g));
  std::vector<ConfigIndex> place(n);
  {
    ConfigIndex p = 1;
    for (auto& v : place) v = p, p *= static_cast<ConfigIndex>(q);
  }
  ImageTable image(space->size());
  Configuration x(n);
  for (std::uint64_t i = 0; i < space->size(); ++i) {
    ConfigIndex y = 0;
    for (Element g = 0; g < n; ++g) {
      std::size_t pat = 0;
      for (std::size_t j = nbr[g].size(); j-- > 0;) pat = pat * q + x[nbr[g][j]];
      y += rule.table[pat] * place[g];
    }
    image[i] = y;
    for (auto& d : x) {  // odometer increment
      if (++d < q) break;
      d = 0;
    }
  }
  return CellularAutomaton(detail::trusted, std::move(space), std::move(image), std::move(rule));
}

/// tau sigma: apply tau first, then sigma.
inline CellularAutomaton compose(const CellularAutomaton& tau, const CellularAutomaton& sigma) {
  detail::require(tau.space() == sigma.space(), "cannot compose automata over different configuration spaces");
  ImageTable t(tau.table().size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = sigma(tau(static_cast<ConfigIndex>(x)));
  return CellularAutomaton(detail::trusted, tau.space_ptr(), std::move(t));
}

inline bool is_invertible(const CellularAutomaton& tau) {
  std::vector<bool> hit(tau.table().size());
  for (ConfigIndex y : tau.table()) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

inline CellularAutomaton inverse(const CellularAutomaton& tau) {
  if (!is_invertible(tau)) detail::fail(ErrorKind::not_invertible, "not invertible");
  ImageTable t(tau.table().size());
  for (std::size_t x = 0; x < t.size(); ++x) t[tau(static_cast<ConfigIndex>(x))] = static_cast<ConfigIndex>(x);
  return CellularAutomaton(detail::trusted, tau.space_ptr(), std::move(t));
}

struct RegularityReport {
  bool regular = true;
  /// Least orbit representative y in the image with no preimage x having G_x = G_y.
  std::optional<ConfigIndex> offending;
};

/// Regular iff every y in the image has a preimage with the same stabiliser.
inline RegularityReport is_regular_ca(const CellularAutomaton& tau) {
  const auto& t = tau.space().orbits();
  const std::size_t N = tau.table().size();
  std::vector<std::uint8_t> in_image(N), good(N);
  for (std::size_t x = 0; x < N; ++x) {
    const ConfigIndex y = tau(static_cast<ConfigIndex>(x));
    const ConfigIndex r = t.rep_of[y];
    in_image[r] = 1;
    if (t.stab[x] == t.stab[y]) good[r] = 1;
  }
  for (ConfigIndex r : t.reps)
    if (in_image[r] && !good[r]) return {false, r};
  return {};
}

/// A constant k in the image of tau with no constant preimage, if any.
inline std::optional<Symbol> constant_witness_nonregular(const CellularAutomaton& tau) {
  const auto& sp = tau.space();
  if (sp.cells() < 2 || sp.alphabet_size() < 2) return std::nullopt;
  std::vector<bool> in_image(tau.table().size());
  for (ConfigIndex y : tau.table()) in_image[y] = true;
  std::vector<bool> hit_by_constant(tau.table().size());
  for (Symbol k = 0; k < sp.alphabet_size(); ++k) hit_by_constant[tau(sp.constant_index(k))] = true;
  for (Symbol k = 0; k < sp.alphabet_size(); ++k) {
    const ConfigIndex c = sp.constant_index(k);
    if (in_image[c] && !hit_by_constant[c]) return k;
  }
  return std::nullopt;
}

namespace detail {

[[noreturn]] inline void fail_not_regular(const CellularAutomaton& tau, ConfigIndex offending) {
  std::string cfg;
  for (Symbol s : tau.space().config_at(offending)) cfg += std::to_string(s);
  fail(ErrorKind::not_regular, "not regular: image orbit of configuration " + cfg +
                                   " has no preimage with equal stabiliser");
}

}  // namespace detail

/// phi with tau phi tau = tau: identity off the image, and y_i . g -> y_i' . g
/// on each image orbit, where y_i' is the least preimage of the orbit
/// representative y_i with G_{y_i'} = G_{y_i}.
inline CellularAutomaton weak_generalized_inverse(const CellularAutomaton& tau) {
  const auto& sp = tau.space();
  const auto& t = sp.orbits();
  const std::size_t N = tau.table().size();
  constexpr ConfigIndex none = ~ConfigIndex{0};
  std::vector<ConfigIndex> chosen(N, none);
  std::vector<std::uint8_t> in_image(N);
  for (std::size_t xi = 0; xi < N; ++xi) {
    const auto x = static_cast<ConfigIndex>(xi);
    const ConfigIndex y = tau(x);
    in_image[t.rep_of[y]] = 1;
    if (t.rep_of[y] == y && chosen[y] == none && t.stab[x] == t.stab[y]) chosen[y] = x;
  }
  ImageTable phi(N);
  for (std::size_t z = 0; z < N; ++z) phi[z] = static_cast<ConfigIndex>(z);
  for (ConfigIndex r : t.reps) {
    if (!in_image[r]) continue;
    if (chosen[r] == none) detail::fail_not_regular(tau, r);
    for (Element g = 0; g < sp.cells(); ++g) phi[sp.act(r, g)] = sp.act(chosen[r], g);
  }
  return CellularAutomaton(detail::trusted, tau.space_ptr(), std::move(phi));
}

/// sigma = phi tau phi, which satisfies tau sigma tau = tau and sigma tau sigma = sigma.
inline CellularAutomaton generalized_inverse_ca(const CellularAutomaton& tau) {
  const auto phi = weak_generalized_inverse(tau);
  return compose(compose(phi, tau), phi);
}

/// Every G-equivariant self-map of the space, indexed in mixed radix: the
/// orbit representatives in ascending order are the digits, least significant
/// first, and a digit selects a target y with G_x <= G_y in ascending index.
class CaEnumerator {
 public:
  explicit CaEnumerator(SpacePtr space) : space_(std::move(space)) {
    const auto& t = space_->orbits();
    choices_.resize(t.reps.size());
    for (std::size_t i = 0; i < t.reps.size(); ++i)
      for (std::uint64_t y = 0; y < space_->size(); ++y)
        if (t.stab_leq(t.reps[i], static_cast<ConfigIndex>(y))) choices_[i].push_back(static_cast<ConfigIndex>(y));
    count_ = 1;
    for (const auto& c : choices_) count_ *= c.size();
  }

  const BigInt& count() const noexcept { return count_; }

  /// Count as a machine integer; throws size_cap beyond Limits::max_automata.
  std::uint64_t size() const {
    if (count_ > space_->limits().max_automata)
      detail::fail(ErrorKind::size_cap, "CA monoid has " + count_.str() + " elements, exceeding cap " +
                                            std::to_string(space_->limits().max_automata));
    return count_.convert_to<std::uint64_t>();
  }

  const std::vector<std::vector<ConfigIndex>>& choices() const noexcept { return choices_; }

  CellularAutomaton at(std::uint64_t index) const {
    std::vector<ConfigIndex> targets(choices_.size());
    for (std::size_t i = 0; i < choices_.size(); ++i) {
      targets[i] = choices_[i][index % choices_[i].size()];
      index /= choices_[i].size();
    }
    return build(targets);
  }

  /// Builds the map sending reps[i] to targets[i], extended equivariantly.
  CellularAutomaton build(const std::vector<ConfigIndex>& targets) const {
    const auto& t = space_->orbits();
    std::vector<ConfigIndex> target_of_rep(space_->size());
    for (std::size_t i = 0; i < t.reps.size(); ++i) target_of_rep[t.reps[i]] = targets[i];
    ImageTable img(space_->size());
    for (std::size_t x = 0; x < img.size(); ++x)
      img[x] = space_->act(target_of_rep[t.rep_of[x]], t.transversal[x]);
    return CellularAutomaton(detail::trusted, space_, std::move(img));
  }

  template <class F>
  void for_each(F&& f) const {
    const std::uint64_t n = size();
    for (std::uint64_t i = 0; i < n; ++i) f(i, at(i));
  }

 private:
  SpacePtr space_;
  std::vector<std::vector<ConfigIndex>> choices_;
  BigInt count_;
};

inline CaEnumerator enumerate_ca(SpacePtr space) { return CaEnumerator(std::move(space)); }

/// |CA(G;A)| = prod over orbit representatives x of |{y : G_x <= G_y}|.
inline BigInt count_ca(const ConfigSpace& space) {
  const auto& t = space.orbits();
  std::vector<std::uint64_t> above(t.subgroups.size());
  for (std::uint64_t y = 0; y < space.size(); ++y)
    for (std::size_t a = 0; a < t.subgroups.size(); ++a)
      if (t.contained_in[a][t.stab[y]]) ++above[a];
  BigInt n = 1;
  for (ConfigIndex r : t.reps) n *= above[t.stab[r]];
  return n;
}

/// Membership in R = { sigma : G_x = G_(x)sigma for all x }.
inline bool in_regular_submonoid(const CellularAutomaton& sigma) {
  const auto& t = sigma.space().orbits();
  for (ConfigIndex r : t.reps)
    if (t.stab[r] != t.stab[sigma(r)]) return false;
  return true;
}

/// |R| as the product over boxes of the number of equivariant self-maps of each box.
inline BigInt regular_submonoid_order(const ConfigSpace& space) {
  const auto& t = space.orbits();
  BigInt n = 1;
  for (const auto& box : space.boxes()) {
    for (ConfigIndex r : box.orbit_representatives) {
      // Inside one box G_r <= G_y forces G_r = G_y, since the stabilisers are conjugate.
      std::uint64_t targets = 0;
      for (std::uint64_t y = 0; y < space.size(); ++y)
        if (t.class_of[t.stab[y]] == t.class_of[t.stab[r]] && t.stab_leq(r, static_cast<ConfigIndex>(y))) ++targets;
      n *= targets;
    }
  }
  return n;
}

/// Weak generalised inverses W(tau) and generalised inverses V(tau), the latter
/// both by direct filtering and as { b tau b' : b, b' in W(tau) }.
struct InverseSets {
  std::vector<ImageTable> weak;
  std::vector<ImageTable> generalized;
  std::vector<ImageTable> generalized_from_weak;
};

inline std::vector<ImageTable> weak_inverse_set(const CellularAutomaton& tau) {
  std::vector<ImageTable> out;
  enumerate_ca(tau.space_ptr()).for_each([&](std::uint64_t, const CellularAutomaton& s) {
    for (std::size_t x = 0; x < tau.table().size(); ++x) {
      const ConfigIndex y = tau(static_cast<ConfigIndex>(x));
      if (tau(s(y)) != y) return;
    }
    out.push_back(s.table());
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline InverseSets generalized_inverse_set(const CellularAutomaton& tau) {
  InverseSets sets;
  sets.weak = weak_inverse_set(tau);
  const auto& a = tau.table();
  for (const auto& b : sets.weak) {
    bool inverse = true;
    for (std::size_t x = 0; x < b.size() && inverse; ++x) inverse = b[a[b[x]]] == b[x];
    if (inverse) sets.generalized.push_back(b);
  }
  if (BigInt(sets.weak.size()) * sets.weak.size() > tau.space().limits().max_automata)
    detail::fail(ErrorKind::size_cap, "too many weak inverse pairs");
  std::set<ImageTable> products;
  for (const auto& b : sets.weak)
    for (const auto& b2 : sets.weak) {
      ImageTable p(b.size());
      for (std::size_t x = 0; x < p.size(); ++x) p[x] = b2[a[b[x]]];
      products.insert(std::move(p));
    }
  sets.generalized_from_weak.assign(products.begin(), products.end());
  return sets;
}

}  // namespace vnr
