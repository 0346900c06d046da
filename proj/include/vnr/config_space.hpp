#pragma once

// The configuration space A^G with the right action (h)(x.g) = (h g^-1)x,
// orbits, stabilisers and the partition into boxes B_[H].

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "vnr/error.hpp"
#include "vnr/group.hpp"

namespace vnr {

using Symbol = std::uint32_t;
/// Base-q little-endian code of a configuration: sum_h x[h] * q^h.
using ConfigIndex = std::uint32_t;
/// Symbol at each group element, in group-element order.
using Configuration = std::vector<Symbol>;

struct Orbit {
  Configuration representative;       // member with least index
  std::vector<ConfigIndex> members;   // sorted
};

struct Box {
  SubgroupClass subgroup_class;
  std::vector<ConfigIndex> orbit_representatives;  // sorted
  std::uint64_t size = 0;                          // number of configurations
};

/// Nonempty boxes, ordered like conjugacy_classes_of_subgroups().
using BoxPartition = std::vector<Box>;

/// Orbit and stabiliser data for an enumerable space. Subgroups are referred
/// to by their position in `subgroups`.
struct OrbitTable {
  using SubgroupId = std::uint16_t;

  std::vector<Subgroup> subgroups;
  std::vector<SubgroupClass> classes;
  std::vector<std::size_t> class_of;             // per subgroup id
  std::vector<std::vector<bool>> contained_in;   // [a][b]: H_a <= H_b
  std::vector<std::vector<SubgroupId>> conj;     // [a][g]: id of g^-1 H_a g

  std::vector<ConfigIndex> rep_of;       // least member of the orbit of x
  std::vector<Element> transversal;      // g with rep_of[x] . g = x
  std::vector<SubgroupId> stab;          // id of G_x
  std::vector<ConfigIndex> reps;         // ascending

  bool stab_leq(ConfigIndex x, ConfigIndex y) const { return contained_in[stab[x]][stab[y]]; }
};

class ConfigSpace {
 public:
  ConfigSpace(FiniteGroup group, std::size_t alphabet_size, const Limits& limits = {})
      : group_(std::move(group)), q_(alphabet_size), limits_(limits) {
    detail::require(q_ >= 1, "alphabet size must be at least 1");
    size_ = detail::checked_pow(q_, group_.order(), (std::uint64_t{1} << 32) - 1);
    if (size_ != 0) {
      place_.resize(group_.order());
      std::uint64_t p = 1;
      for (auto& v : place_) {
        v = static_cast<ConfigIndex>(p);
        p *= q_;
      }
    }
  }

  ConfigSpace(const ConfigSpace&) = delete;
  ConfigSpace& operator=(const ConfigSpace&) = delete;

  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t alphabet_size() const noexcept { return q_; }
  std::size_t cells() const noexcept { return group_.order(); }
  const Limits& limits() const noexcept { return limits_; }

  /// q^|G|; 0 when the space has more than 2^32 configurations.
  std::uint64_t size() const noexcept { return size_; }
  bool enumerable() const noexcept { return size_ != 0 && size_ <= limits_.max_configurations; }

  friend bool operator==(const ConfigSpace& a, const ConfigSpace& b) {
    return &a == &b || (a.q_ == b.q_ && a.group_ == b.group_);
  }

  void validate(const Configuration& x) const {
    detail::require(x.size() == cells(), "configuration length does not match group order");
    for (Symbol s : x) detail::require(s < q_, "configuration symbol out of range");
  }

  ConfigIndex index_of(const Configuration& x) const {
    validate(x);
    require_indexable();
    ConfigIndex i = 0;
    for (std::size_t h = 0; h < x.size(); ++h) i += x[h] * place_[h];
    return i;
  }

  Configuration config_at(ConfigIndex i) const {
    require_indexable();
    detail::require(i < size_, "configuration index out of range");
    Configuration x(cells());
    for (auto& v : x) {
      v = static_cast<Symbol>(i % q_);
      i /= static_cast<ConfigIndex>(q_);
    }
    return x;
  }

  Configuration constant(Symbol k) const {
    detail::require(k < q_, "symbol out of range");
    return Configuration(cells(), k);
  }
  ConfigIndex constant_index(Symbol k) const { return index_of(constant(k)); }

  /// (h)(x . g) = (h g^-1)x
  Configuration act(const Configuration& x, Element g) const {
    const Element gi = group_.inv(g);
    Configuration y(x.size());
    for (Element h = 0; h < x.size(); ++h) y[h] = x[group_.mul(h, gi)];
    return y;
  }

  ConfigIndex act(ConfigIndex x, Element g) const {
    if (const auto* t = act_table()) return (*t)[std::size_t{x} * cells() + g];
    return act_slow(x, g);
  }

  Subgroup stabilizer(const Configuration& x) const {
    validate(x);
    Subgroup s;
    for (Element g = 0; g < group_.order(); ++g)
      if (act(x, g) == x) s.members.push_back(g);
    return s;
  }

  Orbit orbit(const Configuration& x) const {
    validate(x);
    Orbit o;
    for (Element g = 0; g < group_.order(); ++g) o.members.push_back(index_of(act(x, g)));
    std::sort(o.members.begin(), o.members.end());
    o.members.erase(std::unique(o.members.begin(), o.members.end()), o.members.end());
    o.representative = config_at(o.members.front());
    return o;
  }

  /// Built on first use; throws size_cap when the space is not enumerable.
  const OrbitTable& orbits() const {
    require_enumerable();
    std::call_once(orbits_once_, [this] { build_orbits(); });
    return *orbits_;
  }

  std::vector<Configuration> orbit_representatives() const {
    std::vector<Configuration> out;
    for (ConfigIndex r : orbits().reps) out.push_back(config_at(r));
    return out;
  }

  BoxPartition boxes() const {
    const auto& t = orbits();
    BoxPartition out(t.classes.size());
    for (std::size_t c = 0; c < t.classes.size(); ++c) out[c].subgroup_class = t.classes[c];
    for (ConfigIndex r : t.reps) out[t.class_of[t.stab[r]]].orbit_representatives.push_back(r);
    for (std::uint64_t x = 0; x < size_; ++x) ++out[t.class_of[t.stab[x]]].size;
    std::erase_if(out, [](const Box& b) { return b.size == 0; });
    return out;
  }

  void require_enumerable() const {
    if (!enumerable())
      detail::fail(ErrorKind::size_cap, "configuration space " + std::to_string(q_) + "^" +
                                            std::to_string(cells()) + " exceeds enumeration cap " +
                                            std::to_string(limits_.max_configurations));
  }

 private:
  void require_indexable() const {
    if (size_ == 0)
      detail::fail(ErrorKind::size_cap, "configuration space too large to index (more than 2^32 configurations)");
  }

  const std::vector<ConfigIndex>* act_table() const {
    if (!enumerable()) return nullptr;
    std::call_once(act_once_, [this] {
      if (size_ * cells() > (std::uint64_t{1} << 22)) return;
      std::vector<ConfigIndex> t(size_ * cells());
      for (std::uint64_t x = 0; x < size_; ++x)
        for (Element g = 0; g < cells(); ++g)
          t[x * cells() + g] = act_slow(static_cast<ConfigIndex>(x), g);
      act_ = std::move(t);
    });
    return act_.empty() ? nullptr : &act_;
  }

  ConfigIndex act_slow(ConfigIndex x, Element g) const {
    const Element gi = group_.inv(g);
    ConfigIndex y = 0;
    for (Element h = 0; h < cells(); ++h) y += digit(x, group_.mul(h, gi)) * place_[h];
    return y;
  }

  Symbol digit(ConfigIndex x, Element h) const { return static_cast<Symbol>((x / place_[h]) % q_); }

  void build_orbits() const {
    auto t = std::make_unique<OrbitTable>();
    const std::size_t n = cells();
    t->subgroups = subgroups(group_);
    t->classes = conjugacy_classes_of_subgroups(group_);
    const std::size_t ns = t->subgroups.size();
    auto id_of = [&](const Subgroup& H) {
      const auto it = std::lower_bound(t->subgroups.begin(), t->subgroups.end(), H);
      return static_cast<OrbitTable::SubgroupId>(it - t->subgroups.begin());
    };
    t->class_of.resize(ns);
    for (std::size_t c = 0; c < t->classes.size(); ++c)
      for (const auto& H : t->classes[c].conjugates) t->class_of[id_of(H)] = c;
    t->contained_in.assign(ns, std::vector<bool>(ns));
    t->conj.assign(ns, std::vector<OrbitTable::SubgroupId>(n));
    for (std::size_t a = 0; a < ns; ++a) {
      for (std::size_t b = 0; b < ns; ++b) t->contained_in[a][b] = t->subgroups[a].is_subset_of(t->subgroups[b]);
      for (Element g = 0; g < n; ++g) t->conj[a][g] = id_of(conjugate(group_, t->subgroups[a], g));
    }

    constexpr ConfigIndex unset = ~ConfigIndex{0};
    t->rep_of.assign(size_, unset);
    t->transversal.assign(size_, 0);
    t->stab.assign(size_, 0);
    for (std::uint64_t xi = 0; xi < size_; ++xi) {
      const auto x = static_cast<ConfigIndex>(xi);
      if (t->rep_of[x] != unset) continue;
      t->reps.push_back(x);
      Subgroup st;
      std::vector<ConfigIndex> images(n);
      for (Element g = 0; g < n; ++g) {
        images[g] = act(x, g);
        if (images[g] == x) st.members.push_back(g);
      }
      const auto sid = id_of(st);
      for (Element g = 0; g < n; ++g) {
        const ConfigIndex y = images[g];
        if (t->rep_of[y] != unset) continue;
        t->rep_of[y] = x;
        t->transversal[y] = g;
        t->stab[y] = t->conj[sid][g];
      }
    }
    orbits_ = std::move(t);
  }

  FiniteGroup group_;
  std::size_t q_;
  Limits limits_;
  std::uint64_t size_ = 0;
  std::vector<ConfigIndex> place_;

  mutable std::once_flag orbits_once_;
  mutable std::unique_ptr<OrbitTable> orbits_;
  mutable std::once_flag act_once_;
  mutable std::vector<ConfigIndex> act_;
};

using SpacePtr = std::shared_ptr<const ConfigSpace>;

inline SpacePtr make_space(FiniteGroup group, std::size_t alphabet_size, const Limits& limits = {}) {
  return std::make_shared<const ConfigSpace>(std::move(group), alphabet_size, limits);
}

inline SpacePtr make_space(const std::string& group_spec, std::size_t alphabet_size, const Limits& limits = {}) {
  return make_space(group_from_spec(group_spec, limits), alphabet_size, limits);
}

}  // namespace vnr
