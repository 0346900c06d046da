// vnr: command-line front end for regularity analysis of cellular automata
// and linear cellular automata over cyclic groups.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "vnr.hpp"

namespace {

using vnr::BigInt;
using vnr::Error;
using vnr::ErrorKind;
using json = nlohmann::ordered_json;

constexpr int exit_validation = 2;
constexpr int exit_size_cap = 3;
constexpr int exit_not_regular = 4;

struct Options {
  std::string group;
  std::size_t q = 0;
  std::size_t n = 0;
  std::uint32_t p = 2;
  std::size_t k = 1;
  std::size_t rows = 4, cols = 4;
  std::string rule;
  std::string coeffs;
  std::string out;
  std::string witness;
  bool brute_force = false;
  bool stable = false;
};

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  int exit_code = 0;
};

std::string str(const BigInt& v) { return v.str(); }

json config_json(const vnr::ConfigSpace& sp, vnr::ConfigIndex i) { return json(sp.config_at(i)); }

json table_json(const vnr::ImageTable& t) { return json(t); }

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::size_cap:
      return exit_size_cap;
    case ErrorKind::not_regular:
      return exit_not_regular;
    default:
      return exit_validation;
  }
}

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::validation:
      return "validation";
    case ErrorKind::size_cap:
      return "size_cap";
    case ErrorKind::not_regular:
      return "not_regular";
    case ErrorKind::not_invertible:
      return "not_invertible";
  }
  return "unknown";
}

vnr::Limits cli_limits() {
  vnr::Limits l;
  l.max_automata = 1'000'000;
  return l;
}

// ---- ca classify

Report ca_classify(const Options& o) {
  Report r{"ca classify"};
  const auto file = vnr::rule_from_json(vnr::read_json_file(o.rule));
  if (!o.group.empty())
    vnr::detail::require(o.group == file.group, "--group " + o.group + " does not match rule file group " + file.group);
  if (o.q) vnr::detail::require(o.q == file.alphabet_size, "--q does not match rule file alphabet_size");
  r.inputs = {{"rule", o.rule}, {"group", file.group}, {"q", file.alphabet_size}};

  auto space = vnr::make_space(file.group, file.alphabet_size, cli_limits());
  const auto tau = vnr::ca_from_local_rule(space, file.rule);
  const auto& sp = *space;
  const bool invertible = vnr::is_invertible(tau);
  const auto reg = vnr::is_regular_ca(tau);
  const auto constant = vnr::constant_witness_nonregular(tau);

  auto& res = r.results;
  res["configurations"] = std::to_string(sp.size());
  res["equivariant"] = vnr::is_equivariant(sp, tau.table());
  res["invertible"] = invertible;
  res["regular"] = reg.regular;
  res["in_regular_submonoid"] = vnr::in_regular_submonoid(tau);
  if (reg.offending) {
    json orbit = json::array();
    for (auto m : sp.orbit(sp.config_at(*reg.offending)).members) orbit.push_back(config_json(sp, m));
    res["witness_orbit"] = orbit;
  } else {
    res["witness_orbit"] = nullptr;
  }
  res["constant_witness"] = constant ? json(*constant) : json(nullptr);
  if (reg.regular) {
    res["weak_inverse"] = table_json(vnr::weak_generalized_inverse(tau).table());
    res["generalized_inverse"] = table_json(vnr::generalized_inverse_ca(tau).table());
  } else {
    res["weak_inverse"] = nullptr;
    res["generalized_inverse"] = nullptr;
  }
  res["inverse"] = invertible ? table_json(vnr::inverse(tau).table()) : json(nullptr);
  return r;
}

// ---- ca enumerate

Report ca_enumerate(const Options& o) {
  Report r{"ca enumerate"};
  vnr::detail::require(!o.group.empty(), "--group is required");
  vnr::detail::require(o.q >= 1, "--q is required");
  r.inputs = {{"group", o.group}, {"q", o.q}};
  if (!o.out.empty()) r.inputs["out"] = o.out;

  auto space = vnr::make_space(o.group, o.q, cli_limits());
  const auto all = vnr::enumerate_ca(space);
  const auto total = all.size();

  std::ofstream csv;
  if (!o.out.empty()) {
    csv.open(o.out);
    vnr::detail::require(csv.good(), "cannot write '" + o.out + "'");
    csv << "index,regular,invertible,in_regular_submonoid\n";
  }
  std::uint64_t regular = 0, invertible = 0, in_r = 0;
  all.for_each([&](std::uint64_t i, const vnr::CellularAutomaton& tau) {
    const bool reg = vnr::is_regular_ca(tau).regular;
    const bool inv = vnr::is_invertible(tau);
    const bool sub = vnr::in_regular_submonoid(tau);
    regular += reg, invertible += inv, in_r += sub;
    if (csv.is_open()) csv << i << ',' << reg << ',' << inv << ',' << sub << '\n';
  });

  auto& res = r.results;
  res["count"] = std::to_string(total);
  res["count_formula"] = str(vnr::count_ca(*space));
  res["regular"] = std::to_string(regular);
  res["invertible"] = std::to_string(invertible);
  res["regular_submonoid"] = std::to_string(in_r);
  res["regular_submonoid_formula"] = str(vnr::regular_submonoid_order(*space));
  res["orbits"] = space->orbits().reps.size();
  res["ordered"] = invertible <= in_r && in_r <= total;
  return r;
}

// ---- lca count / inverse

vnr::FieldPtr field_of(const Options& o) { return vnr::make_field(o.p, o.k); }

json factors_json(const vnr::CyclicGroupRing& ring) {
  json out = json::array();
  for (const auto& [poly, m] : ring.factorization()) out.push_back({{"poly", poly.to_string()}, {"multiplicity", m}});
  return out;
}

Report lca_count(const Options& o) {
  Report r{"lca count"};
  vnr::detail::require(o.n >= 1, "--n must be at least 1");
  const auto field = field_of(o);
  r.inputs = {{"n", o.n}, {"p", o.p}, {"k", o.k}, {"brute_force", o.brute_force}};
  const vnr::CyclicGroupRing ring(o.n, field);
  auto& res = r.results;
  res["n"] = o.n;
  res["q"] = field->size();
  res["factors"] = factors_json(ring);
  const auto formula = ring.count_regular();
  res["formula_count"] = str(formula);
  if (o.brute_force) {
    const auto brute = vnr::brute_force_regular_count(ring);
    res["brute_force_count"] = std::to_string(brute);
    res["agree"] = formula == brute;
  } else {
    res["brute_force_count"] = nullptr;
    res["agree"] = nullptr;
  }
  return r;
}

Report lca_inverse(const Options& o) {
  Report r{"lca inverse"};
  const auto coeffs = vnr::parse_coefficients(o.coeffs);
  if (o.n) vnr::detail::require(o.n == coeffs.size(), "--n does not match the number of coefficients");
  const auto field = field_of(o);
  r.inputs = {{"n", coeffs.size()}, {"p", o.p}, {"k", o.k}, {"coeffs", vnr::format_coefficients(coeffs)}};
  const vnr::CyclicGroupRing ring(coeffs.size(), field);
  const auto a = ring.element(coeffs);
  auto& res = r.results;
  res["factors"] = factors_json(ring);
  res["unit"] = ring.is_unit(a);
  res["nilpotent"] = ring.is_nilpotent(a);
  if (auto bad = ring.nonregular_factor(a)) {
    const auto& f = ring.factorization()[*bad];
    res["regular"] = false;
    res["inverse"] = nullptr;
    res["certificate"] = {{"factor", f.poly.to_string()}, {"multiplicity", f.multiplicity}};
    r.exit_code = exit_not_regular;
    return r;
  }
  const auto b = ring.generalized_inverse(a);
  res["regular"] = true;
  res["inverse"] = vnr::format_coefficients(b.coeffs);
  res["aba_equals_a"] = ring.mul(ring.mul(a, b), a) == a;
  res["bab_equals_b"] = ring.mul(ring.mul(b, a), b) == b;
  res["certificate"] = nullptr;
  return r;
}

// ---- witnesses

void regularity_fields(json& res, const vnr::CellularAutomaton& tau) {
  const auto reg = vnr::is_regular_ca(tau);
  const auto constant = vnr::constant_witness_nonregular(tau);
  res["regular"] = reg.regular;
  res["witness_orbit_representative"] = reg.offending ? config_json(tau.space(), *reg.offending) : json(nullptr);
  res["constant_witness"] = constant ? json(*constant) : json(nullptr);
  res["verdicts_agree"] = !constant || !reg.regular;
}

Report witness(const Options& o) {
  Report r{"witness " + o.witness};
  auto& res = r.results;
  const auto limits = cli_limits();
  if (o.witness == "rule110") {
    const std::size_t n = o.n ? o.n : 4;
    r.inputs = {{"n", n}};
    const auto tau = vnr::rule110(n, limits);
    const auto& sp = tau.space();
    res["constant_0_maps_to"] = config_json(sp, tau(sp.constant_index(0)));
    res["constant_1_maps_to"] = config_json(sp, tau(sp.constant_index(1)));
    if (n % 2 == 0) {
      vnr::Configuration alt(n);
      for (std::size_t i = 0; i < n; ++i) alt[i] = (i + 1) % 2;
      res["alternating_maps_to"] = json(tau(alt));
    }
    regularity_fields(res, tau);
  } else if (o.witness == "life") {
    r.inputs = {{"rows", o.rows}, {"cols", o.cols}};
    const auto tau = vnr::game_of_life(o.rows, o.cols, limits);
    const auto& sp = tau.space();
    const auto one = sp.constant_index(1);
    std::uint64_t preimages = 0;
    for (std::uint64_t x = 0; x < sp.size(); ++x) preimages += tau(static_cast<vnr::ConfigIndex>(x)) == one;
    res["constant_0_maps_to_0"] = tau(sp.constant_index(0)) == sp.constant_index(0);
    res["constant_1_maps_to_0"] = tau(one) == sp.constant_index(0);
    res["preimages_of_constant_1"] = std::to_string(preimages);
    regularity_fields(res, tau);
    res["consistent"] = preimages == 0 || !res["regular"].get<bool>();
  } else if (o.witness == "minmax") {
    const std::size_t n = o.n ? o.n : 3;
    const std::size_t q = o.q ? o.q : 2;
    r.inputs = {{"n", n}, {"q", q}};
    const auto t1 = vnr::min_rule(n, q, limits), t2 = vnr::max_rule(n, q, limits);
    res["min_max_min_equals_min"] = vnr::compose(vnr::compose(t1, t2), t1) == t1;
    res["max_min_max_equals_max"] = vnr::compose(vnr::compose(t2, t1), t2) == t2;
    res["min_regular"] = vnr::is_regular_ca(t1).regular;
    res["max_regular"] = vnr::is_regular_ca(t2).regular;
  } else if (o.witness == "thm29") {
    const std::string group = o.group.empty() ? "Z2" : o.group;
    const std::size_t q = o.q ? o.q : 2;
    r.inputs = {{"group", group}, {"q", q}};
    auto space = vnr::make_space(group, q, limits);
    const auto c = vnr::nonregular_construction(space);
    res["g"] = c.g;
    res["z"] = json(c.z);
    res["zero_maps_to_one"] = c.tau(space->constant_index(0)) == space->constant_index(1);
    res["z_maps_to_zero"] = c.tau(space->index_of(c.z)) == space->constant_index(0);
    regularity_fields(res, c.tau);
    if (vnr::count_ca(*space) <= limits.max_automata)
      res["weak_inverse_count"] = std::to_string(vnr::weak_inverse_set(c.tau).size());
    else
      res["weak_inverse_count"] = nullptr;
  } else {
    vnr::detail::fail(ErrorKind::validation, "unknown witness '" + o.witness + "' (rule110, life, minmax, thm29)");
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularity of cellular automata and linear cellular automata"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) { cmd->add_flag("--stable-output", o.stable, "Omit timing from the report"); };
  auto add_field = [&](CLI::App* cmd) {
    cmd->add_option("--p", o.p, "Field characteristic")->capture_default_str();
    cmd->add_option("--k", o.k, "Extension degree")->capture_default_str();
  };

  auto* ca = app.add_subcommand("ca", "Cellular automata over a finite group");
  ca->require_subcommand(1);
  auto* classify = ca->add_subcommand("classify", "Classify the automaton in a rule file");
  classify->add_option("--rule", o.rule, "Rule file (JSON)")->required();
  classify->add_option("--group", o.group, "Group spec, checked against the rule file");
  classify->add_option("--q", o.q, "Alphabet size, checked against the rule file");
  add_common(classify);
  auto* enumerate = ca->add_subcommand("enumerate", "Enumerate CA(G;A)");
  enumerate->add_option("--group", o.group, "Group spec, e.g. Z2xZ2")->required();
  enumerate->add_option("--q", o.q, "Alphabet size")->required();
  enumerate->add_option("--out", o.out, "CSV output path");
  add_common(enumerate);

  auto* lca = app.add_subcommand("lca", "Linear CA over Z_n, i.e. the group ring F_q[Z_n]");
  lca->require_subcommand(1);
  auto* count = lca->add_subcommand("count", "Count regular elements");
  count->add_option("--n", o.n, "Order of the cyclic group")->required();
  add_field(count);
  count->add_flag("--brute-force", o.brute_force, "Also count by exhaustive search");
  add_common(count);
  auto* inverse = lca->add_subcommand("inverse", "Generalised inverse of an element");
  inverse->add_option("coeffs", o.coeffs, "Coefficients a0,a1,... (constant term first)")->required();
  inverse->add_option("--n", o.n, "Order of the cyclic group (defaults to the number of coefficients)");
  add_field(inverse);
  add_common(inverse);

  auto* wit = app.add_subcommand("witness", "Named example automata");
  wit->add_option("name", o.witness, "rule110 | life | minmax | thm29")->required();
  wit->add_option("--n", o.n, "Ring size for rule110 and minmax");
  wit->add_option("--q", o.q, "Alphabet size for minmax and thm29");
  wit->add_option("--group", o.group, "Group spec for thm29");
  wit->add_option("--rows", o.rows, "Torus rows for life")->capture_default_str();
  wit->add_option("--cols", o.cols, "Torus columns for life")->capture_default_str();
  add_common(wit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return exit_validation;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    if (*classify)
      report = ca_classify(o);
    else if (*enumerate)
      report = ca_enumerate(o);
    else if (*count)
      report = lca_count(o);
    else if (*inverse)
      report = lca_inverse(o);
    else
      report = witness(o);
  } catch (const Error& e) {
    json err = {{"error", e.what()}, {"kind", kind_name(e.kind())}};
    std::cerr << err.dump() << '\n';
    return exit_for(e.kind());
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  json out = {{"command", report.command}, {"inputs", report.inputs}, {"results", report.results}};
  if (!o.stable) out["timing_ms"] = elapsed;
  std::cout << out.dump(2) << '\n';
  return report.exit_code;
}
