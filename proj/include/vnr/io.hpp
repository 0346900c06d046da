#pragma once

// JSON formats: Cayley tables `{ "table": [[...]] }` and rule files
// `{ "group": spec, "alphabet_size": q, "memory_set": [...], "table": { "<pattern>": symbol } }`.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vnr/cellular_automaton.hpp"
#include "vnr/error.hpp"
#include "vnr/group.hpp"
#include "vnr/group_ring.hpp"

namespace vnr {

struct RuleFile {
  std::string group;
  std::size_t alphabet_size = 0;
  LocalRule rule;
};

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  detail::require(in.good(), "cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    detail::fail(ErrorKind::validation, "invalid JSON in '" + path + "': " + e.what());
  }
}

inline FiniteGroup group_from_json(const nlohmann::json& j, const Limits& limits = {}) {
  detail::require(j.is_object() && j.contains("table") && j["table"].is_array(), "Cayley JSON needs a \"table\" array");
  FiniteGroup::Table table;
  try {
    table = j["table"].get<FiniteGroup::Table>();
  } catch (const nlohmann::json::exception&) {
    detail::fail(ErrorKind::validation, "Cayley table must be an array of arrays of indices");
  }
  return group_from_cayley_table(std::move(table), limits);
}

inline RuleFile rule_from_json(const nlohmann::json& j) {
  detail::require(j.is_object(), "rule file must be a JSON object");
  for (const char* key : {"group", "alphabet_size", "memory_set", "table"})
    detail::require(j.contains(key), std::string("rule file is missing \"") + key + "\"");
  RuleFile r;
  try {
    r.group = j["group"].get<std::string>();
    r.alphabet_size = j["alphabet_size"].get<std::size_t>();
    r.rule.memory_set = j["memory_set"].get<std::vector<Element>>();
  } catch (const nlohmann::json::exception& e) {
    detail::fail(ErrorKind::validation, std::string("malformed rule file: ") + e.what());
  }
  detail::require(r.alphabet_size >= 1, "alphabet_size must be at least 1");
  const std::uint64_t patterns = detail::checked_pow(r.alphabet_size, r.rule.memory_set.size(), std::uint64_t{1} << 24);
  detail::require(patterns != 0, "local rule has too many patterns");
  const auto& table = j["table"];
  detail::require(table.is_object(), "rule \"table\" must map pattern indices to symbols");
  r.rule.table.assign(patterns, 0);
  std::vector<bool> seen(patterns);
  for (const auto& [key, value] : table.items()) {
    std::size_t pos = 0;
    std::uint64_t idx = 0;
    try {
      idx = std::stoull(key, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    detail::require(pos == key.size() && !key.empty(), "pattern index '" + key + "' is not a number");
    detail::require(idx < patterns, "pattern index " + key + " out of range");
    detail::require(value.is_number_unsigned(), "symbol for pattern " + key + " must be a nonnegative integer");
    r.rule.table[idx] = value.get<Symbol>();
    seen[idx] = true;
  }
  for (std::uint64_t i = 0; i < patterns; ++i)
    detail::require(seen[i], "local rule table is partial: pattern " + std::to_string(i) + " missing");
  return r;
}

inline nlohmann::json rule_to_json(const std::string& group, std::size_t q, const LocalRule& rule) {
  nlohmann::json table = nlohmann::json::object();
  for (std::size_t i = 0; i < rule.table.size(); ++i) table[std::to_string(i)] = rule.table[i];
  return {{"group", group}, {"alphabet_size", q}, {"memory_set", rule.memory_set}, {"table", table}};
}

inline nlohmann::json to_json(const Configuration& x) { return nlohmann::json(x); }

/// Parses "a0,a1,..." (constant term first).
inline std::vector<std::uint32_t> parse_coefficients(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const bool digits = !item.empty() && item.size() <= 9 &&
                        std::all_of(item.begin(), item.end(), [](unsigned char ch) { return std::isdigit(ch); });
    detail::require(digits, "malformed coefficient '" + item + "'");
    const unsigned long v = std::stoul(item);
    out.push_back(static_cast<std::uint32_t>(v));
  }
  detail::require(!out.empty(), "empty coefficient list");
  return out;
}

inline std::string format_coefficients(const std::vector<std::uint32_t>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s;
}

}  // namespace vnr
