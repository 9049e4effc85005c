#include "selfrep/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace selfrep {

std::string_view to_string(Problem p) {
  switch (p) {
    case Problem::primes: return "primes";
    case Problem::onemax: return "onemax";
    case Problem::sequence: return "sequence";
  }
  return "unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(const std::string& key, std::string_view value, std::string_view why) {
  throw ConfigError(key, fmt::format("{}: invalid value '{}' ({})", key, value, why));
}

template <typename Int>
Int parse_int(const std::string& key, std::string_view value, Int min_value) {
  Int out{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec == std::errc::result_out_of_range) bad_value(key, value, "out of range");
  if (ec != std::errc() || ptr != end) bad_value(key, value, "expected an integer");
  if (out < min_value) bad_value(key, value, fmt::format("out of range, must be >= {}", min_value));
  return out;
}

double parse_probability(const std::string& key, std::string_view value) {
  double out = 0.0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) bad_value(key, value, "expected a number");
  if (!(out >= 0.0 && out <= 1.0)) bad_value(key, value, "out of range, must lie in [0, 1]");
  return out;
}

bool parse_bool(const std::string& key, std::string_view value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  bad_value(key, value, "expected true or false");
}

// Comma-separated ids and inclusive ranges, e.g. "0,1" or "1..100".
std::vector<Element> parse_elements(const std::string& key, std::string_view value) {
  std::vector<Element> out;
  while (!value.empty()) {
    const auto comma = value.find(',');
    const std::string_view item = trim(value.substr(0, comma));
    value = comma == std::string_view::npos ? std::string_view{} : value.substr(comma + 1);
    if (item.empty()) bad_value(key, item, "empty list item");
    if (const auto dots = item.find(".."); dots != std::string_view::npos) {
      const auto lo = parse_int<Element>(key, trim(item.substr(0, dots)), 0);
      const auto hi = parse_int<Element>(key, trim(item.substr(dots + 2)), 0);
      if (hi < lo) bad_value(key, item, "empty range");
      for (std::uint64_t e = lo; e <= hi; ++e) out.push_back(static_cast<Element>(e));
    } else {
      out.push_back(parse_int<Element>(key, item, 0));
    }
  }
  if (out.empty()) bad_value(key, "", "empty list");
  return out;
}

std::string format_elements(const std::vector<Element>& elements) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < elements.size();) {
    std::size_t j = i;
    while (j + 1 < elements.size() && elements[j + 1] == elements[j] + 1) ++j;
    if (j - i >= 2) {
      parts.push_back(fmt::format("{}..{}", elements[i], elements[j]));
    } else {
      for (std::size_t k = i; k <= j; ++k) parts.push_back(fmt::format("{}", elements[k]));
    }
    i = j + 1;
  }
  return fmt::format("{}", fmt::join(parts, ","));
}

const std::set<std::string, std::less<>>& known_keys() {
  static const std::set<std::string, std::less<>> keys = {
      "problem", "primes.N", "onemax.target_len", "sequence.values", "elements",
      "g_max", "lifetime", "p_m", "n_a", "seed", "engine", "population_cap",
      "reseed_on_extinction", "stop_at_target", "target_complexity", "max_genome_length",
      "extinction.policy", "extinction.threshold", "extinction.keep_top_k", "extinction.levels",
      "runs", "seed_base", "output_dir", "emit_chart"};
  return keys;
}

}  // namespace

SimConfig parse_config(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("", fmt::format("line {}: expected 'key = value'", line_no));
    }
    std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!known_keys().contains(key)) throw ConfigError(key, fmt::format("unknown key '{}'", key));
    if (value.empty()) throw ConfigError(key, fmt::format("{}: missing value", key));
    if (!kv.emplace(key, value).second) {
      throw ConfigError(key, fmt::format("line {}: duplicate key '{}'", line_no, key));
    }
  }

  SimConfig c;
  SimParams& p = c.params;
  auto get = [&](std::string_view key) -> std::optional<std::string> {
    if (auto it = kv.find(key); it != kv.end()) return it->second;
    return std::nullopt;
  };

  if (auto v = get("problem")) {
    if (*v == "primes") c.problem = Problem::primes;
    else if (*v == "onemax") c.problem = Problem::onemax;
    else if (*v == "sequence") c.problem = Problem::sequence;
    else bad_value("problem", *v, "expected primes, onemax or sequence");
  }
  if (auto v = get("primes.N")) c.primes_limit = parse_int<std::uint32_t>("primes.N", *v, 2);
  if (auto v = get("onemax.target_len")) {
    c.onemax_target_len = parse_int<std::size_t>("onemax.target_len", *v, 1);
  }
  if (auto v = get("sequence.values")) c.sequence_values = parse_elements("sequence.values", *v);
  if (c.problem == Problem::sequence && c.sequence_values.empty()) {
    throw ConfigError("sequence.values", "sequence.values: required when problem = sequence");
  }

  if (auto v = get("elements")) {
    p.element_set = parse_elements("elements", *v);
  } else if (c.problem == Problem::primes) {
    p.element_set = element_range(1, c.primes_limit);
  } else if (c.problem == Problem::onemax) {
    p.element_set = {0, 1};
  } else {
    std::set<Element> distinct(c.sequence_values.begin(), c.sequence_values.end());
    p.element_set.assign(distinct.begin(), distinct.end());
  }

  if (auto v = get("g_max")) p.g_max = parse_int<std::size_t>("g_max", *v, 1);
  if (auto v = get("lifetime")) p.lifetime_L = parse_int<int>("lifetime", *v, 1);
  if (auto v = get("p_m")) p.p_m = parse_probability("p_m", *v);
  if (auto v = get("n_a")) p.n_a = parse_int<Count>("n_a", *v, 1);
  if (auto v = get("seed")) p.seed = parse_int<std::uint64_t>("seed", *v, 0);
  if (auto v = get("engine")) {
    if (*v == "cohort") p.engine_mode = EngineMode::cohort;
    else if (*v == "naive") p.engine_mode = EngineMode::naive;
    else bad_value("engine", *v, "expected cohort or naive");
  }
  if (auto v = get("population_cap")) p.population_cap = parse_int<Count>("population_cap", *v, 1);
  if (auto v = get("reseed_on_extinction")) {
    p.reseed_on_extinction = parse_bool("reseed_on_extinction", *v);
  }
  // A OneMax target length is a stopping condition unless told otherwise.
  p.stop_at_target = c.problem == Problem::onemax && c.onemax_target_len.has_value();
  if (auto v = get("stop_at_target")) p.stop_at_target = parse_bool("stop_at_target", *v);
  if (auto v = get("target_complexity")) {
    p.target_complexity = parse_int<std::size_t>("target_complexity", *v, 1);
  }
  if (auto v = get("max_genome_length")) {
    p.max_genome_length = parse_int<std::size_t>("max_genome_length", *v, 1);
  }
  if (auto v = get("extinction.policy")) {
    if (*v == "none") p.extinction.kind = ExtinctionKind::none;
    else if (*v == "low_complexity_purge") p.extinction.kind = ExtinctionKind::low_complexity_purge;
    else bad_value("extinction.policy", *v, "expected none or low_complexity_purge");
  }
  if (auto v = get("extinction.threshold")) {
    p.extinction.trigger_threshold = parse_int<Count>("extinction.threshold", *v, 1);
  }
  if (auto v = get("extinction.keep_top_k")) {
    p.extinction.keep_top_k = parse_int<std::size_t>("extinction.keep_top_k", *v, 1);
  }
  if (auto v = get("extinction.levels")) {
    if (*v == "viable") p.extinction.levels = PurgeLevels::viable_agents;
    else if (*v == "all") p.extinction.levels = PurgeLevels::all_agents;
    else bad_value("extinction.levels", *v, "expected viable or all");
  }
  if (auto v = get("runs")) c.runs = parse_int<std::size_t>("runs", *v, 1);
  if (auto v = get("seed_base")) c.seed_base = parse_int<std::uint64_t>("seed_base", *v, 0);
  if (auto v = get("output_dir")) c.output_dir = *v;
  if (auto v = get("emit_chart")) c.emit_chart = parse_bool("emit_chart", *v);

  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    std::string what = e.what();
    std::string key = what.substr(0, what.find(':'));
    if (key == "element_set") key = "elements";
    throw ConfigError(key, what);
  }
  return c;
}

SimConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", fmt::format("cannot open config file '{}'", path));
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string emit_config(const SimConfig& c) {
  const SimParams& p = c.params;
  std::string out;
  auto line = [&out](std::string_view key, const auto& value) {
    out += fmt::format("{} = {}\n", key, value);
  };
  line("problem", to_string(c.problem));
  line("primes.N", c.primes_limit);
  if (c.onemax_target_len) line("onemax.target_len", *c.onemax_target_len);
  if (!c.sequence_values.empty()) line("sequence.values", format_elements(c.sequence_values));
  line("elements", format_elements(p.element_set));
  line("g_max", p.g_max);
  line("lifetime", p.lifetime_L);
  line("p_m", p.p_m);
  line("n_a", p.n_a);
  line("seed", p.seed);
  line("engine", to_string(p.engine_mode));
  line("population_cap", p.population_cap);
  line("reseed_on_extinction", p.reseed_on_extinction);
  line("stop_at_target", p.stop_at_target);
  if (p.target_complexity) line("target_complexity", *p.target_complexity);
  line("max_genome_length", p.max_genome_length);
  line("extinction.policy", p.extinction.kind == ExtinctionKind::none ? "none" : "low_complexity_purge");
  line("extinction.threshold", p.extinction.trigger_threshold);
  line("extinction.keep_top_k", p.extinction.keep_top_k);
  line("extinction.levels", p.extinction.levels == PurgeLevels::viable_agents ? "viable" : "all");
  line("runs", c.runs);
  line("seed_base", c.seed_base);
  line("output_dir", c.output_dir);
  line("emit_chart", c.emit_chart);
  return out;
}

ReplicationRule make_rule(const SimConfig& config) {
  switch (config.problem) {
    case Problem::primes: return make_primes_rule(config.primes_limit);
    case Problem::onemax: return make_onemax_rule(config.onemax_target_len);
    case Problem::sequence: return make_sequence_prefix_rule(config.sequence_values);
  }
  throw std::logic_error("unhandled problem");
}

}  // namespace selfrep
