#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "selfrep/engine.hpp"
#include "selfrep/rules.hpp"

namespace selfrep {

enum class Problem { primes, onemax, sequence };

std::string_view to_string(Problem p);

/// Everything needed to reproduce an experiment: engine parameters, the
/// problem (which fixes the replication rule and the default element set),
/// and sweep/output settings.
struct SimConfig {
  SimParams params = reference_defaults();
  Problem problem = Problem::primes;
  std::uint32_t primes_limit = 100;
  std::optional<std::size_t> onemax_target_len;
  std::vector<Element> sequence_values;  // problem = sequence only
  std::size_t runs = 1;
  std::uint64_t seed_base = 1;
  std::string output_dir = "out";
  bool emit_chart = false;

  bool operator==(const SimConfig&) const = default;
};

/// Diagnostic for a bad configuration document. key() names the offending
/// key (empty for syntax errors).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Parses flat `key = value` lines ('#' starts a comment). Omitted keys keep
/// the reference-experiment defaults; unknown keys and bad values throw
/// ConfigError.
SimConfig parse_config(std::string_view text);

SimConfig load_config(const std::string& path);

/// Effective configuration as a document that parse_config maps back to an
/// equal SimConfig.
std::string emit_config(const SimConfig& config);

ReplicationRule make_rule(const SimConfig& config);

}  // namespace selfrep
