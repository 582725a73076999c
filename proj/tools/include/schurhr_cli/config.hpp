#pragma once

#include "schurhr/io.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace schurhr::cli {

// One summand of a configured class: (coeff + t_coeff * t) * term, where
// term is a Chern class, a (derived) Schur class or a monomial.
struct OmegaTerm {
  Rational coeff = 0;
  Rational t_coeff = 0;
  enum class Kind { chern, schur, monomial } kind = Kind::monomial;
  std::string bundle;
  int p = 0;
  Partition lambda;
  int order = 0;
  Exponents exponents;
};

struct RunConfig {
  std::optional<Space> space;
  std::map<std::string, SplitBundle> bundles;
  std::map<std::string, Partition> partitions;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> workers;
  std::optional<std::string> output_path;
  std::optional<std::string> format;
  std::vector<OmegaTerm> omega;
  std::optional<Rational> t;
  std::optional<std::vector<Rational>> h;
};

// Throws ConfigError; JSON syntax errors carry line and column.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const Json& j);

// Assembles sum (coeff + t_coeff t) term on the configured space.
CohClass assemble_omega(const RunConfig& config, const Rational& t);

// Inline flag values: "1,1,0" and "1/2,3". A partition argument may also
// name an entry of config.partitions.
Partition parse_partition_arg(const std::string& text, const RunConfig& config, const std::string& what);
std::vector<Rational> parse_rationals_arg(const std::string& text, const std::string& what);
std::vector<int> parse_ints_arg(const std::string& text, const std::string& what);
Rational parse_rational_arg(const std::string& text, const std::string& what);

// Bundle by config name, or inline as "1,0;1,0;0,1" on the configured space.
SplitBundle resolve_bundle(const std::string& text, const RunConfig& config, const std::string& what);

} // namespace schurhr::cli
