#include "schurhr_cli/config.hpp"

#include "schurhr/bundle.hpp"

#include <fstream>
#include <sstream>

namespace schurhr::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, sep)) out.push_back(piece);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

int get_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ConfigError(path, "expected an integer");
  return j.get<int>();
}

OmegaTerm term_from_json(const Json& j, const RunConfig& config, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  OmegaTerm term;
  term.coeff = j.contains("coeff") ? rational_from_json(j["coeff"], path + ".coeff") : Rational(0);
  term.t_coeff = j.contains("t_coeff") ? rational_from_json(j["t_coeff"], path + ".t_coeff") : Rational(0);
  if (!j.contains("coeff") && !j.contains("t_coeff")) term.coeff = 1;

  auto bundle_name = [&](const Json& body, const std::string& here) {
    if (!body.contains("bundle") || !body["bundle"].is_string()) throw ConfigError(here + ".bundle", "expected a bundle name");
    std::string name = body["bundle"].get<std::string>();
    if (!config.bundles.contains(name)) throw ConfigError(here + ".bundle", "unknown bundle \"" + name + "\"");
    return name;
  };

  if (j.contains("chern")) {
    const std::string here = path + ".chern";
    term.kind = OmegaTerm::Kind::chern;
    term.bundle = bundle_name(j["chern"], here);
    if (!j["chern"].contains("p")) throw ConfigError(here, "missing field \"p\"");
    term.p = get_int(j["chern"]["p"], here + ".p");
  } else if (j.contains("schur")) {
    const std::string here = path + ".schur";
    const Json& body = j["schur"];
    term.kind = OmegaTerm::Kind::schur;
    term.bundle = bundle_name(body, here);
    if (!body.contains("lambda")) throw ConfigError(here, "missing field \"lambda\"");
    if (body["lambda"].is_string() && config.partitions.contains(body["lambda"].get<std::string>()))
      term.lambda = config.partitions.at(body["lambda"].get<std::string>());
    else
      term.lambda = partition_from_json(body["lambda"], here + ".lambda");
    term.order = body.contains("order") ? get_int(body["order"], here + ".order") : 0;
  } else if (j.contains("monomial")) {
    const std::string here = path + ".monomial";
    term.kind = OmegaTerm::Kind::monomial;
    if (!j["monomial"].is_array()) throw ConfigError(here, "expected an array of exponents");
    for (std::size_t k = 0; k < j["monomial"].size(); ++k)
      term.exponents.push_back(get_int(j["monomial"][k], here + "[" + std::to_string(k) + "]"));
    if (term.exponents.size() != config.space->factor_count())
      throw ConfigError(here, "expected " + std::to_string(config.space->factor_count()) + " exponents");
  } else {
    throw ConfigError(path, "expected one of \"chern\", \"schur\", \"monomial\"");
  }
  return term;
}

} // namespace

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open config file");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& err) {
    // The message names the line and column.
    throw ConfigError(path, err.what());
  }
  return parse_config(j);
}

RunConfig parse_config(const Json& j) {
  if (!j.is_object()) throw ConfigError("$", "config must be a JSON object");
  RunConfig config;
  if (j.contains("space")) {
    const Json& s = j["space"];
    config.space = space_from_json(s.is_array() ? Json{{"factors", s}} : s, "space");
  }
  if (j.contains("bundles")) {
    if (!j["bundles"].is_object()) throw ConfigError("bundles", "expected an object of named bundles");
    if (!config.space) throw ConfigError("bundles", "bundles need a \"space\"");
    for (const auto& [name, b] : j["bundles"].items())
      config.bundles.emplace(name, bundle_from_json(b, *config.space, "bundles." + name));
  }
  if (j.contains("partitions")) {
    if (!j["partitions"].is_object()) throw ConfigError("partitions", "expected an object of named partitions");
    for (const auto& [name, p] : j["partitions"].items())
      config.partitions.emplace(name, partition_from_json(p, "partitions." + name));
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw ConfigError("seed", "expected a nonnegative integer");
    config.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("workers")) {
    if (!j["workers"].is_number_unsigned() || j["workers"].get<unsigned>() == 0)
      throw ConfigError("workers", "expected a positive integer");
    config.workers = j["workers"].get<unsigned>();
  }
  if (j.contains("output")) {
    const Json& o = j["output"];
    if (!o.is_object()) throw ConfigError("output", "expected {\"path\", \"format\"}");
    if (o.contains("path")) {
      if (!o["path"].is_string()) throw ConfigError("output.path", "expected a string");
      config.output_path = o["path"].get<std::string>();
    }
    if (o.contains("format")) {
      if (!o["format"].is_string()) throw ConfigError("output.format", "expected \"json\" or \"csv\"");
      const auto f = o["format"].get<std::string>();
      if (f != "json" && f != "csv") throw ConfigError("output.format", "expected \"json\" or \"csv\", got \"" + f + "\"");
      config.format = f;
    }
  }
  if (j.contains("t")) config.t = rational_from_json(j["t"], "t");
  if (j.contains("h")) {
    if (!config.space) throw ConfigError("h", "h needs a \"space\"");
    auto h = rationals_from_json(j["h"], "h");
    if (h.size() != config.space->factor_count())
      throw ConfigError("h", "expected " + std::to_string(config.space->factor_count()) + " coordinates");
    config.h = std::move(h);
  }
  if (j.contains("omega")) {
    if (!config.space) throw ConfigError("omega", "omega needs a \"space\"");
    if (!j["omega"].is_array()) throw ConfigError("omega", "expected an array of terms");
    for (std::size_t i = 0; i < j["omega"].size(); ++i)
      config.omega.push_back(term_from_json(j["omega"][i], config, "omega[" + std::to_string(i) + "]"));
  }
  return config;
}

CohClass assemble_omega(const RunConfig& config, const Rational& t) {
  if (!config.space) throw ConfigError("space", "missing");
  CohClass omega(*config.space);
  for (const auto& term : config.omega) {
    const Rational c = term.coeff + term.t_coeff * t;
    if (c == 0) continue;
    switch (term.kind) {
    case OmegaTerm::Kind::chern:
      omega += c * chern(config.bundles.at(term.bundle), term.p);
      break;
    case OmegaTerm::Kind::schur:
      omega += c * derived_schur_class(term.lambda, term.order, config.bundles.at(term.bundle));
      break;
    case OmegaTerm::Kind::monomial:
      omega += CohClass::monomial(*config.space, term.exponents, c);
      break;
    }
  }
  return omega;
}

Partition parse_partition_arg(const std::string& text, const RunConfig& config, const std::string& what) {
  if (auto it = config.partitions.find(text); it != config.partitions.end()) return it->second;
  try {
    return parse_partition(text);
  } catch (const std::invalid_argument& err) {
    throw ConfigError(what, err.what());
  }
}

std::vector<Rational> parse_rationals_arg(const std::string& text, const std::string& what) {
  std::vector<Rational> out;
  if (trim(text).empty()) return out;
  for (const auto& piece : split(text, ',')) out.push_back(parse_rational_arg(trim(piece), what));
  return out;
}

Rational parse_rational_arg(const std::string& text, const std::string& what) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& err) {
    throw ConfigError(what, err.what());
  }
}

std::vector<int> parse_ints_arg(const std::string& text, const std::string& what) {
  std::vector<int> out;
  if (trim(text).empty()) return out;
  for (const auto& piece : split(text, ',')) {
    const std::string p = trim(piece);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(p, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (p.empty() || used != p.size()) throw ConfigError(what, "expected an integer, got \"" + p + "\"");
    out.push_back(v);
  }
  return out;
}

SplitBundle resolve_bundle(const std::string& text, const RunConfig& config, const std::string& what) {
  if (auto it = config.bundles.find(text); it != config.bundles.end()) return it->second;
  if (!config.space) throw ConfigError(what, "unknown bundle \"" + text + "\" and no space to read it inline");
  std::vector<std::vector<int>> lines;
  for (const auto& line : split(text, ';')) {
    auto degrees = parse_ints_arg(line, what);
    if (degrees.size() != config.space->factor_count())
      throw ConfigError(what, "each line needs " + std::to_string(config.space->factor_count()) + " degrees");
    lines.push_back(std::move(degrees));
  }
  if (lines.empty()) throw ConfigError(what, "empty bundle");
  return SplitBundle(*config.space, std::move(lines));
}

} // namespace schurhr::cli
