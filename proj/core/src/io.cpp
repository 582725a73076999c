#include "schurhr/io.hpp"

namespace schurhr {

namespace {

Json terms_to_json(const std::map<Exponents, Rational, GrlexGreater>& terms) {
  Json out = Json::array();
  for (const auto& [e, c] : terms) out.push_back({{"exponents", e}, {"coeff", to_string(c)}});
  return out;
}

const Json& require(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ConfigError(path, std::string("missing field \"") + key + "\"");
  return *it;
}

int int_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ConfigError(path, "expected an integer");
  return j.get<int>();
}

std::vector<int> ints_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::pair<Exponents, Rational>> terms_from_json(const Json& j, std::size_t nvars, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected an array of terms");
  std::vector<std::pair<Exponents, Rational>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string here = path + "[" + std::to_string(i) + "]";
    auto e = ints_from_json(require(j[i], "exponents", here), here + ".exponents");
    if (e.size() != nvars)
      throw ConfigError(here + ".exponents", "expected " + std::to_string(nvars) + " exponents, got " +
                                                 std::to_string(e.size()));
    for (int x : e)
      if (x < 0) throw ConfigError(here + ".exponents", "negative exponent");
    out.emplace_back(std::move(e), rational_from_json(require(j[i], "coeff", here), here + ".coeff"));
  }
  return out;
}

} // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Partition& lambda) { return lambda.parts(); }

Json to_json(const Polynomial& p) { return terms_to_json(p.terms()); }

Json to_json(const Space& space) { return {{"factors", space.factors()}}; }

Json to_json(const CohClass& u) { return {{"space", to_json(u.space())}, {"terms", terms_to_json(u.terms())}}; }

Json to_json(const SplitBundle& bundle) {
  return {{"lines", bundle.lines()}, {"twist", to_json(bundle.twist())}};
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const Inertia& s) { return {{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}}; }

Json to_json(const Sequence& s) {
  return {{"label", s.label}, {"start", s.start}, {"values", to_json(s.values)}};
}

Json to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ConfigError(path, "expected a rational as \"num/den\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& err) {
    throw ConfigError(path, err.what());
  }
}

std::vector<Rational> rationals_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected an array of rationals");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Partition partition_from_json(const Json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_partition(j.get<std::string>());
    return Partition(ints_from_json(j, path));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& err) {
    throw ConfigError(path, err.what());
  }
}

Polynomial polynomial_from_json(const Json& j, std::size_t nvars, const std::string& path) {
  Polynomial p(nvars);
  for (const auto& [e, c] : terms_from_json(j, nvars, path)) p.add_term(e, c);
  return p;
}

Space space_from_json(const Json& j, const std::string& path) {
  const auto factors = ints_from_json(require(j, "factors", path), path + ".factors");
  try {
    return Space(factors);
  } catch (const std::invalid_argument& err) {
    throw ConfigError(path + ".factors", err.what());
  }
}

CohClass class_from_json(const Json& j, const Space& space, const std::string& path) {
  const Json& terms = j.is_object() ? require(j, "terms", path) : j;
  const std::string here = j.is_object() ? path + ".terms" : path;
  CohClass u(space);
  for (const auto& [e, c] : terms_from_json(terms, space.factor_count(), here)) u.add_term(e, c);
  return u;
}

SplitBundle bundle_from_json(const Json& j, const Space& space, const std::string& path) {
  const Json& lines_json = require(j, "lines", path);
  if (!lines_json.is_array() || lines_json.empty()) throw ConfigError(path + ".lines", "expected a nonempty array");
  std::vector<std::vector<int>> lines;
  for (std::size_t i = 0; i < lines_json.size(); ++i) {
    const std::string here = path + ".lines[" + std::to_string(i) + "]";
    auto l = ints_from_json(lines_json[i], here);
    if (l.size() != space.factor_count())
      throw ConfigError(here, "expected " + std::to_string(space.factor_count()) + " degrees, got " +
                                  std::to_string(l.size()));
    lines.push_back(std::move(l));
  }
  std::vector<Rational> twist(space.factor_count());
  if (j.contains("twist")) {
    twist = rationals_from_json(j["twist"], path + ".twist");
    if (twist.size() != space.factor_count())
      throw ConfigError(path + ".twist", "expected " + std::to_string(space.factor_count()) + " coordinates");
  }
  return SplitBundle(space, std::move(lines), std::move(twist));
}

Matrix matrix_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw ConfigError(path, "expected a nonempty array of rows");
  const std::size_t cols = j[0].size();
  Matrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string here = path + "[" + std::to_string(i) + "]";
    const auto row = rationals_from_json(j[i], here);
    if (row.size() != cols) throw ConfigError(here, "row length differs from the first row");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = row[c];
  }
  return m;
}

} // namespace schurhr
