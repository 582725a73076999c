#pragma once

#include "schurhr/bundle.hpp"
#include "schurhr/cohomology.hpp"
#include "schurhr/matrix.hpp"
#include "schurhr/partition.hpp"
#include "schurhr/polynomial.hpp"
#include "schurhr/quadform.hpp"
#include "schurhr/sequences.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace schurhr {

using Json = nlohmann::ordered_json;

// Raised on malformed input; `path` locates the offending field, e.g.
// "bundles.E.lines[2]".
class ConfigError : public std::runtime_error {
public:
  ConfigError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

Json to_json(const Rational& q);
Json to_json(const Partition& lambda);
// [{"exponents": [...], "coeff": "num/den"}, ...] in grlex order.
Json to_json(const Polynomial& p);
Json to_json(const Space& space);
// {"space": {...}, "terms": [{"exponents": [...], "coeff": ...}]}
Json to_json(const CohClass& u);
Json to_json(const SplitBundle& bundle);
Json to_json(const Matrix& m);
Json to_json(const Inertia& s);
Json to_json(const Sequence& s);
Json to_json(const std::vector<Rational>& v);

// Accepts "a/b" strings or JSON integers.
Rational rational_from_json(const Json& j, const std::string& path);
std::vector<Rational> rationals_from_json(const Json& j, const std::string& path);
Partition partition_from_json(const Json& j, const std::string& path);
Polynomial polynomial_from_json(const Json& j, std::size_t nvars, const std::string& path);
Space space_from_json(const Json& j, const std::string& path);
CohClass class_from_json(const Json& j, const Space& space, const std::string& path);
// {"lines": [[..], ..], "twist": ["0", ..]} on the given space.
SplitBundle bundle_from_json(const Json& j, const Space& space, const std::string& path);
Matrix matrix_from_json(const Json& j, const std::string& path);

} // namespace schurhr
