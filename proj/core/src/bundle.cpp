#include "schurhr/bundle.hpp"

#include "schurhr/schur.hpp"

#include <stdexcept>
#include <string>

namespace schurhr {

SplitBundle::SplitBundle(Space space, std::vector<std::vector<int>> lines, std::vector<Rational> twist)
    : space_(std::move(space)), lines_(std::move(lines)), twist_(std::move(twist)) {
  const std::size_t k = space_.factor_count();
  if (lines_.empty()) throw std::invalid_argument("a split bundle needs at least one line bundle");
  for (std::size_t i = 0; i < lines_.size(); ++i)
    if (lines_[i].size() != k)
      throw std::invalid_argument("line " + std::to_string(i) + " has " + std::to_string(lines_[i].size()) +
                                  " degrees, the space has " + std::to_string(k) + " factors");
  if (twist_.empty()) twist_.assign(k, Rational(0));
  if (twist_.size() != k)
    throw std::invalid_argument("twist has " + std::to_string(twist_.size()) + " coordinates, the space has " +
                                std::to_string(k) + " factors");
}

std::vector<Rational> SplitBundle::root_coefficients(std::size_t i) const {
  std::vector<Rational> r(twist_);
  for (std::size_t j = 0; j < r.size(); ++j) r[j] += lines_.at(i)[j];
  return r;
}

std::vector<CohClass> SplitBundle::roots() const {
  std::vector<CohClass> out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(CohClass::linear(space_, root_coefficients(i)));
  return out;
}

std::vector<CohClass> SplitBundle::line_roots() const {
  std::vector<CohClass> out;
  for (const auto& l : lines_) {
    std::vector<Rational> c(l.begin(), l.end());
    out.push_back(CohClass::linear(space_, c));
  }
  return out;
}

CohClass SplitBundle::twist_class() const { return CohClass::linear(space_, twist_); }

SplitBundle SplitBundle::twisted(const std::vector<Rational>& extra) const {
  if (extra.size() != twist_.size()) throw std::invalid_argument("twisted: coordinate count mismatch");
  std::vector<Rational> t(twist_);
  for (std::size_t j = 0; j < t.size(); ++j) t[j] += extra[j];
  return SplitBundle(space_, lines_, std::move(t));
}

SplitBundle direct_sum(const SplitBundle& a, const SplitBundle& b) {
  if (!(a.space() == b.space())) throw std::invalid_argument("direct_sum: bundles live on different spaces");
  if (a.twist() != b.twist()) throw std::invalid_argument("direct_sum: twists differ");
  auto lines = a.lines();
  lines.insert(lines.end(), b.lines().begin(), b.lines().end());
  return SplitBundle(a.space(), std::move(lines), a.twist());
}

namespace {

CohClass product_of_one_plus(const Space& space, const std::vector<CohClass>& roots) {
  CohClass c = CohClass::unit(space);
  for (const auto& r : roots) c = c * (CohClass::unit(space) + r);
  return c;
}

CohClass chern_by_roots(const SplitBundle& bundle, int p) {
  if (p < 0 || p > static_cast<int>(bundle.rank())) return CohClass(bundle.space());
  return total_chern(bundle).homogeneous_part(p);
}

} // namespace

CohClass total_chern(const SplitBundle& bundle) { return product_of_one_plus(bundle.space(), bundle.roots()); }

CohClass chern_by_twist_rule(const SplitBundle& bundle, int p) {
  const long e = static_cast<long>(bundle.rank());
  if (p < 0 || p > e) return CohClass(bundle.space());
  const CohClass untwisted = product_of_one_plus(bundle.space(), bundle.line_roots());
  const CohClass delta = bundle.twist_class();
  CohClass out(bundle.space());
  for (int k = 0; k <= p; ++k) {
    const Rational b(binomial(e - k, p - k));
    out += b * (untwisted.homogeneous_part(k) * delta.pow(static_cast<unsigned>(p - k)));
  }
  return out;
}

CohClass chern(const SplitBundle& bundle, int p) {
  CohClass c = chern_by_roots(bundle, p);
#ifdef SCHURHR_CROSSCHECK
  if (!(c == chern_by_twist_rule(bundle, p)))
    throw std::logic_error("chern: root expansion disagrees with the twist rule at p = " + std::to_string(p));
#endif
  return c;
}

CohClass char_class(const Polynomial& p, const SplitBundle& bundle) {
  if (p.nvars() != bundle.rank())
    throw std::invalid_argument("char_class: polynomial has " + std::to_string(p.nvars()) + " variables, bundle rank is " +
                                std::to_string(bundle.rank()));
  if (!is_symmetric(p)) throw std::invalid_argument("char_class: polynomial is not symmetric");
  const auto roots = bundle.roots();
  return evaluate_at_classes(p, roots, bundle.space());
}

CohClass schur_class(const Partition& lambda, const SplitBundle& bundle) {
  // Evaluate the determinant in Chern classes; cheaper than expanding in roots.
  const std::size_t e = bundle.rank();
  if (static_cast<std::size_t>(lambda.largest()) > e) return CohClass(bundle.space());
  const Polynomial in_c = schur_elementary_form(lambda, e);
  std::vector<CohClass> chern_classes;
  for (std::size_t k = 1; k <= e; ++k) chern_classes.push_back(chern(bundle, static_cast<int>(k)));
  return evaluate_at_classes(in_c, chern_classes, bundle.space());
}

CohClass derived_schur_class(const Partition& lambda, int i, const SplitBundle& bundle) {
  return char_class(derived_schur(lambda, i, bundle.rank()), bundle);
}

bool is_nef(const SplitBundle& bundle) {
  for (std::size_t i = 0; i < bundle.rank(); ++i)
    for (const auto& c : bundle.root_coefficients(i))
      if (c < 0) return false;
  return true;
}

bool is_nef_class(const CohClass& h) {
  if (h.is_zero()) return true;
  if (h.degree() != 1 || !h.is_homogeneous()) return false;
  for (const auto& c : h.linear_coefficients())
    if (c < 0) return false;
  return true;
}

} // namespace schurhr
