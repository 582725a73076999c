#include "schurhr/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schurhr {

namespace {

void validate(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

std::size_t trimmed_size(const std::vector<int>& parts) {
  std::size_t n = parts.size();
  while (n > 0 && parts[n - 1] == 0) --n;
  return n;
}

// Row-major backtracking over the cells of the Young diagram.
class TableauCounter {
public:
  TableauCounter(const Partition& shape, std::span<const int> weight)
      : rows_(shape.trimmed().parts()), remaining_(weight.begin(), weight.end()) {
    for (int len : rows_) filling_.emplace_back(static_cast<std::size_t>(len), 0);
  }

  std::uint64_t count() { return rows_.empty() ? 1 : place(0, 0); }

private:
  std::uint64_t place(std::size_t r, std::size_t c) {
    if (c == static_cast<std::size_t>(rows_[r])) {
      if (r + 1 == rows_.size()) return 1;
      return place(r + 1, 0);
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, filling_[r][c - 1]);
    if (r > 0) lo = std::max(lo, filling_[r - 1][c] + 1);

    std::uint64_t total = 0;
    for (int v = lo; v <= static_cast<int>(remaining_.size()); ++v) {
      if (remaining_[v - 1] == 0) continue;
      --remaining_[v - 1];
      filling_[r][c] = v;
      total += place(r, c + 1);
      ++remaining_[v - 1];
    }
    filling_[r][c] = 0;
    return total;
  }

  std::vector<int> rows_;
  std::vector<int> remaining_;
  std::vector<std::vector<int>> filling_;
};

void partitions_rec(int n, int max_part, int parts_left, std::vector<int>& current, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(current);
    return;
  }
  if (parts_left == 0) return;
  for (int p = std::min(n, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(n - p, p, parts_left - 1, current, out);
    current.pop_back();
  }
}

} // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { validate(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(parts_); }

std::size_t Partition::length() const { return trimmed_size(parts_); }

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::trimmed() const {
  return Partition(std::vector<int>(parts_.begin(), parts_.begin() + static_cast<long>(length())));
}

Partition Partition::padded(std::size_t n) const {
  if (length() > n) throw std::invalid_argument("partition " + to_string() + " has more than " + std::to_string(n) + " parts");
  std::vector<int> p(parts_.begin(), parts_.begin() + static_cast<long>(length()));
  p.resize(n, 0);
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

bool operator==(const Partition& a, const Partition& b) {
  const auto n = a.length();
  return n == b.length() && std::equal(a.parts_.begin(), a.parts_.begin() + static_cast<long>(n), b.parts_.begin());
}

bool operator<(const Partition& a, const Partition& b) {
  const auto na = static_cast<long>(a.length());
  const auto nb = static_cast<long>(b.length());
  return std::lexicographical_compare(a.parts_.begin(), a.parts_.begin() + na, b.parts_.begin(), b.parts_.begin() + nb);
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string s = text;
  std::erase_if(s, [](char c) { return c == '(' || c == ')' || c == '[' || c == ']' || c == ' '; });
  if (s.empty()) return Partition{};
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed partition: '" + text + "'");
    }
    if (used != item.size()) throw std::invalid_argument("malformed partition: '" + text + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(static_cast<std::size_t>(lambda.largest()), 0);
  for (int row : lambda.parts())
    for (int c = 0; c < row; ++c) ++cols[static_cast<std::size_t>(c)];
  return Partition(std::move(cols));
}

Partition dual_in_box(const Partition& lambda, int e, int n) {
  if (e < 1 || n < 1) throw std::invalid_argument("dual_in_box: box dimensions must be positive");
  if (lambda.largest() > e)
    throw std::invalid_argument("dual_in_box: largest part of " + lambda.to_string() + " exceeds e=" + std::to_string(e));
  if (lambda.length() > static_cast<std::size_t>(n))
    throw std::invalid_argument("dual_in_box: " + lambda.to_string() + " has more than N=" + std::to_string(n) + " parts");
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = e - lambda[static_cast<std::size_t>(n - 1 - i)];
  return Partition(std::move(out));
}

std::uint64_t ssyt_count(const Partition& shape, std::span<const int> weight) {
  long total = 0;
  for (int w : weight) {
    if (w < 0) throw std::invalid_argument("ssyt_count: weight entries must be nonnegative");
    total += w;
  }
  if (total != shape.weight())
    throw std::invalid_argument("ssyt_count: weight sums to " + std::to_string(total) + " but |shape| = " +
                                std::to_string(shape.weight()));
  return TableauCounter(shape, weight).count();
}

std::vector<Partition> partitions_of(int n) { return partitions_in_box(n, n, n); }

std::vector<Partition> partitions_in_box(int n, int max_parts, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> current;
  partitions_rec(n, max_part, max_parts, current, out);
  return out;
}

} // namespace schurhr
