#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace schurhr {

// A weakly decreasing sequence of nonnegative integers.
//
// The parts are stored as given (possibly zero padded); equality and
// ordering ignore trailing zeros, so (2,1) == (2,1,0).
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }

  // Number of stored parts, zeros included.
  std::size_t size() const { return parts_.size(); }
  // Number of nonzero parts.
  std::size_t length() const;
  int weight() const;
  bool empty() const { return weight() == 0; }

  // lambda_i for 0-based i; zero past the stored parts.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int largest() const { return (*this)[0]; }

  Partition trimmed() const;
  // Zero pads to exactly n parts. Throws if there are more than n nonzero parts.
  Partition padded(std::size_t n) const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b);
  friend bool operator<(const Partition& a, const Partition& b);

private:
  std::vector<int> parts_;
};

Partition parse_partition(const std::string& text);

Partition conjugate(const Partition& lambda);

// Complement of lambda inside the N x e box, read backwards:
// result_i = e - lambda_{N+1-i} (1-based). Throws std::invalid_argument when
// lambda does not fit the box.
Partition dual_in_box(const Partition& lambda, int e, int n);

// Number of semistandard Young tableaux of the given shape and content,
// by exhaustive enumeration. Throws if the weight sum differs from |shape|
// or a weight entry is negative.
std::uint64_t ssyt_count(const Partition& shape, std::span<const int> weight);

// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
// Partitions of n with at most max_parts parts, each at most max_part.
std::vector<Partition> partitions_in_box(int n, int max_parts, int max_part);

} // namespace schurhr
