#pragma once

#include <functional>
#include <string>
#include <vector>

namespace booklab {

/// Non-increasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws invalid-parameter unless parts are positive and non-increasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int total() const noexcept { return total_; }
  int operator[](int i) const { return parts_[i]; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// "(3,1)"
std::string to_string(const Partition& p);
/// Accepts "3,1" or "(3,1)"; parts are sorted into non-increasing order.
Partition parse_partition(const std::string& text);

/// Every partition of r in reverse-lexicographic order, starting at (r).
void for_each_partition(int r, const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_partitions(int r);

/// Reachable subset sums of p as a 0/1 table indexed 0..total.
std::vector<bool> subset_sums(const Partition& p);

/// True iff no subset of parts sums to s. Requires 1 <= s < total.
bool is_s_sum_free(const Partition& p, int s);
/// A subset of part indices summing to s, or empty if p is s-sum-free.
std::vector<int> offending_subset(const Partition& p, int s);

struct BetaResult {
  int value = 0;
  Partition witness;
};

/// Maximum length of an s-sum-free partition of r, with the first such
/// partition in reverse-lexicographic order. Requires 1 <= s < r.
BetaResult beta(int r, int s);

}  // namespace booklab
