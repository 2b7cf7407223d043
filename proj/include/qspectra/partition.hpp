#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qspectra {

/// Weakly decreasing list of positive integers. Trailing zeros are dropped on
/// construction, so equal partitions compare equal.
class Partition {
 public:
  Partition() = default;
  // Throws InvalidPartition on negative or increasing parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // (a,b,c), [a,b,c], () and [] with optional whitespace.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // 0-based part with implicit zeros beyond the length.
  int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  Partition conjugate() const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// mu_i <= nu_i for all i.
bool contains(const Partition& mu, const Partition& nu);

/// Part m+1 (1-based) of lambda is at most n.
bool in_hook(const Partition& lambda, int m, int n);

/// The (m+1) x (n+1) rectangle ((n+1)^(m+1)).
Partition lambda_mn(int m, int n);

/// ([m|n]^k, [m|n]_r) = (((n+1)^k, n^(m-k)), (n^m, r)).
/// Throws IndexOutOfRange unless 0 <= k <= m and 0 <= r <= n.
std::pair<Partition, Partition> ch_partitions(int m, int n, int k, int r);

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}, counted as the number of
/// semistandard fillings of nu/lambda with content mu whose reverse reading
/// word is a lattice word.
std::uint64_t lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

/// All partitions of k, in reverse lexicographic order.
std::vector<Partition> partitions_of(int k);

}  // namespace qspectra
