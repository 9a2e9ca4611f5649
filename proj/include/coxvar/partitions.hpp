#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coxvar {

/**
 * Integer partition with weakly decreasing positive parts.
 * The empty partition (weight 0) is allowed.
 *
 * Canonical order: decreasing lexicographic on the part lists, so
 * (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1) under operator<.
 */
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int max_part() const { return parts_.empty() ? 0 : parts_.front(); }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator<(const Partition& o) const;  // canonical (decreasing lex)

  std::string to_string() const;  // "(2,1,1)"

 private:
  std::vector<int> parts_;
};

// All partitions of q with parts <= max_part, in canonical order.
// q == 0 yields { () }.
std::vector<Partition> partitions_of(int q, int max_part);

// p(q), the number of partitions of q (any part size). Computed by the
// Euler-product expansion; throws std::overflow_error when the count does
// not fit in 64 bits.
std::uint64_t partition_count(int q);

// Sigma-monomial basis in degree d = 2q for n variables: partitions of q
// with parts <= n, canonical order. d must be even and >= 2.
std::vector<Partition> basis_for_degree(int d, int n);

// "s2^2", "s2*s1^2", ... for display; empty partition renders as "1".
std::string sigma_monomial(const Partition& p);

}  // namespace coxvar
