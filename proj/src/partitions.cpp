#include "coxvar/partitions.hpp"

#include <numeric>
#include <stdexcept>

namespace coxvar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::operator<(const Partition& o) const {
  // canonical order = decreasing lexicographic
  return o.parts_ < parts_;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ')';
  return s;
}

namespace {

void emit_partitions(int q, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
  if (q == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int first = std::min(q, max_part); first >= 1; --first) {
    prefix.push_back(first);
    emit_partitions(q - first, first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int q, int max_part) {
  if (q < 0) throw std::invalid_argument("partitions_of: q must be >= 0");
  if (max_part < 1) throw std::invalid_argument("partitions_of: max_part must be >= 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  emit_partitions(q, max_part, prefix, out);
  return out;
}

std::uint64_t partition_count(int q) {
  if (q < 0) throw std::invalid_argument("partition_count: q must be >= 0");
  // coefficient of x^q in prod_k 1/(1-x^k)
  std::vector<std::uint64_t> p(static_cast<std::size_t>(q) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= q; ++k)
    for (int s = k; s <= q; ++s)
      if (__builtin_add_overflow(p[s], p[s - k], &p[s]))
        throw std::overflow_error("partition_count: 64-bit overflow");
  return p[q];
}

std::vector<Partition> basis_for_degree(int d, int n) {
  if (n < 1) throw std::invalid_argument("basis_for_degree: n must be >= 1");
  if (d < 2 || d % 2 != 0)
    throw std::invalid_argument("basis_for_degree: degree must be even and >= 2");
  return partitions_of(d / 2, n);
}

std::string sigma_monomial(const Partition& p) {
  if (p.empty()) return "1";
  std::string s;
  const auto& parts = p.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!s.empty()) s += '*';
    s += "s" + std::to_string(parts[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

}  // namespace coxvar
