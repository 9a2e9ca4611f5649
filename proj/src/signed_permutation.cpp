#include "coxvar/signed_permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace coxvar {

SignedPermutation::SignedPermutation(std::vector<int> perm, std::vector<int> sign)
    : perm_(std::move(perm)), sign_(std::move(sign)) {
  const int n = static_cast<int>(perm_.size());
  if (sign_.size() != perm_.size())
    throw std::invalid_argument("SignedPermutation: size mismatch");
  std::vector<bool> seen(perm_.size(), false);
  for (int p : perm_) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
      throw std::invalid_argument("SignedPermutation: not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  for (int s : sign_)
    if (s != 1 && s != -1) throw std::invalid_argument("SignedPermutation: signs must be +-1");
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return SignedPermutation(std::move(p), std::vector<int>(static_cast<std::size_t>(n), 1));
}

SignedPermutation SignedPermutation::coordinate_flip(int n, int axis) {
  SignedPermutation g = identity(n);
  g.sign_[static_cast<std::size_t>(axis)] = -1;
  return g;
}

SignedPermutation SignedPermutation::adjacent_swap(int n, int i) {
  SignedPermutation g = identity(n);
  std::swap(g.perm_[static_cast<std::size_t>(i)], g.perm_[static_cast<std::size_t>(i) + 1]);
  return g;
}

std::vector<double> SignedPermutation::apply(std::span<const double> x) const {
  if (x.size() != perm_.size())
    throw std::invalid_argument("SignedPermutation::apply: dimension mismatch");
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    y[static_cast<std::size_t>(perm_[i])] = sign_[i] * x[i];
  return y;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
  // (g o h).perm = g.perm o h.perm; (g o h).sign_i = h.sign_i * g.sign_{h.perm(i)}
  const std::size_t n = perm_.size();
  if (other.perm_.size() != n)
    throw std::invalid_argument("SignedPermutation::compose: size mismatch");
  std::vector<int> p(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int hi = other.perm_[i];
    p[i] = perm_[static_cast<std::size_t>(hi)];
    s[i] = other.sign_[i] * sign_[static_cast<std::size_t>(hi)];
  }
  return SignedPermutation(std::move(p), std::move(s));
}

SignedPermutation SignedPermutation::inverse() const {
  const std::size_t n = perm_.size();
  std::vector<int> p(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[static_cast<std::size_t>(perm_[i])] = static_cast<int>(i);
    s[static_cast<std::size_t>(perm_[i])] = sign_[i];
  }
  return SignedPermutation(std::move(p), std::move(s));
}

std::uint64_t SignedPermutation::index() const {
  const int n = size();
  // Lehmer rank
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (perm_[static_cast<std::size_t>(j)] < perm_[static_cast<std::size_t>(i)]) ++smaller;
    std::uint64_t fact = 1;
    for (int k = 2; k <= n - 1 - i; ++k) fact *= static_cast<std::uint64_t>(k);
    rank += static_cast<std::uint64_t>(smaller) * fact;
  }
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i)
    if (sign_[static_cast<std::size_t>(i)] < 0) bits |= (1ull << i);
  return rank * (1ull << n) + bits;
}

SignedPermutation SignedPermutation::from_index(std::uint64_t idx, int n) {
  const std::uint64_t two_n = 1ull << n;
  std::uint64_t bits = idx % two_n;
  std::uint64_t rank = idx / two_n;
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> p, s;
  p.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::uint64_t fact = 1;
    for (int k = 2; k <= n - 1 - i; ++k) fact *= static_cast<std::uint64_t>(k);
    const std::size_t pick = static_cast<std::size_t>(rank / fact);
    rank %= fact;
    p.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  s.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (bits & (1ull << i)) ? -1 : 1;
  return SignedPermutation(std::move(p), std::move(s));
}

std::uint64_t group_order(int n) {
  if (n < 1) throw std::invalid_argument("group_order: n must be >= 1");
  std::uint64_t acc = 1;
  for (int k = 1; k <= n; ++k)
    if (__builtin_mul_overflow(acc, static_cast<std::uint64_t>(2 * k), &acc))
      throw std::overflow_error("group_order: 64-bit overflow");
  return acc;  // prod 2k = 2^n n!
}

std::int64_t mirror_count(int n) {
  if (n < 1) throw std::invalid_argument("mirror_count: n must be >= 1");
  return static_cast<std::int64_t>(n) * n;
}

}  // namespace coxvar
