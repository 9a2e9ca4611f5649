#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace coxvar {

/**
 * Element of the signed-permutation group: permutation pi together with a
 * sign per input slot. Action on points: y[pi(i)] = sign[i] * x[i].
 *
 * Elements index bijectively into [0, 2^n * n!) via Lehmer rank of pi times
 * 2^n plus the sign bitmask; used by the orbit enumeration.
 */
class SignedPermutation {
 public:
  SignedPermutation(std::vector<int> perm, std::vector<int> sign);

  static SignedPermutation identity(int n);
  // reflection in the mirror {x_{axis+1} = 0} (0-based axis)
  static SignedPermutation coordinate_flip(int n, int axis);
  // reflection in the mirror {x_{i+1} = x_{i+2}} (0-based i: swaps slots i, i+1)
  static SignedPermutation adjacent_swap(int n, int i);

  int size() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& sign() const { return sign_; }

  std::vector<double> apply(std::span<const double> x) const;
  template <typename T>
  std::vector<T> apply_vec(const std::vector<T>& x) const {
    std::vector<T> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      y[static_cast<std::size_t>(perm_[i])] = static_cast<T>(sign_[i]) * x[i];
    return y;
  }

  SignedPermutation compose(const SignedPermutation& other) const;  // this after other
  SignedPermutation inverse() const;

  std::uint64_t index() const;
  static SignedPermutation from_index(std::uint64_t idx, int n);

  bool operator==(const SignedPermutation& o) const {
    return perm_ == o.perm_ && sign_ == o.sign_;
  }

 private:
  std::vector<int> perm_;
  std::vector<int> sign_;
};

// 2^n * n!; throws std::overflow_error when it exceeds 64 bits.
std::uint64_t group_order(int n);

// Number of reflection hyperplanes, n^2.
std::int64_t mirror_count(int n);

}  // namespace coxvar
