#pragma once

#include <map>
#include <span>
#include <vector>

#include "coxvar/partitions.hpp"

namespace coxvar {

// Elementary symmetric polynomial e_r(values) via the stable product
// recurrence on prod_i (1 + t*v_i): e[j] += v * e[j-1], j descending.
// Requires 0 <= r <= values.size().
double elementary_symmetric(std::span<const double> values, int r);

// sigma_r(x) = e_r(x_1^2, ..., x_n^2). Requires 1 <= r <= n; out-of-range
// r is an error, never silently zero.
double sigma_eval(int r, std::span<const double> x);

// One recurrence pass over the squared coordinates; slot r of the result is
// sigma_r (slot 0 holds the constant 1), r_max + 1 entries total.
std::vector<double> sigma_all(std::span<const double> x, int r_max);

/**
 * Polynomial in the sigma-monomial basis: constant + sum over partitions
 * lambda of coeff(lambda) * prod_i sigma_{lambda_i}. Terms are keyed by
 * partitions with parts <= n; violating terms are rejected on insertion.
 */
class InvariantPolynomial {
 public:
  explicit InvariantPolynomial(int n, double constant = 0.0);

  int dimension() const { return n_; }
  double constant() const { return constant_; }
  void set_constant(double c) { constant_ = c; }
  void set_term(const Partition& p, double coeff);
  const std::map<Partition, double>& terms() const { return terms_; }

  // A*s2 + B*s1^2 + C*s1 + D (requires n >= 2)
  static InvariantPolynomial quartic(double A, double B, double C, double D, int n);

  double operator()(std::span<const double> x) const;

 private:
  int n_;
  double constant_;
  std::map<Partition, double> terms_;  // canonical order
};

}  // namespace coxvar
