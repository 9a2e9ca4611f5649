#include "coxvar/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxvar {

double elementary_symmetric(std::span<const double> values, int r) {
  const int n = static_cast<int>(values.size());
  if (r < 0 || r > n)
    throw std::invalid_argument("elementary_symmetric: need 0 <= r <= n");
  std::vector<double> e(static_cast<std::size_t>(r) + 1, 0.0);
  e[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    const double v = values[static_cast<std::size_t>(i)];
    for (int j = std::min(i + 1, r); j >= 1; --j) e[j] += v * e[j - 1];
  }
  return e[static_cast<std::size_t>(r)];
}

double sigma_eval(int r, std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  if (r < 1 || r > n) throw std::invalid_argument("sigma_eval: need 1 <= r <= n");
  std::vector<double> sq(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) sq[i] = x[i] * x[i];
  return elementary_symmetric(sq, r);
}

std::vector<double> sigma_all(std::span<const double> x, int r_max) {
  const int n = static_cast<int>(x.size());
  if (r_max < 0 || r_max > n) throw std::invalid_argument("sigma_all: need 0 <= r_max <= n");
  std::vector<double> e(static_cast<std::size_t>(r_max) + 1, 0.0);
  e[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    const double v = x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    for (int j = std::min(i + 1, r_max); j >= 1; --j) e[j] += v * e[j - 1];
  }
  return e;  // e[0] == 1, e[r] == sigma_r(x)
}

InvariantPolynomial::InvariantPolynomial(int n, double constant)
    : n_(n), constant_(constant) {
  if (n < 1) throw std::invalid_argument("InvariantPolynomial: n must be >= 1");
}

void InvariantPolynomial::set_term(const Partition& p, double coeff) {
  if (p.empty())
    throw std::invalid_argument("InvariantPolynomial: use set_constant for the empty partition");
  if (p.max_part() > n_)
    throw std::invalid_argument("InvariantPolynomial: partition part exceeds dimension");
  terms_[p] = coeff;
}

InvariantPolynomial InvariantPolynomial::quartic(double A, double B, double C,
                                                 double D, int n) {
  if (n < 2) throw std::invalid_argument("quartic: n must be >= 2");
  InvariantPolynomial f(n, D);
  f.set_term(Partition({2}), A);
  f.set_term(Partition({1, 1}), B);
  f.set_term(Partition({1}), C);
  return f;
}

double InvariantPolynomial::operator()(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n_)
    throw std::invalid_argument("InvariantPolynomial: dimension mismatch");
  int r_max = 0;
  for (const auto& [p, c] : terms_) r_max = std::max(r_max, p.max_part());
  const std::vector<double> e = sigma_all(x, r_max);
  double acc = constant_;
  for (const auto& [p, c] : terms_) {
    double mono = 1.0;
    for (int part : p.parts()) mono *= e[static_cast<std::size_t>(part)];
    acc += c * mono;
  }
  return acc;
}

}  // namespace coxvar
