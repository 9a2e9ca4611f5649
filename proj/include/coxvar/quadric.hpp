#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>

#include "coxvar/invariants.hpp"

namespace coxvar {

inline constexpr double kDefaultTol = 1e-9;

/**
 * Coefficients of f = A*s2 + B*s1^2 + C*s1 + D in n variables, generalized
 * by the substitution exponent m >= 1: f(x) = F(x^(2^m)) componentwise,
 * where F is the associated quadric. m = 1 is the quartic family.
 */
struct QuarticCoefficients {
  double A = 0, B = 0, C = 0, D = 0;
  int n = 2;
  int m = 1;

  void validate() const;
  double eval(std::span<const double> x) const;
  InvariantPolynomial to_invariant() const;  // m == 1 only
};

/**
 * Homogenized quadric F(X) = X^T Lambda0 X + C*sum(X) + D on [1,X] form.
 * Lambda0 has B on the diagonal and W = (A+2B)/2 off-diagonal.
 *
 * On the positive orthant F depends only on s = sum X_i and q = sum X_i^2:
 *   F = W s^2 - (A/2) q + C s + D.
 */
struct QuadricForm {
  int n = 2;
  double A = 0, B = 0, C = 0, D = 0;
  double W = 0;
  Eigen::MatrixXd lambda;   // (n+1) x (n+1)
  Eigen::MatrixXd lambda0;  // n x n

  double eval(std::span<const double> X) const;
  double eval_sq(double s, double q) const { return W * s * s - 0.5 * A * q + C * s + D; }
};

QuadricForm substitute(const QuarticCoefficients& qc);

struct SpectralData {
  double lambda_rep = 0;   // -A/2, multiplicity n-1
  double lambda_axis = 0;  // B + (n-1)W, simple
  double det_lambda0 = 0;  // closed form lambda_rep^(n-1) * lambda_axis
  double det_lambda = 0;   // numeric (LU) determinant of Lambda
  std::optional<double> center;    // scalar c with center = c*(1,..,1)
  std::optional<double> f_center;  // F evaluated at the center
  double paper_center = 0;         // printed closed form, kept for comparison
  bool paper_center_sign_agrees = true;
  Eigen::VectorXd axis_direction;  // (1,..,1)/sqrt(n)
};

SpectralData spectral(const QuadricForm& qf, double tol = kDefaultTol);

enum class QuadricKind {
  ellipsoid,
  two_sheeted_hyperboloid,  // for n = 2: branches separated along the diagonal axis
  one_sheeted_hyperboloid,
  paraboloid_like,
  cone_like,
  empty,
  degenerate_other,
};

struct QuadricClass {
  QuadricKind kind = QuadricKind::degenerate_other;
  int n_plus = 0, n_minus = 0, n_zero = 0;
  bool nondegenerate = false;  // |det Lambda| above tolerance
};

QuadricClass classify(const QuadricForm& qf, const SpectralData& sd,
                      double tol = kDefaultTol);

const char* to_string(QuadricKind k);

// ---- restrictions of F to chamber faces --------------------------------

// Quadratic a s^2 + b s + c in the axis coordinate s = sum X_i.
struct AxisQuadratic {
  double a = 0, b = 0, c = 0;
  double operator()(double s) const { return (a * s + b) * s + c; }
};

// Restriction profile h_m(s) = ((B + (m-1) W)/m) s^2 + C s + D: the value of
// F on orthant points with sum s whose squared-sum attains s^2/m. m = n is
// the diagonal axis, m = 1 a coordinate ray.
AxisQuadratic axis_profile(const QuadricForm& qf, int m);

enum class FaceMeet { misses, intersects, indeterminate };

// Does some s in [lo, hi] admit p(s) and q(s) with opposite (or zero) signs?
// Verdicts that flip under +-eps perturbations of the constant terms or the
// endpoints come back indeterminate.
FaceMeet bracket_meet(const AxisQuadratic& p, const AxisQuadratic& q, double lo,
                      double hi, double eps);

struct SInterval {
  double lo = 0, hi = 0;  // closed; hi may be +infinity
};

// The full solution set {s in [lo, hi] : p(s), q(s) bracket zero} as a sorted
// union of disjoint closed intervals (adjacent pieces closer than merge_slack
// are coalesced). Point contacts appear as degenerate intervals.
std::vector<SInterval> bracket_set(const AxisQuadratic& p, const AxisQuadratic& q,
                                   double lo, double hi, double merge_slack = 0.0);

// Chamber walls for {0 <= X_1 <= ... <= X_n}: wall 0 is the coordinate face
// {X_1 = 0}; wall w in 1..n-1 is the diagonal {X_w = X_{w+1}} (1-based).
// The optional [s_lo, s_hi] restricts to an axis slab (sheet attribution).
FaceMeet wall_meet(const QuadricForm& qf, int wall, double s_lo, double s_hi,
                   double tol);

// Quadric against the whole closed positive orthant.
FaceMeet orthant_meet(const QuadricForm& qf, double s_lo, double s_hi, double tol);

struct FaceSpec {
  enum Kind { coordinate, diagonal } kind = coordinate;
  int i = 1;  // 1-based indices; the answer depends only on the kind by symmetry
  int j = 2;
};

enum class Sheet { any, lower, upper };

// Spec-level face intersection: restriction to {X_i = 0} (same-form quadric
// in n-1 variables against the nonnegative orthant) or to {X_i = X_j}, with
// optional attribution to the near/far sheet by sign of (X - center) . axis.
FaceMeet face_intersection(const QuadricForm& qf, const SpectralData& sd,
                           const FaceSpec& face, Sheet sheet = Sheet::any,
                           double tol = kDefaultTol);

}  // namespace coxvar
