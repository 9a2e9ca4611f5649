#include "coxvar/quadric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace coxvar {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void QuarticCoefficients::validate() const {
  if (n < 2) throw std::invalid_argument("QuarticCoefficients: n must be >= 2");
  if (m < 1 || m > 20) throw std::invalid_argument("QuarticCoefficients: m must be in [1, 20]");
  if (!std::isfinite(A) || !std::isfinite(B) || !std::isfinite(C) || !std::isfinite(D))
    throw std::invalid_argument("QuarticCoefficients: coefficients must be finite");
}

double QuarticCoefficients::eval(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("QuarticCoefficients::eval: dimension mismatch");
  const double w = 0.5 * (A + 2.0 * B);
  double s = 0.0, q = 0.0;
  for (double xi : x) {
    double u = xi * xi;
    for (int k = 1; k < m; ++k) u *= u;
    s += u;
    q += u * u;
  }
  return (w * s + C) * s - 0.5 * A * q + D;
}

InvariantPolynomial QuarticCoefficients::to_invariant() const {
  validate();
  if (m != 1)
    throw std::invalid_argument("to_invariant: only the quartic (m = 1) lies in the sigma basis");
  return InvariantPolynomial::quartic(A, B, C, D, n);
}

QuadricForm substitute(const QuarticCoefficients& qc) {
  qc.validate();
  QuadricForm qf;
  qf.n = qc.n;
  qf.A = qc.A;
  qf.B = qc.B;
  qf.C = qc.C;
  qf.D = qc.D;
  qf.W = 0.5 * (qc.A + 2.0 * qc.B);
  qf.lambda0 = Eigen::MatrixXd::Constant(qc.n, qc.n, qf.W);
  qf.lambda0.diagonal().setConstant(qc.B);
  qf.lambda = Eigen::MatrixXd::Zero(qc.n + 1, qc.n + 1);
  qf.lambda(0, 0) = qc.D;
  for (int i = 1; i <= qc.n; ++i) {
    qf.lambda(0, i) = 0.5 * qc.C;
    qf.lambda(i, 0) = 0.5 * qc.C;
  }
  qf.lambda.block(1, 1, qc.n, qc.n) = qf.lambda0;
  return qf;
}

double QuadricForm::eval(std::span<const double> X) const {
  if (static_cast<int>(X.size()) != n)
    throw std::invalid_argument("QuadricForm::eval: dimension mismatch");
  double s = 0.0, q = 0.0;
  for (double v : X) {
    s += v;
    q += v * v;
  }
  return eval_sq(s, q);
}

SpectralData spectral(const QuadricForm& qf, double tol) {
  SpectralData sd;
  const int n = qf.n;
  sd.lambda_rep = -0.5 * qf.A;
  sd.lambda_axis = qf.B + (n - 1) * qf.W;
  sd.det_lambda0 = std::pow(sd.lambda_rep, n - 1) * sd.lambda_axis;
  sd.det_lambda = qf.lambda.determinant();
  sd.axis_direction = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));

  const double norm0 = std::abs(qf.B) + (n - 1) * std::abs(qf.W);
  if (std::abs(sd.lambda_axis) > tol * (1.0 + norm0)) {
    const double c = -qf.C / (2.0 * sd.lambda_axis);
    sd.center = c;
    sd.f_center = qf.eval_sq(n * c, n * c * c);
  }

  const double denom = 4.0 * ((n - 1) * qf.W - 1.0);
  sd.paper_center = (std::abs(denom) > 1e-300)
                        ? n * qf.C / denom
                        : std::numeric_limits<double>::quiet_NaN();
  if (sd.center && std::isfinite(sd.paper_center)) {
    const double a = *sd.center, b = sd.paper_center;
    if (a != 0.0 && b != 0.0) sd.paper_center_sign_agrees = (a > 0) == (b > 0);
  }
  return sd;
}

QuadricClass classify(const QuadricForm& qf, const SpectralData& sd, double tol) {
  QuadricClass qc;
  const int n = qf.n;
  const double norm0 = std::abs(qf.B) + (n - 1) * std::abs(qf.W);
  const double z = tol * (1.0 + norm0);

  const int sr = (std::abs(sd.lambda_rep) <= z) ? 0 : (sd.lambda_rep > 0 ? 1 : -1);
  const int sa = (std::abs(sd.lambda_axis) <= z) ? 0 : (sd.lambda_axis > 0 ? 1 : -1);
  qc.n_plus = (n - 1) * (sr > 0) + (sa > 0);
  qc.n_minus = (n - 1) * (sr < 0) + (sa < 0);
  qc.n_zero = n - qc.n_plus - qc.n_minus;

  const double norm_full = norm0 + std::abs(qf.C) + std::abs(qf.D);
  qc.nondegenerate =
      std::abs(sd.det_lambda) > tol * std::max(1.0, std::pow(1.0 + norm_full, n + 1));

  if (qc.n_zero > 0) {
    qc.kind = qc.nondegenerate ? QuadricKind::paraboloid_like : QuadricKind::degenerate_other;
    return qc;
  }

  // both eigenvalues nonzero; the center exists
  const double fc = sd.f_center.value_or(0.0);
  const double sc = sd.center ? qf.n * *sd.center : 0.0;
  const double fc_scale = std::abs(qf.W) * sc * sc + 0.5 * std::abs(qf.A) * sc * sc +
                          std::abs(qf.C * sc) + std::abs(qf.D);
  const double zf = tol * (1.0 + fc_scale);

  if (qc.n_plus == n || qc.n_minus == n) {
    if (std::abs(fc) <= zf)
      qc.kind = QuadricKind::cone_like;  // single real point
    else if ((fc > 0) == (qc.n_plus == n))
      qc.kind = QuadricKind::empty;
    else
      qc.kind = QuadricKind::ellipsoid;
    return qc;
  }

  // mixed signature (1, n-1) or (n-1, 1)
  if (std::abs(fc) <= zf) {
    qc.kind = QuadricKind::cone_like;
    return qc;
  }
  // Completion of squares: (X-c)^T Lambda0 (X-c) = -F(c). Sheets separate
  // along the axis exactly when -F(c) carries the sign of lambda_axis.
  qc.kind = ((fc > 0) == (sd.lambda_rep > 0)) ? QuadricKind::two_sheeted_hyperboloid
                                              : QuadricKind::one_sheeted_hyperboloid;
  return qc;
}

const char* to_string(QuadricKind k) {
  switch (k) {
    case QuadricKind::ellipsoid: return "ellipsoid";
    case QuadricKind::two_sheeted_hyperboloid: return "two_sheeted_hyperboloid";
    case QuadricKind::one_sheeted_hyperboloid: return "one_sheeted_hyperboloid";
    case QuadricKind::paraboloid_like: return "paraboloid_like";
    case QuadricKind::cone_like: return "cone_like";
    case QuadricKind::empty: return "empty";
    case QuadricKind::degenerate_other: return "degenerate_other";
  }
  return "unknown";
}

AxisQuadratic axis_profile(const QuadricForm& qf, int m) {
  if (m < 1 || m > qf.n) throw std::invalid_argument("axis_profile: need 1 <= m <= n");
  return AxisQuadratic{(qf.B + (m - 1) * qf.W) / m, qf.C, qf.D};
}

namespace {

struct Interval {
  double lo, hi;
};
using IntervalSet = std::vector<Interval>;

struct QuadraticRoots {
  int count = 0;  // real roots; 2 with r1 == r2 for a double root
  double r1 = 0, r2 = 0;
};

// Roots through a sign-canonical form so that p and -p produce bit-identical
// values; downstream set algebra relies on shared endpoints being exact.
QuadraticRoots roots_of(AxisQuadratic p) {
  if (p.a < 0 || (p.a == 0 && (p.b < 0 || (p.b == 0 && p.c < 0)))) {
    p.a = -p.a;
    p.b = -p.b;
    p.c = -p.c;
  }
  if (p.a == 0.0) {
    if (p.b == 0.0) return {};
    const double r = -p.c / p.b;
    return {1, r, r};
  }
  const double disc = p.b * p.b - 4.0 * p.a * p.c;
  if (disc < 0.0) return {};
  const double sq = std::sqrt(disc);
  const double qs = -0.5 * (p.b + (p.b >= 0 ? sq : -sq));
  if (qs == 0.0) {
    const double r = -p.b / (2.0 * p.a);
    return {2, r, r};
  }
  double r1 = qs / p.a, r2 = p.c / qs;
  if (r1 > r2) std::swap(r1, r2);
  return {2, r1, r2};
}

// closed solution set of p(s) >= 0, clipped to [lo, hi]
IntervalSet nonneg_set(const AxisQuadratic& p, double lo, double hi) {
  IntervalSet out;
  auto push_clipped = [&](double a, double b) {
    const double l = std::max(a, lo), h = std::min(b, hi);
    if (l <= h) out.push_back({l, h});
  };
  const QuadraticRoots rt = roots_of(p);
  if (p.a == 0.0) {
    if (p.b == 0.0) {
      if (p.c >= 0.0) push_clipped(-kInf, kInf);
    } else if (p.b > 0) {
      push_clipped(rt.r1, kInf);
    } else {
      push_clipped(-kInf, rt.r1);
    }
    return out;
  }
  if (rt.count == 0) {
    if (p.a > 0) push_clipped(-kInf, kInf);
    return out;
  }
  if (p.a > 0) {
    push_clipped(-kInf, rt.r1);
    push_clipped(rt.r2, kInf);
  } else {
    push_clipped(rt.r1, rt.r2);
  }
  return out;
}

bool intersects_nonempty(const IntervalSet& a, const IntervalSet& b) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (std::max(x.lo, y.lo) <= std::min(x.hi, y.hi)) return true;
  return false;
}

IntervalSet intersect_sets(const IntervalSet& a, const IntervalSet& b) {
  IntervalSet out;
  for (const auto& x : a)
    for (const auto& y : b) {
      const double l = std::max(x.lo, y.lo), h = std::min(x.hi, y.hi);
      if (l <= h) out.push_back({l, h});
    }
  return out;
}

bool decide_bracket(const AxisQuadratic& p, const AxisQuadratic& q, double lo, double hi) {
  if (lo > hi) return false;
  const AxisQuadratic np{-p.a, -p.b, -p.c}, nq{-q.a, -q.b, -q.c};
  // p >= 0 and q <= 0 somewhere, or p <= 0 and q >= 0 somewhere
  if (intersects_nonempty(nonneg_set(p, lo, hi), nonneg_set(nq, lo, hi))) return true;
  return intersects_nonempty(nonneg_set(np, lo, hi), nonneg_set(q, lo, hi));
}

double root_span(const AxisQuadratic& p) {
  if (p.a == 0.0) return (p.b == 0.0) ? 0.0 : std::abs(p.c / p.b);
  const double disc = p.b * p.b - 4.0 * p.a * p.c;
  if (disc < 0.0) return 0.0;
  return (std::abs(p.b) + std::sqrt(disc)) / (2.0 * std::abs(p.a));
}

}  // namespace

FaceMeet bracket_meet(const AxisQuadratic& p, const AxisQuadratic& q, double lo,
                      double hi, double eps) {
  const double S = std::max({1.0, std::abs(lo), std::isfinite(hi) ? std::abs(hi) : 0.0,
                             root_span(p), root_span(q)});
  auto mag = [&](const AxisQuadratic& r) {
    return std::abs(r.a) * S * S + std::abs(r.b) * S + std::abs(r.c);
  };
  const double eps_val = eps * std::max({1.0, mag(p), mag(q)});
  const double eps_s = eps * S;

  // Identical profiles mean the face carries a single attainable q, so the
  // condition degenerates to "p has a root here"; perturb the copies jointly
  // or the query is never robust.
  const bool tied = (p.a == q.a && p.b == q.b && p.c == q.c);

  const bool base = decide_bracket(p, q, lo, hi);
  for (int dp = -1; dp <= 1; ++dp)
    for (int dq = -1; dq <= 1; ++dq) {
      if (tied && dp != dq) continue;
      for (int ds = -1; ds <= 1; ++ds) {
        const AxisQuadratic pp{p.a, p.b, p.c + dp * eps_val};
        const AxisQuadratic qq{q.a, q.b, q.c + dq * eps_val};
        const double l2 = lo + ds * eps_s;
        const double h2 = std::isfinite(hi) ? hi - ds * eps_s : hi;
        if (decide_bracket(pp, qq, l2, h2) != base) return FaceMeet::indeterminate;
      }
    }
  return base ? FaceMeet::intersects : FaceMeet::misses;
}

std::vector<SInterval> bracket_set(const AxisQuadratic& p, const AxisQuadratic& q,
                                   double lo, double hi, double merge_slack) {
  const AxisQuadratic np{-p.a, -p.b, -p.c}, nq{-q.a, -q.b, -q.c};
  IntervalSet pieces = intersect_sets(nonneg_set(p, lo, hi), nonneg_set(nq, lo, hi));
  for (const auto& iv : intersect_sets(nonneg_set(np, lo, hi), nonneg_set(q, lo, hi)))
    pieces.push_back(iv);
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<SInterval> out;
  for (const auto& iv : pieces) {
    if (!out.empty() && iv.lo <= out.back().hi + merge_slack)
      out.back().hi = std::max(out.back().hi, iv.hi);
    else
      out.push_back({iv.lo, iv.hi});
  }
  return out;
}

FaceMeet orthant_meet(const QuadricForm& qf, double s_lo, double s_hi, double tol) {
  return bracket_meet(axis_profile(qf, qf.n), axis_profile(qf, 1), s_lo, s_hi, 100.0 * tol);
}

FaceMeet wall_meet(const QuadricForm& qf, int wall, double s_lo, double s_hi, double tol) {
  const int n = qf.n;
  if (wall < 0 || wall >= n) throw std::invalid_argument("wall_meet: wall out of range");
  const double eps = 100.0 * tol;
  if (wall == 0) {
    // {X_1 = 0}: remaining mass on an (n-1)-simplex, q in [s^2/(n-1), s^2]
    return bracket_meet(axis_profile(qf, n - 1), axis_profile(qf, 1), s_lo, s_hi, eps);
  }
  if (wall == n - 1) {
    // {X_{n-1} = X_n}: concentration caps at the tied top pair, q <= s^2/2
    return bracket_meet(axis_profile(qf, n), axis_profile(qf, 2), s_lo, s_hi, eps);
  }
  return bracket_meet(axis_profile(qf, n), axis_profile(qf, 1), s_lo, s_hi, eps);
}

FaceMeet face_intersection(const QuadricForm& qf, const SpectralData& sd,
                           const FaceSpec& face, Sheet sheet, double tol) {
  const int n = qf.n;
  if (face.i < 1 || face.i > n || (face.kind == FaceSpec::diagonal &&
                                   (face.j < 1 || face.j > n || face.i == face.j)))
    throw std::invalid_argument("face_intersection: bad face indices");
  if (face.kind == FaceSpec::coordinate && n < 2)
    throw std::invalid_argument("face_intersection: coordinate face needs n >= 2");

  (void)sd;
  const AxisQuadratic hn = axis_profile(qf, n);
  AxisQuadratic p, q;
  if (face.kind == FaceSpec::coordinate) {
    p = axis_profile(qf, n - 1);
    q = axis_profile(qf, 1);
  } else if (n == 2) {
    p = axis_profile(qf, 2);
    q = p;
  } else {
    p = hn;
    q = axis_profile(qf, 1);
  }

  if (sheet == Sheet::any) return bracket_meet(p, q, 0.0, kInf, 100.0 * tol);

  // The sheet windows ride on the roots of h_n. Freezing the window while
  // perturbing the profiles would misread every cap contact as a boundary
  // case, so instead shift the whole quadric vertically and re-derive the
  // window each time; only shift-stable answers are reported.
  const double S = std::max({1.0, root_span(p), root_span(q), root_span(hn)});
  auto mag = [&](const AxisQuadratic& r) {
    return std::abs(r.a) * S * S + std::abs(r.b) * S + std::abs(r.c);
  };
  const double delta = 100.0 * tol * std::max({1.0, mag(p), mag(q), mag(hn)});

  int verdict = -1;
  for (int dd = -1; dd <= 1; ++dd) {
    const AxisQuadratic hs{hn.a, hn.b, hn.c + dd * delta};
    const QuadraticRoots rt = roots_of(hs);
    if (hs.a == 0.0 || rt.count < 2) return FaceMeet::indeterminate;
    double lo = 0.0, hi = kInf;
    if (sheet == Sheet::lower)
      hi = rt.r1;
    else
      lo = std::max(0.0, rt.r2);
    const AxisQuadratic ps{p.a, p.b, p.c + dd * delta};
    const AxisQuadratic qs{q.a, q.b, q.c + dd * delta};
    const int v = decide_bracket(ps, qs, lo, hi) ? 1 : 0;
    if (verdict < 0)
      verdict = v;
    else if (verdict != v)
      return FaceMeet::indeterminate;
  }
  return verdict == 1 ? FaceMeet::intersects : FaceMeet::misses;
}

}  // namespace coxvar
