// Acceptance gate: exercises every headline claim end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if anything fails.

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "coxvar/invariants.hpp"
#include "coxvar/oracle.hpp"
#include "coxvar/partitions.hpp"
#include "coxvar/quadric.hpp"
#include "coxvar/signed_permutation.hpp"
#include "coxvar/topology.hpp"

using namespace coxvar;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
  std::string label;
  bool pass = false;
  std::string detail;
};

std::vector<Criterion> results;

void record(const std::string& label, bool pass, const std::string& detail) {
  results.push_back({label, pass, detail});
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

ComponentReport oracle_at(const QuarticCoefficients& qc, int res, double L = 0.0) {
  auto g = auto_box(qc, spectral(substitute(qc)));
  g.resolution = res;
  if (L > 0.0) g.half_width = L;
  GridScan scan(make_field(qc), g);
  scan.compute_nesting();
  return scan.report();
}

// ---- sweep machinery -----------------------------------------------------

struct SweepStats {
  std::uint64_t points = 0, decided = 0, agreed = 0;
  std::uint64_t bound_violations = 0, rechecks = 0, blind = 0;
  bool witness_in_lattice = false;
};

SweepStats run_sweep(int n, const std::vector<double>& As, const std::vector<double>& Bs,
                     const std::vector<double>& Cs, const std::vector<double>& Ds,
                     int res, const QuarticCoefficients& witness) {
  SweepStats st;
  const std::uint64_t bound = (std::uint64_t{1} << n) + 1;
  for (double A : As)
    for (double B : Bs)
      for (double C : Cs)
        for (double D : Ds) {
          ++st.points;
          QuarticCoefficients qc{A, B, C, D, n, 1};
          if (A == witness.A && B == witness.B && C == witness.C && D == witness.D)
            st.witness_in_lattice = true;

          auto gc = predict(qc);
          auto report = oracle_at(qc, res);
          auto matches = [&](const ComponentReport& r) {
            return gc.total_components == r.total &&
                   gc.compact_components == r.compact_total &&
                   gc.nested == !r.nesting_pairs.empty();
          };

          // escalate once if the grid looks artifact-prone: count above the
          // theoretical cap, or a mismatch with a decided prediction
          const bool decided = gc.kind != VarietyKind::undecided;
          if (!report.one_sided &&
              (report.total > bound || (decided && !matches(report)))) {
            ++st.rechecks;
            report = oracle_at(qc, 2 * res);
          }

          if (report.one_sided) {
            // sign-definite contact: the grid cannot certify any count
            ++st.blind;
            continue;
          }
          if (report.total > bound) ++st.bound_violations;
          if (!decided) continue;
          ++st.decided;
          if (matches(report)) ++st.agreed;
        }
  return st;
}

// ---- independent oracles duplicated here so the gate stands alone --------

std::uint64_t count_partitions_slow(int q, int max_part) {
  if (q == 0) return 1;
  std::uint64_t total = 0;
  for (int first = std::min(q, max_part); first >= 1; --first)
    total += count_partitions_slow(q - first, first);
  return total;
}

std::uint64_t orbit_by_points(const std::vector<bool>& touched, int n) {
  std::vector<long long> x(static_cast<std::size_t>(n));
  long long v = touched[0] ? 0 : 1;
  x[0] = v;
  for (int k = 1; k < n; ++k) {
    if (!touched[static_cast<std::size_t>(k)]) ++v;
    x[static_cast<std::size_t>(k)] = v;
  }
  std::set<std::vector<long long>> images;
  for (std::uint64_t g = 0; g < group_order(n); ++g)
    images.insert(SignedPermutation::from_index(g, n).apply_vec(x));
  return images.size();
}

// ---- criteria ------------------------------------------------------------

void criterion_1() {
  const auto t0 = Clock::now();
  QuarticCoefficients qc{2, -0.25, -1, 0.5, 2, 1};
  auto report = oracle_at(qc, 512);
  const double dt = seconds_since(t0);
  const bool pass = report.total == 5 && report.compact_total == 1 && dt < 120.0;
  record("separated sheets, n=2",
         pass, fmt("oracle %llu/%llu at r=512 in %.1fs (want 5/1, <120s)",
                   (unsigned long long)report.total,
                   (unsigned long long)report.compact_total, dt));
}

void criterion_2() {
  const auto t0 = Clock::now();
  QuarticCoefficients qc{2, -0.55, -1, 0.5, 3, 1};
  auto lo = oracle_at(qc, 128);
  auto hi = oracle_at(qc, 256);
  const double dt = seconds_since(t0);
  const bool pass = lo.total == 9 && lo.compact_total == 1 && hi.total == 9 &&
                    hi.compact_total == 1 && dt < 300.0;
  record("separated sheets, n=3",
         pass, fmt("oracle %llu/%llu at r=128, %llu/%llu at r=256 in %.1fs "
                   "(want 9/1 at both, <300s)",
                   (unsigned long long)lo.total, (unsigned long long)lo.compact_total,
                   (unsigned long long)hi.total, (unsigned long long)hi.compact_total, dt));
}

void criterion_3() {
  QuarticCoefficients two{-2, 1, -8, 28, 2, 1};
  QuarticCoefficients three{-2, 1, -8, 44, 3, 1};
  auto r2 = oracle_at(two, 512);
  auto r3 = oracle_at(three, 128);
  const bool pass = r2.total == 4 && r2.compact_total == 4 && r3.total == 8 &&
                    r3.compact_total == 8;
  record("full compact orbit",
         pass, fmt("n=2: %llu/%llu (want 4/4), n=3: %llu/%llu (want 8/8)",
                   (unsigned long long)r2.total, (unsigned long long)r2.compact_total,
                   (unsigned long long)r3.total, (unsigned long long)r3.compact_total));
}

void criterion_4() {
  bool pass = true;
  std::string detail;
  for (int n : {2, 3}) {
    QuarticCoefficients qc{1, -1, 1, -0.2, n, 1};  // A=1, B=-b, C=b at b=1
    auto report = oracle_at(qc, n == 2 ? 512 : 128);
    auto gc = predict(qc);
    const bool ok = report.total == 2 && report.compact_total == 2 &&
                    report.nesting_pairs.size() == 1 && !report.nesting_ambiguous &&
                    gc.kind == VarietyKind::nested_pair;
    pass = pass && ok;
    detail += fmt("n=%d: %llu compact, %zu pair(s), predicted %s; ", n,
                  (unsigned long long)report.compact_total, report.nesting_pairs.size(),
                  to_string(gc.kind));
  }
  record("nested pair family (b=1)", pass, detail + "want 2 compact + 1 pair, both dims");
}

SweepStats g_sweep2, g_sweep3;

void criterion_5() {
  g_sweep2 = run_sweep(2, {-2, -1, -0.5, 0, 0.5, 1, 2}, {-1, -0.5, -0.25, 0, 0.25, 0.5, 1},
                       {-2, -1, -0.5, 0, 0.5, 1, 2}, {-1, -0.5, -0.25, 0.25, 0.5, 1}, 256,
                       QuarticCoefficients{2, -0.25, -1, 0.5, 2, 1});
  g_sweep3 = run_sweep(3, {-2, -1, 0, 1, 2}, {-1, -0.5, -0.25, 0.25, 0.5, 1}, {-1, 1},
                       {-1, -0.5, 0.25, 0.5, 1}, 64,
                       QuarticCoefficients{2, -0.55, -1, 0.5, 3, 1});
  const bool pass = g_sweep2.points >= 2000 && g_sweep3.points >= 300 &&
                    g_sweep2.bound_violations == 0 && g_sweep3.bound_violations == 0 &&
                    g_sweep2.witness_in_lattice;
  record("sweep component bound 2^n + 1",
         pass, fmt("n=2: %llu pts, %llu violations (%llu rechecked, %llu one-sided); "
                   "n=3: %llu pts, %llu violations (%llu rechecked, %llu one-sided)",
                   (unsigned long long)g_sweep2.points,
                   (unsigned long long)g_sweep2.bound_violations,
                   (unsigned long long)g_sweep2.rechecks,
                   (unsigned long long)g_sweep2.blind,
                   (unsigned long long)g_sweep3.points,
                   (unsigned long long)g_sweep3.bound_violations,
                   (unsigned long long)g_sweep3.rechecks,
                   (unsigned long long)g_sweep3.blind));
}

void criterion_6() {
  const auto rate = [](const SweepStats& st) {
    return st.points ? 100.0 * (st.points - st.decided) / st.points : 0.0;
  };
  const bool agree2 = g_sweep2.decided == g_sweep2.agreed;
  const bool agree3 = g_sweep3.decided == g_sweep3.agreed;
  const double u2 = rate(g_sweep2), u3 = rate(g_sweep3);
  const bool pass = agree2 && agree3 && u2 <= 50.0 && u3 <= 50.0;
  record("predictor-oracle agreement",
         pass, fmt("n=2: %llu/%llu decided agree, %.1f%% undecided; "
                   "n=3: %llu/%llu agree, %.1f%% undecided (want 100%%, <=50%%)",
                   (unsigned long long)g_sweep2.agreed, (unsigned long long)g_sweep2.decided,
                   u2, (unsigned long long)g_sweep3.agreed,
                   (unsigned long long)g_sweep3.decided, u3));
}

void criterion_7() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(7100);
  std::uniform_real_distribution<double> coeff(-4.0, 4.0);
  int eig_fail = 0, grad_fail = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    auto qf = substitute(QuarticCoefficients{coeff(rng), coeff(rng), coeff(rng),
                                             coeff(rng), n, 1});
    auto sd = spectral(qf);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(qf.lambda0);
    std::vector<double> closed(static_cast<std::size_t>(n - 1), sd.lambda_rep);
    closed.push_back(sd.lambda_axis);
    std::sort(closed.begin(), closed.end());
    const double scale = 1.0 + std::abs(sd.lambda_rep) + std::abs(sd.lambda_axis);
    for (int i = 0; i < n; ++i)
      if (std::abs(es.eigenvalues()(i) - closed[static_cast<std::size_t>(i)]) >
          1e-9 * scale)
        ++eig_fail;

    if (sd.center) {
      std::vector<double> X(static_cast<std::size_t>(n), *sd.center);
      const double h = 1e-6 * (1.0 + std::abs(*sd.center));
      for (int i = 0; i < n; ++i) {
        auto Xp = X, Xm = X;
        Xp[static_cast<std::size_t>(i)] += h;
        Xm[static_cast<std::size_t>(i)] -= h;
        if (std::abs((qf.eval(Xp) - qf.eval(Xm)) / (2.0 * h)) >
            1e-8 * (1.0 + std::abs(*sd.f_center)))
          ++grad_fail;
      }
    }
  }
  const double dt = seconds_since(t0);
  const bool pass = eig_fail == 0 && grad_fail == 0 && dt < 5.0;
  record("spectral closed forms",
         pass, fmt("500 draws: %d eigenvalue misses, %d gradient misses, %.2fs "
                   "(want 0, 0, <5s)", eig_fail, grad_fail, dt));
}

void criterion_8() {
  std::mt19937_64 rng(8100);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  int inv_fail = 0, sub_fail = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    QuarticCoefficients qc{coeff(rng), coeff(rng), coeff(rng), coeff(rng), n, 1};
    auto P = qc.to_invariant();
    std::vector<double> x(static_cast<std::size_t>(n));
    for (auto& v : x) v = coeff(rng);
    std::uniform_int_distribution<std::uint64_t> pick(0, group_order(n) - 1);
    auto g = SignedPermutation::from_index(pick(rng), n);
    auto gx = g.apply(x);
    const double fx = P(x);
    if (std::abs(P(gx) - fx) > 1e-12 * (1.0 + std::abs(fx))) ++inv_fail;
  }
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const int m = 1 + trial % 2;
    QuarticCoefficients qc{coeff(rng), coeff(rng), coeff(rng), coeff(rng), n, m};
    auto qf = substitute(qc);
    std::vector<double> x(static_cast<std::size_t>(n));
    for (auto& v : x) v = 0.7 * coeff(rng);
    Eigen::VectorXd z(n + 1);
    z(0) = 1.0;
    for (int i = 0; i < n; ++i) {
      double u = x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
      for (int k = 1; k < m; ++k) u *= u;
      z(i + 1) = u;
    }
    const double direct = qc.eval(x);
    if (std::abs(direct - z.dot(qf.lambda * z)) > 1e-10 * (1.0 + std::abs(direct)))
      ++sub_fail;
  }
  const bool pass = inv_fail == 0 && sub_fail == 0;
  record("group invariance and substitution",
         pass, fmt("1000 invariance pairs: %d misses; 400 substitution draws "
                   "(m=1,2): %d misses (want 0, 0)", inv_fail, sub_fail));
}

void criterion_9() {
  bool counts_ok = true;
  for (int q = 0; q <= 30; ++q)
    counts_ok = counts_ok && partition_count(q) == count_partitions_slow(q, std::max(q, 1));

  const bool dims_ok = basis_for_degree(2, 8).size() == 1 &&
                       basis_for_degree(4, 8).size() == 2 &&
                       basis_for_degree(6, 8).size() == 3 &&
                       basis_for_degree(8, 8).size() == 5 &&
                       basis_for_degree(8, 2).size() == 3 &&
                       basis_for_degree(8, 3).size() == 4;

  bool mirrors_ok = true;
  for (int n = 1; n <= 8; ++n)
    mirrors_ok = mirrors_ok && mirror_count(n) == static_cast<std::int64_t>(n) * n;

  bool chambers_ok = true;
  for (int n = 1; n <= 3; ++n) {
    auto ar = MirrorArrangement::standard(n);
    std::vector<double> base(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = i + 1.0;
    std::set<std::vector<int>> patterns;
    for (std::uint64_t g = 0; g < group_order(n); ++g)
      patterns.insert(ar.sign_pattern(SignedPermutation::from_index(g, n).apply(base)));
    chambers_ok = chambers_ok && patterns.size() == group_order(n);
  }

  const bool pass = counts_ok && dims_ok && mirrors_ok && chambers_ok;
  record("combinatorial census",
         pass, fmt("partition counts to 30: %s; basis dims 1,2,3,5(+cuts): %s; "
                   "mirrors n^2: %s; chambers 2^n n!: %s",
                   counts_ok ? "ok" : "BAD", dims_ok ? "ok" : "BAD",
                   mirrors_ok ? "ok" : "BAD", chambers_ok ? "ok" : "BAD"));
}

void criterion_10() {
  int brute_fail = 0;
  for (int n = 2; n <= 4; ++n)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      ChamberComponent cc;
      cc.touched_faces.resize(static_cast<std::size_t>(n));
      for (int w = 0; w < n; ++w)
        cc.touched_faces[static_cast<std::size_t>(w)] = (mask >> w) & 1u;
      if (orbit_component_count(cc, n) != orbit_by_points(cc.touched_faces, n))
        ++brute_fail;
    }

  bool closed_ok = true;
  for (int n = 2; n <= 6; ++n) {
    ChamberComponent all, diag;
    all.touched_faces.assign(static_cast<std::size_t>(n), true);
    diag.touched_faces.assign(static_cast<std::size_t>(n), true);
    diag.touched_faces[0] = false;
    closed_ok = closed_ok && orbit_component_count(all, n) == 1 &&
                orbit_component_count(diag, n) == (std::uint64_t{1} << n);
  }

  const bool pass = brute_fail == 0 && closed_ok;
  record("reflection gluing counts",
         pass, fmt("all wall subsets n<=4: %d mismatches; closed forms 1 and 2^n "
                   "to n=6: %s", brute_fail, closed_ok ? "ok" : "BAD"));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();

  int failures = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (!r.pass) ++failures;
    std::printf("[%s] %zu) %s: %s\n", r.pass ? "PASS" : "FAIL", i + 1,
                r.label.c_str(), r.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
              results.size());
  return failures == 0 ? 0 : 1;
}
