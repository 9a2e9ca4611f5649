#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "coxvar/json_io.hpp"
#include "coxvar/oracle.hpp"
#include "coxvar/partitions.hpp"
#include "coxvar/quadric.hpp"
#include "coxvar/topology.hpp"

namespace {

using namespace coxvar;

constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;
constexpr int kExitResource = 4;

std::uint64_t memory_budget_from_env() {
  const char* s = std::getenv("COXVAR_MEM_BUDGET");
  if (!s || !*s) return kDefaultMemoryBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (end == s || *end != '\0' || v == 0) return kDefaultMemoryBudget;
  return v;
}

struct Output {
  std::ofstream file;
  std::ostream* os = &std::cout;

  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    os = &file;
  }
  std::ostream& stream() { return *os; }
};

// "v" for a single value, "lo:hi:step" for an inclusive range
std::vector<double> parse_range(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ':')) {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) throw CLI::ValidationError("range", "bad number: " + tok);
    parts.push_back(v);
  }
  if (parts.size() == 1) return parts;
  if (parts.size() != 3) throw CLI::ValidationError("range", "expected v or lo:hi:step");
  const double lo = parts[0], hi = parts[1], step = parts[2];
  if (!(step > 0) || hi < lo)
    throw CLI::ValidationError("range", "need step > 0 and hi >= lo");
  std::vector<double> out;
  for (double v = lo; v <= hi + step * 1e-9; v += step) out.push_back(v);
  return out;
}

struct CoefficientFlags {
  double A = 0, B = 0, C = 0, D = 0;
  int dim = 2, m = 1;
  double tol = kDefaultTol;

  void attach(CLI::App* cmd) {
    cmd->add_option("--A", A, "coefficient of s2");
    cmd->add_option("--B", B, "coefficient of s1^2");
    cmd->add_option("--C", C, "coefficient of s1");
    cmd->add_option("--D", D, "constant term");
    cmd->add_option("--dim", dim, "number of variables")->check(CLI::Range(2, 64));
    cmd->add_option("--m", m, "substitution exponent (degree 2^(m+1))")
        ->check(CLI::Range(1, 20));
    cmd->add_option("--tol", tol, "relative tolerance")->check(CLI::PositiveNumber);
  }

  QuarticCoefficients coefficients() const { return {A, B, C, D, dim, m}; }
};

void print_prediction_text(std::ostream& os, const QuarticCoefficients& qc,
                           const SpectralData& sd, const QuadricClass& cls,
                           const GeometricCharacteristic& gc) {
  os << "f = " << qc.A << "*s2 + " << qc.B << "*s1^2 + " << qc.C << "*s1 + " << qc.D
     << "  (n=" << qc.n << ", m=" << qc.m << ")\n";
  os << "quadric: " << to_string(cls.kind) << ", inertia (" << cls.n_plus << ","
     << cls.n_minus << "," << cls.n_zero << ")\n";
  os << "eigenvalues: " << sd.lambda_rep << " (x" << (qc.n - 1) << "), "
     << sd.lambda_axis << " (axis)\n";
  if (sd.center) os << "center: " << *sd.center << " per coordinate\n";
  os << "prediction: " << to_string(gc.kind);
  if (gc.kind != VarietyKind::undecided && gc.kind != VarietyKind::empty)
    os << ", total " << gc.total_components << " (compact " << gc.compact_components
       << ", unbounded " << gc.unbounded_components << ")"
       << (gc.nested ? ", nested" : "");
  os << "\n";
  if (gc.betti) {
    os << "betti:";
    for (auto b : *gc.betti) os << " " << b;
    os << "\n";
  }
}

int run_basis(int degree, int dim, const std::string& format, const std::string& out) {
  Output output(out);
  const auto basis = basis_for_degree(degree, dim);
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    nlohmann::ordered_json mono = nlohmann::ordered_json::array();
    for (const auto& p : basis) {
      arr.push_back(p.parts());
      mono.push_back(sigma_monomial(p));
    }
    nlohmann::ordered_json j{
        {"degree", degree}, {"dim", dim}, {"basis", arr}, {"monomials", mono}};
    output.stream() << j.dump(2) << "\n";
  } else {
    for (const auto& p : basis)
      output.stream() << p.to_string() << "  " << sigma_monomial(p) << "\n";
  }
  return 0;
}

int run_predict(const CoefficientFlags& cf, const std::string& format,
                const std::string& out) {
  Output output(out);
  const QuarticCoefficients qc = cf.coefficients();
  const QuadricForm qf = substitute(qc);
  const SpectralData sd = spectral(qf, cf.tol);
  const QuadricClass cls = classify(qf, sd, cf.tol);
  const GeometricCharacteristic gc = predict(qc, cf.tol);

  if (format == "json") {
    nlohmann::ordered_json j{
        {"input", nlohmann::ordered_json{{"A", qc.A},
                                         {"B", qc.B},
                                         {"C", qc.C},
                                         {"D", qc.D},
                                         {"n", qc.n},
                                         {"m", qc.m}}},
        {"quadric", to_json(sd, cls)},
        {"prediction", to_json(gc)}};
    output.stream() << j.dump(2) << "\n";
  } else {
    print_prediction_text(output.stream(), qc, sd, cls, gc);
  }
  if (gc.kind == VarietyKind::undecided) {
    std::cerr << "prediction undecided; run the oracle subcommand for a grid count\n";
    return kExitUndecided;
  }
  return 0;
}

GridSpec resolve_grid(const QuarticCoefficients& qc, const SpectralData& sd, double L,
                      int res) {
  GridSpec g = auto_box(qc, sd);
  if (L > 0) g.half_width = L;
  if (res > 0) g.resolution = res;
  return g;
}

int run_oracle(const CoefficientFlags& cf, double L, int res, const std::string& format,
               const std::string& out) {
  Output output(out);
  const QuarticCoefficients qc = cf.coefficients();
  const SpectralData sd = spectral(substitute(qc), cf.tol);
  const GridSpec g = resolve_grid(qc, sd, L, res);
  GridScan scan(make_field(qc), g, memory_budget_from_env());
  scan.compute_nesting();
  const ComponentReport& report = scan.report();
  if (format == "json") {
    output.stream() << to_json(report).dump(2) << "\n";
  } else {
    output.stream() << "grid: L=" << g.half_width << " r=" << g.resolution << "\n"
                    << "total " << report.total << ", compact " << report.compact_total
                    << ", nesting pairs " << report.nesting_pairs.size() << "\n";
  }
  return 0;
}

int run_sweep(const std::string& ra, const std::string& rb, const std::string& rc,
              const std::string& rd, int dim, int m, double tol, int res,
              std::uint64_t cap, const std::string& out) {
  const auto as = parse_range(ra), bs = parse_range(rb), cs = parse_range(rc),
             ds = parse_range(rd);
  const std::uint64_t points = static_cast<std::uint64_t>(as.size()) * bs.size() *
                               cs.size() * ds.size();
  if (points > cap)
    throw ResourceError("sweep size " + std::to_string(points) + " exceeds cap " +
                        std::to_string(cap));

  Output output(out);
  std::ostream& os = output.stream();
  os << "A,B,C,D,predicted_kind,predicted_total,oracle_total,agree\n";

  const std::uint64_t budget = memory_budget_from_env();
  std::uint64_t decided = 0, agreed = 0;
  for (double A : as)
    for (double B : bs)
      for (double C : cs)
        for (double D : ds) {
          const QuarticCoefficients qc{A, B, C, D, dim, m};
          const GeometricCharacteristic gc = predict(qc, tol);
          const SpectralData sd = spectral(substitute(qc), tol);
          GridSpec g = auto_box(qc, sd);
          g.resolution = res > 0 ? res : (dim == 2 ? 256 : (dim == 3 ? 64 : 32));

          auto scan_at = [&](int r) {
            GridSpec gr = g;
            gr.resolution = r;
            GridScan scan(make_field(qc), gr, budget);
            scan.compute_nesting();
            return scan.report();
          };
          ComponentReport rep = scan_at(g.resolution);

          auto matches = [&](const ComponentReport& r) {
            return gc.total_components == r.total &&
                   gc.compact_components == r.compact_total &&
                   gc.nested == !r.nesting_pairs.empty();
          };
          std::string agree = "na";
          if (gc.kind != VarietyKind::undecided && !rep.one_sided) {
            // a mismatch gets one retry at double resolution before it counts
            if (!matches(rep)) rep = scan_at(2 * g.resolution);
            if (rep.one_sided) {
              agree = "na";
            } else {
              ++decided;
              const bool ok = matches(rep);
              agree = ok ? "true" : "false";
              if (ok) ++agreed;
            }
          }
          os << A << "," << B << "," << C << "," << D << "," << to_string(gc.kind)
             << "," << gc.total_components << "," << rep.total << "," << agree << "\n";
        }

  os << "# points=" << points << " decided=" << decided << " undecided="
     << (points - decided) << " agreement="
     << (decided ? 100.0 * static_cast<double>(agreed) / static_cast<double>(decided)
                 : 100.0)
     << "%\n";
  return 0;
}

int run_mesh(const CoefficientFlags& cf, double L, int res, const std::string& out) {
  const QuarticCoefficients qc = cf.coefficients();
  const SpectralData sd = spectral(substitute(qc), cf.tol);
  GridSpec g = resolve_grid(qc, sd, L, res);
  const ScalarField f = make_field(qc);
  export_mesh(f, g, out);
  GridScan scan(f, g, memory_budget_from_env());
  std::cout << "wrote " << out << " (grid L=" << g.half_width << " r=" << g.resolution
            << "); components: total " << scan.report().total << ", compact "
            << scan.report().compact_total << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"connected components of CB_n-invariant quartic varieties"};
  app.require_subcommand(1);

  // basis
  auto* basis = app.add_subcommand("basis", "list the sigma-monomial basis of a degree");
  int degree = 4, basis_dim = 2;
  std::string basis_format = "text", basis_out;
  basis->add_option("--degree", degree, "even total degree")->required();
  basis->add_option("--dim", basis_dim, "number of variables")->check(CLI::Range(1, 64));
  basis->add_option("--format", basis_format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  basis->add_option("--out", basis_out, "output path (default stdout)");

  // predict
  auto* predict_cmd = app.add_subcommand("predict", "component structure from theory");
  CoefficientFlags pf;
  pf.attach(predict_cmd);
  std::string predict_format = "text", predict_out;
  predict_cmd->add_option("--format", predict_format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  predict_cmd->add_option("--out", predict_out, "output path (default stdout)");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "grid-based component count");
  CoefficientFlags of;
  of.attach(oracle_cmd);
  double oracle_L = 0;
  int oracle_res = 0;
  std::string oracle_format = "json", oracle_out;
  oracle_cmd->add_option("--L", oracle_L, "box half-width (default: auto)");
  oracle_cmd->add_option("--res", oracle_res, "cells per axis (default: auto)");
  oracle_cmd->add_option("--format", oracle_format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  oracle_cmd->add_option("--out", oracle_out, "output path (default stdout)");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "predictor-vs-oracle coefficient sweep");
  std::string sa = "0", sb = "0", sc = "0", sd = "0";
  int sweep_dim = 2, sweep_m = 1, sweep_res = 0;
  double sweep_tol = kDefaultTol;
  std::uint64_t sweep_cap = 10000;
  std::string sweep_out;
  sweep_cmd->add_option("--A", sa, "value or lo:hi:step");
  sweep_cmd->add_option("--B", sb, "value or lo:hi:step");
  sweep_cmd->add_option("--C", sc, "value or lo:hi:step");
  sweep_cmd->add_option("--D", sd, "value or lo:hi:step");
  sweep_cmd->add_option("--dim", sweep_dim, "number of variables")
      ->check(CLI::Range(2, 4));
  sweep_cmd->add_option("--m", sweep_m, "substitution exponent")->check(CLI::Range(1, 20));
  sweep_cmd->add_option("--tol", sweep_tol, "relative tolerance")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--res", sweep_res, "oracle cells per axis (default by dim)");
  sweep_cmd->add_option("--cap", sweep_cap, "maximum number of sweep points");
  sweep_cmd->add_option("--out", sweep_out, "output CSV path (default stdout)");

  // mesh
  auto* mesh_cmd = app.add_subcommand("mesh", "export the zero set (OBJ or contour CSV)");
  CoefficientFlags mf;
  mf.attach(mesh_cmd);
  double mesh_L = 0;
  int mesh_res = 0;
  std::string mesh_out = "variety.obj";
  mesh_cmd->add_option("--L", mesh_L, "box half-width (default: auto)");
  mesh_cmd->add_option("--res", mesh_res, "cells per axis (default: auto)");
  mesh_cmd->add_option("--out", mesh_out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*basis) {
      if (degree < 2 || degree % 2 != 0) {
        std::cerr << "basis: --degree must be even and >= 2\n";
        return kExitUsage;
      }
      return run_basis(degree, basis_dim, basis_format, basis_out);
    }
    if (*predict_cmd) return run_predict(pf, predict_format, predict_out);
    if (*oracle_cmd) return run_oracle(of, oracle_L, oracle_res, oracle_format, oracle_out);
    if (*sweep_cmd)
      return run_sweep(sa, sb, sc, sd, sweep_dim, sweep_m, sweep_tol, sweep_res,
                       sweep_cap, sweep_out);
    if (*mesh_cmd) {
      if (mf.dim != 2 && mf.dim != 3) {
        std::cerr << "mesh: --dim must be 2 or 3\n";
        return kExitUsage;
      }
      return run_mesh(mf, mesh_L, mesh_res, mesh_out);
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
