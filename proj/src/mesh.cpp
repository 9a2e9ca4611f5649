#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "coxvar/oracle.hpp"

namespace coxvar {

namespace {

inline double vertex_coord(int i, int r, double L) {
  return (static_cast<double>(2 * i - r) / r) * L;
}

inline int sgn(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

std::vector<double> eval_grid(const ScalarField& f, const GridSpec& g) {
  const int n = g.n, r = g.resolution;
  std::vector<double> vals(g.vertex_count());
  std::vector<int> idx(n, 0);
  std::vector<double> x(n, vertex_coord(0, r, g.half_width));
  for (std::uint64_t v = 0;; ++v) {
    vals[v] = f(x);
    int a = 0;
    while (a < n) {
      if (++idx[a] <= r) {
        x[a] = vertex_coord(idx[a], r, g.half_width);
        break;
      }
      idx[a] = 0;
      x[a] = vertex_coord(0, r, g.half_width);
      ++a;
    }
    if (a == n) break;
  }
  return vals;
}

void write_contour_csv(const ScalarField& f, const GridSpec& g, const std::string& path) {
  const int r = g.resolution;
  const double L = g.half_width;
  const std::vector<double> vals = eval_grid(f, g);
  const auto at = [&](int i, int j) {
    return vals[static_cast<std::uint64_t>(j) * (r + 1) + i];
  };

  std::ofstream out(path);
  if (!out) throw std::runtime_error("export_mesh: cannot open " + path);
  out << "x1,y1,x2,y2\n";

  char buf[128];
  auto emit = [&](double x1, double y1, double x2, double y2) {
    std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g,%.9g\n", x1, y1, x2, y2);
    out << buf;
  };

  struct Pt {
    double x, y;
  };
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) {
      const double f00 = at(i, j), f10 = at(i + 1, j);
      const double f01 = at(i, j + 1), f11 = at(i + 1, j + 1);
      const double x0 = vertex_coord(i, r, L), x1 = vertex_coord(i + 1, r, L);
      const double y0 = vertex_coord(j, r, L), y1 = vertex_coord(j + 1, r, L);

      Pt pts[4];
      int ids[4];
      int cnt = 0;
      auto cross = [&](double fa, double fb, double ax, double ay, double bx,
                       double by, int edge) {
        if (sgn(fa) == sgn(fb)) return;
        const double t = (fa == fb) ? 0.5 : fa / (fa - fb);
        pts[cnt] = {ax + t * (bx - ax), ay + t * (by - ay)};
        ids[cnt++] = edge;
      };
      cross(f00, f10, x0, y0, x1, y0, 0);  // bottom
      cross(f10, f11, x1, y0, x1, y1, 1);  // right
      cross(f01, f11, x0, y1, x1, y1, 2);  // top
      cross(f00, f01, x0, y0, x0, y1, 3);  // left

      if (cnt == 2) {
        emit(pts[0].x, pts[0].y, pts[1].x, pts[1].y);
      } else if (cnt == 4) {
        // saddle: the center sign says which corners are isolated
        const double center = 0.25 * (f00 + f10 + f01 + f11);
        auto find = [&](int edge) {
          for (int k = 0; k < 4; ++k)
            if (ids[k] == edge) return k;
          return 0;
        };
        if (sgn(center) == sgn(f00)) {
          emit(pts[find(0)].x, pts[find(0)].y, pts[find(1)].x, pts[find(1)].y);
          emit(pts[find(2)].x, pts[find(2)].y, pts[find(3)].x, pts[find(3)].y);
        } else {
          emit(pts[find(0)].x, pts[find(0)].y, pts[find(3)].x, pts[find(3)].y);
          emit(pts[find(1)].x, pts[find(1)].y, pts[find(2)].x, pts[find(2)].y);
        }
      }
    }
}

void write_obj(const ScalarField& f, const GridSpec& g, const std::string& path) {
  const int r = g.resolution;
  const double L = g.half_width;
  const std::vector<double> vals = eval_grid(f, g);
  const std::uint64_t vs = static_cast<std::uint64_t>(r) + 1;
  const auto at = [&](int i, int j, int k) {
    return vals[(static_cast<std::uint64_t>(k) * vs + j) * vs + i];
  };

  std::ofstream out(path);
  if (!out) throw std::runtime_error("export_mesh: cannot open " + path);
  out << "# isosurface f = 0, box [-L,L]^3, L=" << L << ", r=" << r << "\n";

  // one mesh vertex per surface cell, at the mean of its edge crossings
  std::vector<std::int32_t> cell_vertex(static_cast<std::size_t>(r) * r * r, -1);
  const auto cell_id = [&](int i, int j, int k) {
    return (static_cast<std::size_t>(k) * r + j) * r + i;
  };

  static const int corner[8][3] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                                   {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  static const int edge[12][2] = {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {0, 2}, {1, 3},
                                  {4, 6}, {5, 7}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};

  char buf[160];
  std::int32_t next_vertex = 0;
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < r; ++i) {
        double fv[8];
        for (int c = 0; c < 8; ++c)
          fv[c] = at(i + corner[c][0], j + corner[c][1], k + corner[c][2]);
        double px = 0, py = 0, pz = 0;
        int crossings = 0;
        for (const auto& e : edge) {
          const double fa = fv[e[0]], fb = fv[e[1]];
          if (sgn(fa) == sgn(fb)) continue;
          const double t = (fa == fb) ? 0.5 : fa / (fa - fb);
          const int* ca = corner[e[0]];
          const int* cb = corner[e[1]];
          px += vertex_coord(i + ca[0], r, L) +
                t * (vertex_coord(i + cb[0], r, L) - vertex_coord(i + ca[0], r, L));
          py += vertex_coord(j + ca[1], r, L) +
                t * (vertex_coord(j + cb[1], r, L) - vertex_coord(j + ca[1], r, L));
          pz += vertex_coord(k + ca[2], r, L) +
                t * (vertex_coord(k + cb[2], r, L) - vertex_coord(k + ca[2], r, L));
          ++crossings;
        }
        if (crossings == 0) continue;
        cell_vertex[cell_id(i, j, k)] = next_vertex++;
        std::snprintf(buf, sizeof buf, "v %.9g %.9g %.9g\n", px / crossings,
                      py / crossings, pz / crossings);
        out << buf;
      }

  // one quad (two triangles) around every interior grid edge with a crossing
  auto quad = [&](std::int32_t c0, std::int32_t c1, std::int32_t c2, std::int32_t c3,
                  bool flip) {
    if (c0 < 0 || c1 < 0 || c2 < 0 || c3 < 0) return;
    if (flip) std::swap(c1, c3);
    std::snprintf(buf, sizeof buf, "f %d %d %d\nf %d %d %d\n", c0 + 1, c1 + 1, c2 + 1,
                  c0 + 1, c2 + 1, c3 + 1);
    out << buf;
  };

  for (int k = 0; k <= r; ++k)
    for (int j = 0; j <= r; ++j)
      for (int i = 0; i <= r; ++i) {
        const double f0 = at(i, j, k);
        // x-edge
        if (i < r && j > 0 && j < r && k > 0 && k < r) {
          const double f1 = at(i + 1, j, k);
          if (sgn(f0) != sgn(f1))
            quad(cell_vertex[cell_id(i, j - 1, k - 1)], cell_vertex[cell_id(i, j, k - 1)],
                 cell_vertex[cell_id(i, j, k)], cell_vertex[cell_id(i, j - 1, k)],
                 sgn(f0) < sgn(f1));
        }
        // y-edge
        if (j < r && i > 0 && i < r && k > 0 && k < r) {
          const double f1 = at(i, j + 1, k);
          if (sgn(f0) != sgn(f1))
            quad(cell_vertex[cell_id(i - 1, j, k - 1)], cell_vertex[cell_id(i - 1, j, k)],
                 cell_vertex[cell_id(i, j, k)], cell_vertex[cell_id(i, j, k - 1)],
                 sgn(f0) < sgn(f1));
        }
        // z-edge
        if (k < r && i > 0 && i < r && j > 0 && j < r) {
          const double f1 = at(i, j, k + 1);
          if (sgn(f0) != sgn(f1))
            quad(cell_vertex[cell_id(i - 1, j - 1, k)], cell_vertex[cell_id(i, j - 1, k)],
                 cell_vertex[cell_id(i, j, k)], cell_vertex[cell_id(i - 1, j, k)],
                 sgn(f0) < sgn(f1));
        }
      }
}

}  // namespace

void export_mesh(const ScalarField& f, const GridSpec& g, const std::string& path) {
  g.validate();
  if (g.n == 2)
    write_contour_csv(f, g, path);
  else if (g.n == 3)
    write_obj(f, g, path);
  else
    throw std::invalid_argument("export_mesh: only n = 2 or 3 supported");
}

}  // namespace coxvar
