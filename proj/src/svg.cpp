#include "alcovewalks/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace aw {

namespace {

struct XY {
  double x = 0, y = 0;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

struct Plane {
  const RootDatum& R;
  XY P1, P2;     // images of the fundamental coweights
  double A[2][2];    // t -> xy
  double Ainv[2][2];

  explicit Plane(const RootDatum& R_) : R(R_) {
    check(R.nsimple == 2, Errc::InvalidArgument, "rendering needs semisimple rank 2");
    // Cartan matrix and its inverse (rank 2).
    double C[2][2], M[2][2];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        C[i][j] = static_cast<double>(dot(R.spec.simple_roots[static_cast<std::size_t>(i)],
                                          R.spec.simple_coroots[static_cast<std::size_t>(j)]));
    double det = C[0][0] * C[1][1] - C[0][1] * C[1][0];
    M[0][0] = C[1][1] / det;
    M[1][1] = C[0][0] / det;
    M[0][1] = -C[0][1] / det;
    M[1][0] = -C[1][0] / det;
    // Invariant form on the coroot span, then the Gram matrix of the
    // fundamental coweights pinned down by it.
    double Bc[2][2] = {{0, 0}, {0, 0}};
    for (const Vec& alpha : R.pos_roots)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          Bc[i][j] += static_cast<double>(dot(alpha, R.spec.simple_coroots[static_cast<std::size_t>(i)])) *
                      static_cast<double>(dot(alpha, R.spec.simple_coroots[static_cast<std::size_t>(j)]));
    double G[2][2] = {{0, 0}, {0, 0}};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) G[i][j] += M[a][i] * M[b][j] * Bc[a][b];
    double s = std::sqrt(G[0][0]);
    P1 = {s, 0};
    P2 = {G[0][1] / s, std::sqrt(G[1][1] - G[0][1] * G[0][1] / G[0][0])};
    A[0][0] = P1.x;
    A[0][1] = P2.x;
    A[1][0] = P1.y;
    A[1][1] = P2.y;
    double ad = A[0][0] * A[1][1] - A[0][1] * A[1][0];
    Ainv[0][0] = A[1][1] / ad;
    Ainv[1][1] = A[0][0] / ad;
    Ainv[0][1] = -A[0][1] / ad;
    Ainv[1][0] = -A[1][0] / ad;
  }

  XY from_pairing(double t1, double t2) const {
    return {A[0][0] * t1 + A[0][1] * t2, A[1][0] * t1 + A[1][1] * t2};
  }
  XY of_coweight(const Vec& v) const {
    return from_pairing(static_cast<double>(dot(R.spec.simple_roots[0], v)),
                        static_cast<double>(dot(R.spec.simple_roots[1], v)));
  }
  XY of_alcove(const AffElt& a) const {
    Vec num = apply_base_point(R, a);
    double d = static_cast<double>(R.p0_den);
    return from_pairing(static_cast<double>(dot(R.spec.simple_roots[0], num)) / d,
                        static_cast<double>(dot(R.spec.simple_roots[1], num)) / d);
  }
  // Root functional in xy coordinates.
  void root_functional(int root_idx, double& nx, double& ny) const {
    const Vec& c = R.root_simple_coords[static_cast<std::size_t>(root_idx)];
    double c1 = static_cast<double>(c[0]), c2 = static_cast<double>(c[1]);
    nx = c1 * Ainv[0][0] + c2 * Ainv[1][0];
    ny = c1 * Ainv[0][1] + c2 * Ainv[1][1];
  }
};

struct BBox {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  void include(const XY& p) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  void pad(double m) {
    x0 -= m;
    x1 += m;
    y0 -= m;
    y1 += m;
  }
};

// Clip the line {nx*x + ny*y = k} to the box; false if it misses.
bool clip_line(const BBox& b, double nx, double ny, double k, XY& p, XY& q) {
  XY pts[8];
  int n = 0;
  auto try_edge = [&](double x0, double y0, double x1, double y1) {
    double f0 = nx * x0 + ny * y0 - k, f1 = nx * x1 + ny * y1 - k;
    if ((f0 < 0 && f1 < 0) || (f0 > 0 && f1 > 0)) return;
    if (f0 == f1) return;
    double t = f0 / (f0 - f1);
    if (t < -1e-9 || t > 1 + 1e-9) return;
    pts[n++] = {x0 + t * (x1 - x0), y0 + t * (y1 - y0)};
  };
  try_edge(b.x0, b.y0, b.x1, b.y0);
  try_edge(b.x1, b.y0, b.x1, b.y1);
  try_edge(b.x1, b.y1, b.x0, b.y1);
  try_edge(b.x0, b.y1, b.x0, b.y0);
  if (n < 2) return false;
  // Pick the farthest pair (corners can duplicate).
  double best = -1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double d = std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y);
      if (d > best) {
        best = d;
        p = pts[i];
        q = pts[j];
      }
    }
  return best > 1e-9;
}

const char* kPalette[] = {"#d62728", "#2ca02c", "#1f77b4", "#ff7f0e", "#9467bd", "#8c564b"};

}  // namespace

std::string render_walks_svg(const RootDatum& R, const Vec& mu, const Vec* lambda) {
  check(R.is_dominant(mu, R.full_levi()), Errc::NotDominant, "render: mu must be dominant");
  Plane plane(R);

  // Collect the walks first; they decide the picture bounds.
  struct DrawnWalk {
    const LabeledWalk* walk;
    int color;
  };
  WalkFamily fam;
  std::vector<DrawnWalk> drawn;
  std::vector<Vec> endpoints;  // distinct end vertices in first-seen order
  if (lambda) {
    check(coroot_coords(R, vec_sub(mu, *lambda)).has_value(), Errc::PreconditionViolated,
          "render: mu - lambda is not in the coroot lattice");
    std::set<Vec> orbit;
    for (int w = 0; w < static_cast<int>(R.weyl.size()); ++w) orbit.insert(R.act(w, *lambda));
    for (const Vec& lam : orbit) {
      WalkFamily f = maximal_family(R, build_P_family(R, {}, mu, lam));
      for (FamilyEntry& e : f.entries)
        if (!e.walks.empty()) fam.entries.push_back(e);
    }
    for (const FamilyEntry& e : fam.entries) {
      for (const LabeledWalk& w : e.walks) {
        Vec v = w.end.t;
        int color = -1;
        for (std::size_t i = 0; i < endpoints.size(); ++i)
          if (endpoints[i] == v) color = static_cast<int>(i);
        if (color < 0) {
          color = static_cast<int>(endpoints.size());
          endpoints.push_back(v);
        }
        drawn.push_back({&w, color});
      }
    }
  }

  BBox box;
  box.include(plane.of_coweight(Vec(static_cast<std::size_t>(R.rank), 0)));
  box.include(plane.of_alcove(aff_identity(R)));
  std::vector<Vec> mu_orbit;
  for (int w = 0; w < static_cast<int>(R.weyl.size()); ++w) {
    Vec v = R.act(w, vec_neg(mu));
    if (std::find(mu_orbit.begin(), mu_orbit.end(), v) == mu_orbit.end()) mu_orbit.push_back(v);
  }
  std::sort(mu_orbit.begin(), mu_orbit.end());
  for (const Vec& v : mu_orbit) box.include(plane.of_coweight(v));
  for (const DrawnWalk& d : drawn) {
    AffElt x = d.walk->start;
    box.include(plane.of_alcove(x));
    for (const StepLabel& l : d.walk->labels) {
      if (l.kind != StepKind::PositiveFolding)
        x = mul_letter_right(R, x, d.walk->letters[static_cast<std::size_t>(l.step_index)]);
      box.include(plane.of_alcove(x));
    }
  }
  box.pad(0.9);

  double scale = 110.0;
  auto sx = [&](double x) { return (x - box.x0) * scale; };
  auto sy = [&](double y) { return (box.y1 - y) * scale; };  // flip y
  double W = (box.x1 - box.x0) * scale, H = (box.y1 - box.y0) * scale;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(W) + "\" height=\"" + fmt(H) +
         "\" viewBox=\"0 0 " + fmt(W) + " " + fmt(H) + "\">\n";
  svg += "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
         "markerHeight=\"6\" orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\" "
         "fill=\"context-stroke\"/></marker></defs>\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + fmt(W) + "\" height=\"" + fmt(H) + "\" fill=\"#ffffff\"/>\n";

  // Base alcove: triangle 0, w1/c1, w2/c2 for the highest root c1 a1 + c2 a2.
  {
    const Vec& hc = R.root_simple_coords[static_cast<std::size_t>(R.highest_root[0])];
    XY v0 = plane.from_pairing(0, 0);
    XY v1 = plane.from_pairing(1.0 / static_cast<double>(hc[0]), 0);
    XY v2 = plane.from_pairing(0, 1.0 / static_cast<double>(hc[1]));
    svg += "<polygon points=\"" + fmt(sx(v0.x)) + "," + fmt(sy(v0.y)) + " " + fmt(sx(v1.x)) + "," +
           fmt(sy(v1.y)) + " " + fmt(sx(v2.x)) + "," + fmt(sy(v2.y)) + "\" fill=\"#d9d9d9\"/>\n";
  }

  // Hyperplane arrangement.
  for (int idx = 0; idx < static_cast<int>(R.pos_roots.size()); ++idx) {
    double nx, ny;
    plane.root_functional(idx, nx, ny);
    double vals[4] = {nx * box.x0 + ny * box.y0, nx * box.x1 + ny * box.y0, nx * box.x0 + ny * box.y1,
                      nx * box.x1 + ny * box.y1};
    double lo = *std::min_element(vals, vals + 4), hi = *std::max_element(vals, vals + 4);
    for (Int k = static_cast<Int>(std::ceil(lo)); k <= static_cast<Int>(std::floor(hi)); ++k) {
      XY p, q;
      if (!clip_line(box, nx, ny, static_cast<double>(k), p, q)) continue;
      svg += "<line x1=\"" + fmt(sx(p.x)) + "\" y1=\"" + fmt(sy(p.y)) + "\" x2=\"" + fmt(sx(q.x)) +
             "\" y2=\"" + fmt(sy(q.y)) + "\" stroke=\"#b0b0b0\" stroke-width=\"1\"/>\n";
    }
  }

  // Walks: one polyline arrow per crossing, a bounce mark per folding.
  for (const DrawnWalk& d : drawn) {
    const char* color = kPalette[static_cast<std::size_t>(d.color) % 6];
    AffElt x = d.walk->start;
    for (const StepLabel& l : d.walk->labels) {
      int s = d.walk->letters[static_cast<std::size_t>(l.step_index)];
      XY a = plane.of_alcove(x);
      AffElt crossed = mul_letter_right(R, x, s);
      XY b = plane.of_alcove(crossed);
      if (l.kind == StepKind::PositiveFolding) {
        XY mid{(a.x + b.x) / 2, (a.y + b.y) / 2};  // on the fold wall
        svg += "<line x1=\"" + fmt(sx(a.x)) + "\" y1=\"" + fmt(sy(a.y)) + "\" x2=\"" + fmt(sx(mid.x)) +
               "\" y2=\"" + fmt(sy(mid.y)) + "\" stroke=\"" + color +
               "\" stroke-width=\"2\" stroke-dasharray=\"4,3\"/>\n";
        svg += "<circle cx=\"" + fmt(sx(mid.x)) + "\" cy=\"" + fmt(sy(mid.y)) + "\" r=\"4\" fill=\"" +
               color + "\"/>\n";
      } else {
        svg += "<line x1=\"" + fmt(sx(a.x)) + "\" y1=\"" + fmt(sy(a.y)) + "\" x2=\"" + fmt(sx(b.x)) +
               "\" y2=\"" + fmt(sy(b.y)) + "\" stroke=\"" + color +
               "\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n";
        x = crossed;
      }
    }
  }

  // Orbit of -mu in bold, then colored endpoint vertices on top.
  for (const Vec& v : mu_orbit) {
    XY p = plane.of_coweight(v);
    svg += "<circle cx=\"" + fmt(sx(p.x)) + "\" cy=\"" + fmt(sy(p.y)) +
           "\" r=\"5\" fill=\"#000000\"/>\n";
  }
  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    XY p = plane.of_coweight(endpoints[i]);
    const char* color = kPalette[i % 6];
    svg += "<rect x=\"" + fmt(sx(p.x) - 5) + "\" y=\"" + fmt(sy(p.y) - 5) +
           "\" width=\"10\" height=\"10\" fill=\"" + color + "\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace aw
