#include "tmk/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

namespace tmk {

double DiscreteMeasure::totalMass() const {
  double s = 0.0;
  for (const auto& a : atoms) s += a.weight;
  return s;
}

void DiscreteMeasure::validate() const {
  if (atoms.empty()) throw error("measure: no atoms");
  for (const auto& a : atoms) {
    if (!std::isfinite(a.weight) || a.weight < 0.0)
      throw error("measure: weights must be finite and nonnegative");
  }
  if (!(totalMass() > 0.0)) throw error("measure: total mass must be positive");
}

void DiscreteMeasure::validateAsMinkowskiDatum() const {
  validate();
  for (const auto& a : atoms) {
    if (!(a.weight > 0.0))
      throw error("measure: Minkowski datum requires strictly positive weights");
  }
  if (!spanning_check(*this))
    throw error("measure: directions concentrated on a closed hemisphere");
}

bool spanning_directions(const std::vector<UnitDirection>& dirs) {
  if (dirs.size() < 3) return false;
  std::vector<double> ang;
  ang.reserve(dirs.size());
  for (const auto& d : dirs) ang.push_back(d.angle());
  std::sort(ang.begin(), ang.end());
  double max_gap = ang.front() + kTwoPi - ang.back();
  for (std::size_t i = 1; i < ang.size(); ++i)
    max_gap = std::max(max_gap, ang[i] - ang[i - 1]);
  return max_gap < kPi;
}

bool spanning_check(const DiscreteMeasure& m) {
  std::vector<UnitDirection> dirs;
  for (const auto& a : m.atoms)
    if (a.weight > 0.0) dirs.push_back(a.dir);
  return spanning_directions(dirs);
}

double Polygon::area() const {
  double s = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    s += vertices[i].cross(vertices[(i + 1) % vertices.size()]);
  return 0.5 * s;
}

Vec2 Polygon::centroid() const {
  double a6 = 0.0;
  Vec2 c{0.0, 0.0};
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vec2& p = vertices[i];
    const Vec2& r = vertices[(i + 1) % vertices.size()];
    const double w = p.cross(r);
    a6 += w;
    c += (p + r) * w;
  }
  return c * (1.0 / (3.0 * a6));
}

double Polygon::edgeLength(std::size_t i) const {
  return dist(vertices[i], vertices[(i + 1) % vertices.size()]);
}

double Polygon::diameter() const {
  double d2 = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      d2 = std::max(d2, (vertices[i] - vertices[j]).squaredNorm());
  return std::sqrt(d2);
}

double Polygon::inwardMargin(const Vec2& p) const {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const double off = facet_normals[i].dot(vertices[i]);
    m = std::min(m, off - facet_normals[i].dot(p));
  }
  return m;
}

double Polygon::minInteriorAngle() const {
  double a = std::numeric_limits<double>::infinity();
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 u = vertices[(i + 1) % n] - vertices[i];
    const Vec2 v = vertices[(i + n - 1) % n] - vertices[i];
    const double ang = std::acos(std::clamp(
        u.dot(v) / (u.norm() * v.norm()), -1.0, 1.0));
    a = std::min(a, ang);
  }
  return a;
}

void Polygon::validate() const {
  if (vertices.size() < 3) throw invalid_body_error("polygon: fewer than 3 vertices");
  if (facet_normals.size() != vertices.size())
    throw invalid_body_error("polygon: normal count mismatch");
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e0 = vertices[(i + 1) % n] - vertices[i];
    const Vec2 e1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
    if (!(e0.cross(e1) > 0.0))
      throw invalid_body_error("polygon: vertex sequence not strictly convex");
    const Vec2 en = e0.perp() * (-1.0 / e0.norm());  // outward normal of edge i
    const UnitDirection d = UnitDirection::fromVector(en.x, en.y);
    if (d.angularDistance(facet_normals[i]) > 1e-10)
      throw invalid_body_error("polygon: edge normal mismatch");
  }
}

double diameter(const Polygon& poly) { return poly.diameter(); }

namespace {

struct HalfPlane {
  Vec2 n;      // unit outward normal
  double a;    // offset: feasible x satisfies x . n <= a
  int idx;     // position in the body normal list
};

Vec2 line_intersection(const HalfPlane& p, const HalfPlane& q) {
  const double det = p.n.cross(q.n);
  return {(p.a * q.n.y - q.a * p.n.y) / det,
          (q.a * p.n.x - p.a * q.n.x) / det};
}

bool violates(const HalfPlane& h, const Vec2& pt, double eps) {
  return pt.dot(h.n) > h.a + eps;
}

// Is B redundant among the angularly consecutive halfplanes (P, B, S)?
// Three equivalent vertex tests; pick one whose line pair is not near-parallel
// so junk intersection points never decide a pop.
bool redundant_middle(const HalfPlane& P, const HalfPlane& B, const HalfPlane& S,
                      double eps) {
  constexpr double kParallel = 1e-12;
  if (std::fabs(P.n.cross(S.n)) > kParallel)
    return !violates(B, line_intersection(P, S), -eps);
  if (std::fabs(P.n.cross(B.n)) > kParallel)
    return violates(S, line_intersection(P, B), eps);
  if (std::fabs(B.n.cross(S.n)) > kParallel)
    return violates(P, line_intersection(B, S), eps);
  // B strictly between two (near-)opposite normals always cuts their strip
  return false;
}

}  // namespace

ConvexBodyH::ConvexBodyH(std::vector<UnitDirection> normals,
                         std::vector<double> offsets)
    : normals_(std::move(normals)), offsets_(std::move(offsets)) {
  const std::size_t n = normals_.size();
  if (n < 3) throw invalid_body_error("body: needs at least 3 halfplanes");
  if (offsets_.size() != n)
    throw invalid_body_error("body: normals/offsets size mismatch");
  for (double a : offsets_)
    if (!std::isfinite(a)) throw invalid_body_error("body: non-finite offset");
  for (std::size_t i = 1; i < n; ++i) {
    if (normals_[i].angle() <= normals_[i - 1].angle() + UnitDirection::kAngleSnap)
      throw invalid_body_error("body: normals must strictly increase in angle");
  }
  // not concentrated on any closed hemisphere
  double max_gap = normals_.front().angle() + kTwoPi - normals_.back().angle();
  for (std::size_t i = 1; i < n; ++i)
    max_gap = std::max(max_gap, normals_[i].angle() - normals_[i - 1].angle());
  if (!(max_gap < kPi))
    throw invalid_body_error("body: unbounded (normal gap >= pi)");

  double scale = 1.0;
  for (double a : offsets_) scale = std::max(scale, std::fabs(a));
  const double eps = 1e-12 * scale;

  // halfplane intersection, normals already sorted by angle
  std::deque<HalfPlane> dq;
  for (std::size_t i = 0; i < n; ++i) {
    HalfPlane h{normals_[i].vec(), offsets_[i], static_cast<int>(i)};
    while (dq.size() >= 2 && redundant_middle(dq[dq.size() - 2], dq.back(), h, eps))
      dq.pop_back();
    while (dq.size() >= 2 && redundant_middle(h, dq[0], dq[1], eps))
      dq.pop_front();
    dq.push_back(h);
  }
  for (bool changed = true; changed && dq.size() >= 3;) {
    changed = false;
    if (redundant_middle(dq[dq.size() - 2], dq.back(), dq.front(), eps)) {
      dq.pop_back();
      changed = true;
    }
    if (dq.size() >= 3 && redundant_middle(dq.back(), dq.front(), dq[1], eps)) {
      dq.pop_front();
      changed = true;
    }
  }
  if (dq.size() < 3) throw invalid_body_error("body: empty interior");

  std::vector<Vec2> verts(dq.size());
  for (std::size_t i = 0; i < dq.size(); ++i)
    verts[i] = line_intersection(dq[i], dq[(i + 1) % dq.size()]);

  // each surviving halfplane owns the edge from verts[i-1] to verts[i];
  // drop numerically zero-length edges
  const double merge_eps = 1e-12 * std::max(scale, 1.0);
  poly_.vertices.clear();
  poly_.facet_normals.clear();
  poly_.source_index.clear();
  for (std::size_t i = 0; i < dq.size(); ++i) {
    const Vec2 v_prev = verts[(i + dq.size() - 1) % dq.size()];
    const Vec2 v_cur = verts[i];
    if (dist(v_prev, v_cur) <= merge_eps) continue;
    poly_.vertices.push_back(v_prev);
    poly_.facet_normals.push_back(normals_[dq[i].idx]);
    poly_.source_index.push_back(dq[i].idx);
  }
  if (poly_.vertices.size() < 3 || !(poly_.area() > merge_eps * merge_eps))
    throw invalid_body_error("body: empty interior");

  // every vertex must satisfy all constraints
  const double vert_tol = 1e-9 * scale;
  for (const Vec2& v : poly_.vertices)
    for (std::size_t k = 0; k < n; ++k)
      if (normals_[k].dot(v) > offsets_[k] + vert_tol)
        throw invalid_body_error("body: inconsistent halfplane intersection");

  diameter_ = poly_.diameter();

  degenerate_.assign(n, true);
  const double feps = facetEps();
  for (std::size_t e = 0; e < poly_.vertices.size(); ++e) {
    const double len =
        dist(poly_.vertices[e], poly_.vertices[(e + 1) % poly_.vertices.size()]);
    if (len >= feps) degenerate_[poly_.source_index[e]] = false;
  }
}

bool ConvexBodyH::anyDegenerate() const {
  for (bool f : degenerate_)
    if (f) return true;
  return false;
}

double ConvexBodyH::support(const UnitDirection& d) const {
  double h = -std::numeric_limits<double>::infinity();
  for (const Vec2& v : poly_.vertices) h = std::max(h, d.dot(v));
  return h;
}

bool ConvexBodyH::containsOriginInterior(double margin) const {
  for (double a : offsets_)
    if (!(a > margin)) return false;
  return true;
}

bool ConvexBodyH::contains(const Vec2& p, double tol) const {
  for (std::size_t k = 0; k < normals_.size(); ++k)
    if (normals_[k].dot(p) > offsets_[k] + tol) return false;
  return true;
}

ConvexBodyH ConvexBodyH::translated(const Vec2& y) const {
  std::vector<double> off(offsets_);
  for (std::size_t k = 0; k < off.size(); ++k) off[k] += normals_[k].dot(y);
  return ConvexBodyH(normals_, std::move(off));
}

ConvexBodyH ConvexBodyH::scaled(double s) const {
  if (!(s > 0.0)) throw std::domain_error("scale: factor must be positive");
  std::vector<double> off(offsets_);
  for (double& a : off) a *= s;
  return ConvexBodyH(normals_, std::move(off));
}

ConvexBodyH aleksandrov_body(const std::vector<UnitDirection>& dirs,
                             const std::vector<double>& values) {
  if (dirs.size() != values.size() || dirs.empty())
    throw error("aleksandrov_body: bad sample arrays");
  for (double v : values)
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::domain_error("aleksandrov_body: samples must be positive");

  std::vector<std::size_t> order(dirs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return dirs[i].angle() < dirs[j].angle();
  });

  // dedupe directions within the snap tolerance, keeping the tightest offset
  std::vector<UnitDirection> nd;
  std::vector<double> na;
  for (std::size_t oi : order) {
    if (!nd.empty() && nd.back().angularDistance(dirs[oi]) < UnitDirection::kAngleSnap) {
      na.back() = std::min(na.back(), values[oi]);
    } else {
      nd.push_back(dirs[oi]);
      na.push_back(values[oi]);
    }
  }
  if (nd.size() >= 2 &&
      nd.front().angularDistance(nd.back()) < UnitDirection::kAngleSnap) {
    na.front() = std::min(na.front(), na.back());
    nd.pop_back();
    na.pop_back();
  }
  if (!spanning_directions(nd))
    throw invalid_body_error(
        "aleksandrov_body: directions concentrated on a closed hemisphere");
  return ConvexBodyH(std::move(nd), std::move(na));
}

ConvexBodyH firey_p_sum(const ConvexBodyH& K, const ConvexBodyH& L, double t,
                        double p, int grid) {
  if (p < 1.0) throw std::domain_error("firey_p_sum: requires p >= 1");
  if (grid < 64) throw std::domain_error("firey_p_sum: grid must be >= 64");
  if (!K.containsOriginInterior() || !L.containsOriginInterior())
    throw std::domain_error("firey_p_sum: bodies must contain the origin");

  std::vector<UnitDirection> dirs;
  dirs.reserve(K.facetCount() + L.facetCount() + static_cast<std::size_t>(grid));
  dirs.insert(dirs.end(), K.normals().begin(), K.normals().end());
  dirs.insert(dirs.end(), L.normals().begin(), L.normals().end());
  for (int j = 0; j < grid; ++j) dirs.emplace_back(kTwoPi * j / grid);

  std::vector<double> vals;
  vals.reserve(dirs.size());
  for (const auto& d : dirs) {
    const double hk = K.support(d);
    const double hl = L.support(d);
    const double s = std::pow(hk, p) + t * std::pow(hl, p);
    if (!(s > 0.0))
      throw std::domain_error("firey_p_sum: nonpositive support sample (t too negative)");
    vals.push_back(std::pow(s, 1.0 / p));
  }
  return aleksandrov_body(dirs, vals);
}

HausdorffResult hausdorff_distance(const ConvexBodyH& K, const ConvexBodyH& L) {
  std::vector<double> ang;
  for (const auto& d : K.polygon().facet_normals) ang.push_back(d.angle());
  for (const auto& d : L.polygon().facet_normals) ang.push_back(d.angle());
  const int g = 1024;
  for (int j = 0; j < g; ++j) ang.push_back(kTwoPi * j / g);
  std::sort(ang.begin(), ang.end());

  const auto gap = [&](double a) {
    return std::fabs(K.support(a) - L.support(a));
  };
  double best = 0.0, best_a = ang.front();
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < ang.size(); ++i) {
    const double v = gap(ang[i]);
    if (v > best) {
      best = v;
      best_a = ang[i];
      best_i = i;
    }
  }
  // one refinement pass: golden-section inside the bracketing interval
  double lo = ang[(best_i + ang.size() - 1) % ang.size()];
  double hi = ang[(best_i + 1) % ang.size()];
  if (lo > best_a) lo -= kTwoPi;
  if (hi < best_a) hi += kTwoPi;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  for (int it = 0; it < 48 && (b - a) > 1e-14; ++it) {
    if (gap(c) > gap(d)) {
      b = d;
    } else {
      a = c;
    }
    c = b - gr * (b - a);
    d = a + gr * (b - a);
  }
  best = std::max(best, gap(0.5 * (a + b)));

  const double dd = std::max(K.diameter(), L.diameter());
  return {best, (kPi / g) * (kPi / g) * dd};
}

ConvexBodyH make_box(double hx, double hy) {
  std::vector<UnitDirection> nd{UnitDirection(0.0), UnitDirection(kPi / 2),
                                UnitDirection(kPi), UnitDirection(3 * kPi / 2)};
  return ConvexBodyH(std::move(nd), {hx, hy, hx, hy});
}

ConvexBodyH make_disk_polygon(double R, int m) {
  if (m < 3) throw std::domain_error("make_disk_polygon: m < 3");
  // vertices on the circle at angles 2*pi*k/m, facet normals between them
  std::vector<UnitDirection> nd;
  std::vector<double> off;
  const double a = R * std::cos(kPi / m);
  for (int k = 0; k < m; ++k) {
    nd.emplace_back(kTwoPi * (k + 0.5) / m);
    off.push_back(a);
  }
  return ConvexBodyH(std::move(nd), std::move(off));
}

ConvexBodyH make_regular_polygon(int n_sides, double offset) {
  if (n_sides < 3) throw std::domain_error("make_regular_polygon: n < 3");
  std::vector<UnitDirection> nd;
  std::vector<double> off;
  for (int k = 0; k < n_sides; ++k) {
    nd.emplace_back(kTwoPi * k / n_sides);
    off.push_back(offset);
  }
  return ConvexBodyH(std::move(nd), std::move(off));
}

}  // namespace tmk
