#pragma once

#include <utility>
#include <vector>

#include "tmk/common.hpp"

namespace tmk {

// Unit vector on S^1, canonicalized by its angle in [0, 2*pi).
// Directions closer than kAngleSnap are treated as the same direction.
class UnitDirection {
 public:
  static constexpr double kAngleSnap = 1e-10;

  explicit UnitDirection(double angle)
      : angle_(wrap_angle(angle)), cx_(std::cos(angle_)), cy_(std::sin(angle_)) {}

  static UnitDirection fromVector(double x, double y) {
    const double n = std::hypot(x, y);
    if (!(n > 0.0)) throw error("UnitDirection: zero vector");
    return UnitDirection(std::atan2(y, x));
  }

  double angle() const { return angle_; }
  double x() const { return cx_; }
  double y() const { return cy_; }
  Vec2 vec() const { return {cx_, cy_}; }
  double dot(const Vec2& p) const { return cx_ * p.x + cy_ * p.y; }

  // circular angular distance
  double angularDistance(const UnitDirection& o) const {
    double d = std::fabs(angle_ - o.angle_);
    return std::min(d, kTwoPi - d);
  }

  bool almostEqual(const UnitDirection& o) const {
    return angularDistance(o) < kAngleSnap;
  }

 private:
  double angle_;
  double cx_, cy_;
};

// Atoms (direction, weight) on the unit circle. Doubles as the Minkowski
// problem datum mu and as the computed torsional measure.
struct DiscreteMeasure {
  struct Atom {
    UnitDirection dir;
    double weight;
  };
  std::vector<Atom> atoms;

  double totalMass() const;
  // weights >= 0, finite, total mass > 0
  void validate() const;
  // strictly positive weights and spanning directions
  void validateAsMinkowskiDatum() const;
};

// true iff every closed halfplane through the origin misses at least one
// positive-weight direction (2D: all consecutive angular gaps < pi)
bool spanning_check(const DiscreteMeasure& m);
bool spanning_directions(const std::vector<UnitDirection>& dirs);

// V-representation companion of ConvexBodyH: CCW vertices plus the outward
// normal of each edge (edge i runs from vertices[i] to vertices[i+1]).
// source_index[i] is the index of that normal inside the originating body's
// normal list (identity when built standalone).
struct Polygon {
  std::vector<Vec2> vertices;
  std::vector<UnitDirection> facet_normals;
  std::vector<int> source_index;

  double area() const;
  Vec2 centroid() const;
  double edgeLength(std::size_t i) const;
  double diameter() const;
  // signed inward distance of a point to the nearest edge line (>0 inside)
  double inwardMargin(const Vec2& p) const;
  double minInteriorAngle() const;
  void validate() const;
};

double diameter(const Polygon& poly);

// H-representation convex body: intersection of halfplanes x . n_k <= a_k,
// normals strictly increasing in angle, bounded with nonempty interior.
// The vertex polygon is derived once at construction and cached; normals whose
// facet is missing or shorter than facetEps() carry a degeneracy flag.
class ConvexBodyH {
 public:
  ConvexBodyH(std::vector<UnitDirection> normals, std::vector<double> offsets);

  int dim() const { return 2; }
  std::size_t facetCount() const { return normals_.size(); }
  const std::vector<UnitDirection>& normals() const { return normals_; }
  const std::vector<double>& offsets() const { return offsets_; }
  const Polygon& polygon() const { return poly_; }
  const std::vector<bool>& degenerateFlags() const { return degenerate_; }
  bool anyDegenerate() const;

  double support(const UnitDirection& d) const;
  double support(double angle) const { return support(UnitDirection(angle)); }
  double diameter() const { return diameter_; }
  double facetEps() const { return 1e-8 * diameter_; }
  // origin strictly inside, with optional absolute margin
  bool containsOriginInterior(double margin = 0.0) const;
  bool contains(const Vec2& p, double tol = 0.0) const;

  ConvexBodyH translated(const Vec2& y) const;
  ConvexBodyH scaled(double s) const;

 private:
  std::vector<UnitDirection> normals_;
  std::vector<double> offsets_;
  Polygon poly_;
  std::vector<bool> degenerate_;
  double diameter_ = 0.0;
};

// Aleksandrov body of a positive function sampled on a spanning direction
// set: intersection of the halfplanes {x . d <= f(d)}.
ConvexBodyH aleksandrov_body(const std::vector<UnitDirection>& dirs,
                             const std::vector<double>& values);

// Firey combination K +_p t.L realized as the Aleksandrov body of
// (h_K^p + t h_L^p)^(1/p) sampled on both normal fans plus a uniform grid.
// t may be negative as long as the sampled function stays positive (needed by
// the two-sided variational difference quotients).
ConvexBodyH firey_p_sum(const ConvexBodyH& K, const ConvexBodyH& L, double t,
                        double p, int grid = 1024);

struct HausdorffResult {
  double value = 0.0;
  // sampling tolerance of the estimate (grid + one refinement pass)
  double tolerance = 0.0;
};

// sup |h_K - h_L| over both facet-normal fans plus 1024 uniform directions,
// with one local refinement pass around the coarse maximizer
HausdorffResult hausdorff_distance(const ConvexBodyH& K, const ConvexBodyH& L);

// convenience constructors
ConvexBodyH make_box(double hx, double hy);
// inscribed m-gon of the disk of radius R centered at the origin
ConvexBodyH make_disk_polygon(double R, int m = 256);
ConvexBodyH make_regular_polygon(int n_sides, double offset);

}  // namespace tmk
