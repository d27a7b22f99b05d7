#pragma once

#include <cstdint>
#include <vector>

#include "tmk/geometry.hpp"

namespace tmk_test {

// deterministic PRNG so expected values can be frozen
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  double uniform() { return (next() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  int uniform_int(int a, int b) {  // inclusive
    return a + static_cast<int>(next() % static_cast<std::uint64_t>(b - a + 1));
  }
};

// random convex polygon body: sorted angles, offsets in [0.5, 1.5]
inline tmk::ConvexBodyH random_body(Rng& rng, int min_facets = 4,
                                    int max_facets = 12) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const int n = rng.uniform_int(min_facets, max_facets);
    std::vector<double> ang(n);
    for (double& a : ang) a = rng.uniform(0.0, tmk::kTwoPi);
    std::sort(ang.begin(), ang.end());
    bool ok = true;
    double max_gap = ang.front() + tmk::kTwoPi - ang.back();
    for (int i = 1; i < n; ++i) max_gap = std::max(max_gap, ang[i] - ang[i - 1]);
    if (max_gap > 2.6) ok = false;
    for (int i = 1; ok && i < n; ++i)
      if (ang[i] - ang[i - 1] < 1e-3) ok = false;
    if (!ok) continue;
    std::vector<tmk::UnitDirection> dirs;
    std::vector<double> off;
    for (int i = 0; i < n; ++i) {
      dirs.emplace_back(ang[i]);
      off.push_back(rng.uniform(0.5, 1.5));
    }
    try {
      tmk::ConvexBodyH body(dirs, off);
      double min_len = 1e300;
      for (std::size_t e = 0; e < body.polygon().vertices.size(); ++e)
        min_len = std::min(min_len, body.polygon().edgeLength(e));
      if (body.anyDegenerate() || min_len < 0.05) continue;
      return body;
    } catch (const tmk::invalid_body_error&) {
      continue;
    }
  }
  throw std::runtime_error("random_body: generation failed");
}

}  // namespace tmk_test
