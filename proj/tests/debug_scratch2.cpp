#include <cstdio>
#include <cmath>
#include <unordered_map>
#include <vector>
#include <algorithm>

#include "boundarylab/cycles.hpp"

using namespace bdlab;

class PointIndex {
  public:
    explicit PointIndex(double tol) : tol_(tol) {}
    void insert(CirclePoint p, int idx) { map_.emplace(key(p.theta), Entry{p, idx}); }
    std::vector<int> find(CirclePoint p) const {
        std::vector<int> out;
        const std::int64_t k0 = key(p.theta);
        for (std::int64_t k : {k0 - 1, k0, k0 + 1}) {
            auto [lo, hi] = map_.equal_range(wrap_key(k));
            for (auto it = lo; it != hi; ++it)
                if (circ_dist(it->second.p, p) <= tol_) out.push_back(it->second.idx);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
  private:
    struct Entry { CirclePoint p; int idx; };
    std::int64_t key(double theta) const {
        return static_cast<std::int64_t>(std::floor(theta / tol_));
    }
    std::int64_t wrap_key(std::int64_t k) const {
        const std::int64_t n = static_cast<std::int64_t>(std::floor(kTau / tol_));
        if (k < 0) return k + n + 1;
        if (k > n) return k - n - 1;
        return k;
    }
    double tol_;
    std::unordered_multimap<std::int64_t, Entry> map_;
};

int main() {
    PointIndex ix(1e-9);
    ix.insert(CirclePoint{0.261799387799101}, 1);
    const auto hits = ix.find(CirclePoint{0.261799387799209});
    std::printf("hits: %zu\n", hits.size());
    for (int h : hits) std::printf("  idx %d\n", h);

    // consistency-check continuation from both points
    const SurfaceGeometry geom = build_geometry(2);
    const Partition part = partition_midpoint(geom);
    CirclePoint u{0.261799387799209}, l{0.261799387799101};
    for (int s = 0; s < 3; ++s) {
        auto [un, us] = f_step_convention(geom, part, u, true, nullptr);
        auto [ln, ls] = f_step_convention(geom, part, l, true, nullptr);
        std::printf("s=%d u=%.15f (side %d)  l=%.15f (side %d) dist=%.3e\n", s,
                    un.theta, us, ln.theta, ls, circ_dist(un, ln));
        u = un; l = ln;
    }
    return 0;
}
