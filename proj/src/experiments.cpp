#include "boundarylab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "boundarylab/parallel.hpp"
#include "boundarylab/rng.hpp"

namespace bdlab {

namespace {

constexpr double kEdgeGuard = 1e-12; // membership guard against roundoff on edges
constexpr std::uint64_t kChunk = 1024; // samples per work unit, fixed

struct SamplePair {
    CirclePoint x, y;
};

SamplePair draw_pair(SplitMix64& rng, double delta_min) {
    for (;;) {
        const CirclePoint x = normalize_angle(rng.u01() * kTau);
        const CirclePoint y = normalize_angle(rng.u01() * kTau);
        if (circ_dist(x, y) >= delta_min) return {x, y};
    }
}

void merge_histogram(std::vector<std::uint64_t>& into,
                     const std::vector<std::uint64_t>& from) {
    if (from.size() > into.size()) into.resize(from.size(), 0);
    for (std::size_t i = 0; i < from.size(); ++i) into[i] += from[i];
}

void record_entry(EntryStats& st, int time) {
    if (static_cast<std::size_t>(time) >= st.histogram.size())
        st.histogram.resize(time + 1, 0);
    ++st.histogram[time];
    ++st.entered;
    st.max_entry_time = std::max(st.max_entry_time, time);
}

EntryStats run_entry_experiment(const SurfaceGeometry& geom, const Partition& part,
                                const RectangularDomain& target,
                                std::uint64_t n_samples, int max_steps,
                                std::uint64_t seed, double delta_min, int threads,
                                bool check_invariance) {
    validate_partition(geom, part);
    EntryStats stats;
    stats.samples = n_samples;
    const int n_chunks = static_cast<int>((n_samples + kChunk - 1) / kChunk);
    std::mutex merge_mtx;

    parallel_chunks(n_chunks, threads, [&](int chunk) {
        EntryStats local;
        const std::uint64_t begin = static_cast<std::uint64_t>(chunk) * kChunk;
        const std::uint64_t end = std::min(n_samples, begin + kChunk);
        for (std::uint64_t s = begin; s < end; ++s) {
            SplitMix64 rng = derived_rng(seed, s);
            SamplePair pt = draw_pair(rng, delta_min);
            int entry = -1;
            double best_exc = exceptional_set_distance(geom, pt.x, pt.y);
            for (int step = 0; step <= max_steps; ++step) {
                if (domain_contains(target, pt.x, pt.y, kEdgeGuard)) {
                    entry = step;
                    break;
                }
                auto [img, side] = F_apply(geom, part, pt.x, pt.y);
                (void)side;
                pt = {img.first, img.second};
                best_exc = std::min(best_exc, exceptional_set_distance(geom, pt.x, pt.y));
            }
            if (entry < 0) {
                ++local.never_entered;
                local.max_nonentrant_exceptional_dist =
                    std::max(local.max_nonentrant_exceptional_dist, best_exc);
                continue;
            }
            record_entry(local, entry);
            if (check_invariance) {
                for (int step = 0; step < 100; ++step) {
                    auto [img, side] = F_apply(geom, part, pt.x, pt.y);
                    (void)side;
                    pt = {img.first, img.second};
                    if (!domain_contains(target, pt.x, pt.y, kEdgeGuard)) ++local.violations;
                }
            }
        }
        std::lock_guard<std::mutex> lock(merge_mtx);
        stats.entered += local.entered;
        stats.violations += local.violations;
        stats.never_entered += local.never_entered;
        stats.max_entry_time = std::max(stats.max_entry_time, local.max_entry_time);
        stats.max_nonentrant_exceptional_dist =
            std::max(stats.max_nonentrant_exceptional_dist,
                     local.max_nonentrant_exceptional_dist);
        merge_histogram(stats.histogram, local.histogram);
    });
    return stats;
}

} // namespace

EntryStats trapping_experiment(const SurfaceGeometry& geom, const Partition& part,
                               const RectangularDomain& psi,
                               std::uint64_t n_samples, int max_steps,
                               std::uint64_t seed, double delta_min, int threads) {
    return run_entry_experiment(geom, part, psi, n_samples, max_steps, seed,
                                delta_min, threads, /*check_invariance=*/true);
}

EntryStats attraction_experiment(const SurfaceGeometry& geom, const Partition& part,
                                 const RectangularDomain& omega,
                                 std::uint64_t n_samples, int max_steps,
                                 std::uint64_t seed, double delta_min, int threads) {
    return run_entry_experiment(geom, part, omega, n_samples, max_steps, seed,
                                delta_min, threads, /*check_invariance=*/false);
}

ResidualWidths symbolic_D_iteration(const SurfaceGeometry& geom, const Partition& part,
                                    int n_iters) {
    const int N = geom.N;
    // residual after one step: [P_{k-1}, s_k] x [Q_k, B_k] with s_k = Q_{k-1}
    std::vector<CirclePoint> s(N + 1);
    for (int k = 1; k <= N; ++k) s[k] = geom.q(k - 1);
    const auto width = [&](int k) { return ccw_delta(geom.p(k - 1), s[k]); };

    ResidualWidths out;
    for (int n = 1; n <= n_iters; ++n) {
        double w_max = 0.0;
        for (int k = 1; k <= N; ++k) w_max = std::max(w_max, width(k));
        out.max_width.push_back(w_max);
        // rect of strip k has y in [Q_k, B_k] subset [A_k, A_{k+1}), so F
        // applies T_k and sends it into strip rho(k)+1
        std::vector<CirclePoint> next(N + 1);
        double r_max = 0.0;
        for (int k = 1; k <= N; ++k) {
            const int kp = geom.wrap(geom.rho(k) + 1);
            next[kp] = geom.gen(k).apply(s[k]);
            const double w_new = ccw_delta(geom.p(kp - 1), next[kp]);
            r_max = std::max(r_max, w_new / width(k));
        }
        out.max_ratio.push_back(r_max);
        s = std::move(next);
    }
    (void)part; // layout depends only on the geometry's P, Q
    return out;
}

double exceptional_set_distance(const SurfaceGeometry& geom, CirclePoint x, CirclePoint y) {
    double best = kTau;
    for (int i = 1; i <= geom.N; ++i) {
        const double dy = circ_dist(y, geom.q(i));
        const CircleArc seg{geom.p(i - 1), geom.p(i), EdgePolicy::closed_closed};
        const double off = ccw_delta(seg.start, x);
        const double dx = off <= arc_length(seg)
                              ? 0.0
                              : std::min(circ_dist(x, seg.start), circ_dist(x, seg.end));
        best = std::min(best, std::max(dx, dy));
    }
    return best;
}

} // namespace bdlab
