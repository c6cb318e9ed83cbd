// Times the serial reference kernels against their OpenMP forms on
// intersecting instances large enough that the scans run to completion,
// and checks that both forms return identical results.

#include "crithg/generators.hpp"
#include "crithg/kernels.hpp"
#include "crithg/transforms.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace crithg;

namespace {

double time_ms(const std::function<void()>& fn, int reps = 3) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
        if (dt.count() < best) best = dt.count();
    }
    return best;
}

void report(const char* name, const char* size, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-22s %-28s %10.2f %10.2f %8.2fx   %s\n", name, size, serial_ms, parallel_ms,
                serial_ms / parallel_ms, equal ? "results equal" : "RESULTS DIFFER");
}

std::vector<Edge> all_subsets(int n, int k) {
    std::vector<Edge> out;
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    do {
        out.push_back(comb);
    } while (next_combination(comb, n));
    return out;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel forms fall back to serial\n\n");
#endif
    std::printf("%-22s %-28s %10s %10s %9s\n", "kernel", "instance", "serial", "parallel",
                "speedup");

    {
        // Intersecting product: the pairwise scan runs over all pairs.
        const Hypergraph fano = projective_plane(2);
        const Hypergraph big = wreath_product(fano, fano); // 2401 edges, 49 vertices
        const BitMatrix m = BitMatrix::from_edges(big.n(), big.edges());
        std::optional<std::pair<std::size_t, std::size_t>> rs, rp;
        const double s = time_ms([&] { rs = first_disjoint_pair_serial(m); });
        const double p = time_ms([&] { rp = first_disjoint_pair_parallel(m); });
        report("first_disjoint_pair", "plane^{x}plane, 2401 edges", s, p, rs == rp);
    }

    {
        // No size-7 cover exists, so the subset scan is exhaustive.
        const Hypergraph k243 = complete_uniform(24, 3, 3000);
        const BitMatrix m = BitMatrix::from_edges(k243.n(), k243.edges());
        std::optional<Edge> rs, rp;
        const double s = time_ms([&] { rs = find_covering_subset_serial(m, 7); });
        const double p = time_ms([&] { rp = find_covering_subset_parallel(m, 7); });
        report("find_covering_subset", "K_24^(3), C(24,7) subsets", s, p, rs == rp);
    }

    {
        const BitMatrix cands = BitMatrix::from_edges(20, all_subsets(20, 5));   // 15504
        const BitMatrix uncovered = BitMatrix::from_edges(20, all_subsets(20, 4)); // 4845
        RoundScan rs, rp;
        const double s = time_ms([&] { rs = greedy_round_scan_serial(cands, uncovered); });
        const double p = time_ms([&] { rp = greedy_round_scan_parallel(cands, uncovered); });
        report("greedy_round_scan", "n=20 r=5, 15504x4845", s, p,
               rs.best_index == rp.best_index && rs.best_gain == rp.best_gain);
    }

    return 0;
}
