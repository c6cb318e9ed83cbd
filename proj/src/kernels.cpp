#include "crithg/kernels.hpp"

#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace crithg {

BitMatrix BitMatrix::from_edges(int n, const std::vector<Edge>& edges) {
    BitMatrix m = BitMatrix::empty(n, edges.size());
    for (const Edge& e : edges) m.push_row(e);
    return m;
}

BitMatrix BitMatrix::empty(int n, std::size_t reserve_rows) {
    BitMatrix m;
    m.n = n;
    m.words = static_cast<std::size_t>(n + 63) / 64;
    if (m.words == 0) m.words = 1;
    m.bits.reserve(reserve_rows * m.words);
    return m;
}

void BitMatrix::push_row(const Edge& e) {
    const std::size_t base = bits.size();
    bits.resize(base + words, 0);
    for (Vertex v : e) bits[base + static_cast<std::size_t>(v) / 64] |= 1ull << (v % 64);
    ++rows;
}

bool masks_intersect(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w)
        if (a[w] & b[w]) return true;
    return false;
}

// --- first disjoint pair -----------------------------------------------------

std::optional<std::pair<std::size_t, std::size_t>> first_disjoint_pair_serial(const BitMatrix& m) {
    for (std::size_t i = 0; i + 1 < m.rows; ++i)
        for (std::size_t j = i + 1; j < m.rows; ++j)
            if (!m.rows_intersect(i, j)) return std::make_pair(i, j);
    return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> first_disjoint_pair_parallel(const BitMatrix& m) {
#ifdef _OPENMP
    const std::size_t rows = m.rows;
    std::size_t best_i = rows, best_j = rows;
#pragma omp parallel
    {
        std::size_t loc_i = rows, loc_j = rows;
#pragma omp for schedule(dynamic, 16) nowait
        for (long long i = 0; i < static_cast<long long>(rows); ++i) {
            const std::size_t ui = static_cast<std::size_t>(i);
            if (ui >= loc_i) continue; // a smaller i already found locally
            for (std::size_t j = ui + 1; j < rows; ++j) {
                if (!m.rows_intersect(ui, j)) {
                    loc_i = ui;
                    loc_j = j;
                    break; // first j for this i is the smallest
                }
            }
        }
#pragma omp critical
        {
            if (loc_i < best_i || (loc_i == best_i && loc_j < best_j)) {
                best_i = loc_i;
                best_j = loc_j;
            }
        }
    }
    if (best_i < rows) return std::make_pair(best_i, best_j);
    return std::nullopt;
#else
    return first_disjoint_pair_serial(m);
#endif
}

// --- covering-subset scan ----------------------------------------------------

namespace {

bool subset_covers(const std::uint64_t* mask, const BitMatrix& m) {
    for (std::size_t i = 0; i < m.rows; ++i)
        if (!masks_intersect(mask, m.row(i), m.words)) return false;
    return true;
}

void fill_mask(const std::vector<int>& comb, std::vector<std::uint64_t>& mask) {
    std::fill(mask.begin(), mask.end(), 0);
    for (int v : comb) mask[static_cast<std::size_t>(v) / 64] |= 1ull << (v % 64);
}

} // namespace

std::optional<Edge> find_covering_subset_serial(const BitMatrix& m, int size) {
    if (size < 0 || size > m.n) return std::nullopt;
    if (m.rows == 0) {
        // Everything covers an edgeless hypergraph; the first subset wins.
        std::vector<int> comb(size);
        for (int i = 0; i < size; ++i) comb[i] = i;
        return comb;
    }
    std::vector<int> comb(size);
    for (int i = 0; i < size; ++i) comb[i] = i;
    std::vector<std::uint64_t> mask(m.words, 0);
    if (size == 0) return subset_covers(mask.data(), m) ? std::optional<Edge>(Edge{}) : std::nullopt;
    do {
        fill_mask(comb, mask);
        if (subset_covers(mask.data(), m)) return comb;
    } while (next_combination(comb, m.n));
    return std::nullopt;
}

std::optional<Edge> find_covering_subset_parallel(const BitMatrix& m, int size) {
#ifdef _OPENMP
    if (size < 0 || size > m.n) return std::nullopt;
    if (m.rows == 0 || size == 0) return find_covering_subset_serial(m, size);
    const std::uint64_t total = binomial_u64(m.n, size);
    if (total == std::numeric_limits<std::uint64_t>::max())
        throw std::invalid_argument("find_covering_subset: rank space overflow");

    // Per-subset cost is skewed (low ranks intersect more early rows before
    // failing), so hand out rank blocks dynamically. The shared bound only
    // skips blocks that cannot beat an already-found rank, keeping the
    // min-reduction result schedule-independent.
    constexpr std::uint64_t kBlock = 4096;
    const std::uint64_t nblocks = (total + kBlock - 1) / kBlock;
    std::uint64_t best_rank = total;
#pragma omp parallel
    {
        std::uint64_t found = total;
        std::vector<int> comb;
        std::vector<std::uint64_t> mask(m.words, 0);
#pragma omp for schedule(dynamic) nowait
        for (long long bi = 0; bi < static_cast<long long>(nblocks); ++bi) {
            const std::uint64_t lo = static_cast<std::uint64_t>(bi) * kBlock;
            if (found <= lo) continue;
            std::uint64_t shared;
#pragma omp atomic read
            shared = best_rank;
            if (shared <= lo) continue;
            const std::uint64_t hi = std::min(lo + kBlock, total);
            comb = unrank_combination(m.n, size, lo);
            for (std::uint64_t rank = lo; rank < hi; ++rank) {
                fill_mask(comb, mask);
                if (subset_covers(mask.data(), m)) {
                    found = std::min(found, rank);
#pragma omp critical
                    {
                        if (rank < best_rank) best_rank = rank;
                    }
                    break;
                }
                next_combination(comb, m.n);
            }
        }
#pragma omp critical
        {
            if (found < best_rank) best_rank = found;
        }
    }
    if (best_rank == total) return std::nullopt;
    return unrank_combination(m.n, size, best_rank);
#else
    return find_covering_subset_serial(m, size);
#endif
}

// --- greedy round scan -------------------------------------------------------

namespace {

std::uint64_t disjoint_count(const BitMatrix& candidates, std::size_t c, const BitMatrix& uncovered) {
    const std::uint64_t* cm = candidates.row(c);
    std::uint64_t gain = 0;
    for (std::size_t u = 0; u < uncovered.rows; ++u)
        if (!masks_intersect(cm, uncovered.row(u), candidates.words)) ++gain;
    return gain;
}

} // namespace

RoundScan greedy_round_scan_serial(const BitMatrix& candidates, const BitMatrix& uncovered) {
    RoundScan best;
    for (std::size_t c = 0; c < candidates.rows; ++c) {
        const std::uint64_t gain = disjoint_count(candidates, c, uncovered);
        if (gain > best.best_gain) {
            best.best_gain = gain;
            best.best_index = c;
        }
    }
    return best;
}

RoundScan greedy_round_scan_parallel(const BitMatrix& candidates, const BitMatrix& uncovered) {
#ifdef _OPENMP
    RoundScan best;
#pragma omp parallel
    {
        RoundScan loc;
#pragma omp for schedule(static) nowait
        for (long long c = 0; c < static_cast<long long>(candidates.rows); ++c) {
            const std::uint64_t gain = disjoint_count(candidates, static_cast<std::size_t>(c), uncovered);
            if (gain > loc.best_gain) {
                loc.best_gain = gain;
                loc.best_index = static_cast<std::size_t>(c);
            }
        }
#pragma omp critical
        {
            if (loc.best_gain > best.best_gain ||
                (loc.best_gain == best.best_gain && loc.best_gain > 0 && loc.best_index < best.best_index)) {
                best = loc;
            }
        }
    }
    return best;
#else
    return greedy_round_scan_serial(candidates, uncovered);
#endif
}

// --- dispatchers ---------------------------------------------------------------

std::optional<std::pair<std::size_t, std::size_t>> first_disjoint_pair(const BitMatrix& m) {
#ifdef _OPENMP
    // Parallel setup costs more than small scans.
    if (m.rows >= 256) return first_disjoint_pair_parallel(m);
#endif
    return first_disjoint_pair_serial(m);
}

std::optional<Edge> find_covering_subset(const BitMatrix& m, int size) {
#ifdef _OPENMP
    if (binomial_u64(m.n, size) >= 4096 && m.rows > 0 && size > 0)
        return find_covering_subset_parallel(m, size);
#endif
    return find_covering_subset_serial(m, size);
}

RoundScan greedy_round_scan(const BitMatrix& candidates, const BitMatrix& uncovered) {
#ifdef _OPENMP
    if (candidates.rows * uncovered.rows >= 1ull << 16)
        return greedy_round_scan_parallel(candidates, uncovered);
#endif
    return greedy_round_scan_serial(candidates, uncovered);
}

// --- combination helpers -------------------------------------------------------

bool next_combination(std::vector<int>& comb, int n) {
    const int k = static_cast<int>(comb.size());
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    return true;
}

std::uint64_t binomial_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
        if (r > kMax / factor) return kMax; // saturate
        r = r * factor / static_cast<std::uint64_t>(i);
    }
    return r;
}

std::vector<int> unrank_combination(int n, int k, std::uint64_t rank) {
    std::vector<int> comb;
    comb.reserve(k);
    int v = 0;
    for (int slot = k; slot > 0; --slot) {
        // Count combinations starting with each candidate value until rank fits.
        while (true) {
            const std::uint64_t below = binomial_u64(n - v - 1, slot - 1);
            if (rank < below) break;
            rank -= below;
            ++v;
        }
        comb.push_back(v);
        ++v;
    }
    return comb;
}

} // namespace crithg
