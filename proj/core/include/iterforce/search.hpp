#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "iterforce/vertex_set.hpp"

namespace iterforce {

/// Search limits. Candidate limits are deterministic; wall time is not.
struct Budget {
    std::uint64_t max_candidates = std::numeric_limits<std::uint64_t>::max();
    double wall_seconds = std::numeric_limits<double>::infinity();
    unsigned workers = 1;

    static Budget unlimited() { return {}; }
};

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// The k-subset of {0..n-1} at lexicographic rank `rank`.
std::vector<Vertex> unrank_combination(std::size_t n, std::size_t k, std::uint64_t rank);
/// Inverse of unrank_combination.
std::uint64_t rank_combination(std::size_t n, std::span<const Vertex> combo);
/// Advances to the next k-subset in lexicographic order; false after the last.
bool next_combination(std::vector<Vertex>& combo, std::size_t n) noexcept;

struct SubsetHit {
    std::vector<Vertex> members;
    std::uint64_t rank = 0;
};

struct SubsetScan {
    std::optional<SubsetHit> hit;
    /// True when part of [0, limit) was skipped because the wall clock ran out
    /// and no hit below the skipped region was found.
    bool timed_out = false;
};

using Deadline = std::chrono::steady_clock::time_point;

inline Deadline deadline_after(double seconds) {
    if (!(seconds < 1e9)) return Deadline::max();
    return std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
}

/// Finds the lexicographically least k-subset of {0..n-1} among ranks
/// [0, limit) accepted by a per-thread predicate. `make_predicate()` is called
/// once per worker and must return a callable
/// `bool(std::span<const Vertex> members, std::span<const Word> bits)`.
///
/// Ranks are handed out in fixed-size chunks; a worker stops once its next
/// chunk starts past the best hit. The result does not depend on the worker
/// count.
template <typename MakePredicate>
SubsetScan find_least_subset(std::size_t n, std::size_t k, std::uint64_t limit, unsigned workers, Deadline deadline,
                             MakePredicate&& make_predicate) {
    constexpr std::uint64_t kChunk = 1U << 12;
    const std::size_t words = words_for(n);
    limit = std::min(limit, binomial(n, k));
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> best{limit};
    std::atomic<std::uint64_t> aborted_at{limit};

    auto worker = [&] {
        auto accept = make_predicate();
        std::vector<Word> bits(words, 0);
        while (true) {
            const std::uint64_t start = next_chunk.fetch_add(1) * kChunk;
            if (start >= limit || start >= best.load()) return;
            if (deadline != Deadline::max() && std::chrono::steady_clock::now() > deadline) {
                std::uint64_t prev = aborted_at.load();
                while (start < prev && !aborted_at.compare_exchange_weak(prev, start)) {
                }
                return;
            }
            const std::uint64_t end = std::min(start + kChunk, limit);
            std::vector<Vertex> combo = unrank_combination(n, k, start);
            for (std::uint64_t r = start; r < end; ++r) {
                if (r >= best.load(std::memory_order_relaxed)) break;
                std::fill(bits.begin(), bits.end(), 0);
                for (Vertex v : combo) bits[v / kWordBits] |= Word{1} << (v % kWordBits);
                if (accept(std::span<const Vertex>(combo), std::span<const Word>(bits))) {
                    std::uint64_t prev = best.load();
                    while (r < prev && !best.compare_exchange_weak(prev, r)) {
                    }
                    break;
                }
                if (r + 1 < end) next_combination(combo, n);
            }
        }
    };

    const unsigned threads = std::max(1U, workers);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    }

    SubsetScan scan;
    const std::uint64_t found = best.load();
    if (found < limit && found < aborted_at.load()) {
        scan.hit = SubsetHit{unrank_combination(n, k, found), found};
    } else if (aborted_at.load() < limit) {
        scan.timed_out = true;
    }
    return scan;
}

}  // namespace iterforce
