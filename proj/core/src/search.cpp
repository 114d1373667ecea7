#include "iterforce/search.hpp"

#include <stdexcept>
#include <string>

namespace iterforce {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
    if (k > n) return 0;
    k = std::min(k, n - k);
    u128 acc = 1;
    constexpr auto kMax = static_cast<u128>(std::numeric_limits<std::uint64_t>::max());
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > kMax) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

std::vector<Vertex> unrank_combination(std::size_t n, std::size_t k, std::uint64_t rank) {
    if (rank >= binomial(n, k)) {
        throw std::out_of_range("rank " + std::to_string(rank) + " out of range for C(" + std::to_string(n) + "," +
                                std::to_string(k) + ")");
    }
    std::vector<Vertex> combo;
    combo.reserve(k);
    std::size_t candidate = 0;
    for (std::size_t slot = 0; slot < k; ++slot) {
        while (true) {
            const std::uint64_t block = binomial(n - candidate - 1, k - slot - 1);
            if (rank < block) break;
            rank -= block;
            ++candidate;
        }
        combo.push_back(static_cast<Vertex>(candidate));
        ++candidate;
    }
    return combo;
}

std::uint64_t rank_combination(std::size_t n, std::span<const Vertex> combo) {
    const std::size_t k = combo.size();
    std::uint64_t rank = 0;
    std::size_t candidate = 0;
    for (std::size_t slot = 0; slot < k; ++slot) {
        for (; candidate < combo[slot]; ++candidate) rank += binomial(n - candidate - 1, k - slot - 1);
        ++candidate;
    }
    return rank;
}

bool next_combination(std::vector<Vertex>& combo, std::size_t n) noexcept {
    const std::size_t k = combo.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (combo[i] < n - k + i) {
            ++combo[i];
            for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace iterforce
