#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace iterforce {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

/// Fixed-universe bit vector over vertices 0..n-1.
///
/// Bits at positions >= universe() are always zero, so word-level AND/popcount
/// never needs masking by callers.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {}
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

    static VertexSet full(std::size_t universe);
    static VertexSet from_indices(std::size_t universe, std::span<const Vertex> members);
    static VertexSet from_words(std::size_t universe, std::span<const Word> words);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t count() const noexcept;
    bool empty() const noexcept;

    bool contains(Vertex v) const noexcept {
        return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
    }
    void insert(Vertex v);
    void erase(Vertex v);

    std::span<const Word> words() const noexcept { return words_; }
    std::span<Word> words() noexcept { return words_; }

    /// Complement within 0..universe()-1.
    VertexSet complement() const;
    bool is_subset_of(const VertexSet& other) const noexcept;
    bool intersects(const VertexSet& other) const noexcept;

    VertexSet& operator|=(const VertexSet& other) noexcept;
    VertexSet& operator&=(const VertexSet& other) noexcept;
    VertexSet& operator-=(const VertexSet& other) noexcept;

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Sorted member list.
    std::vector<Vertex> to_vector() const;
    /// Smallest member, or universe() when empty.
    Vertex first() const noexcept;
    /// Smallest member greater than v, or universe() when none.
    Vertex next(Vertex v) const noexcept;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits != 0) {
                const auto b = static_cast<std::size_t>(std::countr_zero(bits));
                fn(static_cast<Vertex>(w * kWordBits + b));
                bits &= bits - 1;
            }
        }
    }

    /// "{0,2,5}" style rendering.
    std::string to_string() const;

private:
    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

/// Lexicographic order on sorted member lists.
bool lex_less(const VertexSet& a, const VertexSet& b);

}  // namespace iterforce
