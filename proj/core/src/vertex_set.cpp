#include "iterforce/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace iterforce {

namespace {

void trim_tail(std::vector<Word>& words, std::size_t universe) {
    if (universe % kWordBits != 0 && !words.empty()) {
        words.back() &= (Word{1} << (universe % kWordBits)) - 1;
    }
}

}  // namespace

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
    trim_tail(s.words_, universe);
    return s;
}

VertexSet VertexSet::from_indices(std::size_t universe, std::span<const Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
}

VertexSet VertexSet::from_words(std::size_t universe, std::span<const Word> words) {
    if (words.size() != words_for(universe)) {
        throw std::invalid_argument("VertexSet::from_words: word count does not match universe");
    }
    VertexSet s(universe);
    std::copy(words.begin(), words.end(), s.words_.begin());
    trim_tail(s.words_, universe);
    return s;
}

std::size_t VertexSet::count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool VertexSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void VertexSet::insert(Vertex v) {
    if (v >= universe_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                                std::to_string(universe_));
    }
    words_[v / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
    if (v >= universe_) return;
    words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
}

VertexSet VertexSet::complement() const {
    VertexSet s(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    trim_tail(s.words_, universe_);
    return s;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        const Word o = i < other.words_.size() ? other.words_[i] : 0;
        if ((words_[i] & ~o) != 0) return false;
    }
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
    const std::size_t m = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < m; ++i) {
        if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept {
    const std::size_t m = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < m; ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
    }
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) noexcept {
    const std::size_t m = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < m; ++i) words_[i] &= ~other.words_[i];
    return *this;
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

Vertex VertexSet::first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) return static_cast<Vertex>(w * kWordBits + std::countr_zero(words_[w]));
    }
    return static_cast<Vertex>(universe_);
}

Vertex VertexSet::next(Vertex v) const noexcept {
    std::size_t pos = static_cast<std::size_t>(v) + 1;
    if (pos >= universe_) return static_cast<Vertex>(universe_);
    std::size_t w = pos / kWordBits;
    Word bits = words_[w] & (~Word{0} << (pos % kWordBits));
    while (true) {
        if (bits != 0) return static_cast<Vertex>(w * kWordBits + std::countr_zero(bits));
        if (++w >= words_.size()) return static_cast<Vertex>(universe_);
        bits = words_[w];
    }
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first_member = true;
    for_each([&](Vertex v) {
        if (!first_member) out += ',';
        out += std::to_string(v);
        first_member = false;
    });
    out += '}';
    return out;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    const auto av = a.to_vector();
    const auto bv = b.to_vector();
    return std::lexicographical_compare(av.begin(), av.end(), bv.begin(), bv.end());
}

}  // namespace iterforce
