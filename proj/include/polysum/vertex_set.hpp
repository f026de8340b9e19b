#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace polysum {

// Set of vertex indices as a bitset; the universe size is fixed at creation.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    std::size_t universe() const { return n_; }
    void insert(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void erase(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool contains(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    std::size_t size() const {
        std::size_t c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }
    bool empty() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }

    VertexSet operator&(const VertexSet& o) const {
        VertexSet r = *this;
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
        return r;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    std::size_t intersection_size(const VertexSet& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }
    bool subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    std::vector<std::size_t> elements() const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t x = w_[k];
            while (x) {
                out.push_back(k * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
        return out;
    }

    bool operator==(const VertexSet& o) const { return w_ == o.w_; }
    bool operator<(const VertexSet& o) const { return w_ < o.w_; }

    std::size_t hash() const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (auto x : w_) h = (h ^ x) * 0x100000001b3ull + (h >> 29);
        return h;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace polysum
