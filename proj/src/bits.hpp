#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "rwit/graph.hpp"

namespace rwit::detail {

// Small dynamic bitset with the handful of operations the solvers need.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int capacity() const { return n_; }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    void set_all() {
        for (auto& w : w_) w = ~std::uint64_t(0);
        trim();
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }

    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    Bits& and_not(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    template <class F>
    void for_each(F f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t bits = w_[i];
            while (bits) {
                f(int(i * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;

    void trim() {
        if (n_ & 63) w_.back() &= (~std::uint64_t(0)) >> (64 - (n_ & 63));
        if (n_ == 0) w_.clear();
    }
};

inline std::vector<Bits> adjacency_bits(const Graph& g) {
    std::vector<Bits> adj(g.order(), Bits(g.order()));
    for (int v = 0; v < g.order(); ++v)
        for (int w : g.neighbors(v)) adj[v].set(w);
    return adj;
}

}  // namespace rwit::detail
