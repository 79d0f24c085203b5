#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace rcl {

// Fixed-capacity dynamic bitset sized at construction. Vertex sets and
// adjacency rows all use this; capacity equals the graph order.
class Bitset {
public:
    Bitset() : n_(0) {}
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int capacity() const { return n_; }

    void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    // this := this & ~o
    Bitset& andnot(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    Bitset operator|(const Bitset& o) const {
        Bitset r = *this;
        r |= o;
        return r;
    }
    Bitset operator&(const Bitset& o) const {
        Bitset r = *this;
        r &= o;
        return r;
    }
    Bitset minus(const Bitset& o) const {
        Bitset r = *this;
        r.andnot(o);
        return r;
    }
    Bitset complement() const {
        Bitset r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

    // first set bit at index >= from, or -1
    int next(int from = 0) const {
        if (from >= n_) return -1;
        int wi = from >> 6;
        uint64_t cur = w_[wi] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return (wi << 6) + std::countr_zero(cur);
            if (++wi >= (int)w_.size()) return -1;
            cur = w_[wi];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (int i = next(0); i >= 0; i = next(i + 1)) f(i);
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    static Bitset of(int n, const std::vector<int>& idxs) {
        Bitset b(n);
        for (int i : idxs) b.set(i);
        return b;
    }
    static Bitset full(int n) {
        Bitset b(n);
        for (auto& w : b.w_) w = ~uint64_t{0};
        b.trim();
        return b;
    }

private:
    void trim() {
        if (n_ & 63) w_.back() &= (~uint64_t{0} >> (64 - (n_ & 63)));
    }
    int n_;
    std::vector<uint64_t> w_;
};

}  // namespace rcl
