#pragma once

#include <cstdint>
#include <vector>

namespace vmc {

// Dynamic fixed-width bitset used for adjacency rows and vertex sets.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void flip(int i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    // remove bits present in o
    Bitset& andnot(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
    bool operator<(const Bitset& o) const { return w_ < o.w_; }

    // lowest set bit at or after `from`, or -1
    int next(int from = 0) const {
        if (from >= nbits_) return -1;
        int word = from >> 6;
        uint64_t cur = w_[word] & (~uint64_t(0) << (from & 63));
        while (true) {
            if (cur) {
                int bit = (word << 6) + __builtin_ctzll(cur);
                return bit < nbits_ ? bit : -1;
            }
            if (++word >= (int)w_.size()) return -1;
            cur = w_[word];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int i = next(0); i >= 0; i = next(i + 1)) f(i);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    const std::vector<uint64_t>& words() const { return w_; }

private:
    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace vmc
