#include "vmc/bigint.hpp"

#include <algorithm>

namespace vmc {

BigCount::BigCount(uint64_t v) {
    while (v) {
        limbs_.push_back((uint32_t)(v & 0xffffffffu));
        v >>= 32;
    }
}

void BigCount::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

bool BigCount::fits_u64() const { return limbs_.size() <= 2; }

uint64_t BigCount::as_u64() const {
    if (!fits_u64()) throw resource_error("BigCount: value exceeds 64 bits");
    uint64_t v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
    return v;
}

int BigCount::compare(const BigCount& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for (size_t i = limbs_.size(); i-- > 0;)
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
    return 0;
}

BigCount BigCount::operator+(const BigCount& o) const {
    BigCount r;
    size_t n = std::max(limbs_.size(), o.limbs_.size());
    r.limbs_.reserve(n + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
        uint64_t s = carry;
        if (i < limbs_.size()) s += limbs_[i];
        if (i < o.limbs_.size()) s += o.limbs_[i];
        r.limbs_.push_back((uint32_t)(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) r.limbs_.push_back((uint32_t)carry);
    return r;
}

BigCount BigCount::operator-(const BigCount& o) const {
    if (compare(o) < 0) throw input_error("BigCount: negative result");
    BigCount r;
    r.limbs_.reserve(limbs_.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        int64_t d = (int64_t)limbs_[i] - borrow - (i < o.limbs_.size() ? o.limbs_[i] : 0);
        borrow = 0;
        if (d < 0) {
            d += ((int64_t)1 << 32);
            borrow = 1;
        }
        r.limbs_.push_back((uint32_t)d);
    }
    r.trim();
    return r;
}

BigCount BigCount::operator*(const BigCount& o) const {
    if (limbs_.empty() || o.limbs_.empty()) return BigCount();
    if (limbs_.size() + o.limbs_.size() > 300000)
        throw resource_error("BigCount: product too large");
    BigCount r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.limbs_.size(); ++j) {
            uint64_t cur = r.limbs_[i + j] + (uint64_t)limbs_[i] * o.limbs_[j] + carry;
            r.limbs_[i + j] = (uint32_t)(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + o.limbs_.size();
        while (carry) {
            uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = (uint32_t)(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

BigCount BigCount::pow(uint64_t e) const {
    BigCount base = *this, acc(1);
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

BigCount BigCount::from_decimal(const std::string& s) {
    if (s.empty()) throw input_error("BigCount: empty decimal");
    BigCount r;
    for (char c : s) {
        if (c < '0' || c > '9') throw input_error("BigCount: bad decimal digit");
        // r = r*10 + digit
        uint64_t carry = (uint64_t)(c - '0');
        for (size_t i = 0; i < r.limbs_.size(); ++i) {
            uint64_t cur = (uint64_t)r.limbs_[i] * 10 + carry;
            r.limbs_[i] = (uint32_t)(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        while (carry) {
            r.limbs_.push_back((uint32_t)(carry & 0xffffffffu));
            carry >>= 32;
        }
    }
    r.trim();
    return r;
}

std::string BigCount::to_decimal() const {
    if (limbs_.empty()) return "0";
    std::vector<uint32_t> work = limbs_;
    std::string out;
    while (!work.empty()) {
        // divide by 1e9, collecting the remainder
        uint64_t rem = 0;
        for (size_t i = work.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | work[i];
            work[i] = (uint32_t)(cur / 1000000000ull);
            rem = cur % 1000000000ull;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        for (int d = 0; d < 9; ++d) {
            out.push_back((char)('0' + rem % 10));
            rem /= 10;
        }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    std::reverse(out.begin(), out.end());
    return out;
}

BigCount binomial(uint64_t n, uint64_t k) {
    if (k > n) return BigCount();
    if (n > 4096) throw resource_error("binomial: n too large");
    // Pascal's triangle row by row; division-free and exact
    std::vector<BigCount> row{BigCount(1)};
    for (uint64_t r = 1; r <= n; ++r) {
        std::vector<BigCount> nxt(row.size() + 1, BigCount(1));
        for (size_t j = 1; j < row.size(); ++j) nxt[j] = row[j - 1] + row[j];
        row = std::move(nxt);
    }
    return row[k];
}

}  // namespace vmc
