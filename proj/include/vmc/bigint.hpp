#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vmc/errors.hpp"

namespace vmc {

// Arbitrary-precision nonnegative integer (base 2^32 limbs, little-endian).
// Exact arithmetic only; no floating point anywhere in the bound formulas.
class BigCount {
public:
    BigCount() = default;
    BigCount(uint64_t v);
    static BigCount from_decimal(const std::string& s);

    std::string to_decimal() const;
    bool fits_u64() const;
    uint64_t as_u64() const;  // throws resource_error when too large

    BigCount operator+(const BigCount& o) const;
    BigCount operator-(const BigCount& o) const;  // throws input_error on underflow
    BigCount operator*(const BigCount& o) const;
    BigCount pow(uint64_t e) const;

    int compare(const BigCount& o) const;
    bool operator==(const BigCount& o) const { return compare(o) == 0; }
    bool operator!=(const BigCount& o) const { return compare(o) != 0; }
    bool operator<(const BigCount& o) const { return compare(o) < 0; }
    bool operator<=(const BigCount& o) const { return compare(o) <= 0; }
    bool operator>(const BigCount& o) const { return compare(o) > 0; }
    bool operator>=(const BigCount& o) const { return compare(o) >= 0; }

    size_t limb_count() const { return limbs_.size(); }

private:
    void trim();
    std::vector<uint32_t> limbs_;  // empty means zero
};

// exact binomial coefficient C(n, k)
BigCount binomial(uint64_t n, uint64_t k);

}  // namespace vmc
