#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace problocal {

/// Arbitrary-precision unsigned integer, just big enough for this library:
/// vertex-sequence encodings of virtual graph nodes and color values of the
/// combined coloring stage. Little-endian base-2^64 limbs, no leading zero
/// limb, empty limb vector = 0.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v);

    static BigUint from_decimal(const std::string& s);

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t as_u64() const; // throws InputError if it does not fit

    /// Number of bits in the binary representation (0 for zero).
    std::size_t bit_length() const;

    BigUint& operator+=(const BigUint& o);
    BigUint& operator+=(std::uint64_t o);
    /// Subtraction; requires *this >= o.
    BigUint& operator-=(const BigUint& o);
    BigUint& mul_small(std::uint64_t m);
    /// Divides in place by small d, returns the remainder.
    std::uint64_t divmod_small(std::uint64_t d);

    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }
    friend BigUint operator*(BigUint a, std::uint64_t m) { return a.mul_small(m); }

    static BigUint pow(std::uint64_t base, std::uint64_t exp);

    int compare(const BigUint& o) const;
    friend bool operator==(const BigUint& a, const BigUint& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigUint& a, const BigUint& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigUint& a, const BigUint& b) { return a.compare(b) >= 0; }

    std::string to_decimal() const;

    /// Base-q digits, least significant first, exactly `count` of them.
    /// Requires value < q^count.
    std::vector<std::uint64_t> digits(std::uint64_t q, std::size_t count) const;

    std::size_t hash() const;

private:
    void trim();
    std::vector<std::uint64_t> limbs_;
};

} // namespace problocal
