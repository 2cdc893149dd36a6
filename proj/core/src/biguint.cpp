#include "problocal/biguint.hpp"

#include <algorithm>

#include "problocal/errors.hpp"

namespace problocal {

BigUint::BigUint(std::uint64_t v) {
    if (v != 0) limbs_.push_back(v);
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::uint64_t BigUint::as_u64() const {
    if (limbs_.size() > 1) throw InputError("BigUint does not fit in 64 bits: " + to_decimal());
    return limbs_.empty() ? 0 : limbs_[0];
}

std::size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint64_t top = limbs_.back();
    std::size_t bits = 0;
    while (top != 0) {
        ++bits;
        top >>= 1;
    }
    return bits + 64 * (limbs_.size() - 1);
}

BigUint& BigUint::operator+=(const BigUint& o) {
    if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        unsigned __int128 s = carry + limbs_[i];
        if (i < o.limbs_.size()) s += o.limbs_[i];
        limbs_[i] = static_cast<std::uint64_t>(s);
        carry = s >> 64;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
    return *this;
}

BigUint& BigUint::operator+=(std::uint64_t o) {
    return *this += BigUint(o);
}

BigUint& BigUint::operator-=(const BigUint& o) {
    if (compare(o) < 0) throw InputError("BigUint subtraction underflow");
    unsigned __int128 borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        unsigned __int128 sub = borrow;
        if (i < o.limbs_.size()) sub += o.limbs_[i];
        if (limbs_[i] >= sub) {
            limbs_[i] = static_cast<std::uint64_t>(limbs_[i] - sub);
            borrow = 0;
        } else {
            unsigned __int128 full = (static_cast<unsigned __int128>(1) << 64) + limbs_[i];
            limbs_[i] = static_cast<std::uint64_t>(full - sub);
            borrow = 1;
        }
    }
    trim();
    return *this;
}

BigUint& BigUint::mul_small(std::uint64_t m) {
    if (m == 0 || limbs_.empty()) {
        limbs_.clear();
        return *this;
    }
    unsigned __int128 carry = 0;
    for (auto& limb : limbs_) {
        unsigned __int128 p = static_cast<unsigned __int128>(limb) * m + carry;
        limb = static_cast<std::uint64_t>(p);
        carry = p >> 64;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
    return *this;
}

std::uint64_t BigUint::divmod_small(std::uint64_t d) {
    if (d == 0) throw InputError("BigUint division by zero");
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        unsigned __int128 cur = (rem << 64) | limbs_[i];
        limbs_[i] = static_cast<std::uint64_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<std::uint64_t>(rem);
}

BigUint BigUint::pow(std::uint64_t base, std::uint64_t exp) {
    BigUint result(1);
    for (std::uint64_t i = 0; i < exp; ++i) result.mul_small(base);
    return result;
}

int BigUint::compare(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::string BigUint::to_decimal() const {
    if (limbs_.empty()) return "0";
    BigUint tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        out.push_back(static_cast<char>('0' + tmp.divmod_small(10)));
    }
    std::reverse(out.begin(), out.end());
    return out;
}

BigUint BigUint::from_decimal(const std::string& s) {
    if (s.empty()) throw InputError("empty integer literal");
    BigUint out;
    for (char c : s) {
        if (c < '0' || c > '9') throw InputError("bad integer literal: " + s);
        out.mul_small(10);
        out += static_cast<std::uint64_t>(c - '0');
    }
    return out;
}

std::vector<std::uint64_t> BigUint::digits(std::uint64_t q, std::size_t count) const {
    BigUint tmp = *this;
    std::vector<std::uint64_t> out(count, 0);
    for (std::size_t i = 0; i < count; ++i) out[i] = tmp.divmod_small(q);
    if (!tmp.is_zero()) throw InputError("BigUint::digits: value exceeds q^count");
    return out;
}

std::size_t BigUint::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t limb : limbs_) {
        h ^= static_cast<std::size_t>(limb);
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace problocal
