#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ctc/error.hpp"

namespace ctc {

/// A binary word of length m <= 256. Coordinate i lives in bit (i % 64) of
/// limb i / 64. Words compare as unsigned integers with coordinate i worth
/// 2^i, so for m <= 64 the order agrees with to_u64().
class Word {
public:
    static constexpr int kMaxLength = 256;
    static constexpr int kLimbs = 4;

    Word() = default;
    explicit Word(int m);

    static Word from_u64(int m, uint64_t bits);
    static Word from_string(std::string_view s);
    static Word from_support(int m, const std::vector<int>& support);
    static Word all_ones(int m);

    int length() const { return m_; }
    bool test(int i) const { return (limb_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v = true);
    void flip(int i) { limb_[i >> 6] ^= uint64_t{1} << (i & 63); }

    int weight() const;
    bool is_zero() const;
    std::vector<int> support() const;
    std::string to_string() const;
    uint64_t to_u64() const;

    Word& operator^=(const Word& o);
    Word& operator&=(const Word& o);
    Word& operator|=(const Word& o);
    friend Word operator^(Word a, const Word& b) { return a ^= b; }
    friend Word operator&(Word a, const Word& b) { return a &= b; }
    friend Word operator|(Word a, const Word& b) { return a |= b; }
    Word operator~() const;

    bool operator==(const Word& o) const = default;
    std::strong_ordering operator<=>(const Word& o) const;

    /// Inner product over GF(2).
    bool dot(const Word& o) const;
    Word erased(int i) const;
    Word appended(bool bit) const;
    /// Restriction to the given coordinates, in the given order.
    Word restricted(const std::vector<int>& coords) const;

    const std::array<uint64_t, kLimbs>& limbs() const { return limb_; }
    uint64_t limb(int j) const { return limb_[j]; }
    size_t hash() const;

private:
    int m_ = 0;
    std::array<uint64_t, kLimbs> limb_{};
};

int distance(const Word& a, const Word& b);

struct WordHash {
    size_t operator()(const Word& w) const { return w.hash(); }
};

}  // namespace ctc
