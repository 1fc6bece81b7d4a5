#include "ctc/word.hpp"

namespace ctc {

namespace {

void check_length(int m) {
    if (m < 0 || m > Word::kMaxLength)
        throw Error("word length " + std::to_string(m) + " outside [0, 256]");
}

void check_same(const Word& a, const Word& b) {
    if (a.length() != b.length())
        throw Error("length mismatch: " + std::to_string(a.length()) + " vs " +
                    std::to_string(b.length()));
}

}  // namespace

Word::Word(int m) : m_(m) { check_length(m); }

Word Word::from_u64(int m, uint64_t bits) {
    Word w(m);
    if (m < 64) bits &= (uint64_t{1} << m) - 1;
    w.limb_[0] = bits;
    return w;
}

Word Word::from_string(std::string_view s) {
    Word w(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            w.set(static_cast<int>(i));
        else if (s[i] != '0')
            throw Error("bad character in word at column " + std::to_string(i + 1));
    }
    return w;
}

Word Word::from_support(int m, const std::vector<int>& support) {
    Word w(m);
    for (int i : support) {
        if (i < 0 || i >= m) throw Error("coordinate " + std::to_string(i) + " out of range");
        w.set(i);
    }
    return w;
}

Word Word::all_ones(int m) {
    Word w(m);
    for (int i = 0; i < m; ++i) w.set(i);
    return w;
}

void Word::set(int i, bool v) {
    uint64_t bit = uint64_t{1} << (i & 63);
    if (v)
        limb_[i >> 6] |= bit;
    else
        limb_[i >> 6] &= ~bit;
}

int Word::weight() const {
    int n = 0;
    for (auto x : limb_) n += std::popcount(x);
    return n;
}

bool Word::is_zero() const { return (limb_[0] | limb_[1] | limb_[2] | limb_[3]) == 0; }

std::vector<int> Word::support() const {
    std::vector<int> out;
    for (int j = 0; j < kLimbs; ++j) {
        uint64_t x = limb_[j];
        while (x) {
            out.push_back(j * 64 + std::countr_zero(x));
            x &= x - 1;
        }
    }
    return out;
}

std::string Word::to_string() const {
    std::string s(m_, '0');
    for (int i = 0; i < m_; ++i)
        if (test(i)) s[i] = '1';
    return s;
}

uint64_t Word::to_u64() const {
    if (m_ > 64) throw Error("to_u64 needs m <= 64");
    return limb_[0];
}

Word& Word::operator^=(const Word& o) {
    check_same(*this, o);
    for (int j = 0; j < kLimbs; ++j) limb_[j] ^= o.limb_[j];
    return *this;
}

Word& Word::operator&=(const Word& o) {
    check_same(*this, o);
    for (int j = 0; j < kLimbs; ++j) limb_[j] &= o.limb_[j];
    return *this;
}

Word& Word::operator|=(const Word& o) {
    check_same(*this, o);
    for (int j = 0; j < kLimbs; ++j) limb_[j] |= o.limb_[j];
    return *this;
}

Word Word::operator~() const { return *this ^ all_ones(m_); }

std::strong_ordering Word::operator<=>(const Word& o) const {
    if (m_ != o.m_) return m_ <=> o.m_;
    for (int j = kLimbs - 1; j >= 0; --j)
        if (limb_[j] != o.limb_[j]) return limb_[j] <=> o.limb_[j];
    return std::strong_ordering::equal;
}

bool Word::dot(const Word& o) const {
    check_same(*this, o);
    int p = 0;
    for (int j = 0; j < kLimbs; ++j) p ^= std::popcount(limb_[j] & o.limb_[j]) & 1;
    return p;
}

Word Word::erased(int i) const {
    if (i < 0 || i >= m_) throw Error("coordinate " + std::to_string(i) + " out of range");
    Word w(m_ - 1);
    for (int k = 0, j = 0; k < m_; ++k) {
        if (k == i) continue;
        if (test(k)) w.set(j);
        ++j;
    }
    return w;
}

Word Word::appended(bool bit) const {
    Word w(m_ + 1);
    w.limb_ = limb_;
    w.set(m_, bit);
    return w;
}

Word Word::restricted(const std::vector<int>& coords) const {
    Word w(static_cast<int>(coords.size()));
    for (size_t k = 0; k < coords.size(); ++k)
        if (test(coords[k])) w.set(static_cast<int>(k));
    return w;
}

size_t Word::hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(m_);
    for (auto x : limb_) {
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
}

int distance(const Word& a, const Word& b) {
    check_same(a, b);
    int n = 0;
    for (int j = 0; j < Word::kLimbs; ++j) n += std::popcount(a.limb(j) ^ b.limb(j));
    return n;
}

}  // namespace ctc
