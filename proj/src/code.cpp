#include "ctc/code.hpp"

#include <algorithm>
#include <bit>

namespace ctc {

Code Code::linear(int m, const std::vector<Word>& generators, std::string name) {
    Gf2Basis b(m);
    for (const auto& g : generators) {
        if (g.length() != m) throw Error("generator length differs from code length");
        b.insert(g);
    }
    Code c;
    c.m_ = m;
    c.kind_ = CodeKind::Linear;
    c.basis_ = b.rows();
    c.pivots_ = b.pivots();
    c.name_ = std::move(name);
    return c;
}

Code Code::from_words(int m, std::vector<Word> words, std::string name) {
    for (const auto& w : words)
        if (w.length() != m) throw Error("word length differs from code length");
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    Code c;
    c.m_ = m;
    c.kind_ = CodeKind::Explicit;
    c.words_ = std::move(words);
    c.name_ = std::move(name);
    return c;
}

int Code::dimension() const {
    if (!is_linear()) throw Error("dimension of a non-linear code");
    return static_cast<int>(basis_.size());
}

const std::vector<Word>& Code::basis() const {
    if (!is_linear()) throw Error("basis of a non-linear code");
    return basis_;
}

const std::vector<int>& Code::pivots() const {
    if (!is_linear()) throw Error("pivots of a non-linear code");
    return pivots_;
}

const std::vector<Word>& Code::explicit_words() const {
    if (is_linear()) throw Error("explicit word list requested for a linear code");
    return words_;
}

BigInt Code::size() const {
    if (is_linear()) return pow2(dimension());
    return BigInt(words_.size());
}

uint64_t Code::size_u64() const {
    if (is_linear()) {
        if (dimension() > 62) throw Error("code size exceeds 2^62");
        return uint64_t{1} << dimension();
    }
    return words_.size();
}

bool Code::contains(const Word& w) const {
    if (w.length() != m_) return false;
    if (is_linear()) {
        Word r = w;
        for (size_t i = 0; i < basis_.size(); ++i)
            if (r.test(pivots_[i])) r ^= basis_[i];
        return r.is_zero();
    }
    return std::binary_search(words_.begin(), words_.end(), w);
}

void Code::for_each(const std::function<void(const Word&)>& f) const {
    if (!is_linear()) {
        for (const auto& w : words_) f(w);
        return;
    }
    int k = dimension();
    if (k > 40) throw Error("enumeration of 2^" + std::to_string(k) + " codewords refused");
    Word cur(m_);
    f(cur);
    uint64_t n = uint64_t{1} << k;
    for (uint64_t i = 1; i < n; ++i) {
        cur ^= basis_[std::countr_zero(i)];
        f(cur);
    }
}

std::vector<Word> Code::words() const {
    if (!is_linear()) return words_;
    if (dimension() > 26) throw Error("materializing more than 2^26 codewords refused");
    std::vector<Word> out;
    out.reserve(size_u64());
    for_each([&](const Word& w) { out.push_back(w); });
    std::sort(out.begin(), out.end());
    return out;
}

bool Code::same_words(const Code& o) const {
    if (m_ != o.m_) return false;
    if (is_linear() && o.is_linear()) return basis_ == o.basis_;
    if (size() != o.size()) return false;
    if (!is_linear() && !o.is_linear()) return words_ == o.words_;
    const Code& ex = is_linear() ? o : *this;
    const Code& li = is_linear() ? *this : o;
    for (const auto& w : ex.explicit_words())
        if (!li.contains(w)) return false;
    return true;
}

std::vector<uint64_t> codeword_values(const Code& c) {
    if (c.length() > 64) throw Error("codeword_values needs m <= 64");
    std::vector<uint64_t> v;
    v.reserve(c.size_u64());
    if (c.is_linear()) {
        int k = c.dimension();
        if (k > 30) throw Error("codeword_values: dimension too large");
        std::vector<uint64_t> b;
        for (const auto& w : c.basis()) b.push_back(w.to_u64());
        uint64_t cur = 0;
        v.push_back(0);
        for (uint64_t i = 1; i < (uint64_t{1} << k); ++i) {
            cur ^= b[std::countr_zero(i)];
            v.push_back(cur);
        }
        std::sort(v.begin(), v.end());
    } else {
        for (const auto& w : c.explicit_words()) v.push_back(w.to_u64());
    }
    return v;
}

}  // namespace ctc
