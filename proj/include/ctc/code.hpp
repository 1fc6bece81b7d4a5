#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ctc/bigint.hpp"
#include "ctc/gf2.hpp"
#include "ctc/word.hpp"

namespace ctc {

enum class CodeKind { Linear, Explicit };

/// A binary code of length m. Linear codes keep a reduced echelon basis;
/// explicit codes keep a strictly sorted word list.
class Code {
public:
    Code() = default;

    static Code linear(int m, const std::vector<Word>& generators, std::string name = {});
    static Code from_words(int m, std::vector<Word> words, std::string name = {});

    int length() const { return m_; }
    CodeKind kind() const { return kind_; }
    bool is_linear() const { return kind_ == CodeKind::Linear; }
    const std::string& name() const { return name_; }
    Code& set_name(std::string n) {
        name_ = std::move(n);
        return *this;
    }

    /// Linear kind only.
    int dimension() const;
    const std::vector<Word>& basis() const;
    const std::vector<int>& pivots() const;

    /// Explicit kind only.
    const std::vector<Word>& explicit_words() const;

    BigInt size() const;
    /// Throws when the size does not fit.
    uint64_t size_u64() const;

    bool contains(const Word& w) const;

    /// Sorted word list. Linear codes need dimension <= 26.
    std::vector<Word> words() const;
    /// Visits every codeword once; Linear kind uses Gray-code order.
    void for_each(const std::function<void(const Word&)>& f) const;

    /// Same word set.
    bool same_words(const Code& other) const;

private:
    int m_ = 0;
    CodeKind kind_ = CodeKind::Explicit;
    std::vector<Word> basis_;
    std::vector<int> pivots_;
    std::vector<Word> words_;
    std::string name_;
};

/// Codeword values for m <= 64 as integers, sorted.
std::vector<uint64_t> codeword_values(const Code& c);

}  // namespace ctc
