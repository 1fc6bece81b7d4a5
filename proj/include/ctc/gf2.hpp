#pragma once

#include <vector>

#include "ctc/word.hpp"

namespace ctc {

/// Incremental row-reduced echelon basis over GF(2). The pivot of a row is
/// its lowest set coordinate, and no other row has that coordinate set.
class Gf2Basis {
public:
    explicit Gf2Basis(int m) : m_(m) {}

    int length() const { return m_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    /// Returns true when w was independent of the current rows.
    bool insert(const Word& w);
    Word reduce(Word w) const;
    bool contains(const Word& w) const { return reduce(w).is_zero(); }

    /// Rows sorted by pivot.
    std::vector<Word> rows() const;
    std::vector<int> pivots() const;

private:
    int m_;
    std::vector<Word> rows_;
    std::vector<int> pivot_;
};

/// Basis of the orthogonal complement of span(rows) in GF(2)^m.
std::vector<Word> orthogonal_complement(int m, const std::vector<Word>& rows);

}  // namespace ctc
