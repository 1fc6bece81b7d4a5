#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ctc/bigint.hpp"
#include "ctc/code.hpp"

namespace ctc {

struct DesignReport {
    int m = 0, k = 0, t = 0;
    bool is_design = false;
    BigInt lambda = 0;
    BigInt block_count = 0;
    /// block_count equals lambda * C(m,t) / C(k,t).
    bool integrality_ok = false;
    /// First t-subset (colex order) whose count differs from the first one.
    std::vector<int> uneven_subset;
    uint64_t uneven_count = 0;
    uint64_t first_count = 0;
};

/// The blocks are words of weight k and length m; C(m,t) <= 10^7.
DesignReport design_check_blocks(int m, const std::vector<Word>& blocks, int k, int t);
/// Weight-k codewords of c as blocks.
DesignReport design_check(const Code& c, int k, int t);
std::vector<Word> words_of_weight(const Code& c, int k);

struct ScreenVerdict {
    std::string id;
    std::string title;
    std::vector<std::pair<std::string, std::string>> inputs;
    bool pass = false;
    std::vector<std::string> trace;
};

/// b = lambda * m(m-1)...(m-t+1) / (k(k-1)...(k-t+1)).
struct BlockCount {
    BigInt numerator, denominator;
    /// Integrality of b holds iff lambda is a multiple of this.
    BigInt lambda_divisor;
    /// b at lambda = lambda_divisor.
    BigInt min_blocks;
};
BlockCount block_count(int m, int k, int t);
/// pass: b is an integer for the given lambda.
ScreenVerdict block_count_screen(int m, int k, int t, const BigInt& lambda);

/// delta 5: 2-design with 3*lambda <= m-2, projected blocks through each
/// pair pairwise disjoint. delta 6: same with triples and m-3.
ScreenVerdict lambda_bound_check(const Code& c);
ScreenVerdict lambda_bound_check_blocks(int m, const std::vector<Word>& blocks, int delta);

/// pass: (m+1)|X| >= q^m.
ScreenVerdict screen_morbitsbound(int m, int q, const BigInt& group_order);
/// pass: the hypothesis |C|/|Cmax| < m(m-1)/(d(d-1)) holds, so d_max <= 2d
/// must follow.
ScreenVerdict screen_largedeltamax(const BigInt& size, const BigInt& max_size, int m, int delta);
/// pass: delta <= 2t+2.
ScreenVerdict screen_upboundmindist(int t, int delta);

/// Every computational elimination of the classification, pass meaning the
/// numbers come out as needed.
std::vector<ScreenVerdict> nonexistence_suite();

}  // namespace ctc
