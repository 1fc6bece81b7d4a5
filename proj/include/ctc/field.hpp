#pragma once

#include <vector>

namespace ctc {

/// GF(q) for small prime powers q = p^e. Elements are encoded by their
/// base-p digit vectors over a primitive polynomial, so the prime subfield
/// is {0..p-1} and, for e > 1, the element p encodes the root x.
class FiniteField {
public:
    explicit FiniteField(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int degree() const { return e_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int inv(int a) const;
    int div(int a, int b) const { return mul(a, inv(b)); }
    int pow(int a, long long k) const;
    /// Element of multiplicative order q-1 (the root x when e > 1).
    int primitive() const { return prim_; }
    bool is_square(int a) const;
    /// Coefficients of the minimal monic primitive polynomial, low degree first.
    const std::vector<int>& modulus() const { return poly_; }

private:
    int q_, p_, e_;
    int prim_ = 0;
    std::vector<int> poly_;
    std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace ctc
