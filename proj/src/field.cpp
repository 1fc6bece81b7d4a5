#include "ctc/field.hpp"

#include <string>

#include "ctc/error.hpp"

namespace ctc {

namespace {

std::vector<int> digits(int a, int p, int e) {
    std::vector<int> d(e);
    for (int i = 0; i < e; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

int encode(const std::vector<int>& d, int p) {
    int a = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
    return a;
}

// product of digit vectors modulo the monic polynomial f (degree e)
int poly_mul(int a, int b, int p, int e, const std::vector<int>& f) {
    auto x = digits(a, p, e), y = digits(b, p, e);
    std::vector<int> r(2 * e, 0);
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p;
    for (int k = 2 * e - 1; k >= e; --k) {
        int c = r[k];
        if (!c) continue;
        r[k] = 0;
        for (int i = 0; i < e; ++i) r[k - e + i] = ((r[k - e + i] - c * f[i]) % p + p) % p;
    }
    r.resize(e);
    return encode(r, p);
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q) {
    p_ = 0;
    for (int d = 2; d <= q; ++d)
        if (q % d == 0) {
            p_ = d;
            break;
        }
    if (q < 2) throw Error("field order must be at least 2");
    e_ = 0;
    for (int x = q; x > 1; x /= p_) {
        if (x % p_) throw Error("field order " + std::to_string(q) + " is not a prime power");
        ++e_;
    }
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    for (int a = 0; a < q; ++a) {
        auto x = digits(a, p_, e_);
        std::vector<int> n(e_);
        for (int i = 0; i < e_; ++i) n[i] = (p_ - x[i]) % p_;
        neg_[a] = encode(n, p_);
        for (int b = 0; b < q; ++b) {
            auto y = digits(b, p_, e_);
            std::vector<int> s(e_);
            for (int i = 0; i < e_; ++i) s[i] = (x[i] + y[i]) % p_;
            add_[a * q + b] = encode(s, p_);
        }
    }
    if (e_ == 1) {
        poly_ = {0, 1};
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) mul_[a * q + b] = (a * b) % q;
    } else {
        // first monic polynomial (in encoding order of its lower coefficients) of which x is primitive
        for (int low = 0; low < q && poly_.empty(); ++low) {
            std::vector<int> f = digits(low, p_, e_);
            if (f[0] == 0) continue;
            int xenc = p_;
            int cur = 1, order = 0;
            do {
                cur = poly_mul(cur, xenc, p_, e_, f);
                ++order;
            } while (cur != 1 && order < q);
            if (order == q - 1) {
                poly_ = f;
                poly_.push_back(1);
            }
        }
        std::vector<int> f(poly_.begin(), poly_.end() - 1);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) mul_[a * q + b] = poly_mul(a, b, p_, e_, f);
    }
    inv_.assign(q, 0);
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul(a, b) == 1) inv_[a] = b;
    for (int g = 1; g < q; ++g) {
        int cur = g, order = 1;
        while (cur != 1) {
            cur = mul(cur, g);
            ++order;
        }
        if (order == q - 1) {
            prim_ = g;
            break;
        }
    }
    if (e_ > 1) prim_ = p_;
}

int FiniteField::inv(int a) const {
    if (a == 0) throw Error("inverse of zero");
    return inv_[a];
}

int FiniteField::pow(int a, long long k) const {
    if (k < 0) return pow(inv(a), -k);
    int r = 1;
    while (k) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

bool FiniteField::is_square(int a) const {
    if (a == 0) return true;
    if (p_ == 2) return true;
    return pow(a, (q_ - 1) / 2) == 1;
}

}  // namespace ctc
