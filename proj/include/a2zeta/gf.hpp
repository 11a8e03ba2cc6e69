#pragma once

// Finite fields F_q for small prime powers q, with full add/mul tables.
// Elements are integers 0..q-1; for an extension field of characteristic p an
// element encodes the coefficient vector of a residue polynomial in base p.
// Orders up to 16 are supported out of the box (covers 4, 8, 9, 16 via a
// fixed table of irreducible polynomials).

#include <array>
#include <numeric>
#include <vector>

#include "a2zeta/errors.hpp"

namespace a2zeta {

class GF {
public:
    // bound guards against accidentally huge table builds
    static GF make(int q, int bound = 16) {
        if (q < 2) throw NotPrimePower("field order must be at least 2");
        int p = smallest_prime_factor(q);
        int k = 0;
        int m = q;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        if (m != 1)
            throw NotPrimePower("field order " + std::to_string(q) + " is not a prime power");
        if (q > bound)
            throw BoundExceeded("field order " + std::to_string(q) + " exceeds bound " +
                                std::to_string(bound));
        std::vector<int> irr;
        if (k > 1) {
            irr = irreducible_for(q);
            if (irr.empty())
                throw BoundExceeded("no irreducible polynomial tabulated for order " +
                                    std::to_string(q));
        }
        return GF(q, p, k, irr);
    }

    int order() const { return q_; }
    int characteristic() const { return p_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int neg(int a) const { return neg_[check(a)]; }

    int inv(int a) const {
        if (check(a) == 0) throw DivisionByZero("inverse of zero in F_q");
        return inv_[a];
    }

private:
    int q_, p_, k_;
    std::vector<int> add_, mul_, neg_, inv_;

    GF(int q, int p, int k, const std::vector<int>& irr) : q_(q), p_(p), k_(k) {
        add_.resize(static_cast<size_t>(q) * q);
        mul_.resize(static_cast<size_t>(q) * q);
        neg_.resize(static_cast<size_t>(q));
        inv_.assign(static_cast<size_t>(q), 0);
        for (int a = 0; a < q; ++a) {
            auto da = digits(a);
            // negation: digitwise
            std::vector<int> dn(da.size());
            for (size_t i = 0; i < da.size(); ++i) dn[i] = (p - da[i]) % p;
            neg_[static_cast<size_t>(a)] = from_digits(dn);
            for (int b = 0; b < q; ++b) {
                auto db = digits(b);
                std::vector<int> ds(da.size());
                for (size_t i = 0; i < da.size(); ++i) ds[i] = (da[i] + db[i]) % p;
                add_[idx(a, b)] = from_digits(ds);
                // polynomial product reduced mod the irreducible (or mod p when k = 1)
                std::vector<int> prod(2 * da.size() - 1, 0);
                for (size_t i = 0; i < da.size(); ++i)
                    for (size_t j = 0; j < db.size(); ++j)
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                if (k_ > 1) reduce(prod, irr);
                prod.resize(da.size());
                mul_[idx(a, b)] = from_digits(prod);
            }
        }
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b)
                if (mul_[idx(a, b)] == 1) inv_[static_cast<size_t>(a)] = b;
    }

    static int smallest_prime_factor(int n) {
        for (int d = 2; d * d <= n; ++d)
            if (n % d == 0) return d;
        return n;
    }

    static std::vector<int> irreducible_for(int q) {
        // monic irreducibles, coefficients low-to-high
        switch (q) {
            case 4: return {1, 1, 1};      // x^2 + x + 1 over F_2
            case 8: return {1, 1, 0, 1};   // x^3 + x + 1 over F_2
            case 9: return {1, 0, 1};      // x^2 + 1 over F_3
            case 16: return {1, 1, 0, 0, 1};  // x^4 + x + 1 over F_2
            default: return {};
        }
    }

    std::vector<int> digits(int a) const {
        std::vector<int> d(static_cast<size_t>(k_));
        for (int i = 0; i < k_; ++i) {
            d[static_cast<size_t>(i)] = a % p_;
            a /= p_;
        }
        return d;
    }

    int from_digits(const std::vector<int>& d) const {
        int v = 0;
        for (int i = k_ - 1; i >= 0; --i) v = v * p_ + d[static_cast<size_t>(i)];
        return v;
    }

    void reduce(std::vector<int>& poly, const std::vector<int>& irr) const {
        const int deg = static_cast<int>(irr.size()) - 1;
        for (int i = static_cast<int>(poly.size()) - 1; i >= deg; --i) {
            int c = poly[static_cast<size_t>(i)];
            if (c == 0) continue;
            // irr is monic: poly -= c * x^(i-deg) * irr
            for (int j = 0; j <= deg; ++j) {
                int& cell = poly[static_cast<size_t>(i - deg + j)];
                cell = ((cell - c * irr[static_cast<size_t>(j)]) % p_ + p_) % p_;
            }
        }
    }

    size_t idx(int a, int b) const {
        return static_cast<size_t>(check(a)) * q_ + static_cast<size_t>(check(b));
    }

    int check(int a) const {
        if (a < 0 || a >= q_) throw PreconditionFailed("field element out of range");
        return a;
    }
};

}  // namespace a2zeta
