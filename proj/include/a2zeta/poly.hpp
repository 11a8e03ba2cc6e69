#pragma once

// Univariate polynomials over the integers, in the variable u.  Coefficients
// are arbitrary-precision.  Includes exact division, primitive-part gcd via
// pseudo-remainders, truncated series arithmetic (inverse, log-derivative),
// and the content/primitive-part normalizations the zeta pipeline relies on.

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "a2zeta/bigint.hpp"
#include "a2zeta/errors.hpp"

namespace a2zeta {

class IntPoly {
public:
    IntPoly() = default;

    explicit IntPoly(const Int& constant) {
        if (constant != 0) c_.push_back(constant);
    }

    IntPoly(std::initializer_list<Int> coeffs) : c_(coeffs) { trim(); }

    static IntPoly from_coeffs(std::vector<Int> coeffs) {
        IntPoly p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }

    static IntPoly one() { return IntPoly(Int(1)); }
    static IntPoly zero() { return IntPoly(); }

    // The monomial c * u^k.
    static IntPoly monomial(const Int& c, int k) {
        IntPoly p;
        if (c != 0) {
            p.c_.assign(static_cast<size_t>(k) + 1, Int(0));
            p.c_.back() = c;
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Int coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Int(0);
        return c_[static_cast<size_t>(k)];
    }

    const std::vector<Int>& coeffs() const { return c_; }

    Int leading() const { return c_.empty() ? Int(0) : c_.back(); }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly operator+(const IntPoly& o) const {
        std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return from_coeffs(std::move(r));
    }

    IntPoly operator-(const IntPoly& o) const {
        std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return from_coeffs(std::move(r));
    }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    IntPoly operator*(const IntPoly& o) const {
        if (is_zero() || o.is_zero()) return IntPoly();
        std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        }
        return from_coeffs(std::move(r));
    }

    IntPoly operator*(const Int& s) const {
        if (s == 0) return IntPoly();
        IntPoly r = *this;
        for (auto& v : r.c_) v *= s;
        return r;
    }

    IntPoly pow(unsigned e) const {
        IntPoly acc = one(), base = *this;
        while (e) {
            if (e & 1u) acc = acc * base;
            base = base * base;
            e >>= 1u;
        }
        return acc;
    }

    Int eval(const Int& t) const {  // Horner
        Int acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
        return acc;
    }

    IntPoly derivative() const {
        if (c_.size() <= 1) return IntPoly();
        std::vector<Int> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
        return from_coeffs(std::move(r));
    }

    IntPoly truncate(int order) const {  // reduce mod u^order
        if (order <= 0) return IntPoly();
        std::vector<Int> r(c_.begin(),
                           c_.begin() + std::min(c_.size(), static_cast<size_t>(order)));
        return from_coeffs(std::move(r));
    }

    // Substitute u^k for u (coefficient spread); used to turn det(1 - vL) into
    // a polynomial in u^3.
    IntPoly inflate(int k) const {
        if (is_zero()) return IntPoly();
        std::vector<Int> r(static_cast<size_t>(degree()) * k + 1, Int(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
        return from_coeffs(std::move(r));
    }

    Int content() const {
        Int g(0);
        for (const auto& v : c_) g = int_gcd(g, v);
        return g;
    }

    IntPoly primitive_part() const {
        if (is_zero()) return IntPoly();
        Int g = content();
        if (leading() < 0) g = -g;
        IntPoly r = *this;
        for (auto& v : r.c_) v /= g;
        return r;
    }

    // Exact division; throws NotDivisible unless o divides *this over Z.
    IntPoly divexact(const IntPoly& o) const {
        if (o.is_zero()) throw DivisionByZero("polynomial division by zero");
        if (is_zero()) return IntPoly();
        if (degree() < o.degree()) throw NotDivisible("quotient degree negative");
        std::vector<Int> rem = c_;
        std::vector<Int> q(static_cast<size_t>(degree() - o.degree()) + 1, Int(0));
        const Int& lead = o.c_.back();
        for (int k = degree() - o.degree(); k >= 0; --k) {
            Int top = rem[static_cast<size_t>(k + o.degree())];
            if (top == 0) continue;
            if (top % lead != 0) throw NotDivisible("leading coefficient does not divide");
            Int qk = top / lead;
            q[static_cast<size_t>(k)] = qk;
            for (int j = 0; j <= o.degree(); ++j)
                rem[static_cast<size_t>(k + j)] -= qk * o.c_[static_cast<size_t>(j)];
        }
        for (const auto& v : rem)
            if (v != 0) throw NotDivisible("nonzero remainder");
        return from_coeffs(std::move(q));
    }

private:
    std::vector<Int> c_;  // c_[k] is the coefficient of u^k; trailing zeros stripped

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

inline IntPoly operator*(const Int& s, const IntPoly& p) { return p * s; }

// Pseudo-remainder: lead(b)^(deg a - deg b + 1) * a reduced mod b, computed
// fraction-free.  Requires deg a >= deg b >= 0.
inline IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    const Int lb = b.leading();
    int steps = a.degree() - b.degree() + 1;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        IntPoly shift = IntPoly::monomial(r.leading(), r.degree() - b.degree());
        r = r * lb - shift * b;
        --steps;
    }
    // Keep the classical normalization lead(b)^(delta+1) * a mod b so the
    // primitive PRS below is well defined regardless of early exits.
    while (steps-- > 0) r = r * lb;
    return r;
}

// Polynomial gcd via the primitive-part pseudo-remainder sequence.  The result
// is primitive with positive leading coefficient (the canonical associate over Q).
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a.primitive_part();
}

// Truncated multiplicative inverse: q with p*q = 1 mod u^order.  Only defined
// when p(0) is a unit of Z, i.e. +1 or -1; the inverse then stays integral.
inline IntPoly series_inverse(const IntPoly& p, int order) {
    const Int p0 = p.coeff(0);
    if (p0 != 1 && p0 != -1) throw NotAUnit("constant term must be +1 or -1");
    if (order <= 0) return IntPoly();
    std::vector<Int> b(static_cast<size_t>(order), Int(0));
    b[0] = p0;  // p0 is its own inverse
    for (int n = 1; n < order; ++n) {
        Int acc(0);
        for (int k = 1; k <= n; ++k) acc += p.coeff(k) * b[static_cast<size_t>(n - k)];
        b[static_cast<size_t>(n)] = -p0 * acc;
    }
    return IntPoly::from_coeffs(std::move(b));
}

inline IntPoly series_mul(const IntPoly& a, const IntPoly& b, int order) {
    return (a * b).truncate(order);
}

// Coefficients of -p'/p as a power series mod u^order.  For p(0) = 1 the n-th
// coefficient (n >= 0) is the power-sum of inverse roots of degree n+1; this is
// the series the trace identities compare against.
inline IntPoly neg_log_derivative_series(const IntPoly& p, int order) {
    return series_mul(-p.derivative(), series_inverse(p, order), order);
}

}  // namespace a2zeta
