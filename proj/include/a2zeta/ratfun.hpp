#pragma once

// Rational functions num/den over Z[u], kept fully reduced: gcd(num, den) is
// constant, den is primitive with positive leading coefficient.  The zeta
// quotients handled here always have den(0) = +-1, so the normalization never
// needs to leave integer coefficients.

#include "a2zeta/errors.hpp"
#include "a2zeta/poly.hpp"

namespace a2zeta {

struct RatFun {
    IntPoly num;
    IntPoly den;

    static RatFun make(IntPoly n, IntPoly d) {
        if (d.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if (n.is_zero()) return RatFun{IntPoly(), IntPoly::one()};
        IntPoly g = poly_gcd(n, d);
        if (g.degree() > 0) {
            n = n.divexact(g);
            d = d.divexact(g);
        }
        Int cn = n.content(), cd = d.content();
        Int c = int_gcd(cn, cd);
        if (c > 1) {
            n = n.divexact(IntPoly(c));
            d = d.divexact(IntPoly(c));
        }
        if (d.content() != 1)
            throw PreconditionFailed("denominator content is not a unit after reduction");
        if (d.leading() < 0) {
            n = -n;
            d = -d;
        }
        return RatFun{std::move(n), std::move(d)};
    }

    bool is_polynomial() const { return den.degree() == 0 && den.coeff(0) == 1; }

    bool operator==(const RatFun& o) const { return num * o.den == o.num * den; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    // Truncated power series of num/den; requires den(0) = +-1.
    IntPoly series(int order) const {
        return series_mul(num, series_inverse(den, order), order);
    }
};

}  // namespace a2zeta
