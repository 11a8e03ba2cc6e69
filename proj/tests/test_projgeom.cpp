#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "a2zeta/gf.hpp"
#include "a2zeta/projgeom.hpp"

using namespace a2zeta;

namespace {

// field axioms checked exhaustively; this is the oracle for the table builder
void check_field_axioms(const GF& f) {
    const int q = f.order();
    REQUIRE(f.add(0, 0) == 0);
    REQUIRE(f.mul(1, 1) == 1);
    for (int a = 0; a < q; ++a) {
        CHECK(f.add(a, 0) == a);
        CHECK(f.mul(a, 1) == a);
        CHECK(f.mul(a, 0) == 0);
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
        for (int b = 0; b < q; ++b) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            for (int c = 0; c < q; ++c) {
                CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
    // no zero divisors
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b) CHECK(f.mul(a, b) != 0);
}

}  // namespace

TEST_CASE("finite field tables satisfy the field axioms", "[gf]") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        INFO("q = " << q);
        check_field_axioms(GF::make(q));
    }
}

TEST_CASE("extension field arithmetic matches hand-computed residues", "[gf]") {
    // encode sum_i c_i x^i as sum_i c_i p^i
    SECTION("GF(4), modulus x^2+x+1") {
        GF f = GF::make(4);
        const int x = 2;
        CHECK(f.mul(x, x) == 3);            // x^2 = x+1
        CHECK(f.mul(x, 3) == 1);            // x(x+1) = x^2+x = 1
        CHECK(f.inv(x) == 3);
    }
    SECTION("GF(8), modulus x^3+x+1") {
        GF f = GF::make(8);
        const int x = 2;
        CHECK(f.mul(x, x) == 4);            // x^2
        CHECK(f.mul(x, 4) == 3);            // x^3 = x+1
        CHECK(f.mul(4, 4) == 6);            // x^4 = x^2+x
    }
    SECTION("GF(9), modulus x^2+1") {
        GF f = GF::make(9);
        const int x = 3;
        CHECK(f.mul(x, x) == 2);            // x^2 = -1
        CHECK(f.mul(x, f.mul(x, x)) == 6);  // x^3 = -x = 2x
    }
    SECTION("GF(16), modulus x^4+x+1") {
        GF f = GF::make(16);
        const int x2 = 4;
        CHECK(f.mul(x2, x2) == 3);          // x^4 = x+1
    }
    SECTION("Frobenius is additive in characteristic p") {
        for (int q : {4, 8, 9, 16}) {
            GF f = GF::make(q);
            const int p = f.characteristic();
            auto pow_p = [&](int a) {
                int r = 1;
                for (int i = 0; i < p; ++i) r = f.mul(r, a);
                return r;
            };
            for (int a = 0; a < q; ++a)
                for (int b = 0; b < q; ++b)
                    CHECK(pow_p(f.add(a, b)) == f.add(pow_p(a), pow_p(b)));
        }
    }
}

TEST_CASE("field construction rejects bad orders", "[gf][errors]") {
    CHECK_THROWS_AS(GF::make(0), NotPrimePower);
    CHECK_THROWS_AS(GF::make(1), NotPrimePower);
    CHECK_THROWS_AS(GF::make(6), NotPrimePower);
    CHECK_THROWS_AS(GF::make(10), NotPrimePower);
    CHECK_THROWS_AS(GF::make(12), NotPrimePower);
    // non-prime-power detection wins over the size bound
    CHECK_THROWS_AS(GF::make(20), NotPrimePower);
    CHECK_THROWS_AS(GF::make(17), BoundExceeded);
    CHECK_THROWS_AS(GF::make(32, 64), BoundExceeded);  // prime power, no tabulated modulus
    CHECK_THROWS_AS(GF::make(5, 3), BoundExceeded);
    CHECK_THROWS_AS(GF::make(2).inv(0), DivisionByZero);
}

TEST_CASE("projective plane has the right counts and unique joins", "[projgeom]") {
    for (int q : {2, 3, 4, 5}) {
        INFO("q = " << q);
        ProjPlane pl = ProjPlane::make(q);
        const int n = q * q + q + 1;
        REQUIRE(pl.size() == n);
        REQUIRE(static_cast<int>(pl.points().size()) == n);
        REQUIRE(static_cast<int>(pl.lines().size()) == n);

        // canonical representatives are distinct and canonically scaled
        std::set<std::array<int, 3>> seen(pl.points().begin(), pl.points().end());
        CHECK(static_cast<int>(seen.size()) == n);
        for (const auto& v : pl.points()) {
            int last = -1;
            for (int i = 2; i >= 0; --i)
                if (v[static_cast<size_t>(i)] != 0) {
                    last = i;
                    break;
                }
            REQUIRE(last >= 0);
            CHECK(v[static_cast<size_t>(last)] == 1);
        }

        for (int i = 0; i < n; ++i) {
            CHECK(static_cast<int>(pl.lines_of_point(i).size()) == q + 1);
            CHECK(static_cast<int>(pl.points_of_line(i).size()) == q + 1);
        }

        // any two distinct points lie on exactly one common line
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int common = 0;
                for (int l : pl.lines_of_point(i))
                    if (pl.incident(j, l)) ++common;
                CHECK(common == 1);
            }
    }
}

TEST_CASE("first canonical points follow lexicographic order", "[projgeom]") {
    ProjPlane pl = ProjPlane::make(2);
    CHECK(pl.points()[0] == std::array<int, 3>{0, 0, 1});
    CHECK(pl.points()[1] == std::array<int, 3>{0, 1, 0});
    CHECK(pl.points()[2] == std::array<int, 3>{0, 1, 1});
    CHECK(pl.points()[3] == std::array<int, 3>{1, 0, 0});
}

TEST_CASE("local operator T has non-incidence entries and square row sums", "[projgeom]") {
    for (int q : {2, 3, 4}) {
        INFO("q = " << q);
        ProjPlane pl = ProjPlane::make(q);
        RatMat T = local_T(pl);
        const int n = pl.size();
        for (int p = 0; p < n; ++p)
            for (int l = 0; l < n; ++l)
                CHECK(T.at(p, l) == (pl.incident(p, l) ? Rat(0) : Rat(1)));
        for (int i = 0; i < n; ++i) {
            Rat rs(0), cs(0);
            for (int j = 0; j < n; ++j) {
                rs += T.at(i, j);
                cs += T.at(j, i);
            }
            CHECK(rs == Rat(q) * q);
            CHECK(cs == Rat(q) * q);
        }
    }
}

TEST_CASE("local T' entries are forced by inverting T", "[projgeom]") {
    // T is invertible, so its inverse is unique; the two entry values are
    // pinned by the diagonal (q^2 non-incident terms sum to 1) and the
    // off-diagonal (q incident plus q^2-q non-incident terms sum to 0).
    {
        ProjPlane pl = ProjPlane::make(2);
        RatMat Tp = local_Tprime(pl);
        for (int l = 0; l < pl.size(); ++l)
            for (int p = 0; p < pl.size(); ++p)
                CHECK(Tp.at(l, p) == (pl.incident(p, l) ? Rat(-1) / 4 : Rat(1) / 4));
    }
    {
        ProjPlane pl = ProjPlane::make(3);
        RatMat Tp = local_Tprime(pl);
        for (int l = 0; l < pl.size(); ++l)
            for (int p = 0; p < pl.size(); ++p)
                CHECK(Tp.at(l, p) == (pl.incident(p, l) ? Rat(-2) / 9 : Rat(1) / 9));
    }
}

TEST_CASE("T and T' are two-sided inverses", "[projgeom]") {
    for (int q : {2, 3}) {
        INFO("q = " << q);
        ProjPlane pl = ProjPlane::make(q);
        RatMat T = local_T(pl);
        RatMat Tp = local_Tprime(pl);
        RatMat I = RatMat::identity(pl.size());
        CHECK(T * Tp == I);
        CHECK(Tp * T == I);
    }
}

TEST_CASE("star model checks pass for small planes", "[projgeom][star]") {
    for (int q : {2, 3, 4}) {
        INFO("q = " << q);
        StarReport rep = check_star(ProjPlane::make(q));
        const long long n = static_cast<long long>(q) * q + q + 1;
        CHECK(rep.link_vertices == 2 * n);
        CHECK(rep.link_edges == n * (q + 1));
        CHECK(rep.center_degree_ok);
        CHECK(rep.common_with_center_ok);
        CHECK(rep.triple_bound_ok);
        CHECK(rep.passed);
    }
}

TEST_CASE("aggregate local check passes for q up to 5", "[projgeom]") {
    for (int q : {2, 3, 4, 5}) {
        INFO("q = " << q);
        LocalCheckReport rep = local_check(q);
        CHECK(rep.plane_size == q * q + q + 1);
        CHECK(rep.counts_ok);
        CHECK(rep.unique_join_ok);
        CHECK(rep.mmt_ok);
        CHECK(rep.t_sums_ok);
        CHECK(rep.tt_prime_ok);
        CHECK(rep.star.passed);
        CHECK(rep.passed);
    }
}
