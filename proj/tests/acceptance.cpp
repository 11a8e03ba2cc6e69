// Acceptance gate: eleven criteria, one PASS/FAIL line each, exit code =
// number of failures.  Run with no arguments for the full gate or with a
// single number 1..11 for one criterion.  Every check is exact (tolerance
// zero); evidence for any failure is carried in the line itself.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "a2zeta/determinant.hpp"
#include "a2zeta/loops.hpp"
#include "a2zeta/operators.hpp"
#include "a2zeta/presentation.hpp"
#include "a2zeta/projgeom.hpp"
#include "a2zeta/report_io.hpp"
#include "a2zeta/zeta.hpp"

using namespace a2zeta;

namespace {

// The two reference quotients, built once per process on first use.
const TriangleComplex& quotient_q2() {
    static TriangleComplex c = build_quotient(search_presentation(2, 0));
    return c;
}
const TriangleComplex& quotient_q3() {
    static TriangleComplex c = build_quotient(search_presentation(3, 7));
    return c;
}

struct Criterion {
    bool pass = false;
    std::string text;
};

Criterion c1_local_inverse() {
    Criterion r;
    r.pass = true;
    long long worst_ms = 0;
    for (int q : {2, 3, 4, 5}) {
        const auto t0 = std::chrono::steady_clock::now();
        LocalCheckReport rep = local_check(q);
        const auto t1 = std::chrono::steady_clock::now();
        worst_ms = std::max(worst_ms, static_cast<long long>(
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()));
        if (!rep.tt_prime_ok) {
            r.pass = false;
            r.text = "T * T' != identity on W1 at q=" + std::to_string(q);
            return r;
        }
    }
    r.text = "T * T' = identity on W1, exactly, for q in {2,3,4,5} (slowest q: " +
             std::to_string(worst_ms) + " ms)";
    return r;
}

Criterion c2_local_counts() {
    Criterion r;
    r.pass = true;
    std::ostringstream os;
    for (int q : {2, 3, 4, 5}) {
        LocalCheckReport rep = local_check(q);
        const long long want = 2LL * (q * q + q + 1);
        const bool ok = rep.star.passed && rep.star.link_vertices == want &&
                        rep.star.common_with_center_ok && rep.star.triple_bound_ok;
        if (!ok) {
            r.pass = false;
            r.text = "star counts fail at q=" + std::to_string(q);
            return r;
        }
    }
    os << "star model: 2(q^2+q+1) neighbours, q+1 common neighbours, triple bound <= 1, "
          "q in {2,3,4,5}";
    r.text = os.str();
    return r;
}

Criterion c3_generator_soundness() {
    Criterion r;
    std::ostringstream os;
    r.pass = true;
    for (int q : {2, 3}) {
        const TriangleComplex& c = (q == 2) ? quotient_q2() : quotient_q3();
        ValidationReport v = validate(c);
        if (!v.passed || !v.violations.empty()) {
            r.pass = false;
            os << "q=" << q << " quotient fails validation with " << v.violations.size()
               << " violations";
            r.text = os.str();
            return r;
        }
        os << "q=" << q << ": " << c.num_vertices() << "v/" << c.num_edges() << "e/"
           << c.num_chambers() << "c zero violations; ";
    }
    os << "out-degree q^2+q+1, q+1 chambers per edge, 3|C| = (q+1)|E|";
    r.text = os.str();
    return r;
}

Criterion c4_determinant_vs_enumeration() {
    Criterion r;
    r.pass = true;
    std::ostringstream os;
    for (int q : {2, 3}) {
        const TriangleComplex& c = (q == 2) ? quotient_q2() : quotient_q3();
        GeodesicEnumeration ge = enumerate_geodesic_loops(c, 8);
        IntPoly z1 = det_one_minus_uM(build_T(c));
        if (euler_product_truncated(ge.primitive_counts, 9) != z1.truncate(9)) {
            r.pass = false;
            r.text = "Euler product over primitive geodesics != det(1-uT) mod u^9 at q=" +
                     std::to_string(q);
            return r;
        }
        std::vector<Int> tr = build_T(c).power_traces(8);
        for (int n = 1; n <= 8; ++n) {
            if (ge.based_counts[static_cast<size_t>(n - 1)] != tr[static_cast<size_t>(n - 1)]) {
                r.pass = false;
                r.text = "enumerated sum l(c0) != tr T^" + std::to_string(n) + " at q=" +
                         std::to_string(q);
                return r;
            }
        }
        os << "q=" << q << ": tr T^3 = " << tr[2].str() << "; ";
    }
    os << "Euler product = det(1-uT) mod u^9 and enumerated sums = tr T^n, n <= 8, both quotients";
    r.text = os.str();
    return r;
}

Criterion c5_hecke_relations() {
    Criterion r;
    r.pass = true;
    for (int q : {2, 3}) {
        const TriangleComplex& c = (q == 2) ? quotient_q2() : quotient_q3();
        SparseMat pi1 = build_pi(c, 1), pi2 = build_pi(c, 2);
        const Int Q(q), Q3(static_cast<long long>(q) * q * q);
        std::vector<SparseMat> A;
        for (int n = 1; n <= 11; ++n) A.push_back(build_A_direct(c, n));
        bool ok = (A[0] == pi1) && (A[1] == pi1 * pi1 - pi2 * Int(q + 1)) &&
                  (pi1 * pi2 == pi2 * pi1);
        for (int n = 3; ok && n <= 10; ++n) {
            // A_{n+1} = A_n pi1 - q A_{n-1} pi2 + q^3 A_{n-2}
            ok = (A[static_cast<size_t>(n)] ==
                  A[static_cast<size_t>(n - 1)] * pi1 - A[static_cast<size_t>(n - 2)] * pi2 * Q +
                      A[static_cast<size_t>(n - 3)] * Q3);
        }
        std::vector<SparseMat> rec = build_A_recursive(c, 10);
        for (int n = 1; ok && n <= 10; ++n)
            ok = (rec[static_cast<size_t>(n - 1)] == A[static_cast<size_t>(n - 1)]);
        if (!ok) {
            r.pass = false;
            r.text = "a Hecke relation fails at q=" + std::to_string(q);
            return r;
        }
    }
    r.text = "A_1 = pi1, A_2 = pi1^2 - (q+1) pi2, three-term recurrence for n in 3..10, "
             "direct = recursive for n <= 10, pi1 pi2 = pi2 pi1, both quotients";
    return r;
}

Criterion c6_stabilization() {
    Criterion r;
    r.pass = true;
    std::ostringstream os;
    for (int q : {2, 3}) {
        const TriangleComplex& c = (q == 2) ? quotient_q2() : quotient_q3();
        try {
            HPair h = build_H(c, 10);
            if (!h.derived_matches_simple) {
                r.pass = false;
                r.text = "stabilized degree-<=2 part != pi1 - (q+1) pi2 u + q(q^2+q+1) u^2 I at q=" +
                         std::to_string(q);
                return r;
            }
            os << "q=" << q << " candidate closed-form H match flags [" << h.coeff_match[0] << ","
               << h.coeff_match[1] << "," << h.coeff_match[2] << "] (reported, not asserted); ";
        } catch (const StabilizationFailure& ex) {
            r.pass = false;
            r.text = std::string("nonzero product coefficient in degrees 3..9: ") + ex.what();
            return r;
        }
    }
    os << "product coefficients vanish in degrees 3..9 and the degree-<=2 part matches the "
          "derived closed form, both quotients";
    r.text = os.str();
    return r;
}

Criterion c7_series_identity() {
    Criterion r;
    r.pass = true;
    std::ostringstream os;
    for (int q : {2, 3}) {
        const TriangleComplex& c = (q == 2) ? quotient_q2() : quotient_q3();
        SeriesReport s = verify_series_identities(c, 10);
        if (!s.derivative_identity.match) {
            r.pass = false;
            os << "-Z1'/Z1 != sum u^(n-1) tr A_n: first mismatch at order "
               << s.derivative_identity.first_mismatch_order << " on the q=" << q
               << " quotient, coefficient " << s.derivative_identity.lhs_at_mismatch
               << " (= tr T^" << s.derivative_identity.first_mismatch_order + 1 << ") vs "
               << s.derivative_identity.rhs_at_mismatch << " (= tr A_"
               << s.derivative_identity.first_mismatch_order + 1
               << "); unsigned variant mismatches too (" << s.unsigned_variant.lhs_at_mismatch
               << " vs " << s.unsigned_variant.rhs_at_mismatch << ")";
            r.text = os.str();
            return r;
        }
    }
    r.text = "-Z1'/Z1 = sum u^(n-1) tr A_n to order 10 on both quotients (unsigned variant "
             "reported)";
    return r;
}

Criterion c8_gallery_determinant() {
    Criterion r;
    r.pass = true;
    std::ostringstream os;
    for (int q : {2, 3}) {
        const TriangleComplex& c = (q == 2) ? quotient_q2() : quotient_q3();
        Z2Report z2 = compute_Z2(c);
        if (!z2.in_u_cubed || !z2.within_degree_bound) {
            r.pass = false;
            r.text = "Z2 fails the u^3-polynomial or degree bound at q=" + std::to_string(q);
            return r;
        }
        GalleryEnumeration ga = enumerate_gallery_loops(c, 3, 18, 0);
        std::vector<Int> trl = build_L(c).L.power_traces(3);
        os << "q=" << q << " deg Z2 = " << z2.observed_degree << " <= "
           << 3 * z2.num_chambers << ", u^3-polynomial; side-by-side n<=3:";
        for (int n = 1; n <= 3; ++n) {
            const Rat sum = ga.sums[static_cast<size_t>(n - 1)];
            const bool match = (Rat(trl[static_cast<size_t>(n - 1)]) == sum);
            os << " [tr L^" << n << " = " << trl[static_cast<size_t>(n - 1)].str()
               << " vs gallery sum " << rat_to_string(sum) << " -> "
               << (match ? "match" : "MISMATCH (documented finding)") << "]";
        }
        os << "; ";
    }
    r.text = os.str() + "report produced; mismatches recorded, not failures";
    return r;
}

Criterion c9_certificates() {
    Criterion r;
    r.pass = true;
    std::ostringstream os;
    for (int q : {2, 3}) {
        const TriangleComplex& c = (q == 2) ? quotient_q2() : quotient_q3();
        for (int which = 0; which < 2; ++which) {
            PowerCertificate cert = which == 0 ? certify_z1_power(c) : certify_z_power(c);
            const char* name = which == 0 ? "Z1*Q = D^m" : "Z*P = D^n";
            if (cert.found) {
                if (!cert.verified) {
                    r.pass = false;
                    r.text = std::string(name) + " claimed but re-multiplication fails at q=" +
                             std::to_string(q);
                    return r;
                }
                os << "q=" << q << " " << name << " with exponent " << cert.exponent
                   << ", re-multiplied exactly; ";
            } else {
                if (cert.reason.empty() || cert.witness.is_zero()) {
                    r.pass = false;
                    r.text = std::string(name) + " returned no solution without evidence at q=" +
                             std::to_string(q);
                    return r;
                }
                os << "q=" << q << " " << name << ": NO SOLUTION (stated prominently; witness "
                      "factor of degree " << cert.witness.degree() << " coprime to D); ";
            }
        }
    }
    r.text = os.str() + "all outcomes carried in the report with exact evidence";
    return r;
}

Criterion c10_degree_audit() {
    Criterion r;
    r.pass = true;
    std::ostringstream os;
    for (int q : {2, 3}) {
        const TriangleComplex& c = (q == 2) ? quotient_q2() : quotient_q3();
        ZetaReport rep = compute_zeta_report(c, 8);
        detail::Json j = zeta_report_to_json(rep);
        const std::string text = json_to_string(j);
        const bool ok = !text.empty() && j["z1"].contains("observed_degree") &&
                        j["z1"].contains("num_edges") && j["z1"].contains("claimed_degree") &&
                        j["z1"].contains("matches_num_edges") &&
                        j["z1"].contains("matches_claimed") && j["z1"].contains("det_T_nonzero");
        if (!ok) {
            r.pass = false;
            r.text = "degree audit failed to serialize at q=" + std::to_string(q);
            return r;
        }
        os << "q=" << q << ": observed deg Z1 = " << rep.z1.observed_degree << ", |edges| = "
           << rep.z1.num_edges << ", claimed (q+1)N/2 = " << rat_to_string(rep.z1.claimed_degree)
           << ", det T nonzero = " << (rep.z1.det_T_nonzero ? "yes" : "no") << "; ";
    }
    r.text = os.str() + "audit serialized regardless of outcome";
    return r;
}

Criterion c11_exact_algebra_selftests() {
    Criterion r;
    r.pass = true;
    std::mt19937 rng(123456u);
    std::uniform_int_distribution<int> size_dist(1, 20);
    std::uniform_int_distribution<int> entry_dist(-5, 5);
    std::uniform_int_distribution<int> fill_dist(0, 9);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = size_dist(rng);
        SparseMat m(n, n);
        std::vector<std::vector<IntPoly>> pm(
            static_cast<size_t>(n), std::vector<IntPoly>(static_cast<size_t>(n), IntPoly()));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                // roughly 30% fill
                if (fill_dist(rng) >= 3) continue;
                const int v = entry_dist(rng);
                if (v == 0) continue;
                m.set(i, j, Int(v));
            }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Int v = m.at(i, j);
                std::vector<Int> coeffs{Int(i == j ? 1 : 0), -v};
                pm[static_cast<size_t>(i)][static_cast<size_t>(j)] = IntPoly::from_coeffs(coeffs);
            }
        IntPoly det = det_one_minus_uM(m);
        if (det.coeff(0) != 1) {
            r.pass = false;
            r.text = "det(1-uM) constant term != 1 on trial " + std::to_string(trial);
            return r;
        }
        std::vector<Int> tr = m.power_traces(10);
        IntPoly series = neg_log_derivative_series(det, 10);
        for (int k = 1; k <= 10; ++k) {
            if (series.coeff(k - 1) != tr[static_cast<size_t>(k - 1)]) {
                r.pass = false;
                r.text = "log-derivative trace identity fails at order " + std::to_string(k) +
                         " on trial " + std::to_string(trial);
                return r;
            }
        }
        try {
            if (det_poly_matrix(pm, n) != det) {
                r.pass = false;
                r.text = "interpolated determinant disagrees with the direct one on trial " +
                         std::to_string(trial);
                return r;
            }
        } catch (const DegreeBoundViolated& ex) {
            r.pass = false;
            r.text = std::string("extra-point verification failed: ") + ex.what();
            return r;
        }
    }
    r.text = "100 random sparse matrices (size <= 20, entries <= 5): det(1-uM) constant term 1, "
             "log-derivative = traces to order 10, interpolation extra-point verified";
    return r;
}

using CriterionFn = Criterion (*)();

struct Entry {
    const char* label;
    CriterionFn fn;
};

const Entry kCriteria[] = {
    {"C1 local right-inverse", c1_local_inverse},
    {"C2 local counts", c2_local_counts},
    {"C3 generator soundness", c3_generator_soundness},
    {"C4 determinant vs enumeration", c4_determinant_vs_enumeration},
    {"C5 Hecke relations", c5_hecke_relations},
    {"C6 rational-form stabilization", c6_stabilization},
    {"C7 series identity", c7_series_identity},
    {"C8 gallery determinant", c8_gallery_determinant},
    {"C9 factorization certificates", c9_certificates},
    {"C10 degree audit", c10_degree_audit},
    {"C11 exact-algebra self-tests", c11_exact_algebra_selftests},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc == 2) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > 11) {
            std::cerr << "usage: acceptance [criterion 1..11]\n";
            return 2;
        }
    } else if (argc > 2) {
        std::cerr << "usage: acceptance [criterion 1..11]\n";
        return 2;
    }

    int failures = 0;
    for (int i = 0; i < 11; ++i) {
        if (only != 0 && only != i + 1) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Criterion res;
        try {
            res = kCriteria[i].fn();
        } catch (const std::exception& ex) {
            res.pass = false;
            res.text = std::string("unexpected exception: ") + ex.what();
        }
        const auto t1 = std::chrono::steady_clock::now();
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << kCriteria[i].label << ": " << res.text
                  << " (" << ms << " ms)\n";
        if (!res.pass) ++failures;
    }
    return failures;
}
