#include <doctest.h>

#include <functional>
#include <string>

#include "hull_constructions.hpp"
#include "poly.hpp"

using namespace hf;

namespace {

void expect_code(const HullCode& hc, uint32_t n, uint32_t k, uint32_t d) {
    CHECK(hc.cert.n == n);
    CHECK(hc.cert.k == k);
    CHECK(hc.cert.hull_dim == 1);
    CHECK(hc.cert.is_mds);
    REQUIRE(hc.cert.d.has_value());
    CHECK(*hc.cert.d == d);
    CHECK(hc.spec.n() == n);
    CHECK(hc.spec.k == k);
    CHECK(hc.hull_witness.size() == n);
}

bool has_param(const HullCode& hc, const std::string& key, const std::string& val) {
    for (auto& [k, v] : hc.params)
        if (k == key && v == val) return true;
    return false;
}

std::string thrown_message(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("even-q family over GF(8)") {
    Field F(2, 3, {1, 1, 0, 1});
    WorkBudget wb;
    expect_code(construct_even_q(F, 4, 1, wb), 4, 2, 3);
    expect_code(construct_even_q(F, 5, 1, wb), 5, 3, 3);
    expect_code(construct_even_q(F, 6, 1, wb), 6, 4, 3);

    // Every admissible (n, s) builds with k = n - s - 1.
    for (uint32_t n = 4; n <= 6; n++)
        for (uint32_t s = 1; s <= n - 3; s++) {
            WorkBudget b;
            HullCode hc = construct_even_q(F, n, s, b);
            expect_code(hc, n, n - s - 1, s + 2);
            CHECK(hc.family == "even-q");
            CHECK(has_param(hc, "n", std::to_string(n)));
            CHECK(has_param(hc, "s", std::to_string(s)));
        }

    WorkBudget b;
    CHECK_THROWS_AS((void)construct_even_q(F, 7, 1, b), precondition_error);
    CHECK_THROWS_AS((void)construct_even_q(F, 3, 1, b), precondition_error);
    CHECK_THROWS_AS((void)construct_even_q(F, 6, 4, b), precondition_error);
    CHECK_THROWS_AS((void)construct_even_q(F, 6, 0, b), precondition_error);

    Field F4(2, 2);
    CHECK_THROWS_AS((void)construct_even_q(F4, 4, 1, b), precondition_error);
    Field Fodd(19, 1);
    CHECK(thrown_message([&] { (void)construct_even_q(Fodd, 6, 1, b); })
              .find("even q") != std::string::npos);
}

TEST_CASE("square family 3: divisors of (q-1)/2") {
    Field F19(19, 1);
    WorkBudget wb;
    SquareParams P;
    P.N = 9;
    HullCode c4 = construct_square_family(F19, 3, P, 1, wb);
    expect_code(c4, 9, 5, 5);
    CHECK(c4.family == "square-3");
    CHECK(has_param(c4, "N", "9"));
    CHECK(has_param(c4, "s", "1"));
    CHECK_FALSE(has_param(c4, "twisted", "1"));

    // Odd N admits s = 0 with k = N - 2.
    WorkBudget wb0;
    expect_code(construct_square_family(F19, 3, P, 0, wb0), 9, 7, 3);

    Field F81(3, 4);
    WorkBudget wb2;
    SquareParams P8;
    P8.N = 8;
    expect_code(construct_square_family(F81, 3, P8, 1, wb2), 8, 5, 4);

    // q = 13, N = 6: the square classes land on the nonresidue side.
    Field F13(13, 1);
    WorkBudget wb3;
    SquareParams P6;
    P6.N = 6;
    HullCode tw = construct_square_family(F13, 3, P6, 1, wb3);
    expect_code(tw, 6, 3, 4);
    CHECK(has_param(tw, "twisted", "1"));

    WorkBudget wb4;
    SquareParams bad;
    bad.N = 7;  // 7 does not divide 9
    CHECK_THROWS_AS((void)construct_square_family(F19, 3, bad, 1, wb4), precondition_error);
}

TEST_CASE("square families 1 and 2 over GF(81)") {
    Field F(3, 4);
    SquareParams P;
    P.N = 6;
    for (uint32_t fam : {1u, 2u}) {
        WorkBudget wb;
        HullCode hc = construct_square_family(F, fam, P, 1, wb);
        expect_code(hc, 6, 3, 4);
        CHECK(hc.family == "square-" + std::to_string(fam));
    }

    // Family 1 needs p | N; no even N with (N-1) | 26 is divisible by 3.
    Field F27(3, 3);
    for (uint32_t N = 2; N <= 25; N++) {
        SquareParams Q;
        Q.N = N;
        WorkBudget wb;
        CHECK_THROWS_AS((void)construct_square_family(F27, 1, Q, 1, wb),
                        precondition_error);
    }
}

TEST_CASE("square families 4-6: subgroup plus multiplicative cosets") {
    // Family 4 at q=25, r=1: n = 24/6 = 4, t odd.
    Field F25(5, 2);
    SquareParams P;
    P.t = 1;
    P.r = 1;
    WorkBudget wb;
    HullCode f4 = construct_square_family(F25, 4, P, 1, wb);
    expect_code(f4, 8, 5, 4);
    CHECK(has_param(f4, "n", "4"));
    CHECK(has_param(f4, "t", "1"));
    CHECK(has_param(f4, "r", "1"));
    CHECK(has_param(f4, "twisted", "1"));

    // t = 3 passes the arithmetic conditions but no coset choice works.
    SquareParams P3;
    P3.t = 3;
    P3.r = 1;
    WorkBudget wb3;
    CHECK(thrown_message([&] { (void)construct_square_family(F25, 4, P3, 1, wb3); })
              .find("no admissible coset") != std::string::npos);

    SquareParams P2;
    P2.t = 2;
    P2.r = 1;
    WorkBudget wb4;
    CHECK(thrown_message([&] { (void)construct_square_family(F25, 4, P2, 1, wb4); })
              .find("t must be odd") != std::string::npos);

    // Family 5 wants the ratio even; q=25 gives 3.
    SquareParams P5;
    P5.t = 1;
    P5.r = 1;
    WorkBudget wb5;
    CHECK(thrown_message([&] { (void)construct_square_family(F25, 5, P5, 1, wb5); })
              .find("must be even") != std::string::npos);

    // Family 6 needs (t+1)(q-1)/(p^r-1) <= q-2 on top of the perfect-square
    // condition; no field this small satisfies both.
    Field F9(3, 2);
    SquareParams P6;
    P6.t = 1;
    P6.r = 1;
    WorkBudget wb6;
    CHECK(thrown_message([&] { (void)construct_square_family(F9, 6, P6, 1, wb6); })
              .find("N out of range") != std::string::npos);
    WorkBudget wb7;
    CHECK(thrown_message([&] { (void)construct_square_family(F25, 6, P6, 1, wb7); })
              .find("not a perfect square") != std::string::npos);
}

TEST_CASE("square families 7-8: half-degree subfield cosets") {
    Field F9(3, 2);
    SquareParams P;
    P.t = 2;
    WorkBudget wb;
    HullCode f7 = construct_square_family(F9, 7, P, 1, wb);
    expect_code(f7, 6, 3, 4);
    CHECK(f7.family == "square-7");

    // t must be even for family 7.
    SquareParams Podd;
    Podd.t = 1;
    WorkBudget wb2;
    CHECK(thrown_message([&] { (void)construct_square_family(F9, 7, Podd, 1, wb2); })
              .find("t must be even") != std::string::npos);

    // Family 8: the beta search comes up empty on both small square fields.
    Field F25(5, 2);
    SquareParams P8;
    P8.t = 3;
    WorkBudget wb3;
    CHECK(thrown_message([&] { (void)construct_square_family(F25, 8, P8, 1, wb3); })
              .find("no admissible beta") != std::string::npos);
    SquareParams P81;
    P81.t = 1;
    WorkBudget wb4;
    CHECK(thrown_message([&] { (void)construct_square_family(F9, 8, P81, 1, wb4); })
              .find("no admissible beta") != std::string::npos);
}

TEST_CASE("square families 9-12: subspace translates") {
    Field F81(3, 4);
    SquareParams P9;
    P9.r = 1;  // m0
    P9.ell = 1;
    P9.t = 1;
    WorkBudget wb;
    HullCode f9 = construct_square_family(F81, 9, P9, 1, wb);
    expect_code(f9, 6, 3, 4);
    CHECK(has_param(f9, "ell", "1"));

    Field F9(3, 2);
    SquareParams P10;
    P10.ell = 1;
    WorkBudget wb2;
    expect_code(construct_square_family(F9, 10, P10, 1, wb2), 6, 3, 4);

    // Families 11 and 12 require an extra point no field provides here.
    SquareParams P11;
    P11.r = 1;
    P11.ell = 1;
    P11.t = 1;
    WorkBudget wb3;
    CHECK(thrown_message([&] { (void)construct_square_family(F81, 11, P11, 1, wb3); })
              .find("no admissible") != std::string::npos);

    SquareParams P12;
    P12.ell = 2;
    WorkBudget wb4;
    CHECK(thrown_message([&] { (void)construct_square_family(F81, 12, P12, 1, wb4); })
              .find("no admissible") != std::string::npos);

    // q = 27 is not 1 mod 4: family 10 refuses.
    Field F27(3, 3);
    SquareParams P10b;
    P10b.ell = 1;
    WorkBudget wb5;
    CHECK_THROWS_AS((void)construct_square_family(F27, 10, P10b, 1, wb5),
                    precondition_error);
}

TEST_CASE("x^n - x family") {
    Field F81(3, 4);
    WorkBudget wb;
    HullCode a = construct_xn_minus_x(F81, 6, 1, wb);
    expect_code(a, 6, 5, 2);
    CHECK(a.family == "xn-minus-x");
    WorkBudget wb2;
    expect_code(construct_xn_minus_x(F81, 6, 2, wb2), 6, 3, 4);

    Field F9(3, 2);
    WorkBudget wb3;
    expect_code(construct_xn_minus_x(F9, 3, 1, wb3), 3, 2, 2);

    // n = 9 also qualifies over GF(81): 3 | 9 and 8 | 80.
    WorkBudget wb6;
    expect_code(construct_xn_minus_x(F81, 9, 1, wb6), 9, 8, 2);
    WorkBudget wb7;
    expect_code(construct_xn_minus_x(F81, 9, 4, wb7), 9, 2, 8);

    // s = n/2 would leave k = 1; the build refuses.
    WorkBudget wb4;
    CHECK(thrown_message([&] { (void)construct_xn_minus_x(F81, 6, 3, wb4); })
              .find("k <= 1") != std::string::npos);

    WorkBudget wb5;
    CHECK(thrown_message([&] { (void)construct_xn_minus_x(F81, 5, 1, wb5); })
              .find("p does not divide n") != std::string::npos);
    CHECK(thrown_message([&] { (void)construct_xn_minus_x(F81, 12, 1, wb5); })
              .find("n-1 does not divide q-1") != std::string::npos);
    Field F8(2, 3);
    CHECK_THROWS_AS((void)construct_xn_minus_x(F8, 4, 1, wb5), precondition_error);
}

TEST_CASE("subfield family") {
    Field F81(3, 4);
    WorkBudget wb;
    HullCode a = construct_subfield(F81, 2, 1, wb);
    expect_code(a, 9, 8, 2);
    CHECK(a.family == "subfield");
    for (uint32_t s = 1; s <= 4; s++) {
        WorkBudget b;
        expect_code(construct_subfield(F81, 2, s, b), 9, 9 - 2 * s + 1, 2 * s);
    }

    Field F27(3, 3);
    WorkBudget wb2;
    expect_code(construct_subfield(F27, 1, 1, wb2), 3, 2, 2);

    WorkBudget wb3;
    CHECK(thrown_message([&] { (void)construct_subfield(F81, 4, 1, wb3); })
              .find("r out of range") != std::string::npos);
    CHECK(thrown_message([&] { (void)construct_subfield(F81, 3, 1, wb3); })
              .find("r does not divide m") != std::string::npos);
    CHECK(thrown_message([&] { (void)construct_subfield(F81, 2, 5, wb3); })
              .find("s out of range") != std::string::npos);
}

TEST_CASE("roots-of-unity family") {
    Field F19(19, 1);
    WorkBudget wb;
    HullCode odd9 = construct_roots_of_unity(F19, 9, 1, RootsVariant::odd_k, wb);
    expect_code(odd9, 9, 8, 2);
    CHECK(has_param(odd9, "variant", "odd-k"));
    WorkBudget wb2;
    expect_code(construct_roots_of_unity(F19, 9, 4, RootsVariant::odd_k, wb2), 9, 2, 8);

    WorkBudget wb3;
    HullCode even6 = construct_roots_of_unity(F19, 6, 1, RootsVariant::even_k, wb3);
    expect_code(even6, 6, 4, 3);
    CHECK(has_param(even6, "variant", "even-k"));
    WorkBudget wb4;
    expect_code(construct_roots_of_unity(F19, 6, 1, RootsVariant::odd_k, wb4), 6, 5, 2);

    WorkBudget wb5;
    CHECK_THROWS_AS((void)construct_roots_of_unity(F19, 9, 1, RootsVariant::even_k, wb5),
                    precondition_error);
    CHECK_THROWS_AS((void)construct_roots_of_unity(F19, 5, 1, RootsVariant::odd_k, wb5),
                    precondition_error);
    CHECK_THROWS_AS((void)construct_roots_of_unity(F19, 18, 1, RootsVariant::odd_k, wb5),
                    precondition_error);

    // GF(7), n = 3: the one admissible tuple for that field.
    Field F7(7, 1);
    WorkBudget wb6;
    expect_code(construct_roots_of_unity(F7, 3, 1, RootsVariant::odd_k, wb6), 3, 2, 2);
}

TEST_CASE("additive-coset family") {
    Field F27(3, 3);
    WorkBudget wb;
    HullCode a = construct_add_cosets(F27, 1, 1, 1, wb);
    expect_code(a, 6, 5, 2);
    CHECK(a.family == "add-cosets");
    CHECK(has_param(a, "r", "1"));
    CHECK(has_param(a, "t", "1"));

    WorkBudget wb2;
    expect_code(construct_add_cosets(F27, 1, 3, 1, wb2), 12, 11, 2);

    // gcd(p, t+1) = 1 fails at t = 2.
    WorkBudget wb3;
    CHECK(thrown_message([&] { (void)construct_add_cosets(F27, 1, 2, 1, wb3); })
              .find("p divides t+1") != std::string::npos);

    WorkBudget wb4;
    CHECK_THROWS_AS((void)construct_add_cosets(F27, 3, 1, 1, wb4), precondition_error);
    Field F19(19, 1);
    CHECK_THROWS_AS((void)construct_add_cosets(F19, 1, 1, 1, wb4), precondition_error);
}

TEST_CASE("multiplicative-coset family") {
    Field F(3, 4);
    WorkBudget wb;
    HullCode c6 = construct_mult_cosets(F, 8, 1, 3, 7, false, wb);
    expect_code(c6, 16, 10, 7);
    CHECK(c6.family == "mult-cosets");
    CHECK(has_param(c6, "variant", "7"));

    WorkBudget wb2;
    HullCode c7 = construct_mult_cosets(F, 8, 2, 2, 8, false, wb2);
    expect_code(c7, 24, 20, 5);

    // Variant parity rules.
    WorkBudget wb3;
    CHECK(thrown_message([&] { (void)construct_mult_cosets(F, 8, 2, 1, 1, false, wb3); })
              .find("not dividing") != std::string::npos);
    CHECK(thrown_message([&] { (void)construct_mult_cosets(F, 8, 1, 1, 2, false, wb3); })
              .find("dividing") != std::string::npos);

    // The guaranteed t range, and the extend escape hatch.
    std::string msg =
        thrown_message([&] { (void)construct_mult_cosets(F, 8, 5, 1, 8, false, wb3); });
    CHECK(msg.find("extend") != std::string::npos);
    WorkBudget wb4;
    HullCode ext = construct_mult_cosets(F, 8, 5, 1, 8, true, wb4);
    expect_code(ext, 48, 46, 3);
    CHECK(has_param(ext, "extend", "1"));

    WorkBudget wb5;
    CHECK_THROWS_AS((void)construct_mult_cosets(F, 7, 1, 1, 1, false, wb5),
                    precondition_error);
    CHECK_THROWS_AS((void)construct_mult_cosets(F, 8, 1, 1, 9, false, wb5),
                    precondition_error);
}

TEST_CASE("dualize flips parameters and keeps the hull") {
    Field F(3, 4);
    WorkBudget wb;
    HullCode c6 = construct_mult_cosets(F, 8, 1, 3, 7, false, wb);
    HullCode d = dualize(F, c6, wb);
    expect_code(d, 16, 6, 11);
    CHECK(d.family == c6.family);
    CHECK(has_param(d, "dual", "1"));
    CHECK(d.params.back().first == "dual");

    // The dual's dual pops the marker and restores the dimensions.
    HullCode dd = dualize(F, d, wb);
    expect_code(dd, 16, 10, 7);
    CHECK_FALSE(has_param(dd, "dual", "1"));
    CHECK(dd.params == c6.params);

    // The same hull witness spans both hulls.
    CHECK(d.hull_witness == c6.hull_witness);

    // n - k = 1 leaves no room for a dual with k > 1.
    WorkBudget wb2;
    HullCode thin = construct_xn_minus_x(F, 6, 1, wb2);
    CHECK_THROWS_AS((void)dualize(F, thin, wb2), precondition_error);
}

TEST_CASE("build_ab rejects bad splits with exact diagnostics") {
    Field F(19, 1);
    std::vector<Fel> alpha{F.el(1), F.el(2), F.el(3), F.el(4)};

    // (a*b*h') changes square class between alpha = 1 and alpha = 2.
    Poly a = poly_linear(F, F.el(5));
    Poly b = poly_linear(F, F.el(6));
    std::string msg = thrown_message([&] { (void)build_ab(F, alpha, a, b); });
    CHECK(msg.find("changes square class") != std::string::npos);
    CHECK(msg.find("alpha=2") != std::string::npos);

    // Shared factor.
    CHECK(thrown_message([&] { (void)build_ab(F, alpha, a, a); })
              .find("coprime") != std::string::npos);

    // Degree bookkeeping.
    Poly one = poly_one(F);
    CHECK(thrown_message([&] { (void)build_ab(F, alpha, a, one); })
              .find("deg a + deg b") != std::string::npos);

    // a vanishing on an evaluation point.
    Poly hits = poly_linear(F, F.el(1));
    CHECK(thrown_message([&] { (void)build_ab(F, alpha, hits, b); })
              .find("vanishes") != std::string::npos);

    std::vector<Fel> dup{F.el(1), F.el(1), F.el(3), F.el(4)};
    CHECK(thrown_message([&] { (void)build_ab(F, dup, a, b); })
              .find("distinct") != std::string::npos);
}

TEST_CASE("build_generalized split validation") {
    Field F(19, 1);
    // Ninth roots of unity; h' = 9x^8.
    std::vector<Fel> alpha;
    for (uint32_t r : {1u, 4u, 5u, 6u, 7u, 9u, 11u, 16u, 17u}) alpha.push_back(F.el(r));

    GenSplit ok;
    ok.f = poly_pow(F, poly_x(F), 4);
    ok.g1 = poly_one(F);
    ok.g2 = poly_one(F);
    ok.s = 1;
    GenResult res = build_generalized(F, alpha, ok);
    CHECK(res.spec.k == 8);
    CHECK(res.spec.n() == 9);

    // Wrong factorization.
    GenSplit wrong = ok;
    wrong.f = poly_pow(F, poly_x(F), 3);
    CHECK(thrown_message([&] { (void)build_generalized(F, alpha, wrong); })
              .find("does not equal") != std::string::npos);

    // Missing e-point for s >= 2.
    GenSplit s2 = ok;
    s2.s = 2;
    CHECK(thrown_message([&] { (void)build_generalized(F, alpha, s2); })
              .find("e-point required") != std::string::npos);

    // e-point colliding with the evaluation set.
    s2.e_point = alpha[0];
    CHECK(thrown_message([&] { (void)build_generalized(F, alpha, s2); })
              .find("must avoid") != std::string::npos);

    // A proper e-point works: k drops by 2 per unit of s.
    s2.e_point = F.el(2);
    GenResult r2 = build_generalized(F, alpha, s2);
    CHECK(r2.spec.k == 6);

    // s too large for the degree budget.
    GenSplit s5 = ok;
    s5.s = 5;
    s5.e_point = F.el(2);
    CHECK(thrown_message([&] { (void)build_generalized(F, alpha, s5); })
              .find("s too large") != std::string::npos);
}

TEST_CASE("find_free_point picks the smallest admissible element") {
    Field F(7, 1);
    CHECK(find_free_point(F, {}).v == 0);
    CHECK(find_free_point(F, {F.el(0), F.el(1)}).v == 2);
    std::vector<Fel> all;
    for (uint32_t i = 0; i < 7; i++) all.push_back(F.el(i));
    CHECK(thrown_message([&] { (void)find_free_point(F, all); })
              .find("exhausted") != std::string::npos);
}

TEST_CASE("sign flips preserve the certificate") {
    // Flipping the sqrt branch negates v at a coordinate; hull and distance
    // are invariant because the code and its dual transform together.
    Field F(19, 1);
    WorkBudget wb;
    SquareParams P;
    P.N = 9;
    HullCode hc = construct_square_family(F, 3, P, 1, wb);

    GrsSpec flipped = hc.spec;
    for (size_t i = 0; i < flipped.v.size(); i += 2) flipped.v[i] = F.neg(flipped.v[i]);
    Matrix G = grs_generator(F, flipped);
    WorkBudget wb2;
    Certificate cert = analyze(F, G, nullptr, wb2);
    CHECK(cert.hull_dim == 1);
    REQUIRE(cert.d.has_value());
    CHECK(*cert.d == *hc.cert.d);
    CHECK(cert.is_mds);
}

TEST_CASE("eval_set shapes for the square families") {
    Field F81(3, 4);
    WorkBudget wb;
    SquareParams P;
    P.N = 8;
    auto U = eval_set(F81, 3, P, wb);
    REQUIRE(U.size() == 8);
    // Eighth roots of unity: all satisfy u^8 = 1.
    for (Fel u : U) CHECK(F81.pow(u, 8).v == 1);

    // Family 1 includes zero and the (N-1)-st roots.
    SquareParams P6;
    P6.N = 6;
    auto U6 = eval_set(F81, 1, P6, wb);
    REQUIRE(U6.size() == 6);
    CHECK(U6[0].v == 0);
    for (size_t i = 1; i < U6.size(); i++) CHECK(F81.pow(U6[i], 5).v == 1);

    // Points come back sorted and distinct.
    for (size_t i = 1; i < U6.size(); i++) CHECK(U6[i - 1].v < U6[i].v);
}
