#include <doctest.h>

#include <cstdlib>
#include <string>

#include "code.hpp"

using namespace hf;

namespace {

Matrix mk(const Field& F, uint32_t rows, uint32_t cols, std::initializer_list<uint32_t> e) {
    Matrix M(rows, cols);
    size_t i = 0;
    for (uint32_t x : e) {
        REQUIRE(x < F.q());
        M.a[i++] = x;
    }
    REQUIRE(i == (size_t)rows * cols);
    return M;
}

// Splitmix64: deterministic filler for randomized checks.
struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed) {}
    uint64_t next() {
        s += 0x9e3779b97f4a7c15ull;
        uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint32_t below(uint32_t n) { return (uint32_t)(next() % n); }
};

}  // namespace

TEST_CASE("rref, rank, pivots") {
    Field F(5, 1);
    // Second row is twice the first.
    auto rr = rref(F, mk(F, 2, 2, {1, 2, 2, 4}));
    CHECK(rr.rank == 1);
    REQUIRE(rr.pivots.size() == 1);
    CHECK(rr.pivots[0] == 0);
    CHECK(rr.R.at(0, 0) == 1);
    CHECK(rr.R.at(0, 1) == 2);

    auto id = rref(F, mk(F, 2, 3, {2, 1, 0, 3, 0, 1}));
    CHECK(id.rank == 2);
    // Leading entries normalized to 1, pivot columns cleared.
    CHECK(id.R.at(0, 0) == 1);
    CHECK(id.R.at(1, 0) == 0);

    CHECK(rank(F, mk(F, 3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1})) == 3);
    CHECK(rank(F, Matrix(2, 4)) == 0);
}

TEST_CASE("kernel and dual annihilate the row space") {
    Field F(7, 1);
    Matrix G = mk(F, 2, 4, {1, 0, 2, 3, 0, 1, 4, 5});
    Matrix K = kernel(F, G);
    CHECK(K.rows == 2);
    CHECK(K.cols == 4);
    CHECK(rank(F, K) == 2);
    for (uint32_t i = 0; i < G.rows; i++)
        for (uint32_t j = 0; j < K.rows; j++) {
            Fel acc = F.zero();
            for (uint32_t c = 0; c < 4; c++)
                acc = F.add(acc, F.mul(F.el(G.at(i, c)), F.el(K.at(j, c))));
            CHECK(acc.v == 0);
        }
    CHECK(dual(F, G) == K);
}

TEST_CASE("intersection of row spaces") {
    Field F(7, 1);
    // span{e1,e2} meet span{e2,e3} = span{e2}
    Matrix A = mk(F, 2, 3, {1, 0, 0, 0, 1, 0});
    Matrix B = mk(F, 2, 3, {0, 1, 0, 0, 0, 1});
    Matrix X = intersection(F, A, B);
    CHECK(X.rows == 1);
    CHECK(rank(F, X) == 1);
    CHECK(X.at(0, 0) == 0);
    CHECK(X.at(0, 1) != 0);
    CHECK(X.at(0, 2) == 0);

    // Disjoint spans intersect trivially.
    Matrix C = mk(F, 1, 3, {1, 0, 0});
    Matrix D = mk(F, 1, 3, {0, 1, 0});
    CHECK(intersection(F, C, D).rows == 0);

    // Identical spans, different bases.
    Matrix E1 = mk(F, 2, 3, {1, 1, 0, 0, 0, 1});
    Matrix E2 = mk(F, 2, 3, {2, 2, 1, 1, 1, 1});
    CHECK(intersection(F, E1, E2).rows == 2);
}

TEST_CASE("hull dimension, two ways") {
    Field F(5, 1);
    // (1,2).(1,2) = 5 = 0: self-orthogonal line.
    Matrix G = mk(F, 1, 2, {1, 2});
    CHECK(hull_dim_gram(F, G) == 1);
    CHECK(hull_dim_intersect(F, G) == 1);
    CHECK(hull_dim(F, G) == 1);

    // Identity is LCD: hull 0.
    Matrix I = mk(F, 2, 2, {1, 0, 0, 1});
    CHECK(hull_dim(F, I) == 0);

    // Random full-rank matrices: the two methods agree (and cross-check
    // internally in hull_dim).
    Field F7(7, 1);
    Rng rng(0x5eed1);
    for (int trial = 0; trial < 200; trial++) {
        uint32_t n = 2 + rng.below(6);
        uint32_t k = 1 + rng.below(n);
        Matrix M(k, n);
        for (auto& x : M.a) x = rng.below(7);
        auto rr = rref(F7, M);
        if (rr.rank == 0) continue;
        Matrix basis(rr.rank, n);
        for (uint32_t i = 0; i < rr.rank; i++)
            for (uint32_t j = 0; j < n; j++) basis.at(i, j) = rr.R.at(i, j);
        CHECK(hull_dim_gram(F7, basis) == hull_dim_intersect(F7, basis));
    }
}

TEST_CASE("minimum distance, small codes") {
    Field F(7, 1);
    WorkBudget wb;
    // Identity: weight-1 words.
    auto r1 = min_distance(F, mk(F, 3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}), wb);
    REQUIRE(r1.d.has_value());
    CHECK(*r1.d == 1);
    // Repetition code.
    auto r2 = min_distance(F, mk(F, 1, 4, {1, 1, 1, 1}), wb);
    REQUIRE(r2.d.has_value());
    CHECK(*r2.d == 4);
    // Two interleaved repetitions: d = 2.
    auto r3 = min_distance(F, mk(F, 2, 4, {1, 0, 1, 0, 0, 1, 0, 1}), wb);
    REQUIRE(r3.d.has_value());
    CHECK(*r3.d == 2);
    // [4,3] parity-check code over GF(7): d = 2.
    auto r4 = min_distance(F, mk(F, 3, 4, {1, 0, 0, 6, 0, 1, 0, 6, 0, 0, 1, 6}), wb);
    REQUIRE(r4.d.has_value());
    CHECK(*r4.d == 2);
}

TEST_CASE("minimum distance respects the budget gate") {
    Field F(19, 1);
    Matrix G(8, 16);
    Rng rng(0x5eed2);
    for (auto& x : G.a) x = rng.below(19);
    // q^k and the subset scan both blow a 10-op budget; the gate must refuse
    // before burning anything.
    WorkBudget tiny(10);
    auto r = min_distance(F, G, tiny);
    CHECK_FALSE(r.d.has_value());
    CHECK(r.method == DistMethod::exceeds_budget);
    CHECK(tiny.used <= 10);
}

TEST_CASE("work budget semantics") {
    WorkBudget wb(100);
    wb.charge(60);
    CHECK(wb.used == 60);
    wb.charge(40);
    CHECK(wb.used == 100);
    CHECK_THROWS_AS(wb.charge(1), budget_exceeded);

    const char* saved = std::getenv("HULLFORGE_BUDGET");
    std::string saved_copy = saved ? saved : "";
    unsetenv("HULLFORGE_BUDGET");
    CHECK(WorkBudget::default_limit() == 100000000ull);
    setenv("HULLFORGE_BUDGET", "12345", 1);
    CHECK(WorkBudget::default_limit() == 12345ull);
    if (saved)
        setenv("HULLFORGE_BUDGET", saved_copy.c_str(), 1);
    else
        unsetenv("HULLFORGE_BUDGET");
}

TEST_CASE("dist_method_name strings") {
    CHECK(std::string(dist_method_name(DistMethod::enumeration)) == "enumeration");
    CHECK(std::string(dist_method_name(DistMethod::column_subsets)) == "column-subsets");
    CHECK(std::string(dist_method_name(DistMethod::structural)) == "structural");
    CHECK(std::string(dist_method_name(DistMethod::exceeds_budget)) == "exceeds-budget");
}

TEST_CASE("analyze: clean input") {
    Field F(5, 1);
    WorkBudget wb;
    Certificate c = analyze(F, mk(F, 1, 2, {1, 2}), nullptr, wb);
    CHECK(c.n == 2);
    CHECK(c.k == 1);
    CHECK(c.hull_dim == 1);
    REQUIRE(c.d.has_value());
    CHECK(*c.d == 2);
    CHECK(c.is_mds);
    CHECK(c.rank_deficiency == 0);
    CHECK(c.method_notes.find("gram+intersection agree") != std::string::npos);
}

TEST_CASE("analyze: rank-deficient input reported, row space analyzed") {
    Field F(5, 1);
    WorkBudget wb;
    Certificate c = analyze(F, mk(F, 2, 2, {1, 2, 2, 4}), nullptr, wb);
    CHECK(c.rank_deficiency == 1);
    CHECK(c.k == 1);
    CHECK(c.hull_dim == 1);
    REQUIRE(c.d.has_value());
    CHECK(*c.d == 2);
}

TEST_CASE("analyze: structural witness carries MDS past the budget") {
    // [30,15] over GF(31): enumeration and subset scans are both far out of
    // reach, but the witness (distinct alpha, nonzero v) certifies d = 16.
    Field F(31, 1);
    StructuralWitness w;
    for (uint32_t i = 0; i < 30; i++) {
        w.alpha.push_back(F.el(i));
        w.v.push_back(F.one());
    }
    Matrix G(15, 30);
    for (uint32_t r = 0; r < 15; r++)
        for (uint32_t c = 0; c < 30; c++) G.at(r, c) = F.pow(w.alpha[c], r).v;
    WorkBudget wb;
    Certificate cert = analyze(F, G, &w, wb);
    CHECK(cert.d_method == DistMethod::structural);
    REQUIRE(cert.d.has_value());
    CHECK(*cert.d == 16);
    CHECK(cert.is_mds);
    CHECK(cert.method_notes.find("structural") != std::string::npos);

    // Without the witness the same code reports exceeds-budget, not a guess.
    WorkBudget wb2;
    Certificate blind = analyze(F, G, nullptr, wb2);
    CHECK(blind.d_method == DistMethod::exceeds_budget);
    CHECK_FALSE(blind.d.has_value());
    CHECK_FALSE(blind.is_mds);
}

TEST_CASE("certify enforces claims") {
    Field F(5, 1);
    Matrix G = mk(F, 1, 2, {1, 2});
    Claim good{2, 1, 1, true};
    WorkBudget wb;
    Certificate c = certify(F, G, good, nullptr, nullptr, wb);
    CHECK(c.hull_dim == 1);

    Claim bad_hull{2, 1, 0, true};
    WorkBudget wb2;
    CHECK_THROWS_AS((void)certify(F, G, bad_hull, nullptr, nullptr, wb2),
                    certification_error);

    Claim bad_k{2, 2, 1, true};
    WorkBudget wb3;
    CHECK_THROWS_AS((void)certify(F, G, bad_k, nullptr, nullptr, wb3), certification_error);

    // A hull witness that is not in the hull must be rejected.
    std::vector<Fel> not_in_hull{F.one(), F.one()};
    WorkBudget wb4;
    CHECK_THROWS_AS((void)certify(F, G, good, nullptr, &not_in_hull, wb4),
                    certification_error);

    // The genuine hull vector passes.
    std::vector<Fel> in_hull{F.one(), F.el(2)};
    WorkBudget wb5;
    CHECK_NOTHROW((void)certify(F, G, good, nullptr, &in_hull, wb5));
}

TEST_CASE("certify rejects a forged structural witness") {
    Field F(7, 1);
    Matrix G = mk(F, 1, 4, {1, 1, 1, 1});

    StructuralWitness forged;
    forged.alpha = {F.el(1), F.el(1), F.el(2), F.el(3)};  // repeated alpha
    forged.v = {F.one(), F.one(), F.one(), F.one()};
    WorkBudget wb;
    CHECK_THROWS_AS((void)analyze(F, G, &forged, wb), certification_error);

    // Well-formed witness describing a different code: also rejected.
    StructuralWitness wrong;
    wrong.alpha = {F.el(1), F.el(2), F.el(3), F.el(4)};
    wrong.v = {F.one(), F.one(), F.one(), F.el(2)};
    WorkBudget wb2;
    CHECK_THROWS_AS((void)analyze(F, G, &wrong, wb2), certification_error);

    // Without a witness the same matrix analyzes normally.
    WorkBudget wb3;
    Certificate c = analyze(F, G, nullptr, wb3);
    CHECK(c.d_method == DistMethod::enumeration);
    REQUIRE(c.d.has_value());
    CHECK(*c.d == 4);
}
