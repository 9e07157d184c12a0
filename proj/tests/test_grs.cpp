#include <doctest.h>

#include "grs.hpp"
#include "poly.hpp"

using namespace hf;

namespace {

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

GrsSpec random_spec(const Field& F, Rng& rng, uint32_t n) {
    GrsSpec s;
    // Distinct alpha by partial Fisher-Yates over the element indices.
    std::vector<uint32_t> idx(F.q());
    for (uint32_t i = 0; i < F.q(); i++) idx[i] = i;
    for (uint32_t i = 0; i < n; i++) {
        uint32_t j = i + rng.below(F.q() - i);
        std::swap(idx[i], idx[j]);
        s.alpha.push_back(F.el(idx[i]));
        s.v.push_back(F.el(1 + rng.below(F.q() - 1)));
    }
    s.k = 1 + rng.below(n);
    return s;
}

}  // namespace

TEST_CASE("grs_validate rejects malformed specs") {
    Field F(2, 3, {1, 1, 0, 1});  // GF(8)
    GrsSpec ok;
    for (uint32_t i = 1; i <= 7; i++) {
        ok.alpha.push_back(F.el(i));
        ok.v.push_back(F.one());
    }
    ok.k = 3;
    CHECK_NOTHROW(grs_validate(F, ok));

    GrsSpec dup = ok;
    dup.alpha[2] = dup.alpha[0];
    CHECK_THROWS_AS(grs_validate(F, dup), precondition_error);

    GrsSpec zv = ok;
    zv.v[4] = F.zero();
    CHECK_THROWS_AS(grs_validate(F, zv), precondition_error);

    GrsSpec k0 = ok;
    k0.k = 0;
    CHECK_THROWS_AS(grs_validate(F, k0), precondition_error);

    GrsSpec kbig = ok;
    kbig.k = 8;
    CHECK_THROWS_AS(grs_validate(F, kbig), precondition_error);

    GrsSpec sizes = ok;
    sizes.v.pop_back();
    CHECK_THROWS_AS(grs_validate(F, sizes), precondition_error);

    Field other(2, 3, {1, 1, 0, 1});
    GrsSpec foreign = ok;
    foreign.alpha[0] = other.el(1);
    CHECK_THROWS_AS(grs_validate(F, foreign), precondition_error);
}

TEST_CASE("[7,3] Reed-Solomon over GF(8): generator, distance, dual") {
    Field F(2, 3, {1, 1, 0, 1});
    GrsSpec spec;
    for (uint32_t i = 1; i <= 7; i++) {
        spec.alpha.push_back(F.el(i));
        spec.v.push_back(F.one());
    }
    spec.k = 3;

    Matrix G = grs_generator(F, spec);
    CHECK(G.rows == 3);
    CHECK(G.cols == 7);
    for (uint32_t j = 0; j < 3; j++)
        for (uint32_t i = 0; i < 7; i++)
            CHECK(G.at(j, i) == F.pow(spec.alpha[i], j).v);

    WorkBudget wb;
    auto dr = min_distance(F, G, wb);
    REQUIRE(dr.d.has_value());
    CHECK(*dr.d == 5);  // n - k + 1

    GrsSpec ds = grs_dual(F, spec);
    CHECK(ds.k == 4);
    CHECK(ds.alpha == spec.alpha);
    Matrix H = grs_generator(F, ds);
    for (uint32_t a = 0; a < G.rows; a++)
        for (uint32_t b = 0; b < H.rows; b++) {
            Fel acc = F.zero();
            for (uint32_t c = 0; c < 7; c++)
                acc = F.add(acc, F.mul(F.el(G.at(a, c)), F.el(H.at(b, c))));
            CHECK(acc.v == 0);
        }

    // Dual of the dual restores the spec exactly.
    GrsSpec dd = grs_dual(F, ds);
    CHECK(dd.k == spec.k);
    CHECK(dd.alpha == spec.alpha);
    CHECK(dd.v == spec.v);
}

TEST_CASE("pairwise difference products match the derivative") {
    Field F(19, 1);
    std::vector<Fel> alpha;
    for (uint32_t i : {2u, 3u, 5u, 7u, 11u, 13u}) alpha.push_back(F.el(i));

    auto prods = pairwise_difference_products(F, alpha);
    REQUIRE(prods.size() == alpha.size());

    Poly h = poly_from_roots(F, alpha);
    Poly hp = poly_derivative(F, h);
    for (size_t i = 0; i < alpha.size(); i++) {
        CHECK(prods[i] == poly_eval(F, hp, alpha[i]));
        Fel direct = F.one();
        for (size_t j = 0; j < alpha.size(); j++)
            if (j != i) direct = F.mul(direct, F.sub(alpha[i], alpha[j]));
        CHECK(prods[i] == direct);
    }
}

TEST_CASE("random GRS codes hit the Singleton bound") {
    Rng rng(0xca11ab1e);
    for (auto [p, m] : {std::pair<uint32_t, uint32_t>{2, 3}, {3, 2}, {19, 1}}) {
        Field F(p, m);
        for (int trial = 0; trial < 25; trial++) {
            uint32_t n = 4 + rng.below(F.q() - 4 < 9 ? F.q() - 4 : 9);
            GrsSpec s = random_spec(F, rng, n);
            Matrix G = grs_generator(F, s);
            WorkBudget wb;
            auto dr = min_distance(F, G, wb);
            REQUIRE(dr.d.has_value());
            CHECK(*dr.d == s.n() - s.k + 1);
            CHECK(hull_dim_gram(F, G) == hull_dim_intersect(F, G));
        }
    }
}
