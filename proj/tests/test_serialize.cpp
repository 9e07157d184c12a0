#include <doctest.h>

#include <string>

#include "serialize.hpp"

using namespace hf;
using nlohmann::json;

namespace {

HullCode sample_code() {
    Field F(19, 1);
    WorkBudget wb;
    SquareParams P;
    P.N = 9;
    return construct_square_family(F, 3, P, 1, wb);
}

}  // namespace

TEST_CASE("field round-trips through JSON") {
    Field F(3, 4);
    ordered_json j = field_to_json(F);
    CHECK(j["p"] == 3);
    CHECK(j["m"] == 4);
    REQUIRE(j["modulus"].size() == 5);
    CHECK(j["modulus"][0] == 2);
    CHECK(j["modulus"][4] == 1);

    Field G = field_from_json(j);
    CHECK(G.q() == 81);
    CHECK(G.modulus() == F.modulus());

    // Default modulus when the key is absent.
    Field H = field_from_json(json{{"p", 2}, {"m", 3}});
    CHECK(H.q() == 8);
    CHECK(H.modulus() == std::vector<uint32_t>{1, 1, 0, 1});

    CHECK_THROWS_AS((void)field_from_json(json{{"m", 3}}), io_error);
    CHECK_THROWS_AS((void)field_from_json(json{{"p", "2"}, {"m", 3}}), io_error);
    // A bad modulus is a field-construction problem, not an I/O problem.
    // x^2 + 1 = (x+1)^2 over GF(2).
    CHECK_THROWS_AS(
        (void)field_from_json(json{{"p", 2}, {"m", 2}, {"modulus", {1, 0, 1}}}),
        precondition_error);
}

TEST_CASE("matrix round-trips through JSON and text") {
    Field F(5, 1);
    Matrix M(2, 3);
    uint32_t vals[] = {1, 2, 3, 4, 0, 2};
    for (uint32_t i = 0; i < 2; i++)
        for (uint32_t j = 0; j < 3; j++) M.at(i, j) = vals[i * 3 + j];

    ordered_json j = matrix_to_json(F, M);
    CHECK(j["schema"] == "hullforge/matrix-v1");
    CHECK(j["rows"] == 2);
    CHECK(j["cols"] == 3);
    CHECK(j["entries"] == std::vector<uint32_t>({1, 2, 3, 4, 0, 2}));

    Matrix M2 = matrix_from_json(F, j);
    CHECK(M2 == M);

    std::string txt = matrix_text(F, M);
    CHECK(txt == "# GF(5) 2x3 (element indices)\n1 2 3\n4 0 2\n");

    json bad = j;
    bad["entries"] = std::vector<uint32_t>{1, 2, 3};
    CHECK_THROWS_AS((void)matrix_from_json(F, bad), io_error);
    bad = j;
    bad["entries"] = std::vector<uint32_t>{1, 2, 3, 4, 0, 9};
    CHECK_THROWS_AS((void)matrix_from_json(F, bad), io_error);
}

TEST_CASE("artifact round-trip preserves the code and re-certifies") {
    Field F(19, 1);
    HullCode hc = sample_code();
    ordered_json j = hullcode_to_json(F, hc);

    CHECK(j["schema"] == "hullforge/artifact-v1");
    CHECK(j["family"] == "square-3");
    CHECK(j["params"]["q"] == 19);
    CHECK(j["params"]["N"] == 9);
    CHECK(j["params"]["s"] == 1);
    CHECK(j["n"] == 9);
    CHECK(j["k"] == 5);
    CHECK(j["field"]["p"] == 19);
    CHECK(j["certificate"]["hull_dim"] == 1);
    CHECK(j["certificate"]["d"] == 5);
    CHECK(j["certificate"]["is_mds"] == true);

    ArtifactData art = artifact_from_json(j);
    CHECK(art.field.q() == 19);
    CHECK(art.family == "square-3");
    CHECK(art.spec.k == hc.spec.k);
    REQUIRE(art.spec.alpha.size() == hc.spec.alpha.size());
    for (size_t i = 0; i < art.spec.alpha.size(); i++) {
        CHECK(art.spec.alpha[i].v == hc.spec.alpha[i].v);
        CHECK(art.spec.v[i].v == hc.spec.v[i].v);
    }
    CHECK(art.hull_witness.size() == hc.hull_witness.size());

    // Nothing in the artifact is trusted: certify from scratch.
    WorkBudget wb;
    Matrix G = grs_generator(art.field, art.spec);
    Certificate cert = analyze(art.field, G, nullptr, wb);
    CHECK(cert.hull_dim == 1);
    CHECK(cert.is_mds);
    REQUIRE(cert.d.has_value());
    CHECK(*cert.d == 5);

    // Round-trip keeps the construction parameters (plus the q echo).
    for (auto& [key, val] : hc.params) {
        bool found = false;
        for (auto& [k2, v2] : art.params)
            if (k2 == key && v2 == val) found = true;
        CHECK(found);
    }
}

TEST_CASE("artifact rejects malformed input") {
    Field F(19, 1);
    HullCode hc = sample_code();
    ordered_json good = hullcode_to_json(F, hc);

    json j = good;
    j.erase("alpha");
    CHECK_THROWS_AS((void)artifact_from_json(j), io_error);

    j = good;
    j["k"] = "five";
    CHECK_THROWS_AS((void)artifact_from_json(j), io_error);

    j = good;
    j["alpha"][0] = 19;  // out of range for GF(19)
    CHECK_THROWS_AS((void)artifact_from_json(j), io_error);

    j = good;
    j["alpha"][0] = j["alpha"][1];  // duplicate evaluation point
    CHECK_THROWS_AS((void)artifact_from_json(j), precondition_error);

    j = good;
    j["k"] = 0;
    CHECK_THROWS_AS((void)artifact_from_json(j), precondition_error);
}

TEST_CASE("certificate JSON spells out how d was obtained") {
    Certificate c;
    c.n = 9;
    c.k = 5;
    c.hull_dim = 1;
    c.d = 5;
    c.d_method = DistMethod::enumeration;
    c.is_mds = true;
    c.method_notes = "gram+intersection agree";
    ordered_json j = certificate_to_json(c);
    CHECK(j["d"] == 5);
    CHECK(j["d_method"] == "enumeration");
    CHECK(j["d_value"] == 5);
    CHECK(j.count("rank_deficiency") == 0);

    c.d_method = DistMethod::structural;
    j = certificate_to_json(c);
    CHECK(j["d"] == "structural");
    CHECK(j["d_value"] == 5);
    CHECK(j["d_method"] == "structural");

    c.d.reset();
    c.d_method = DistMethod::exceeds_budget;
    c.is_mds = false;
    c.rank_deficiency = 2;
    j = certificate_to_json(c);
    CHECK(j["d"] == "exceeds-budget");
    CHECK(j.count("d_value") == 0);
    CHECK(j["rank_deficiency"] == 2);
}

TEST_CASE("verify input accepts artifacts and raw matrices") {
    Field F(19, 1);
    HullCode hc = sample_code();
    ordered_json art = hullcode_to_json(F, hc);

    VerifyInput vi = verify_input_from_json(art);
    CHECK(vi.is_artifact);
    CHECK(vi.field.q() == 19);
    CHECK(vi.G.rows == 5);
    CHECK(vi.G.cols == 9);
    CHECK(vi.hull_witness.size() == 9);
    CHECK(vi.G == grs_generator(vi.field, vi.spec));

    // Raw matrix form.
    Field F5(5, 1);
    Matrix M(1, 2);
    M.at(0, 0) = 1;
    M.at(0, 1) = 2;
    ordered_json mj = matrix_to_json(F5, M);
    VerifyInput vm = verify_input_from_json(mj);
    CHECK_FALSE(vm.is_artifact);
    CHECK(vm.field.q() == 5);
    CHECK(vm.G == M);
    CHECK(vm.hull_witness.empty());

    // A matrix without its field is unusable.
    ordered_json bare = matrix_to_json(F5, M);
    bare.erase("field");
    CHECK_THROWS_AS((void)verify_input_from_json(bare), io_error);
}

TEST_CASE("artifact JSON is byte-stable across a round trip") {
    Field F(19, 1);
    HullCode hc = sample_code();
    ordered_json j = hullcode_to_json(F, hc);
    std::string s1 = j.dump(2);
    ordered_json j2 = ordered_json::parse(s1);
    CHECK(j2.dump(2) == s1);
}
