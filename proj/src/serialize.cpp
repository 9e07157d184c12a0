#include "serialize.hpp"

#include <cctype>

namespace hf {

namespace {

using nlohmann::json;

uint64_t get_uint(const json& j, const char* key, uint64_t max) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer() ||
        j[key].get<int64_t>() < 0 || (uint64_t)j[key].get<int64_t>() > max)
        throw io_error(std::string("missing or invalid field \"") + key + "\"");
    return (uint64_t)j[key].get<int64_t>();
}

std::vector<Fel> fel_vec(const Field& F, const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw io_error(std::string("missing or invalid array \"") + key + "\"");
    std::vector<Fel> out;
    out.reserve(j[key].size());
    for (const json& e : j[key]) {
        if (!e.is_number_integer() || e.get<int64_t>() < 0 ||
            e.get<int64_t>() >= (int64_t)F.q())
            throw io_error(std::string("element index out of range in \"") + key + "\"");
        out.push_back(F.el((uint32_t)e.get<int64_t>()));
    }
    return out;
}

json index_array(const std::vector<Fel>& v) {
    json a = json::array();
    for (Fel x : v) a.push_back(x.v);
    return a;
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit((unsigned char)c)) return false;
    return true;
}

}  // namespace

ordered_json field_to_json(const Field& F) {
    ordered_json j;
    j["p"] = F.p();
    j["m"] = F.m();
    j["modulus"] = F.modulus();
    return j;
}

Field field_from_json(const json& j) {
    uint32_t p = (uint32_t)get_uint(j, "p", 1u << 20);
    uint32_t m = (uint32_t)get_uint(j, "m", 20);
    if (!j.contains("modulus")) return Field(p, m);
    if (!j["modulus"].is_array()) throw io_error("invalid modulus");
    std::vector<uint32_t> mod;
    for (const json& e : j["modulus"]) {
        if (!e.is_number_integer() || e.get<int64_t>() < 0 || e.get<int64_t>() >= (int64_t)p)
            throw io_error("modulus coefficient out of range");
        mod.push_back((uint32_t)e.get<int64_t>());
    }
    return Field(p, m, mod);
}

ordered_json certificate_to_json(const Certificate& cert) {
    ordered_json j;
    j["n"] = cert.n;
    j["k"] = cert.k;
    j["hull_dim"] = cert.hull_dim;
    if (cert.d && cert.d_method != DistMethod::structural)
        j["d"] = *cert.d;
    else if (cert.d)
        j["d"] = "structural";
    else
        j["d"] = "exceeds-budget";
    j["d_method"] = dist_method_name(cert.d_method);
    if (cert.d) j["d_value"] = *cert.d;
    j["is_mds"] = cert.is_mds;
    if (cert.rank_deficiency) j["rank_deficiency"] = cert.rank_deficiency;
    j["method_notes"] = cert.method_notes;
    return j;
}

ordered_json matrix_to_json(const Field& F, const Matrix& M) {
    ordered_json j;
    j["schema"] = "hullforge/matrix-v1";
    j["field"] = field_to_json(F);
    j["rows"] = M.rows;
    j["cols"] = M.cols;
    j["entries"] = M.a;
    return j;
}

Matrix matrix_from_json(const Field& F, const json& j) {
    uint32_t rows = (uint32_t)get_uint(j, "rows", 1u << 20);
    uint32_t cols = (uint32_t)get_uint(j, "cols", 1u << 20);
    if (rows == 0 || cols == 0) throw io_error("matrix must be nonempty");
    if (!j.contains("entries") || !j["entries"].is_array() ||
        j["entries"].size() != (size_t)rows * cols)
        throw io_error("entries must hold rows*cols indices");
    Matrix M(rows, cols);
    size_t i = 0;
    for (const json& e : j["entries"]) {
        if (!e.is_number_integer() || e.get<int64_t>() < 0 ||
            e.get<int64_t>() >= (int64_t)F.q())
            throw io_error("matrix entry out of range for the field");
        M.a[i++] = (uint32_t)e.get<int64_t>();
    }
    return M;
}

ordered_json hullcode_to_json(const Field& F, const HullCode& hc) {
    ordered_json j;
    j["schema"] = "hullforge/artifact-v1";
    j["family"] = hc.family;
    ordered_json params;
    params["q"] = F.q();
    for (auto& [k, v] : hc.params) {
        if (all_digits(v))
            params[k] = (uint64_t)std::stoull(v);
        else
            params[k] = v;
    }
    j["params"] = params;
    j["field"] = field_to_json(F);
    j["n"] = hc.spec.n();
    j["k"] = hc.spec.k;
    j["alpha"] = index_array(hc.spec.alpha);
    j["v"] = index_array(hc.spec.v);
    j["hull_witness"] = index_array(hc.hull_witness);
    j["certificate"] = certificate_to_json(hc.cert);
    return j;
}

ArtifactData artifact_from_json(const json& j) {
    if (!j.is_object() || !j.contains("field")) throw io_error("artifact must carry a field");
    ArtifactData a{field_from_json(j["field"]), {}, {}, {}, {}};
    a.spec.alpha = fel_vec(a.field, j, "alpha");
    a.spec.v = fel_vec(a.field, j, "v");
    a.spec.k = (uint32_t)get_uint(j, "k", a.spec.alpha.size());
    if (j.contains("hull_witness")) a.hull_witness = fel_vec(a.field, j, "hull_witness");
    if (j.contains("family") && j["family"].is_string())
        a.family = j["family"].get<std::string>();
    if (j.contains("params") && j["params"].is_object()) {
        for (auto& [k, v] : j["params"].items()) {
            if (v.is_string())
                a.params.emplace_back(k, v.get<std::string>());
            else
                a.params.emplace_back(k, v.dump());
        }
    }
    grs_validate(a.field, a.spec);
    return a;
}

std::string matrix_text(const Field& F, const Matrix& M) {
    std::string out = "# GF(" + std::to_string(F.q()) + ") " + std::to_string(M.rows) + "x" +
                      std::to_string(M.cols) + " (element indices)\n";
    for (uint32_t r = 0; r < M.rows; r++) {
        for (uint32_t c = 0; c < M.cols; c++) {
            if (c) out += ' ';
            out += std::to_string(M.at(r, c));
        }
        out += '\n';
    }
    return out;
}

VerifyInput verify_input_from_json(const json& j) {
    if (!j.is_object()) throw io_error("expected a JSON object");
    if (j.contains("alpha")) {
        ArtifactData a = artifact_from_json(j);
        VerifyInput in{std::move(a.field), {}, true, std::move(a.spec), std::move(a.hull_witness)};
        in.G = grs_generator(in.field, in.spec);
        return in;
    }
    if (!j.contains("field")) throw io_error("matrix input must carry a field");
    Field F = field_from_json(j["field"]);
    Matrix G = matrix_from_json(F, j);
    return VerifyInput{std::move(F), std::move(G), false, {}, {}};
}

}  // namespace hf
