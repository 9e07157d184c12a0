#include "hullforge/hullforge.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "atlas.hpp"
#include "serialize.hpp"

struct hf_field {
    hf::Field F;
};

struct hf_code {
    hf::HullCode hc;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = (char*)std::malloc(s.size() + 1);
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class Fn>
hf_status wrap(Fn&& fn) {
    try {
        fn();
        return HF_OK;
    } catch (const hf::budget_exceeded& e) {
        g_last_error = e.what();
        return HF_EBUDGET;
    } catch (const hf::precondition_error& e) {
        g_last_error = e.what();
        return HF_EPRECOND;
    } catch (const hf::certification_error& e) {
        g_last_error = e.what();
        return HF_ECERT;
    } catch (const hf::io_error& e) {
        g_last_error = e.what();
        return HF_EIO;
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return HF_EIO;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HF_EINVAL;
    }
}

hf::Fel checked_el(const hf::Field& F, uint32_t idx) {
    if (idx >= F.q()) throw hf::precondition_error("element index out of range");
    return F.el(idx);
}

uint64_t effective_budget(uint64_t budget) {
    return budget ? budget : hf::WorkBudget::default_limit();
}

uint32_t get_u32(const nlohmann::json& j, const char* key, bool required = true) {
    if (!j.contains(key)) {
        if (required)
            throw hf::precondition_error(std::string("missing parameter \"") + key + "\"");
        return 0;
    }
    const auto& v = j.at(key);
    if (!v.is_number_integer() || v.get<int64_t>() < 0 || v.get<int64_t>() > 0xffffffffLL)
        throw hf::precondition_error(std::string("parameter \"") + key +
                                     "\" must be a nonnegative integer");
    return (uint32_t)v.get<int64_t>();
}

bool get_flag(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) return false;
    const auto& v = j.at(key);
    if (v.is_boolean()) return v.get<bool>();
    if (v.is_number_integer()) return v.get<int64_t>() != 0;
    throw hf::precondition_error(std::string("parameter \"") + key + "\" must be a boolean");
}

hf::HullCode construct_from_json(const hf::Field& F, const nlohmann::json& j,
                                 hf::WorkBudget& budget) {
    if (!j.is_object() || !j.contains("family") || !j.at("family").is_string())
        throw hf::precondition_error("parameters must name a family");
    const std::string family = j.at("family").get<std::string>();

    if (family == "even-q")
        return hf::construct_even_q(F, get_u32(j, "n"), get_u32(j, "s"), budget);

    if (family.rfind("square-", 0) == 0) {
        uint32_t fam = 0;
        try {
            size_t pos = 0;
            fam = (uint32_t)std::stoul(family.substr(7), &pos);
            if (pos != family.size() - 7) fam = 0;
        } catch (...) {
            fam = 0;
        }
        if (fam < 1 || fam > 12)
            throw hf::precondition_error("unknown square family (square-1 .. square-12)");
        hf::SquareParams P;
        P.N = get_u32(j, "N", false);
        P.n = get_u32(j, "n", false);
        P.t = get_u32(j, "t", false);
        P.r = get_u32(j, "r", false);
        P.ell = get_u32(j, "ell", false);
        return hf::construct_square_family(F, fam, P, get_u32(j, "s"), budget);
    }

    if (family == "xn-minus-x")
        return hf::construct_xn_minus_x(F, get_u32(j, "n"), get_u32(j, "s"), budget);

    if (family == "subfield")
        return hf::construct_subfield(F, get_u32(j, "r"), get_u32(j, "s"), budget);

    if (family == "roots-of-unity") {
        hf::RootsVariant var = hf::RootsVariant::odd_k;
        if (j.contains("variant")) {
            if (!j.at("variant").is_string())
                throw hf::precondition_error(
                    "roots-of-unity variant must be \"odd-k\" or \"even-k\"");
            std::string v = j.at("variant").get<std::string>();
            if (v == "odd-k")
                var = hf::RootsVariant::odd_k;
            else if (v == "even-k")
                var = hf::RootsVariant::even_k;
            else
                throw hf::precondition_error(
                    "roots-of-unity variant must be \"odd-k\" or \"even-k\"");
        }
        return hf::construct_roots_of_unity(F, get_u32(j, "n"), get_u32(j, "s"), var, budget);
    }

    if (family == "add-cosets")
        return hf::construct_add_cosets(F, get_u32(j, "r"), get_u32(j, "t"), get_u32(j, "s"),
                                        budget);

    if (family == "mult-cosets")
        return hf::construct_mult_cosets(F, get_u32(j, "n"), get_u32(j, "t"), get_u32(j, "s"),
                                         get_u32(j, "variant"), get_flag(j, "extend"), budget);

    throw hf::precondition_error(
        "unknown family \"" + family +
        "\" (families: even-q, square-1..square-12, xn-minus-x, subfield, "
        "roots-of-unity, add-cosets, mult-cosets)");
}

std::vector<std::string> split_csv(const char* s) {
    std::vector<std::string> out;
    if (!s) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        if (a != std::string::npos) out.push_back(item.substr(a, b - a + 1));
    }
    return out;
}

}  // namespace

extern "C" {

const char* hf_version(void) { return "hullforge 1.0.0"; }

const char* hf_last_error(void) { return g_last_error.c_str(); }

hf_status hf_field_create(uint32_t p, uint32_t m, const uint32_t* modulus,
                          size_t modulus_len, hf_field** out) {
    if (!out) return HF_EINVAL;
    *out = nullptr;
    return wrap([&] {
        if (modulus) {
            std::vector<uint32_t> mod(modulus, modulus + modulus_len);
            *out = new hf_field{hf::Field(p, m, mod)};
        } else {
            *out = new hf_field{hf::Field(p, m)};
        }
    });
}

void hf_field_destroy(hf_field* field) { delete field; }

uint32_t hf_field_order(const hf_field* field) { return field ? field->F.q() : 0; }
uint32_t hf_field_characteristic(const hf_field* field) { return field ? field->F.p() : 0; }
uint32_t hf_field_degree(const hf_field* field) { return field ? field->F.m() : 0; }

#define HF_BINOP(name, method)                                                          \
    hf_status name(const hf_field* field, uint32_t a, uint32_t b, uint32_t* out) {      \
        if (!field || !out) return HF_EINVAL;                                           \
        return wrap([&] {                                                               \
            *out = field->F.method(checked_el(field->F, a), checked_el(field->F, b)).v; \
        });                                                                             \
    }

HF_BINOP(hf_field_add, add)
HF_BINOP(hf_field_sub, sub)
HF_BINOP(hf_field_mul, mul)
HF_BINOP(hf_field_div, div)
#undef HF_BINOP

hf_status hf_field_neg(const hf_field* field, uint32_t a, uint32_t* out) {
    if (!field || !out) return HF_EINVAL;
    return wrap([&] { *out = field->F.neg(checked_el(field->F, a)).v; });
}

hf_status hf_field_inv(const hf_field* field, uint32_t a, uint32_t* out) {
    if (!field || !out) return HF_EINVAL;
    return wrap([&] { *out = field->F.inv(checked_el(field->F, a)).v; });
}

hf_status hf_field_pow(const hf_field* field, uint32_t a, uint64_t e, uint32_t* out) {
    if (!field || !out) return HF_EINVAL;
    return wrap([&] { *out = field->F.pow(checked_el(field->F, a), e).v; });
}

hf_status hf_field_is_square(const hf_field* field, uint32_t a, int* out) {
    if (!field || !out) return HF_EINVAL;
    return wrap([&] { *out = field->F.is_square(checked_el(field->F, a)) ? 1 : 0; });
}

hf_status hf_field_sqrt(const hf_field* field, uint32_t a, uint32_t* out) {
    if (!field || !out) return HF_EINVAL;
    return wrap([&] { *out = field->F.sqrt(checked_el(field->F, a)).v; });
}

hf_status hf_construct(const hf_field* field, const char* params_json,
                       uint64_t budget, hf_code** out) {
    if (!field || !params_json || !out) return HF_EINVAL;
    *out = nullptr;
    return wrap([&] {
        nlohmann::json j = nlohmann::json::parse(params_json);
        hf::WorkBudget wb(effective_budget(budget));
        hf::HullCode hc = construct_from_json(field->F, j, wb);
        if (get_flag(j, "dual")) hc = hf::dualize(field->F, hc, wb);
        *out = new hf_code{std::move(hc)};
    });
}

hf_status hf_code_dual(const hf_field* field, const hf_code* code,
                       uint64_t budget, hf_code** out) {
    if (!field || !code || !out) return HF_EINVAL;
    *out = nullptr;
    return wrap([&] {
        hf::WorkBudget wb(effective_budget(budget));
        *out = new hf_code{hf::dualize(field->F, code->hc, wb)};
    });
}

void hf_code_destroy(hf_code* code) { delete code; }

uint32_t hf_code_length(const hf_code* code) { return code ? code->hc.spec.n() : 0; }
uint32_t hf_code_dimension(const hf_code* code) { return code ? code->hc.spec.k : 0; }

int32_t hf_code_distance(const hf_code* code) {
    if (!code || !code->hc.cert.d) return -1;
    return (int32_t)*code->hc.cert.d;
}

hf_status hf_code_artifact(const hf_field* field, const hf_code* code, char** out) {
    if (!field || !code || !out) return HF_EINVAL;
    *out = nullptr;
    return wrap([&] { *out = dup_string(hf::hullcode_to_json(field->F, code->hc).dump(2)); });
}

hf_status hf_code_certificate(const hf_code* code, char** out) {
    if (!code || !out) return HF_EINVAL;
    *out = nullptr;
    return wrap([&] { *out = dup_string(hf::certificate_to_json(code->hc.cert).dump(2)); });
}

hf_status hf_code_generator_text(const hf_field* field, const hf_code* code, char** out) {
    if (!field || !code || !out) return HF_EINVAL;
    *out = nullptr;
    return wrap([&] {
        hf::Matrix G = hf::grs_generator(field->F, code->hc.spec);
        *out = dup_string(hf::matrix_text(field->F, G));
    });
}

hf_status hf_verify(const char* input_json, uint64_t budget, char** report, int* certified) {
    if (!input_json || !report || !certified) return HF_EINVAL;
    *report = nullptr;
    *certified = 0;
    return wrap([&] {
        nlohmann::json j = nlohmann::json::parse(input_json);
        hf::VerifyInput in = hf::verify_input_from_json(j);
        hf::WorkBudget wb(effective_budget(budget));
        hf::Certificate cert;
        if (in.is_artifact) {
            hf::StructuralWitness w{in.spec.alpha, in.spec.v};
            cert = hf::analyze(in.field, in.G, &w, wb);
        } else {
            cert = hf::analyze(in.field, in.G, nullptr, wb);
        }
        *report = dup_string(hf::certificate_to_json(cert).dump(2));
        *certified = (cert.hull_dim == 1 && cert.is_mds) ? 1 : 0;
    });
}

hf_status hf_export(const char* artifact_json, const char* format, char** out) {
    if (!artifact_json || !format || !out) return HF_EINVAL;
    *out = nullptr;
    return wrap([&] {
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(artifact_json);
        hf::ArtifactData a = hf::artifact_from_json(j);
        std::string f = format;
        if (f == "json") {
            *out = dup_string(j.dump(2));
        } else if (f == "text") {
            hf::Matrix G = hf::grs_generator(a.field, a.spec);
            *out = dup_string(hf::matrix_text(a.field, G));
        } else if (f == "parity-check") {
            hf::GrsSpec dual = hf::grs_dual(a.field, a.spec);
            hf::Matrix H = hf::grs_generator(a.field, dual);
            *out = dup_string(hf::matrix_to_json(a.field, H).dump(2));
        } else {
            throw hf::io_error("unknown format \"" + f +
                               "\" (formats: json, text, parity-check)");
        }
    });
}

hf_status hf_atlas(const hf_field* field, uint32_t max_n, const char* families,
                   uint64_t row_budget, char** out_csv) {
    if (!field || !out_csv) return HF_EINVAL;
    *out_csv = nullptr;
    return wrap([&] {
        std::vector<std::string> fams = split_csv(families);
        auto rows = hf::atlas_for_field(field->F, max_n, fams, effective_budget(row_budget));
        *out_csv = dup_string(hf::atlas_csv(rows));
    });
}

void hf_string_free(char* s) { std::free(s); }

}  // extern "C"
