// hullforge command line: construct MDS codes with one-dimensional hull,
// verify generator matrices, sweep the parameter atlas, export artifacts.
//
// Talks to the library strictly through the C API.  Exit codes: 0 certified,
// 2 precondition failure, 3 certification failure (including budget
// exhaustion), 4 I/O or parse error.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hullforge/hullforge.h"

namespace {

using nlohmann::json;

int status_to_exit(hf_status st) {
    switch (st) {
        case HF_OK: return 0;
        case HF_EPRECOND: return 2;
        case HF_ECERT: return 3;
        case HF_EBUDGET: return 3;
        case HF_EIO: return 4;
        default: return 4;
    }
}

const char* status_name(hf_status st) {
    switch (st) {
        case HF_OK: return "ok";
        case HF_EPRECOND: return "precondition";
        case HF_ECERT: return "certification";
        case HF_EBUDGET: return "budget";
        case HF_EIO: return "io";
        default: return "invalid";
    }
}

int fail(hf_status st) {
    json err;
    err["error"] = {{"status", status_name(st)}, {"message", hf_last_error()}};
    std::cout << err.dump(2) << "\n";
    return status_to_exit(st);
}

int fail_io(const std::string& message) {
    json err;
    err["error"] = {{"status", "io"}, {"message", message}};
    std::cout << err.dump(2) << "\n";
    return 4;
}

struct FieldArgs {
    uint32_t q = 0, p = 0, m = 0;
    std::vector<uint32_t> modulus;

    void add_to(CLI::App* cmd, bool with_q = true) {
        if (with_q) cmd->add_option("--q", q, "Field order q = p^m (prime power)");
        cmd->add_option("--p", p, "Field characteristic");
        cmd->add_option("--m", m, "Extension degree");
        cmd->add_option("--modulus", modulus,
                        "Modulus coefficients, constant term first, length m+1");
    }

    // Splits q into p^m by trial division; returns false when q is not a
    // prime power or conflicts with explicit --p/--m.
    bool resolve(std::string& why) {
        if (q) {
            uint32_t base = 0, n = q;
            for (uint32_t d = 2; (uint64_t)d * d <= n; d++)
                if (n % d == 0) {
                    base = d;
                    break;
                }
            if (!base) base = n;  // q itself prime
            uint32_t e = 0;
            while (n % base == 0) {
                n /= base;
                e++;
            }
            if (n != 1 || q < 2) {
                why = "q must be a prime power";
                return false;
            }
            if ((p && p != base) || (m && m != e)) {
                why = "--q disagrees with --p/--m";
                return false;
            }
            p = base;
            m = e;
        }
        if (!p || !m) {
            why = "field not specified: pass --q or both --p and --m";
            return false;
        }
        return true;
    }

    hf_status create(hf_field** out) {
        return hf_field_create(p, m, modulus.empty() ? nullptr : modulus.data(),
                               modulus.size(), out);
    }
};

struct FieldHandle {
    hf_field* f = nullptr;
    ~FieldHandle() { hf_field_destroy(f); }
};

struct CodeHandle {
    hf_code* c = nullptr;
    ~CodeHandle() { hf_code_destroy(c); }
};

struct StringHandle {
    char* s = nullptr;
    ~StringHandle() { hf_string_free(s); }
};

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit((unsigned char)c)) return false;
    return true;
}

int write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        if (content.empty() || content.back() != '\n') std::cout << "\n";
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) return fail_io("cannot open \"" + out_path + "\" for writing");
    f << content;
    if (content.empty() || content.back() != '\n') f << "\n";
    if (!f.good()) return fail_io("write to \"" + out_path + "\" failed");
    return 0;
}

bool read_file(const std::string& path, std::string& out, std::string& why) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        why = "cannot open \"" + path + "\" for reading";
        return false;
    }
    std::stringstream ss;
    ss << f.rdbuf();
    out = ss.str();
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hullforge: MDS codes with one-dimensional hull over GF(q)"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand(
        "construct", "Build and certify a code from a construction family");
    FieldArgs cf;
    cf.add_to(construct);
    std::string family, variant, out_path, format = "json";
    uint32_t n = 0, N = 0, s = 0, t = 0, r = 0, ell = 0;
    bool extend = false, dual = false;
    construct->add_option("--family", family,
                          "even-q, square-1..square-12, xn-minus-x, subfield, "
                          "roots-of-unity, add-cosets, mult-cosets")
        ->required();
    auto* opt_n = construct->add_option("--n", n, "Block length / subgroup order");
    auto* opt_N = construct->add_option("--N", N, "Full evaluation-set size");
    auto* opt_s = construct->add_option("--s", s, "Split exponent s");
    auto* opt_t = construct->add_option("--t", t, "Coset count t");
    auto* opt_r = construct->add_option("--r", r, "Subfield exponent r");
    auto* opt_ell = construct->add_option("--ell", ell, "Subspace exponent ell");
    construct->add_option("--variant", variant,
                          "mult-cosets: 1..8; roots-of-unity: odd-k or even-k");
    construct->add_flag("--extend", extend, "Permit t beyond the guaranteed range");
    construct->add_flag("--dual", dual, "Emit the dual code instead");
    construct->add_option("--out", out_path, "Output file (default stdout)");
    construct->add_option("--format", format, "json (artifact) or text (matrix)")
        ->check(CLI::IsMember({"json", "text"}));

    // verify
    auto* verify = app.add_subcommand(
        "verify", "Certify an artifact or a raw generator matrix file");
    std::string verify_in, verify_out;
    verify->add_option("input", verify_in, "Artifact or matrix JSON file")->required();
    verify->add_option("--out", verify_out, "Report file (default stdout)");

    // atlas
    auto* atlas = app.add_subcommand(
        "atlas", "Enumerate, build, and certify every admissible tuple");
    std::vector<uint32_t> qs;
    uint32_t max_n = 0;
    std::string families, atlas_out;
    atlas->add_option("--q", qs, "Field orders to sweep")->required();
    atlas->add_option("--max-n", max_n, "Cap on code length (0 = none)");
    atlas->add_option("--families", families,
                      "Comma-separated family filter (default all)");
    atlas->add_option("--out", atlas_out, "Output CSV file (default stdout)");

    // export
    auto* exp = app.add_subcommand("export", "Re-render an artifact file");
    std::string exp_in, exp_format = "json", exp_out;
    exp->add_option("input", exp_in, "Artifact JSON file")->required();
    exp->add_option("--format", exp_format, "json, text, or parity-check")
        ->check(CLI::IsMember({"json", "text", "parity-check"}));
    exp->add_option("--out", exp_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 4;
    }

    if (construct->parsed()) {
        std::string why;
        if (!cf.resolve(why)) return fail_io(why);
        FieldHandle fh;
        hf_status st = cf.create(&fh.f);
        if (st != HF_OK) return fail(st);

        json params;
        params["family"] = family;
        if (opt_n->count()) params["n"] = n;
        if (opt_N->count()) params["N"] = N;
        if (opt_s->count()) params["s"] = s;
        if (opt_t->count()) params["t"] = t;
        if (opt_r->count()) params["r"] = r;
        if (opt_ell->count()) params["ell"] = ell;
        if (!variant.empty()) {
            if (all_digits(variant))
                params["variant"] = (uint32_t)std::stoul(variant);
            else
                params["variant"] = variant;
        }
        if (extend) params["extend"] = true;
        if (dual) params["dual"] = true;

        CodeHandle ch;
        st = hf_construct(fh.f, params.dump().c_str(), 0, &ch.c);
        if (st != HF_OK) return fail(st);

        StringHandle sh;
        if (format == "text")
            st = hf_code_generator_text(fh.f, ch.c, &sh.s);
        else
            st = hf_code_artifact(fh.f, ch.c, &sh.s);
        if (st != HF_OK) return fail(st);
        return write_output(out_path, sh.s);
    }

    if (verify->parsed()) {
        std::string content, why;
        if (!read_file(verify_in, content, why)) return fail_io(why);
        StringHandle report;
        int certified = 0;
        hf_status st = hf_verify(content.c_str(), 0, &report.s, &certified);
        if (st != HF_OK) return fail(st);
        int rc = write_output(verify_out, report.s);
        if (rc != 0) return rc;
        return certified ? 0 : 3;
    }

    if (atlas->parsed()) {
        std::string csv;
        for (size_t i = 0; i < qs.size(); i++) {
            FieldArgs fa;
            fa.q = qs[i];
            std::string why;
            if (!fa.resolve(why)) return fail_io(why);
            FieldHandle fh;
            hf_status st = fa.create(&fh.f);
            if (st != HF_OK) return fail(st);
            StringHandle sh;
            st = hf_atlas(fh.f, max_n, families.c_str(), 0, &sh.s);
            if (st != HF_OK) return fail(st);
            std::string part = sh.s;
            if (i > 0) {
                size_t nl = part.find('\n');
                part = nl == std::string::npos ? std::string() : part.substr(nl + 1);
            }
            csv += part;
        }
        return write_output(atlas_out, csv);
    }

    if (exp->parsed()) {
        std::string content, why;
        if (!read_file(exp_in, content, why)) return fail_io(why);
        StringHandle sh;
        hf_status st = hf_export(content.c_str(), exp_format.c_str(), &sh.s);
        if (st != HF_OK) return fail(st);
        return write_output(exp_out, sh.s);
    }

    return 4;  // unreachable: a subcommand is required
}
