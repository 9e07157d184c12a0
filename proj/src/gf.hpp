// Exact arithmetic in GF(p^m) for p^m <= 2^20.
//
// Elements are stored as integer indices 0..q-1: the index encodes the
// coefficient vector of the element in the power basis, constant term as the
// least significant base-p digit.  Index order is the canonical total order
// used everywhere (element choices, square-root branches, modulus selection).
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hf {

// Error taxonomy.  The C API maps these onto status codes; the CLI maps them
// onto exit codes.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};
struct precondition_error : error {
    explicit precondition_error(const std::string& msg) : error(msg) {}
};
struct certification_error : error {
    explicit certification_error(const std::string& msg) : error(msg) {}
};
struct io_error : error {
    explicit io_error(const std::string& msg) : error(msg) {}
};
struct budget_exceeded : error {
    explicit budget_exceeded(const std::string& msg) : error(msg) {}
};

// A field element: index plus the id of the owning context, so that mixing
// elements across contexts is caught instead of silently computing garbage.
struct Fel {
    uint32_t v = 0;
    uint32_t fid = 0;
    friend bool operator==(const Fel&, const Fel&) = default;
    friend auto operator<=>(const Fel& a, const Fel& b) { return a.v <=> b.v; }
};

class Field {
  public:
    // Default modulus: the monic irreducible of degree m over GF(p) whose
    // non-leading coefficient vector has the smallest index.
    Field(uint32_t p, uint32_t m);
    // User-supplied modulus, length m+1, monic, irreducible (validated; the
    // error message names a nontrivial factor on failure).
    Field(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;
    Field(Field&&) = default;
    Field& operator=(Field&&) = default;

    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint32_t q() const { return q_; }
    uint32_t id() const { return fid_; }
    const std::vector<uint32_t>& modulus() const { return mod_; }
    Fel generator() const { return el(gen_); }  // fixed primitive element

    Fel el(uint32_t index) const;       // bounds-checked
    Fel zero() const { return Fel{0, fid_}; }
    Fel one() const { return Fel{1, fid_}; }
    // The image of an integer under Z -> GF(p) c GF(q).
    Fel from_int(int64_t n) const;

    Fel add(Fel a, Fel b) const { chk(a); chk(b); return Fel{add_raw(a.v, b.v), fid_}; }
    Fel sub(Fel a, Fel b) const { chk(a); chk(b); return Fel{sub_raw(a.v, b.v), fid_}; }
    Fel neg(Fel a) const { chk(a); return Fel{neg_raw(a.v), fid_}; }
    Fel mul(Fel a, Fel b) const { chk(a); chk(b); return Fel{mul_raw(a.v, b.v), fid_}; }
    Fel inv(Fel a) const;
    Fel div(Fel a, Fel b) const;
    Fel pow(Fel a, int64_t e) const;

    // Quadratic character.  0 counts as a square; for even q everything does.
    bool is_square(Fel a) const;
    // Canonical square root: the smaller of the two roots in index order.
    // Throws precondition_error on a non-square.
    Fel sqrt(Fel a) const;
    // The canonical non-square: smallest index with is_square == false.
    Fel smallest_nonresidue() const;

    // Multiplicative order of the subgroup element etc.
    uint32_t log(Fel a) const;          // discrete log base generator(); a != 0
    Fel exp(uint64_t e) const { return Fel{exp_[e % (q_ - 1)], fid_}; }

    // Validates that an element belongs to this context.
    void check(Fel a) const { chk(a); }

    // Elements fixed by the r-th Frobenius power: the subfield GF(p^r), r | m.
    std::vector<Fel> subfield_elements(uint32_t r) const;
    // All q elements in canonical order.
    std::vector<Fel> enumerate() const;

    // Unchecked index-level arithmetic for inner loops.
    uint32_t add_raw(uint32_t a, uint32_t b) const {
        return addtab_.empty() ? add_slow(a, b) : addtab_[a * q_ + b];
    }
    uint32_t sub_raw(uint32_t a, uint32_t b) const { return add_raw(a, neg_raw(b)); }
    uint32_t neg_raw(uint32_t a) const { return negtab_[a]; }
    uint32_t mul_raw(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(uint64_t)log_[a] + log_[b]];
    }
    uint32_t inv_raw(uint32_t a) const {
        uint32_t l = log_[a];
        return l == 0 ? 1 : exp_[q_ - 1 - l];
    }
    uint32_t div_raw(uint32_t a, uint32_t b) const { return mul_raw(a, inv_raw(b)); }

  private:
    void init();
    uint32_t add_slow(uint32_t a, uint32_t b) const;
    uint32_t mul_poly(uint32_t a, uint32_t b) const;  // table-free, used to build tables
    void chk(Fel a) const {
        if (a.fid != fid_)
            throw precondition_error("field element belongs to a different context");
    }

    uint32_t p_ = 0, m_ = 0, q_ = 0, fid_ = 0, gen_ = 0;
    std::vector<uint32_t> mod_;       // length m+1, monic
    std::vector<uint32_t> exp_;       // size 2(q-1)
    std::vector<uint32_t> log_;       // size q, log_[0] unused
    std::vector<uint32_t> negtab_;    // size q
    std::vector<uint32_t> addtab_;    // size q*q when q small, else empty
};

// GF(p) polynomial helpers exposed for tests and modulus handling.
// Coefficient vectors over GF(p), constant term first, no trailing zeros.
namespace gfp {
std::vector<uint32_t> mulmod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                             const std::vector<uint32_t>& mod, uint32_t p);
bool irreducible(const std::vector<uint32_t>& f, uint32_t p,
                 std::vector<uint32_t>* factor_out = nullptr);
std::vector<uint32_t> default_modulus(uint32_t p, uint32_t m);
}  // namespace gfp

bool is_prime_u32(uint32_t n);
std::vector<uint32_t> prime_factors(uint32_t n);

}  // namespace hf
