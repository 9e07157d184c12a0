// Exact linear algebra over GF(q): row reduction, duals, subspace
// intersection, hull dimension, minimum distance, and code certification.
#pragma once

#include <optional>

#include "gf.hpp"

namespace hf {

// Row-major matrix of element indices.  Kept raw (no per-entry context tag)
// for the inner loops; boundary code validates indices against the field.
struct Matrix {
    uint32_t rows = 0, cols = 0;
    std::vector<uint32_t> a;

    Matrix() = default;
    Matrix(uint32_t r, uint32_t c) : rows(r), cols(c), a((size_t)r * c, 0) {}
    uint32_t& at(uint32_t r, uint32_t c) { return a[(size_t)r * cols + c]; }
    uint32_t at(uint32_t r, uint32_t c) const { return a[(size_t)r * cols + c]; }
    friend bool operator==(const Matrix&, const Matrix&) = default;
};

struct RrefResult {
    Matrix R;
    uint32_t rank = 0;
    std::vector<uint32_t> pivots;  // pivot column per pivot row, ascending
};

// Deterministic reduced row echelon form: scan columns left to right, pivot
// on the topmost nonzero entry.
RrefResult rref(const Field& F, Matrix M);
uint32_t rank(const Field& F, const Matrix& M);

// Basis of the right kernel {x : M x = 0} as rows, one per free column in
// ascending column order.  For a generator matrix this is a parity check /
// dual generator matrix.
Matrix kernel(const Field& F, const Matrix& M);
inline Matrix dual(const Field& F, const Matrix& G) { return kernel(F, G); }

// Basis of rowspace(A) n rowspace(B) via the Zassenhaus trick.
Matrix intersection(const Field& F, const Matrix& A, const Matrix& B);

// dim hull = k - rank(G G^T).  Requires G full rank.
uint32_t hull_dim_gram(const Field& F, const Matrix& G);
// dim hull via explicit intersection with the dual.
uint32_t hull_dim_intersect(const Field& F, const Matrix& G);
// Runs both methods and cross-checks; throws certification_error on mismatch.
uint32_t hull_dim(const Field& F, const Matrix& G);

struct WorkBudget {
    uint64_t limit;
    uint64_t used = 0;

    WorkBudget() : limit(default_limit()) {}
    explicit WorkBudget(uint64_t l) : limit(l) {}
    // Default 1e8 field operations; HULLFORGE_BUDGET overrides.
    static uint64_t default_limit();
    void charge(uint64_t ops) {
        used += ops;
        if (used > limit) throw budget_exceeded("work budget exhausted");
    }
};

enum class DistMethod { enumeration, column_subsets, structural, exceeds_budget };
const char* dist_method_name(DistMethod m);

struct DistanceResult {
    std::optional<uint32_t> d;
    DistMethod method = DistMethod::exceeds_budget;
};

// Exact minimum weight of the code generated by full-rank G.  Chooses between
// exhaustive codeword enumeration and column-subset rank scans; reports
// exceeds_budget when neither fits.
DistanceResult min_distance(const Field& F, const Matrix& G, WorkBudget& budget);

// Optional structural witness: the code is generated by v_i alpha_i^j with
// distinct alpha and nonzero v, hence MDS with d = n-k+1.
struct StructuralWitness {
    std::vector<Fel> alpha;
    std::vector<Fel> v;
};

struct Certificate {
    uint32_t n = 0, k = 0;
    uint32_t hull_dim = 0;
    std::optional<uint32_t> d;
    DistMethod d_method = DistMethod::exceeds_budget;
    bool is_mds = false;
    uint32_t rank_deficiency = 0;  // input rows minus rank, 0 for clean input
    std::string method_notes;
};

// Computes the certificate data with no claims attached: both hull methods
// (cross-checked), minimum distance under budget, witness validation.
Certificate analyze(const Field& F, const Matrix& G, const StructuralWitness* witness,
                    WorkBudget& budget);

struct Claim {
    uint32_t n = 0, k = 0;
    uint32_t hull_dim = 1;
    bool mds = true;
};

// analyze + claim check; a violated claim throws certification_error naming
// the discrepancy.  hull_witness, when given, must be a self-orthogonal
// codeword spanning the hull.
Certificate certify(const Field& F, const Matrix& G, const Claim& claim,
                    const StructuralWitness* witness, const std::vector<Fel>* hull_witness,
                    WorkBudget& budget);

}  // namespace hf
