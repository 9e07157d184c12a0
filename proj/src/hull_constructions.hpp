// Construction families for MDS codes with one-dimensional hull: the even-q
// split, the twelve odd-q evaluation-set families, the generalized
// factorization construction and its corollaries, plus dualization.
//
// Every constructor certifies its output (hull dimension two ways, minimum
// distance, MDS) before returning; nothing is trusted on faith.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grs.hpp"
#include "poly.hpp"

namespace hf {

// Ordered provenance parameters, serialized as given.
using ParamList = std::vector<std::pair<std::string, std::string>>;

struct HullCode {
    GrsSpec spec;
    std::string family;
    ParamList params;
    std::vector<Fel> hull_witness;
    Certificate cert;
};

struct AbResult {
    GrsSpec spec;
    std::vector<Fel> hull_witness;
    bool twisted = false;  // square classes matched the nonresidue instead of 1
};

// The a/b split: gcd(a,b)=1, deg a + deg b = n-2, neither vanishing on alpha,
// and (a*b*h')(alpha_i) all in one nonzero square class, where
// h = prod (x - alpha_i).  Yields k = n-1-deg a, v_i = a(alpha_i)/z_i with
// z_i = sqrt((a*b*h')(alpha_i)/c), and hull witness w_i = z_i/h'(alpha_i).
AbResult build_ab(const Field& F, const std::vector<Fel>& alpha, const Poly& a, const Poly& b);

struct GenSplit {
    Poly f, g1, g2;  // h' must equal c * f^2 * g1 * g2 exactly, gcd(g1,g2)=1
    uint32_t s = 1;
    std::optional<Fel> e_point;  // required when s >= 2
};

struct GenResult {
    GrsSpec spec;
    std::vector<Fel> hull_witness;
};

// Factorization construction: k = n - 2s + 1 - deg g1,
// v_i = e(alpha_i)/(f(alpha_i) g2(alpha_i)) with e = (x - e_point)^{s-1}.
GenResult build_generalized(const Field& F, const std::vector<Fel>& alpha, const GenSplit& split);

// Smallest field element not in forbidden; throws precondition_error when the
// field is exhausted.
Fel find_free_point(const Field& F, const std::vector<Fel>& forbidden);

// Parameters for the twelve evaluation-set families.  Meaning by family:
//   1,2:   N
//   3:     N (sub-case a/b decided by parity)
//   4,5,6: n (subgroup order), t (extra cosets), r (the exponent in p^r)
//   7,8:   t (cosets of the half-degree subfield), N
//   9,11:  r = exponent m0 (subspace over GF(p^m0)), ell, t, N
//   10,12: ell, N
struct SquareParams {
    uint32_t N = 0, n = 0, t = 0, r = 0, ell = 0;
};

// The evaluation set U for square family 1..12, in canonical order, with all
// auxiliary choices (coset representatives, beta, extra point) taken as the
// smallest admissible elements.  Throws precondition_error naming the failed
// side condition or exhausted search.  The searches charge the budget.
std::vector<Fel> eval_set(const Field& F, uint32_t family, const SquareParams& P,
                          WorkBudget& budget);

HullCode construct_even_q(const Field& F, uint32_t n, uint32_t s, WorkBudget& budget);

HullCode construct_square_family(const Field& F, uint32_t family, const SquareParams& P,
                                 uint32_t s, WorkBudget& budget);

// h = x^n - x with p | n and (n-1) | (q-1): k = n - 2s + 1.
HullCode construct_xn_minus_x(const Field& F, uint32_t n, uint32_t s, WorkBudget& budget);

// Evaluation on the subfield GF(p^r), r | m, r < m: k = p^r - 2s + 1.
HullCode construct_subfield(const Field& F, uint32_t r, uint32_t s, WorkBudget& budget);

enum class RootsVariant { odd_k, even_k };

// Evaluation on the n-th roots of unity, n | q-1: k = n - 2s + 1 (odd_k) or
// n - 2s (even_k, n even only).
HullCode construct_roots_of_unity(const Field& F, uint32_t n, uint32_t s, RootsVariant variant,
                                  WorkBudget& budget);

// Union of GF(p^r) and t additive cosets, gcd(p, t+1) = 1: k = N - 2s + 1.
HullCode construct_add_cosets(const Field& F, uint32_t r, uint32_t t, uint32_t s,
                              WorkBudget& budget);

// Union of the order-n multiplicative subgroup and t cosets; eight split
// variants.  extend permits t beyond the guaranteed range, succeeding only if
// some coset combination admits the full build.
HullCode construct_mult_cosets(const Field& F, uint32_t n, uint32_t t, uint32_t s,
                               uint32_t variant, bool extend, WorkBudget& budget);

// The dual code, re-certified; requires n - k > 1.
HullCode dualize(const Field& F, const HullCode& hc, WorkBudget& budget);

}  // namespace hf
