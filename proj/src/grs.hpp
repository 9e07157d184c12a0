// Generalized Reed-Solomon codes from (alpha, v, k) data, plus the explicit
// dual-multiplier formula.
#pragma once

#include "code.hpp"
#include "gf.hpp"

namespace hf {

struct GrsSpec {
    std::vector<Fel> alpha;  // pairwise distinct evaluation points
    std::vector<Fel> v;      // nonzero column multipliers
    uint32_t k = 0;          // 1 <= k <= n

    uint32_t n() const { return (uint32_t)alpha.size(); }
};

// Throws precondition_error on duplicate alpha, zero v, bad k, or elements
// from another field context.
void grs_validate(const Field& F, const GrsSpec& spec);

// The k x n matrix with entry (j, i) = v_i * alpha_i^j.
Matrix grs_generator(const Field& F, const GrsSpec& spec);

// Dual spec on the same points: dimension n-k, multipliers
// u_i = (v_i * prod_{j != i} (alpha_i - alpha_j))^{-1}.
GrsSpec grs_dual(const Field& F, const GrsSpec& spec);

// prod_{j != i} (alpha_i - alpha_j) for each i: the derivative of
// prod (x - alpha_j) evaluated at alpha_i.
std::vector<Fel> pairwise_difference_products(const Field& F, const std::vector<Fel>& alpha);

}  // namespace hf
