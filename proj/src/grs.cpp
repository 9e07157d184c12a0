#include "grs.hpp"

#include <algorithm>

namespace hf {

void grs_validate(const Field& F, const GrsSpec& spec) {
    const size_t n = spec.alpha.size();
    if (n == 0) throw precondition_error("GRS spec has no evaluation points");
    if (spec.v.size() != n) throw precondition_error("GRS spec: alpha and v lengths differ");
    if (spec.k < 1 || spec.k > n)
        throw precondition_error("GRS spec: dimension must satisfy 1 <= k <= n");
    for (const Fel& x : spec.alpha) F.check(x);
    for (const Fel& x : spec.v) {
        F.check(x);
        if (x.v == 0) throw precondition_error("GRS spec: zero column multiplier");
    }
    std::vector<uint32_t> sorted;
    sorted.reserve(n);
    for (const Fel& x : spec.alpha) sorted.push_back(x.v);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw precondition_error("GRS spec: evaluation points not pairwise distinct");
}

Matrix grs_generator(const Field& F, const GrsSpec& spec) {
    grs_validate(F, spec);
    const uint32_t n = spec.n(), k = spec.k;
    Matrix G(k, n);
    for (uint32_t i = 0; i < n; i++) {
        uint32_t pw = spec.v[i].v;
        for (uint32_t j = 0; j < k; j++) {
            G.at(j, i) = pw;
            pw = F.mul_raw(pw, spec.alpha[i].v);
        }
    }
    return G;
}

std::vector<Fel> pairwise_difference_products(const Field& F, const std::vector<Fel>& alpha) {
    const size_t n = alpha.size();
    std::vector<Fel> out(n, F.one());
    for (size_t i = 0; i < n; i++) {
        uint32_t acc = 1;
        for (size_t j = 0; j < n; j++) {
            if (j == i) continue;
            acc = F.mul_raw(acc, F.sub_raw(alpha[i].v, alpha[j].v));
        }
        out[i] = F.el(acc);
    }
    return out;
}

GrsSpec grs_dual(const Field& F, const GrsSpec& spec) {
    grs_validate(F, spec);
    if (spec.k == spec.n()) throw precondition_error("GRS dual: k = n leaves a trivial dual");
    GrsSpec d;
    d.alpha = spec.alpha;
    d.k = spec.n() - spec.k;
    std::vector<Fel> prods = pairwise_difference_products(F, spec.alpha);
    d.v.reserve(spec.n());
    for (uint32_t i = 0; i < spec.n(); i++)
        d.v.push_back(F.inv(F.mul(spec.v[i], prods[i])));
    return d;
}

}  // namespace hf
