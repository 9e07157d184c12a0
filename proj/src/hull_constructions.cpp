#include "hull_constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hf {

namespace {

bool fel_less(Fel a, Fel b) { return a.v < b.v; }

std::vector<Fel> sorted_by_index(std::vector<Fel> v) {
    std::sort(v.begin(), v.end(), fel_less);
    return v;
}

// x^d
Poly xpow(const Field& F, uint32_t d) {
    Poly r;
    r.c.assign(d + 1, F.zero());
    r.c.back() = F.one();
    return r;
}

// n-th roots of unity; caller ensures n | q-1.
std::vector<Fel> mult_subgroup(const Field& F, uint32_t n) {
    uint64_t step = (F.q() - 1) / n;
    std::vector<Fel> out;
    out.reserve(n);
    for (uint32_t j = 0; j < n; j++) out.push_back(F.exp(step * j));
    return sorted_by_index(std::move(out));
}

// Cosets of the order-n subgroup, keyed by their smallest element, ascending.
std::vector<std::vector<Fel>> coset_list(const Field& F, const std::vector<Fel>& Un) {
    std::vector<char> seen(F.q(), 0);
    for (Fel u : Un) seen[u.v] = 1;
    std::vector<std::vector<Fel>> cosets;
    for (uint32_t a = 1; a < F.q(); a++) {
        if (seen[a]) continue;
        std::vector<Fel> cs;
        cs.reserve(Un.size());
        for (Fel u : Un) cs.push_back(F.mul(F.el(a), u));
        for (Fel x : cs) seen[x.v] = 1;
        cosets.push_back(sorted_by_index(std::move(cs)));
    }
    return cosets;
}

// Single square class for the h' values on U; odd-size sets additionally need
// 0 excluded and every point a square (the x-factor in a(x) contributes the
// point itself to the class computation).
bool class_ok(const Field& F, const std::vector<Fel>& U, bool need_sq_elems, WorkBudget& budget) {
    uint32_t N = (uint32_t)U.size();
    budget.charge((uint64_t)N * N + N);
    if (need_sq_elems) {
        for (Fel a : U)
            if (a.v == 0 || !F.is_square(a)) return false;
    }
    std::vector<Fel> vals = pairwise_difference_products(F, U);
    bool cls = F.is_square(vals[0]);
    for (Fel v : vals)
        if (F.is_square(v) != cls) return false;
    return true;
}

bool is_perfect_square_u32(uint32_t n) {
    uint32_t r = (uint32_t)std::lround(std::sqrt((double)n));
    while (r * (uint64_t)r > n) r--;
    while ((r + 1) * (uint64_t)(r + 1) <= n) r++;
    return r * (uint64_t)r == n;
}

// Lexicographic k-combinations of {0..m-1}; returns false when exhausted.
bool next_combination(std::vector<uint32_t>& idx, uint32_t m) {
    uint32_t k = (uint32_t)idx.size();
    if (k == 0) return false;
    int i = (int)k - 1;
    while (i >= 0 && idx[i] == m - k + i) i--;
    if (i < 0) return false;
    idx[i]++;
    for (uint32_t j = (uint32_t)i + 1; j < k; j++) idx[j] = idx[j - 1] + 1;
    return true;
}

std::vector<Fel> poly_root_points(const Field& F, const Poly& g) {
    std::vector<Fel> out;
    for (auto& [r, mult] : poly_roots(F, g)) out.push_back(r);
    return out;
}

// Certify and assemble; every constructor funnels through here.
HullCode finish(const Field& F, GrsSpec spec, std::vector<Fel> w, std::string family,
                ParamList params, WorkBudget& budget) {
    Matrix G = grs_generator(F, spec);
    Claim claim;
    claim.n = spec.n();
    claim.k = spec.k;
    StructuralWitness sw{spec.alpha, spec.v};
    Certificate cert = certify(F, G, claim, &sw, &w, budget);
    HullCode hc;
    hc.spec = std::move(spec);
    hc.family = std::move(family);
    hc.params = std::move(params);
    hc.hull_witness = std::move(w);
    hc.cert = cert;
    return hc;
}

void require_odd_q_over_5(const Field& F, const char* what) {
    if (F.p() == 2) throw precondition_error(std::string(what) + " requires odd q");
    if (F.q() <= 5) throw precondition_error(std::string(what) + " requires q > 5");
}

}  // namespace

AbResult build_ab(const Field& F, const std::vector<Fel>& alpha, const Poly& a, const Poly& b) {
    uint32_t n = (uint32_t)alpha.size();
    if (n < 2) throw precondition_error("need at least 2 evaluation points");
    for (Fel x : alpha) F.check(x);
    if (a.is_zero() || b.is_zero()) throw precondition_error("a and b must be nonzero");
    {
        auto s = sorted_by_index(alpha);
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw precondition_error("evaluation points must be distinct");
    }
    uint32_t da = (uint32_t)a.deg(), db = (uint32_t)b.deg();
    if (da + db != n - 2) throw precondition_error("deg a + deg b must equal n-2");
    if (poly_gcd(F, a, b).deg() != 0) throw precondition_error("a and b must be coprime");

    std::vector<Fel> hv = pairwise_difference_products(F, alpha);
    std::vector<Fel> av(n), vals(n);
    for (uint32_t i = 0; i < n; i++) {
        av[i] = poly_eval(F, a, alpha[i]);
        Fel bv = poly_eval(F, b, alpha[i]);
        if (av[i].v == 0)
            throw precondition_error("a vanishes at evaluation point " + std::to_string(alpha[i].v));
        if (bv.v == 0)
            throw precondition_error("b vanishes at evaluation point " + std::to_string(alpha[i].v));
        vals[i] = F.mul(F.mul(av[i], bv), hv[i]);
    }
    bool cls = F.is_square(vals[0]);
    for (uint32_t i = 0; i < n; i++)
        if (F.is_square(vals[i]) != cls)
            throw precondition_error("(a*b*h')(alpha) changes square class at alpha=" +
                                     std::to_string(alpha[i].v));
    AbResult res;
    Fel c = F.one();
    if (!cls) {
        c = F.smallest_nonresidue();
        res.twisted = true;
    }
    std::vector<Fel> v(n), w(n);
    for (uint32_t i = 0; i < n; i++) {
        Fel z = F.sqrt(F.div(vals[i], c));
        v[i] = F.div(av[i], z);
        w[i] = F.div(z, hv[i]);
    }
    res.spec.alpha = alpha;
    res.spec.v = std::move(v);
    res.spec.k = n - 1 - da;
    res.hull_witness = std::move(w);
    return res;
}

GenResult build_generalized(const Field& F, const std::vector<Fel>& alpha, const GenSplit& split) {
    uint32_t n = (uint32_t)alpha.size();
    if (n < 2) throw precondition_error("need at least 2 evaluation points");
    for (Fel x : alpha) F.check(x);
    {
        auto s = sorted_by_index(alpha);
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw precondition_error("evaluation points must be distinct");
    }
    const Poly &f = split.f, &g1 = split.g1, &g2 = split.g2;
    if (f.is_zero() || g1.is_zero() || g2.is_zero())
        throw precondition_error("split polynomials must be nonzero");
    if (split.s < 1) throw precondition_error("s must be at least 1");

    Poly h = poly_from_roots(F, alpha);
    Poly hp = poly_derivative(F, h);
    Poly prod = poly_mul(F, poly_mul(F, poly_mul(F, f, f), g1), g2);
    auto [qq, rr] = poly_divmod(F, hp, prod);
    if (!rr.is_zero() || qq.deg() != 0)
        throw precondition_error("h' does not equal c*f^2*g1*g2 for the given split");
    if (poly_gcd(F, g1, g2).deg() != 0) throw precondition_error("g1 and g2 must be coprime");

    uint32_t dg1 = (uint32_t)g1.deg(), dg2 = (uint32_t)g2.deg();
    if ((int64_t)n - 2 * (int64_t)split.s - dg1 - dg2 < 0)
        throw precondition_error("s too large: n - 2s - deg(g1) - deg(g2) < 0");
    int64_t k64 = (int64_t)n - 2 * (int64_t)split.s + 1 - dg1;
    if (k64 <= 1) throw precondition_error("resulting k <= 1 (constructions require k > 1)");
    uint32_t k = (uint32_t)k64;

    Poly e = poly_one(F);
    if (split.s >= 2) {
        if (!split.e_point) throw precondition_error("e-point required when s >= 2");
        Fel ep = *split.e_point;
        F.check(ep);
        bool in_alpha = std::any_of(alpha.begin(), alpha.end(), [&](Fel x) { return x == ep; });
        if (in_alpha || poly_eval(F, f, ep).v == 0 || poly_eval(F, g1, ep).v == 0 ||
            poly_eval(F, g2, ep).v == 0)
            throw precondition_error("e-point must avoid the evaluation set and the split roots");
        e = poly_pow(F, poly_linear(F, ep), split.s - 1);
    }

    std::vector<Fel> v(n), w(n);
    for (uint32_t i = 0; i < n; i++) {
        Fel ev = poly_eval(F, e, alpha[i]);
        Fel fv = poly_eval(F, f, alpha[i]);
        Fel g2v = poly_eval(F, g2, alpha[i]);
        v[i] = F.div(ev, F.mul(fv, g2v));
        w[i] = F.div(ev, fv);
    }
    GenResult res;
    res.spec.alpha = alpha;
    res.spec.v = std::move(v);
    res.spec.k = k;
    res.hull_witness = std::move(w);
    return res;
}

Fel find_free_point(const Field& F, const std::vector<Fel>& forbidden) {
    std::vector<char> bad(F.q(), 0);
    for (Fel x : forbidden) {
        F.check(x);
        bad[x.v] = 1;
    }
    for (uint32_t a = 0; a < F.q(); a++)
        if (!bad[a]) return F.el(a);
    throw precondition_error("no free evaluation point: the field is exhausted");
}

std::vector<Fel> eval_set(const Field& F, uint32_t family, const SquareParams& P,
                          WorkBudget& budget) {
    uint32_t q = F.q(), p = F.p(), m = F.m();
    require_odd_q_over_5(F, "square family");

    auto check_size = [&](const std::vector<Fel>& U, uint32_t N) {
        if ((uint32_t)U.size() != N)
            throw precondition_error("evaluation set has size " + std::to_string(U.size()) +
                                     ", expected " + std::to_string(N));
        if (N < 2 || N > q - 2) throw precondition_error("N out of range (2 <= N <= q-2)");
    };

    switch (family) {
        case 1:
        case 2: {
            uint32_t N = P.N;
            if (N == 0) throw precondition_error("N required");
            if (family == 1) {
                if (N % p != 0) throw precondition_error("p does not divide N");
            } else if (m % 2 != 0) {
                throw precondition_error("q must be a square");
            }
            if (N % 2 != 0) throw precondition_error("N must be even");
            if (N < 2 || (q - 1) % (N - 1) != 0)
                throw precondition_error("N-1 does not divide q-1");
            std::vector<Fel> U = mult_subgroup(F, N - 1);
            U.insert(U.begin(), F.zero());
            check_size(U, N);
            return U;
        }
        case 3: {
            uint32_t N = P.N;
            if (N == 0) throw precondition_error("N required");
            if (((q - 1) / 2) % N != 0) throw precondition_error("N does not divide (q-1)/2");
            std::vector<Fel> U = mult_subgroup(F, N);
            check_size(U, N);
            return U;
        }
        case 4:
        case 5:
        case 6: {
            uint32_t r = P.r, t = P.t;
            if (r < 1 || r >= m) throw precondition_error("r out of range (1 <= r < m)");
            uint64_t pr = 1;
            for (uint32_t i = 0; i < r; i++) pr *= p;
            uint64_t den = (family == 6) ? pr - 1 : pr + 1;
            if ((q - 1) % den != 0)
                throw precondition_error(family == 6 ? "p^r-1 does not divide q-1"
                                                     : "p^r+1 does not divide q-1");
            uint32_t n = (uint32_t)((q - 1) / den);
            if (n < 2) throw precondition_error("subgroup order n = (q-1)/" +
                                                std::to_string(den) + " is too small");
            if (!is_perfect_square_u32(n))
                throw precondition_error("n = " + std::to_string(n) + " is not a perfect square");
            if (P.n && P.n != n) throw precondition_error("n inconsistent with r");
            if (family == 4 || family == 5) {
                if ((q - 1) % (2 * (pr - 1)) != 0)
                    throw precondition_error("n(p^r+1)/(2(p^r-1)) is not an integer");
                uint64_t ratio = (q - 1) / (2 * (pr - 1));
                if (family == 4 && ratio % 2 == 0)
                    throw precondition_error("n(p^r+1)/(2(p^r-1)) must be odd");
                if (family == 5 && ratio % 2 != 0)
                    throw precondition_error("n(p^r+1)/(2(p^r-1)) must be even");
                uint32_t tmax = (q - 2) / n;
                if (tmax == 0 || t < 1 || t > tmax - 1)
                    throw precondition_error("t out of range (1 <= t <= floor((q-2)/n)-1)");
                if (family == 4 && t % 2 == 0) throw precondition_error("t must be odd");
            } else {
                if (m % 2 != 0 || (m / 2) % r != 0)
                    throw precondition_error("r does not divide m/2");
                if (t < 1 || (uint64_t)t > pr - 2)
                    throw precondition_error("t out of range (1 <= t <= p^r-2)");
            }
            uint32_t N = (t + 1) * n;
            if (P.N && P.N != N) throw precondition_error("N inconsistent with n and t");
            if (N > q - 2) throw precondition_error("N out of range (2 <= N <= q-2)");
            std::vector<Fel> Un = mult_subgroup(F, n);
            auto cosets = coset_list(F, Un);
            if (cosets.size() < t) throw precondition_error("not enough cosets");
            bool need_sq = (N % 2 == 1);
            std::vector<uint32_t> idx(t);
            std::iota(idx.begin(), idx.end(), 0u);
            do {
                budget.charge(N);
                std::vector<Fel> U = Un;
                for (uint32_t i : idx) U.insert(U.end(), cosets[i].begin(), cosets[i].end());
                U = sorted_by_index(std::move(U));
                if (class_ok(F, U, need_sq, budget)) {
                    check_size(U, N);
                    return U;
                }
            } while (next_combination(idx, (uint32_t)cosets.size()));
            throw precondition_error("no admissible coset representatives");
        }
        case 7:
        case 8: {
            if (m % 2 != 0) throw precondition_error("q must be a square");
            uint32_t t = P.t;
            uint32_t q0 = 1;
            for (uint32_t i = 0; i < m / 2; i++) q0 *= p;
            if (family == 7 && t % 2 != 0) throw precondition_error("t must be even");
            if (family == 8 && t % 2 == 0) throw precondition_error("t must be odd");
            if (t < 1 || t >= q0) throw precondition_error("t out of range (1 <= t < q0)");
            std::vector<Fel> F0 = F.subfield_elements(m / 2);
            std::vector<char> in0(q, 0);
            for (Fel x : F0) in0[x.v] = 1;
            std::vector<Fel> reps;
            for (Fel x : F0) {
                if (family == 8 && x.v == 0) continue;
                if (reps.size() < t) reps.push_back(x);
            }
            uint32_t N = (family == 7) ? q0 * t : q0 * t + 1;
            if (P.N && P.N != N) throw precondition_error("N inconsistent with t");
            if (N > q - 2) throw precondition_error("N out of range (2 <= N <= q-2)");
            bool need_sq = (N % 2 == 1);
            for (uint32_t b = 0; b < q; b++) {
                if (in0[b]) continue;
                budget.charge((uint64_t)t * q0);
                Fel beta = F.el(b);
                std::vector<char> mark(q, 0);
                uint32_t count = 0;
                for (Fel r_ : reps) {
                    Fel rb = F.mul(r_, beta);
                    for (Fel c : F0) {
                        Fel x = F.add(rb, c);
                        if (!mark[x.v]) {
                            mark[x.v] = 1;
                            count++;
                        }
                    }
                }
                if (count != (uint64_t)t * q0) continue;
                if (family == 8) {
                    if (mark[0]) continue;
                    mark[0] = 1;
                    count++;
                }
                std::vector<Fel> U;
                U.reserve(count);
                for (uint32_t x = 0; x < q; x++)
                    if (mark[x]) U.push_back(F.el(x));
                if ((uint32_t)U.size() != N) continue;
                if (class_ok(F, U, need_sq, budget)) return U;
            }
            throw precondition_error("no admissible beta");
        }
        case 9:
        case 10:
        case 11:
        case 12: {
            uint32_t m0, r_;
            if (family == 9 || family == 11) {
                m0 = P.r;
                if (m0 < 1) throw precondition_error("m0 must be positive");
                if (m % 2 != 0 || (m / 2) % m0 != 0)
                    throw precondition_error("m0 does not divide m/2");
                r_ = 1;
                for (uint32_t i = 0; i < m0; i++) r_ *= p;
            } else {
                if (q % 4 != 1) throw precondition_error("q must be 1 mod 4");
                m0 = 1;
                r_ = p;
            }
            uint32_t ell = P.ell, t = P.t;
            if (family == 9 || family == 11) {
                if (ell >= m / m0) throw precondition_error("ell out of range (0 <= ell < m/m0)");
            } else if (ell < 1 || ell >= m) {
                throw precondition_error("ell out of range (0 < ell < m)");
            }
            uint64_t rl = 1;
            for (uint32_t i = 0; i < ell; i++) rl *= r_;
            uint32_t ncos;
            if (family == 9) {
                if (t < 1 || t > (r_ - 1) / 2 || (uint64_t)t > (q - 2) / (2 * rl))
                    throw precondition_error(
                        "t out of range (1 <= t <= min((r-1)/2, floor((q-2)/(2r^ell))))");
                ncos = 2 * t;
            } else if (family == 11) {
                if ((uint64_t)rl > q - 2 || t > (r_ - 1) / 2 ||
                    (uint64_t)t > (q - 2 - rl) / (2 * rl))
                    throw precondition_error(
                        "t out of range (0 <= t <= min((r-1)/2, floor((q-2-r^ell)/(2r^ell))))");
                ncos = 2 * t + 1;
            } else if (family == 10) {
                ncos = 2;
            } else {
                ncos = 1;
            }
            std::vector<Fel> Fr = F.subfield_elements(m0);
            if (ncos > (uint32_t)Fr.size()) throw precondition_error("not enough coset labels");
            // H = the F_r span of 1, th, ..., th^(ell-1); th generates F_q over F_r,
            // so the powers are independent and |H| = r^ell.
            Fel th = (m > 1) ? F.el(p) : F.one();
            std::vector<Fel> basis;
            for (uint32_t i = 0; i < ell; i++) basis.push_back(F.pow(th, i));
            std::vector<char> inH(q, 0);
            std::vector<Fel> H;
            H.push_back(F.zero());
            inH[0] = 1;
            {
                budget.charge(rl * (ell + 1));
                std::vector<uint32_t> digits(ell, 0);
                bool more = ell > 0;
                while (more) {
                    Fel x = F.zero();
                    for (uint32_t i = 0; i < ell; i++)
                        x = F.add(x, F.mul(Fr[digits[i]], basis[i]));
                    if (!inH[x.v]) {
                        inH[x.v] = 1;
                        H.push_back(x);
                    }
                    uint32_t pos = 0;
                    while (pos < ell && ++digits[pos] == Fr.size()) digits[pos++] = 0;
                    more = pos < ell;
                }
            }
            if ((uint64_t)H.size() != rl) throw precondition_error("subspace is degenerate");
            std::vector<Fel> reps(Fr.begin(), Fr.begin() + ncos);
            bool extra_needed = (family == 11 || family == 12);
            uint64_t N64 = (uint64_t)ncos * rl + (extra_needed ? 1 : 0);
            if (N64 > q - 2) throw precondition_error("N out of range (2 <= N <= q-2)");
            uint32_t N = (uint32_t)N64;
            if (P.N && P.N != N) throw precondition_error("N inconsistent with t and ell");
            bool need_sq = (N % 2 == 1);

            std::vector<uint32_t> betas;
            if (ncos > 1) {
                for (uint32_t b = 0; b < q; b++)
                    if (!inH[b]) betas.push_back(b);
            } else {
                betas.push_back(q);  // sentinel: no beta needed
            }
            for (uint32_t b : betas) {
                budget.charge((uint64_t)ncos * rl);
                std::vector<char> mark(q, 0);
                uint32_t count = 0;
                for (Fel a_ : reps) {
                    Fel ab = (b < q) ? F.mul(a_, F.el(b)) : F.zero();
                    for (Fel hh : H) {
                        Fel x = F.add(ab, hh);
                        if (!mark[x.v]) {
                            mark[x.v] = 1;
                            count++;
                        }
                    }
                }
                if (count != (uint64_t)ncos * rl) continue;
                std::vector<Fel> U0;
                U0.reserve(count);
                for (uint32_t x = 0; x < q; x++)
                    if (mark[x]) U0.push_back(F.el(x));
                if (!extra_needed) {
                    if ((uint32_t)U0.size() != N) continue;
                    if (class_ok(F, U0, need_sq, budget)) return U0;
                } else {
                    for (uint32_t extra = 0; extra < q; extra++) {
                        if (mark[extra]) continue;
                        std::vector<Fel> U = U0;
                        U.insert(std::lower_bound(U.begin(), U.end(), F.el(extra), fel_less),
                                 F.el(extra));
                        if ((uint32_t)U.size() != N) continue;
                        if (class_ok(F, U, need_sq, budget)) return U;
                    }
                }
            }
            throw precondition_error("no admissible subspace coset configuration");
        }
        default:
            throw precondition_error("unknown square family (expected 1..12)");
    }
}

HullCode construct_even_q(const Field& F, uint32_t n, uint32_t s, WorkBudget& budget) {
    if (F.p() != 2) throw precondition_error("even-q family requires even q");
    if (F.q() <= 4) throw precondition_error("even-q family requires q > 4");
    if (n < 4 || n > F.q() - 2) throw precondition_error("n out of range (4 <= n <= q-2)");
    if (s < 1 || s > n - 3) throw precondition_error("s out of range (1 <= s <= n-3)");
    std::vector<Fel> U;
    for (uint32_t i = 0; i < n; i++) U.push_back(F.el(i));
    Poly a = poly_pow(F, poly_linear(F, F.el(n)), s);
    Poly b = poly_pow(F, poly_linear(F, F.el(n + 1)), n - 2 - s);
    budget.charge((uint64_t)n * n);
    AbResult r = build_ab(F, U, a, b);
    if (r.spec.k != n - s - 1) throw certification_error("dimension bookkeeping mismatch");
    ParamList params{{"n", std::to_string(n)}, {"s", std::to_string(s)}};
    return finish(F, std::move(r.spec), std::move(r.hull_witness), "even-q", std::move(params),
                  budget);
}

HullCode construct_square_family(const Field& F, uint32_t family, const SquareParams& P,
                                 uint32_t s, WorkBudget& budget) {
    std::vector<Fel> U = eval_set(F, family, P, budget);
    uint32_t N = (uint32_t)U.size();
    std::vector<char> inU(F.q(), 0);
    for (Fel x : U) inU[x.v] = 1;

    Poly a, b;
    uint32_t K;
    if (N % 2 == 0) {
        if (s < 1 || s > N / 2 - 2) throw precondition_error("s out of range (1 <= s <= N/2-2)");
        std::vector<Fel> aux;
        for (uint32_t x = 0; x < F.q() && aux.size() < 2; x++)
            if (!inU[x]) aux.push_back(F.el(x));
        if (aux.size() < 2)
            throw precondition_error("no auxiliary points available outside the evaluation set");
        a = poly_pow(F, poly_linear(F, aux[0]), 2 * s);
        b = poly_pow(F, poly_linear(F, aux[1]), N - 2 - 2 * s);
        K = N - 2 * s - 1;
    } else {
        if ((N + 1) / 2 < 3 || s > (N + 1) / 2 - 3)
            throw precondition_error("s out of range (0 <= s <= (N+1)/2-3)");
        std::vector<Fel> aux;
        for (uint32_t x = 1; x < F.q() && aux.size() < 2; x++)
            if (!inU[x]) aux.push_back(F.el(x));
        if (aux.size() < 2)
            throw precondition_error("no auxiliary points available outside the evaluation set");
        a = poly_mul(F, poly_x(F), poly_pow(F, poly_linear(F, aux[0]), 2 * s));
        b = poly_pow(F, poly_linear(F, aux[1]), N - 3 - 2 * s);
        K = N - 2 * s - 2;
    }
    budget.charge((uint64_t)N * N);
    AbResult r = build_ab(F, U, a, b);
    if (r.spec.k != K) throw certification_error("dimension bookkeeping mismatch");

    ParamList params;
    switch (family) {
        case 1:
        case 2:
        case 3:
            params.emplace_back("N", std::to_string(N));
            break;
        case 4:
        case 5:
        case 6:
            params.emplace_back("n", std::to_string((uint32_t)(N / (P.t + 1))));
            params.emplace_back("t", std::to_string(P.t));
            params.emplace_back("r", std::to_string(P.r));
            break;
        case 7:
        case 8:
            params.emplace_back("t", std::to_string(P.t));
            break;
        case 9:
        case 11:
            params.emplace_back("r", std::to_string(P.r));
            params.emplace_back("ell", std::to_string(P.ell));
            params.emplace_back("t", std::to_string(P.t));
            break;
        default:
            params.emplace_back("ell", std::to_string(P.ell));
            break;
    }
    params.emplace_back("s", std::to_string(s));
    if (r.twisted) params.emplace_back("twisted", "1");
    return finish(F, std::move(r.spec), std::move(r.hull_witness),
                  "square-" + std::to_string(family), std::move(params), budget);
}

HullCode construct_xn_minus_x(const Field& F, uint32_t n, uint32_t s, WorkBudget& budget) {
    require_odd_q_over_5(F, "x^n-x family");
    uint32_t q = F.q();
    if (n < 2 || n > q - 1) throw precondition_error("n out of range (2 <= n <= q-1)");
    if (n % F.p() != 0) throw precondition_error("p does not divide n");
    if ((q - 1) % (n - 1) != 0) throw precondition_error("n-1 does not divide q-1");
    if (s < 1 || s > n / 2) throw precondition_error("s out of range (1 <= s <= floor(n/2))");
    std::vector<Fel> U = mult_subgroup(F, n - 1);
    U.insert(U.begin(), F.zero());
    GenSplit split;
    split.f = poly_one(F);
    split.g1 = poly_one(F);
    split.g2 = poly_one(F);
    split.s = s;
    if (s >= 2) split.e_point = find_free_point(F, U);
    budget.charge((uint64_t)n * n);
    GenResult r = build_generalized(F, U, split);
    if (r.spec.k != n - 2 * s + 1) throw certification_error("dimension bookkeeping mismatch");
    ParamList params{{"n", std::to_string(n)}, {"s", std::to_string(s)}};
    return finish(F, std::move(r.spec), std::move(r.hull_witness), "xn-minus-x",
                  std::move(params), budget);
}

HullCode construct_subfield(const Field& F, uint32_t r, uint32_t s, WorkBudget& budget) {
    require_odd_q_over_5(F, "subfield family");
    if (r < 1 || r >= F.m()) throw precondition_error("r out of range (1 <= r < m)");
    if (F.m() % r != 0) throw precondition_error("r does not divide m");
    uint32_t pr = 1;
    for (uint32_t i = 0; i < r; i++) pr *= F.p();
    if (s < 1 || s > (pr - 1) / 2)
        throw precondition_error("s out of range (1 <= s <= (p^r-1)/2)");
    std::vector<Fel> U = F.subfield_elements(r);
    GenSplit split;
    split.f = poly_one(F);
    split.g1 = poly_one(F);
    split.g2 = poly_one(F);
    split.s = s;
    if (s >= 2) split.e_point = find_free_point(F, U);
    budget.charge((uint64_t)pr * pr);
    GenResult res = build_generalized(F, U, split);
    if (res.spec.k != pr - 2 * s + 1) throw certification_error("dimension bookkeeping mismatch");
    ParamList params{{"r", std::to_string(r)}, {"s", std::to_string(s)}};
    return finish(F, std::move(res.spec), std::move(res.hull_witness), "subfield",
                  std::move(params), budget);
}

HullCode construct_roots_of_unity(const Field& F, uint32_t n, uint32_t s, RootsVariant variant,
                                  WorkBudget& budget) {
    require_odd_q_over_5(F, "roots-of-unity family");
    uint32_t q = F.q();
    if (n < 2 || n > q - 2) throw precondition_error("n out of range (2 <= n <= q-2)");
    if ((q - 1) % n != 0) throw precondition_error("n does not divide q-1");
    std::vector<Fel> U = mult_subgroup(F, n);
    GenSplit split;
    split.s = s;
    uint32_t k_expected;
    const char* vname;
    if (variant == RootsVariant::odd_k) {
        if (s < 1 || s > (n - 1) / 2)
            throw precondition_error("s out of range (1 <= s <= floor((n-1)/2))");
        if (n % 2 == 1) {
            split.f = xpow(F, (n - 1) / 2);
            split.g1 = poly_one(F);
            split.g2 = poly_one(F);
        } else {
            split.f = xpow(F, (n - 2) / 2);
            split.g1 = poly_one(F);
            split.g2 = poly_x(F);
        }
        k_expected = n - 2 * s + 1;
        vname = "odd-k";
    } else {
        if (n % 2 != 0) throw precondition_error("even-k variant requires even n");
        if (s < 1 || s > n / 2 - 1)
            throw precondition_error("s out of range (1 <= s <= n/2-1)");
        split.f = xpow(F, (n - 2) / 2);
        split.g1 = poly_x(F);
        split.g2 = poly_one(F);
        k_expected = n - 2 * s;
        vname = "even-k";
    }
    if (s >= 2) {
        std::vector<Fel> forbidden = U;
        forbidden.push_back(F.zero());
        split.e_point = find_free_point(F, forbidden);
    }
    budget.charge((uint64_t)n * n);
    GenResult res = build_generalized(F, U, split);
    if (res.spec.k != k_expected) throw certification_error("dimension bookkeeping mismatch");
    ParamList params{{"n", std::to_string(n)}, {"s", std::to_string(s)}, {"variant", vname}};
    return finish(F, std::move(res.spec), std::move(res.hull_witness), "roots-of-unity",
                  std::move(params), budget);
}

HullCode construct_add_cosets(const Field& F, uint32_t r, uint32_t t, uint32_t s,
                              WorkBudget& budget) {
    require_odd_q_over_5(F, "additive-coset family");
    uint32_t q = F.q(), p = F.p(), m = F.m();
    if (m < 2) throw precondition_error("m must be at least 2");
    if (r < 1 || r > m - 1) throw precondition_error("r out of range (1 <= r <= m-1)");
    if (m % r != 0) throw precondition_error("r does not divide m");
    if (std::gcd(p, t + 1) != 1) throw precondition_error("p divides t+1");
    uint32_t pr = 1;
    for (uint32_t i = 0; i < r; i++) pr *= p;
    if (t < 1 || t > (q - 1 - pr) / (2 * pr))
        throw precondition_error("t out of range (1 <= t <= floor((q-1-p^r)/(2p^r)))");
    if (s < 1 || s > pr / 2) throw precondition_error("s out of range (1 <= s <= floor(p^r/2))");
    uint32_t N = (t + 1) * pr;

    std::vector<Fel> U0 = F.subfield_elements(r);
    std::vector<char> covered(q, 0);
    for (Fel x : U0) covered[x.v] = 1;
    uint32_t reps = 0;
    for (uint32_t a = 0; a < q && reps < t; a++) {
        if (covered[a]) continue;
        reps++;
        for (Fel u : U0) covered[F.add(F.el(a), u).v] = 1;
    }
    if (reps < t) throw precondition_error("not enough additive cosets");
    std::vector<Fel> U;
    U.reserve(N);
    for (uint32_t x = 0; x < q; x++)
        if (covered[x]) U.push_back(F.el(x));
    if ((uint32_t)U.size() != N) throw certification_error("coset union size mismatch");

    budget.charge((uint64_t)N * N);
    Poly hp = poly_derivative(F, poly_from_roots(F, U));
    GenSplit split;
    split.f = poly_one(F);
    split.g1 = poly_one(F);
    split.g2 = poly_monic(F, hp);
    split.s = s;
    if (s >= 2) {
        std::vector<Fel> forbidden = U;
        for (Fel rt : poly_root_points(F, split.g2)) forbidden.push_back(rt);
        budget.charge(q);
        split.e_point = find_free_point(F, forbidden);
    }
    GenResult res = build_generalized(F, U, split);
    if (res.spec.k != N - 2 * s + 1) throw certification_error("dimension bookkeeping mismatch");
    ParamList params{
        {"r", std::to_string(r)}, {"t", std::to_string(t)}, {"s", std::to_string(s)}};
    return finish(F, std::move(res.spec), std::move(res.hull_witness), "add-cosets",
                  std::move(params), budget);
}

HullCode construct_mult_cosets(const Field& F, uint32_t n, uint32_t t, uint32_t s,
                               uint32_t variant, bool extend, WorkBudget& budget) {
    require_odd_q_over_5(F, "multiplicative-coset family");
    uint32_t q = F.q(), p = F.p();
    if (variant < 1 || variant > 8) throw precondition_error("unknown variant (expected 1..8)");
    if (n < 2) throw precondition_error("n must be at least 2");
    if ((q - 1) % n != 0) throw precondition_error("n does not divide q-1");
    bool pdiv = ((t + 1) % p == 0);
    bool odd_variant = (variant % 2 == 1);
    if (odd_variant && pdiv) throw precondition_error("variant requires p not dividing t+1");
    if (!odd_variant && !pdiv) throw precondition_error("variant requires p dividing t+1");
    if ((variant == 3 || variant == 4 || variant == 7 || variant == 8) && n % 2 != 0)
        throw precondition_error("variant requires even n");
    if (t < 1) throw precondition_error("t must be at least 1");
    if (!extend && (q < n + 2 || t > (q - n - 2) / (2 * n)))
        throw precondition_error(
            "t out of range (1 <= t <= floor((q-n-2)/(2n)); pass extend to exceed the bound)");
    uint32_t smax = odd_variant ? (n - 1) / 2 : n - 1;
    if (s < 1 || s > smax)
        throw precondition_error(odd_variant ? "s out of range (1 <= s <= floor((n-1)/2))"
                                             : "s out of range (1 <= s <= n-1)");
    uint32_t N = (t + 1) * n;
    uint32_t degg = pdiv ? (t - 1) * n : t * n;

    std::vector<Fel> Un = mult_subgroup(F, n);
    auto cosets = coset_list(F, Un);
    if (cosets.size() < t) throw precondition_error("not enough cosets");

    std::optional<precondition_error> last_err;
    std::vector<uint32_t> idx(t);
    std::iota(idx.begin(), idx.end(), 0u);
    do {
        budget.charge((uint64_t)N * N);
        std::vector<Fel> U = Un;
        for (uint32_t i : idx) U.insert(U.end(), cosets[i].begin(), cosets[i].end());
        U = sorted_by_index(std::move(U));

        // h' must come out as n * x^(n-1) * S with S of the expected degree
        // and S(0) != 0; combinations that miss the shape are skipped.
        Poly hp = poly_derivative(F, poly_from_roots(F, U));
        if (hp.deg() < (int)(n - 1)) continue;
        bool shaped = true;
        for (uint32_t i = 0; i + 1 < n && shaped; i++)
            if (hp.c[i].v != 0) shaped = false;
        if (!shaped) continue;
        Poly S;
        S.c.assign(hp.c.begin() + (n - 1), hp.c.end());
        if ((uint32_t)S.deg() != degg || S.c[0].v == 0) continue;
        Poly g = poly_monic(F, S);

        GenSplit split;
        split.s = s;
        uint32_t k_expected;
        bool nodd = (n % 2 == 1);
        if (variant <= 2) {
            split.f = xpow(F, nodd ? (n - 1) / 2 : (n - 2) / 2);
            split.g1 = g;
            split.g2 = nodd ? poly_one(F) : poly_x(F);
            k_expected = N - 2 * s + 1 - degg;
        } else if (variant <= 4) {
            split.f = xpow(F, (n - 2) / 2);
            split.g1 = poly_mul(F, poly_x(F), g);
            split.g2 = poly_one(F);
            k_expected = N - 2 * s - degg;
        } else if (variant <= 6) {
            split.f = xpow(F, nodd ? (n - 1) / 2 : (n - 2) / 2);
            split.g1 = poly_one(F);
            split.g2 = nodd ? g : poly_mul(F, poly_x(F), g);
            k_expected = N - 2 * s + 1;
        } else {
            split.f = xpow(F, (n - 2) / 2);
            split.g1 = poly_x(F);
            split.g2 = g;
            k_expected = N - 2 * s;
        }

        GenResult res;
        try {
            if (s >= 2) {
                std::vector<Fel> forbidden = U;
                forbidden.push_back(F.zero());  // root of f
                for (Fel rt : poly_root_points(F, split.g1)) forbidden.push_back(rt);
                for (Fel rt : poly_root_points(F, split.g2)) forbidden.push_back(rt);
                budget.charge(2ull * q);
                split.e_point = find_free_point(F, forbidden);
            }
            res = build_generalized(F, U, split);
        } catch (const precondition_error& ex) {
            last_err = ex;
            continue;
        }
        if (res.spec.k != k_expected) throw certification_error("dimension bookkeeping mismatch");
        ParamList params{{"n", std::to_string(n)},
                         {"t", std::to_string(t)},
                         {"s", std::to_string(s)},
                         {"variant", std::to_string(variant)}};
        if (extend) params.emplace_back("extend", "1");
        return finish(F, std::move(res.spec), std::move(res.hull_witness), "mult-cosets",
                      std::move(params), budget);
    } while (next_combination(idx, (uint32_t)cosets.size()));
    if (last_err) throw *last_err;
    throw precondition_error("no admissible coset combination");
}

HullCode dualize(const Field& F, const HullCode& hc, WorkBudget& budget) {
    uint32_t n = hc.spec.n(), k = hc.spec.k;
    if (n - k <= 1) throw precondition_error("dual dimension must exceed 1");
    GrsSpec d = grs_dual(F, hc.spec);
    ParamList params = hc.params;
    if (!params.empty() && params.back() == std::pair<std::string, std::string>{"dual", "1"})
        params.pop_back();
    else
        params.emplace_back("dual", "1");
    // hull(C-dual) = hull(C), so the same witness spans the dual's hull
    return finish(F, std::move(d), hc.hull_witness, hc.family, std::move(params), budget);
}

}  // namespace hf
