#include "atlas.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hf {

namespace {

std::string params_str(const ParamList& ps) {
    std::string out;
    for (auto& [k, v] : ps) {
        if (!out.empty()) out += ';';
        out += k + "=" + v;
    }
    return out;
}

std::string reason_slug(const std::string& msg) {
    auto has = [&](const char* pre) { return msg.rfind(pre, 0) == 0; };
    if (has("no admissible coset")) return "no-admissible-cosets";
    if (has("no admissible beta")) return "no-admissible-beta";
    if (has("no admissible subspace")) return "no-admissible-config";
    if (has("no free evaluation point")) return "no-free-point";
    if (msg.find("changes square class") != std::string::npos) return "mixed-square-class";
    return "precondition-failed";
}

struct Ctx {
    const Field& F;
    uint32_t cap;  // max code length
    uint64_t row_budget;
    std::vector<AtlasRow>& rows;

    void run(const std::string& family, ParamList params, uint32_t N, uint32_t K,
             const std::function<HullCode(WorkBudget&)>& build) const {
        AtlasRow row;
        row.q = F.q();
        row.family = family;
        row.params = params_str(params);
        row.N = N;
        row.K = K;
        try {
            WorkBudget budget(row_budget);
            HullCode hc = build(budget);
            row.family = hc.family;
            row.params = params_str(hc.params);
            row.N = hc.spec.n();
            row.K = hc.spec.k;
            row.certified = true;
            if (hc.cert.d && hc.cert.d_method != DistMethod::structural)
                row.d = std::to_string(*hc.cert.d);
            else
                row.d = "structural";
        } catch (const budget_exceeded&) {
            row.d = "budget-exceeded";
        } catch (const precondition_error& ex) {
            row.d = reason_slug(ex.what());
        }
        rows.push_back(std::move(row));
    }
};

std::vector<uint32_t> divisors_of(uint32_t n) {
    std::vector<uint32_t> out;
    for (uint32_t d = 1; d <= n; d++)
        if (n % d == 0) out.push_back(d);
    return out;
}

uint32_t ipow_u32(uint32_t b, uint32_t e) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; i++) r *= b;
    return (uint32_t)r;
}

bool is_perfect_square_u32(uint32_t n) {
    uint32_t r = 0;
    while ((uint64_t)(r + 1) * (r + 1) <= n) r++;
    return (uint64_t)r * r == n;
}

void enum_even_q(const Ctx& c) {
    const Field& F = c.F;
    if (F.p() != 2 || F.q() <= 4) return;
    uint32_t nmax = std::min(c.cap, F.q() - 2);
    for (uint32_t n = 4; n <= nmax; n++)
        for (uint32_t s = 1; s <= n - 3; s++)
            c.run("even-q", {{"n", std::to_string(n)}, {"s", std::to_string(s)}}, n, n - s - 1,
                  [&, n, s](WorkBudget& b) { return construct_even_q(F, n, s, b); });
}

// Square-family helper: emit one row per s in the parity range of N.
void square_rows(const Ctx& c, uint32_t fam, const SquareParams& P, ParamList base, uint32_t N) {
    if (N < 2 || N > c.F.q() - 2 || N > c.cap) return;
    uint32_t slo = (N % 2 == 0) ? 1 : 0;
    uint32_t shi;
    if (N % 2 == 0) {
        if (N / 2 < 3) return;
        shi = N / 2 - 2;
    } else {
        if ((N + 1) / 2 < 3) return;
        shi = (N + 1) / 2 - 3;
    }
    for (uint32_t s = slo; s <= shi; s++) {
        uint32_t K = (N % 2 == 0) ? N - 2 * s - 1 : N - 2 * s - 2;
        ParamList params = base;
        params.emplace_back("s", std::to_string(s));
        c.run("square-" + std::to_string(fam), std::move(params), N, K,
              [&, fam, P, s](WorkBudget& b) { return construct_square_family(c.F, fam, P, s, b); });
    }
}

void enum_square(const Ctx& c, uint32_t fam) {
    const Field& F = c.F;
    uint32_t q = F.q(), p = F.p(), m = F.m();
    if (p == 2 || q <= 5) return;
    uint32_t nmax = std::min(c.cap, q - 2);
    switch (fam) {
        case 1:
        case 2: {
            if (fam == 2 && m % 2 != 0) return;
            for (uint32_t N = 2; N <= nmax; N += 2) {
                if (fam == 1 && N % p != 0) continue;
                if ((q - 1) % (N - 1) != 0) continue;
                SquareParams P;
                P.N = N;
                square_rows(c, fam, P, {{"N", std::to_string(N)}}, N);
            }
            return;
        }
        case 3: {
            for (uint32_t N : divisors_of((q - 1) / 2)) {
                if (N < 2 || N > nmax) continue;
                SquareParams P;
                P.N = N;
                square_rows(c, fam, P, {{"N", std::to_string(N)}}, N);
            }
            return;
        }
        case 4:
        case 5:
        case 6: {
            for (uint32_t r = 1; r < m; r++) {
                if (fam == 6 && (m % 2 != 0 || (m / 2) % r != 0)) continue;
                uint64_t pr = ipow_u32(p, r);
                uint64_t den = (fam == 6) ? pr - 1 : pr + 1;
                if ((q - 1) % den != 0) continue;
                uint32_t n = (uint32_t)((q - 1) / den);
                if (n < 2 || !is_perfect_square_u32(n)) continue;
                uint32_t tmax;
                if (fam == 6) {
                    tmax = (uint32_t)(pr - 2);
                } else {
                    if ((q - 1) % (2 * (pr - 1)) != 0) continue;
                    uint64_t ratio = (q - 1) / (2 * (pr - 1));
                    if (fam == 4 && ratio % 2 == 0) continue;
                    if (fam == 5 && ratio % 2 != 0) continue;
                    uint32_t m1 = (q - 2) / n;
                    if (m1 == 0) continue;
                    tmax = m1 - 1;
                }
                for (uint32_t t = 1; t <= tmax; t++) {
                    if (fam == 4 && t % 2 == 0) continue;
                    uint64_t N = (uint64_t)(t + 1) * n;
                    if (N > nmax) break;
                    SquareParams P;
                    P.n = n;
                    P.t = t;
                    P.r = r;
                    square_rows(c, fam, P,
                                {{"n", std::to_string(n)},
                                 {"t", std::to_string(t)},
                                 {"r", std::to_string(r)}},
                                (uint32_t)N);
                }
            }
            return;
        }
        case 7:
        case 8: {
            if (m % 2 != 0) return;
            uint32_t q0 = ipow_u32(p, m / 2);
            for (uint32_t t = (fam == 7) ? 2 : 1; t < q0; t += 2) {
                uint64_t N = (uint64_t)q0 * t + (fam == 8 ? 1 : 0);
                if (N > nmax) break;
                SquareParams P;
                P.t = t;
                square_rows(c, fam, P, {{"t", std::to_string(t)}}, (uint32_t)N);
            }
            return;
        }
        case 9:
        case 11: {
            if (m % 2 != 0) return;
            for (uint32_t m0 : divisors_of(m / 2)) {
                uint32_t r_ = ipow_u32(p, m0);
                for (uint32_t ell = 0; ell < m / m0; ell++) {
                    uint64_t rl = 1;
                    for (uint32_t i = 0; i < ell; i++) rl *= r_;
                    if (fam == 9) {
                        uint64_t tmax = std::min<uint64_t>((r_ - 1) / 2, (q - 2) / (2 * rl));
                        for (uint64_t t = 1; t <= tmax; t++) {
                            uint64_t N = 2 * t * rl;
                            if (N > nmax) break;
                            SquareParams P;
                            P.r = m0;
                            P.ell = ell;
                            P.t = (uint32_t)t;
                            square_rows(c, fam, P,
                                        {{"r", std::to_string(m0)},
                                         {"ell", std::to_string(ell)},
                                         {"t", std::to_string(t)}},
                                        (uint32_t)N);
                        }
                    } else {
                        if (rl > q - 2) continue;
                        uint64_t tmax = std::min<uint64_t>((r_ - 1) / 2, (q - 2 - rl) / (2 * rl));
                        for (uint64_t t = 0; t <= tmax; t++) {
                            uint64_t N = (2 * t + 1) * rl + 1;
                            if (N > nmax) break;
                            SquareParams P;
                            P.r = m0;
                            P.ell = ell;
                            P.t = (uint32_t)t;
                            square_rows(c, fam, P,
                                        {{"r", std::to_string(m0)},
                                         {"ell", std::to_string(ell)},
                                         {"t", std::to_string(t)}},
                                        (uint32_t)N);
                        }
                    }
                }
            }
            return;
        }
        case 10:
        case 12: {
            if (q % 4 != 1) return;
            for (uint32_t ell = 1; ell < m; ell++) {
                uint64_t N = (fam == 10) ? 2ull * ipow_u32(p, ell) : (uint64_t)ipow_u32(p, ell) + 1;
                if (N > nmax) break;
                SquareParams P;
                P.ell = ell;
                square_rows(c, fam, P, {{"ell", std::to_string(ell)}}, (uint32_t)N);
            }
            return;
        }
        default:
            return;
    }
}

void enum_xn_minus_x(const Ctx& c) {
    const Field& F = c.F;
    uint32_t q = F.q(), p = F.p();
    if (p == 2 || q <= 5) return;
    uint32_t nmax = std::min(c.cap, q - 1);
    for (uint32_t n = p; n <= nmax; n += p) {
        if (n < 2 || (q - 1) % (n - 1) != 0) continue;
        for (uint32_t s = 1; s <= (n - 1) / 2; s++)
            c.run("xn-minus-x", {{"n", std::to_string(n)}, {"s", std::to_string(s)}}, n,
                  n - 2 * s + 1,
                  [&, n, s](WorkBudget& b) { return construct_xn_minus_x(F, n, s, b); });
    }
}

void enum_subfield(const Ctx& c) {
    const Field& F = c.F;
    uint32_t q = F.q(), p = F.p(), m = F.m();
    if (p == 2 || q <= 5) return;
    for (uint32_t r = 1; r < m; r++) {
        if (m % r != 0) continue;
        uint32_t pr = ipow_u32(p, r);
        if (pr > c.cap) break;
        for (uint32_t s = 1; s <= (pr - 1) / 2; s++)
            c.run("subfield", {{"r", std::to_string(r)}, {"s", std::to_string(s)}}, pr,
                  pr - 2 * s + 1,
                  [&, r, s](WorkBudget& b) { return construct_subfield(F, r, s, b); });
    }
}

void enum_roots_of_unity(const Ctx& c) {
    const Field& F = c.F;
    uint32_t q = F.q();
    if (F.p() == 2 || q <= 5) return;
    uint32_t nmax = std::min(c.cap, q - 2);
    for (uint32_t n : divisors_of(q - 1)) {
        if (n < 2 || n > nmax) continue;
        for (uint32_t s = 1; s <= (n - 1) / 2; s++)
            c.run("roots-of-unity",
                  {{"n", std::to_string(n)}, {"s", std::to_string(s)}, {"variant", "odd-k"}}, n,
                  n - 2 * s + 1, [&, n, s](WorkBudget& b) {
                      return construct_roots_of_unity(F, n, s, RootsVariant::odd_k, b);
                  });
        if (n % 2 == 0)
            for (uint32_t s = 1; s + 1 <= n / 2; s++)
                c.run("roots-of-unity",
                      {{"n", std::to_string(n)}, {"s", std::to_string(s)}, {"variant", "even-k"}},
                      n, n - 2 * s, [&, n, s](WorkBudget& b) {
                          return construct_roots_of_unity(F, n, s, RootsVariant::even_k, b);
                      });
    }
}

void enum_add_cosets(const Ctx& c) {
    const Field& F = c.F;
    uint32_t q = F.q(), p = F.p(), m = F.m();
    if (p == 2 || q <= 5 || m < 2) return;
    for (uint32_t r = 1; r <= m - 1; r++) {
        if (m % r != 0) continue;
        uint32_t pr = ipow_u32(p, r);
        uint32_t tmax = (q - 1 - pr) / (2 * pr);
        for (uint32_t t = 1; t <= tmax; t++) {
            if ((t + 1) % p == 0) continue;
            uint64_t N = (uint64_t)(t + 1) * pr;
            if (N > c.cap) break;
            for (uint32_t s = 1; s <= pr / 2; s++)
                c.run("add-cosets",
                      {{"r", std::to_string(r)}, {"t", std::to_string(t)},
                       {"s", std::to_string(s)}},
                      (uint32_t)N, (uint32_t)N - 2 * s + 1, [&, r, t, s](WorkBudget& b) {
                          return construct_add_cosets(F, r, t, s, b);
                      });
        }
    }
}

void enum_mult_cosets(const Ctx& c) {
    const Field& F = c.F;
    uint32_t q = F.q(), p = F.p();
    if (p == 2 || q <= 5) return;
    for (uint32_t n : divisors_of(q - 1)) {
        if (n < 2 || n > c.cap || q < n + 2) continue;
        uint32_t tmax = (q - n - 2) / (2 * n);
        for (uint32_t t = 1; t <= tmax; t++) {
            uint64_t N = (uint64_t)(t + 1) * n;
            if (N > c.cap) break;
            bool pdiv = ((t + 1) % p == 0);
            uint32_t degg = (pdiv ? t - 1 : t) * n;
            for (uint32_t variant = 1; variant <= 8; variant++) {
                bool odd_variant = (variant % 2 == 1);
                if (odd_variant == pdiv) continue;
                if ((variant == 3 || variant == 4 || variant == 7 || variant == 8) && n % 2 != 0)
                    continue;
                uint32_t smax = odd_variant ? (n - 1) / 2 : n - 1;
                for (uint32_t s = 1; s <= smax; s++) {
                    uint32_t K;
                    if (variant <= 2)
                        K = (uint32_t)N - 2 * s + 1 - degg;
                    else if (variant <= 4)
                        K = (uint32_t)N - 2 * s - degg;
                    else if (variant <= 6)
                        K = (uint32_t)N - 2 * s + 1;
                    else
                        K = (uint32_t)N - 2 * s;
                    c.run("mult-cosets",
                          {{"n", std::to_string(n)},
                           {"t", std::to_string(t)},
                           {"s", std::to_string(s)},
                           {"variant", std::to_string(variant)}},
                          (uint32_t)N, K, [&, n, t, s, variant](WorkBudget& b) {
                              return construct_mult_cosets(F, n, t, s, variant, false, b);
                          });
                }
            }
        }
    }
}

}  // namespace

std::vector<AtlasRow> atlas_for_field(const Field& F, uint32_t max_n,
                                      const std::vector<std::string>& families,
                                      uint64_t row_budget) {
    std::vector<AtlasRow> rows;
    uint32_t cap = (max_n == 0) ? F.q() : max_n;
    Ctx c{F, cap, row_budget, rows};
    auto want = [&](const std::string& name) {
        if (families.empty()) return true;
        for (const std::string& f : families) {
            if (f == name) return true;
            if (f == "square" && name.rfind("square-", 0) == 0) return true;
        }
        return false;
    };
    if (want("even-q")) enum_even_q(c);
    for (uint32_t fam = 1; fam <= 12; fam++)
        if (want("square-" + std::to_string(fam))) enum_square(c, fam);
    if (want("xn-minus-x")) enum_xn_minus_x(c);
    if (want("subfield")) enum_subfield(c);
    if (want("roots-of-unity")) enum_roots_of_unity(c);
    if (want("add-cosets")) enum_add_cosets(c);
    if (want("mult-cosets")) enum_mult_cosets(c);
    return rows;
}

std::string atlas_csv(const std::vector<AtlasRow>& rows) {
    std::string out = "q,family,params,N,K,d,certified\n";
    for (const AtlasRow& r : rows) {
        out += std::to_string(r.q) + "," + r.family + "," + r.params + "," +
               std::to_string(r.N) + "," + std::to_string(r.K) + "," + r.d + "," +
               (r.certified ? "true" : "false") + "\n";
    }
    return out;
}

}  // namespace hf
