#include "code.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace hf {

namespace {

constexpr uint64_t kSat = std::numeric_limits<uint64_t>::max();

uint64_t sat_mul(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSat / b) return kSat;
    return a * b;
}

uint64_t sat_add(uint64_t a, uint64_t b) { return (a > kSat - b) ? kSat : a + b; }

uint64_t sat_pow(uint64_t base, uint32_t e) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; i++) r = sat_mul(r, base);
    return r;
}

uint64_t sat_binom(uint64_t n, uint64_t w) {
    if (w > n) return 0;
    w = std::min(w, n - w);
    uint64_t r = 1;
    for (uint64_t i = 1; i <= w; i++) {
        r = sat_mul(r, n - w + i);
        if (r == kSat) return kSat;
        r /= i;
    }
    return r;
}

void check_entries(const Field& F, const Matrix& M) {
    for (uint32_t v : M.a)
        if (v >= F.q()) throw precondition_error("matrix entry out of range for GF(" + std::to_string(F.q()) + ")");
}

// Incremental column-echelon state for subset scans.  Basis vectors are
// normalized to pivot 1; each new vector is reduced against the stack in push
// order, which keeps earlier pivot positions clear in later vectors.
struct EchelonStack {
    const Field& F;
    uint32_t m;
    std::vector<std::vector<uint32_t>> basis;
    std::vector<uint32_t> piv;

    EchelonStack(const Field& f, uint32_t rows) : F(f), m(rows) {}

    // Returns false (and pushes nothing) when col is dependent on the stack.
    bool push(const uint32_t* col, uint64_t& ops) {
        std::vector<uint32_t> v(col, col + m);
        for (size_t i = 0; i < basis.size(); i++) {
            uint32_t f = v[piv[i]];
            if (f == 0) continue;
            const auto& b = basis[i];
            for (uint32_t j = 0; j < m; j++) v[j] = F.sub_raw(v[j], F.mul_raw(f, b[j]));
            ops += 2 * m;
        }
        uint32_t p = m;
        for (uint32_t j = 0; j < m; j++)
            if (v[j] != 0) { p = j; break; }
        ops += m;
        if (p == m) return false;
        uint32_t inv = F.inv_raw(v[p]);
        for (uint32_t j = 0; j < m; j++) v[j] = F.mul_raw(inv, v[j]);
        basis.push_back(std::move(v));
        piv.push_back(p);
        return true;
    }

    void pop() {
        basis.pop_back();
        piv.pop_back();
    }
};

std::vector<uint32_t> transpose_raw(const Matrix& M) {
    std::vector<uint32_t> t((size_t)M.rows * M.cols);
    for (uint32_t r = 0; r < M.rows; r++)
        for (uint32_t c = 0; c < M.cols; c++) t[(size_t)c * M.rows + r] = M.at(r, c);
    return t;
}

// Exhaustive weight scan over projective messages (first nonzero digit fixed
// to 1).  Rows of G must be full rank.
uint32_t enum_min_weight(const Field& F, const Matrix& G, WorkBudget& budget) {
    const uint32_t k = G.rows, n = G.cols, q = F.q();
    uint32_t best = n + 1;
    std::vector<uint32_t> acc(n), digit(k);
    for (uint32_t lead = 0; lead < k; lead++) {
        for (uint32_t c = 0; c < n; c++) acc[c] = G.at(lead, c);
        std::fill(digit.begin() + lead, digit.end(), 0);
        for (;;) {
            uint32_t w = 0;
            for (uint32_t c = 0; c < n; c++) w += (acc[c] != 0);
            if (w < best) {
                best = w;
                if (best == 1) return 1;
            }
            budget.charge(n);
            // Odometer over coefficients at positions after lead.  Stepping a
            // digit from v to v' shifts acc by (el(v') - el(v)) times that row,
            // so acc always equals row[lead] + sum digit[j]*row[j].
            bool advanced = false;
            uint32_t pos = k;
            while (pos > lead + 1) {
                pos--;
                uint32_t cur = digit[pos];
                uint32_t nxt = cur + 1 < q ? cur + 1 : 0;
                uint32_t delta = F.sub_raw(nxt, cur);
                for (uint32_t c = 0; c < n; c++)
                    acc[c] = F.add_raw(acc[c], F.mul_raw(delta, G.at(pos, c)));
                budget.charge(n);
                digit[pos] = nxt;
                if (nxt != 0) {
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }
    return best;
}

// True iff every min(k, n-k)-subset of the side matrix's columns is
// independent, i.e. the code is MDS.
bool mds_subset_check(const Field& F, const std::vector<uint32_t>& colsT, uint32_t m, uint32_t n,
                      WorkBudget& budget) {
    EchelonStack st(F, m);
    uint64_t ops = 0;
    bool mds = true;
    auto dfs = [&](auto&& self, uint32_t start) -> void {
        for (uint32_t j = start; j < n && mds; j++) {
            if (!st.push(&colsT[(size_t)j * m], ops)) {
                mds = false;
                return;
            }
            if (st.basis.size() < m && m - st.basis.size() <= n - j - 1) self(self, j + 1);
            st.pop();
            if ((j & 63) == 0) {
                budget.charge(ops);
                ops = 0;
            }
        }
    };
    dfs(dfs, 0);
    budget.charge(ops);
    return mds;
}

// Exact minimum dependent-column count of the parity matrix = d.
uint32_t parity_dfs_distance(const Field& F, const Matrix& H, WorkBudget& budget) {
    const uint32_t r = H.rows, n = H.cols;
    auto colsT = transpose_raw(H);
    EchelonStack st(F, r);
    uint32_t best = r + 2;
    uint64_t ops = 0;
    auto dfs = [&](auto&& self, uint32_t start) -> void {
        for (uint32_t j = start; j < n; j++) {
            uint32_t t = (uint32_t)st.basis.size();
            if (t + 2 > best) return;
            if (!st.push(&colsT[(size_t)j * r], ops)) {
                best = std::min(best, t + 1);
                if (best == 1) return;
                continue;
            }
            if (t + 2 < best) self(self, j + 1);
            st.pop();
            if ((j & 63) == 0) {
                budget.charge(ops);
                ops = 0;
            }
        }
    };
    dfs(dfs, 0);
    budget.charge(ops);
    return best;
}

uint32_t dot_raw(const Field& F, const uint32_t* x, const uint32_t* y, uint32_t n) {
    uint32_t acc = 0;
    for (uint32_t i = 0; i < n; i++) acc = F.add_raw(acc, F.mul_raw(x[i], y[i]));
    return acc;
}

Matrix pivot_rows(const RrefResult& rr) {
    Matrix G(rr.rank, rr.R.cols);
    std::copy(rr.R.a.begin(), rr.R.a.begin() + (size_t)rr.rank * rr.R.cols, G.a.begin());
    return G;
}

}  // namespace

RrefResult rref(const Field& F, Matrix M) {
    RrefResult out;
    uint32_t r = 0;
    for (uint32_t c = 0; c < M.cols && r < M.rows; c++) {
        uint32_t pr = M.rows;
        for (uint32_t i = r; i < M.rows; i++)
            if (M.at(i, c) != 0) { pr = i; break; }
        if (pr == M.rows) continue;
        if (pr != r)
            for (uint32_t j = 0; j < M.cols; j++) std::swap(M.at(r, j), M.at(pr, j));
        uint32_t inv = F.inv_raw(M.at(r, c));
        for (uint32_t j = c; j < M.cols; j++) M.at(r, j) = F.mul_raw(inv, M.at(r, j));
        for (uint32_t i = 0; i < M.rows; i++) {
            if (i == r) continue;
            uint32_t f = M.at(i, c);
            if (f == 0) continue;
            for (uint32_t j = c; j < M.cols; j++)
                M.at(i, j) = F.sub_raw(M.at(i, j), F.mul_raw(f, M.at(r, j)));
        }
        out.pivots.push_back(c);
        r++;
    }
    out.rank = r;
    out.R = std::move(M);
    return out;
}

uint32_t rank(const Field& F, const Matrix& M) { return rref(F, M).rank; }

Matrix kernel(const Field& F, const Matrix& M) {
    RrefResult rr = rref(F, M);
    const uint32_t n = M.cols;
    std::vector<bool> is_pivot(n, false);
    for (uint32_t c : rr.pivots) is_pivot[c] = true;
    Matrix K(n - rr.rank, n);
    uint32_t row = 0;
    for (uint32_t f = 0; f < n; f++) {
        if (is_pivot[f]) continue;
        K.at(row, f) = 1;
        for (uint32_t i = 0; i < rr.rank; i++)
            K.at(row, rr.pivots[i]) = F.neg_raw(rr.R.at(i, f));
        row++;
    }
    return K;
}

Matrix intersection(const Field& F, const Matrix& A, const Matrix& B) {
    if (A.cols != B.cols) throw precondition_error("intersection: column counts differ");
    const uint32_t n = A.cols;
    Matrix Z(A.rows + B.rows, 2 * n);
    for (uint32_t i = 0; i < A.rows; i++)
        for (uint32_t c = 0; c < n; c++) {
            Z.at(i, c) = A.at(i, c);
            Z.at(i, n + c) = A.at(i, c);
        }
    for (uint32_t i = 0; i < B.rows; i++)
        for (uint32_t c = 0; c < n; c++) Z.at(A.rows + i, c) = B.at(i, c);
    RrefResult rr = rref(F, std::move(Z));
    // Rows of the echelon form with zero left block carry an intersection
    // basis in the right block.
    std::vector<uint32_t> rows;
    for (uint32_t i = 0; i < rr.rank; i++)
        if (rr.pivots[i] >= n) rows.push_back(i);
    Matrix I((uint32_t)rows.size(), n);
    for (uint32_t i = 0; i < rows.size(); i++)
        for (uint32_t c = 0; c < n; c++) I.at(i, c) = rr.R.at(rows[i], n + c);
    return I;
}

uint32_t hull_dim_gram(const Field& F, const Matrix& G) {
    Matrix B(G.rows, G.rows);
    for (uint32_t i = 0; i < G.rows; i++)
        for (uint32_t j = i; j < G.rows; j++) {
            uint32_t d = dot_raw(F, &G.a[(size_t)i * G.cols], &G.a[(size_t)j * G.cols], G.cols);
            B.at(i, j) = d;
            B.at(j, i) = d;
        }
    return G.rows - rank(F, B);
}

uint32_t hull_dim_intersect(const Field& F, const Matrix& G) {
    return intersection(F, G, dual(F, G)).rows;
}

uint32_t hull_dim(const Field& F, const Matrix& G) {
    RrefResult rr = rref(F, G);
    Matrix Ge = pivot_rows(rr);
    uint32_t hg = hull_dim_gram(F, Ge);
    uint32_t hi = hull_dim_intersect(F, Ge);
    if (hg != hi) {
        std::ostringstream os;
        os << "hull dimension methods disagree: gram says " << hg << ", intersection says " << hi;
        throw certification_error(os.str());
    }
    return hg;
}

uint64_t WorkBudget::default_limit() {
    if (const char* env = std::getenv("HULLFORGE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw precondition_error("HULLFORGE_BUDGET must be a positive integer");
    }
    return 100000000ull;
}

const char* dist_method_name(DistMethod m) {
    switch (m) {
        case DistMethod::enumeration: return "enumeration";
        case DistMethod::column_subsets: return "column-subsets";
        case DistMethod::structural: return "structural";
        case DistMethod::exceeds_budget: return "exceeds-budget";
    }
    return "?";
}

DistanceResult min_distance(const Field& F, const Matrix& G, WorkBudget& budget) {
    const uint32_t k = G.rows, n = G.cols;
    if (k == 0 || k > n) throw precondition_error("min_distance: need 1 <= k <= n");
    if (k == n) return {1, DistMethod::enumeration};

    uint64_t remaining = budget.limit > budget.used ? budget.limit - budget.used : 0;
    uint64_t enum_cost = sat_mul(sat_pow(F.q(), k), n);
    if (enum_cost <= remaining) {
        try {
            return {enum_min_weight(F, G, budget), DistMethod::enumeration};
        } catch (const budget_exceeded&) {
            return {std::nullopt, DistMethod::exceeds_budget};
        }
    }

    const uint32_t r = n - k;
    const uint32_t w0 = std::min(k, r);
    uint64_t side_cost = 0;
    for (uint32_t w = 0; w <= w0; w++)
        side_cost = sat_add(side_cost, sat_mul(sat_binom(n, w), 2 * (uint64_t)w * w0 + 2 * w0));
    if (side_cost > remaining) return {std::nullopt, DistMethod::exceeds_budget};

    try {
        Matrix H = dual(F, G);
        const Matrix& side = (k <= r) ? G : H;
        auto colsT = transpose_raw(side);
        if (mds_subset_check(F, colsT, side.rows, n, budget))
            return {r + 1, DistMethod::column_subsets};
        // Not MDS: fall through to an exact scan on the parity side.
        uint64_t dfs_cost = 0;
        for (uint32_t w = 0; w <= r + 1; w++)
            dfs_cost = sat_add(dfs_cost, sat_mul(sat_binom(n, w), 2 * (uint64_t)w * r + 2 * r));
        remaining = budget.limit > budget.used ? budget.limit - budget.used : 0;
        if (dfs_cost > remaining) return {std::nullopt, DistMethod::exceeds_budget};
        return {parity_dfs_distance(F, H, budget), DistMethod::column_subsets};
    } catch (const budget_exceeded&) {
        return {std::nullopt, DistMethod::exceeds_budget};
    }
}

Certificate analyze(const Field& F, const Matrix& G, const StructuralWitness* witness,
                    WorkBudget& budget) {
    check_entries(F, G);
    if (G.rows == 0 || G.cols == 0) throw precondition_error("empty generator matrix");
    const uint32_t n = G.cols;

    RrefResult rr = rref(F, G);
    if (rr.rank == 0) throw precondition_error("generator matrix is zero: no code to analyze");
    Matrix Ge = pivot_rows(rr);
    const uint32_t k = rr.rank;

    Certificate cert;
    cert.n = n;
    cert.k = k;
    cert.rank_deficiency = G.rows - k;

    uint32_t hg = hull_dim_gram(F, Ge);
    uint32_t hi = hull_dim_intersect(F, Ge);
    if (hg != hi) {
        std::ostringstream os;
        os << "hull dimension methods disagree: gram says " << hg << ", intersection says " << hi;
        throw certification_error(os.str());
    }
    cert.hull_dim = hg;

    bool witness_ok = false;
    if (witness) {
        if (witness->alpha.size() != n || witness->v.size() != n)
            throw certification_error("structural witness has wrong length");
        for (const Fel& x : witness->alpha) F.check(x);
        for (const Fel& x : witness->v) F.check(x);
        std::vector<uint32_t> seen;
        for (const Fel& x : witness->alpha) seen.push_back(x.v);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw certification_error("structural witness: evaluation points not distinct");
        for (const Fel& x : witness->v)
            if (x.v == 0) throw certification_error("structural witness: zero column multiplier");
        // The witness matrix (v_i alpha_i^j) must generate the same row space.
        Matrix W(k, n);
        for (uint32_t c = 0; c < n; c++) {
            uint32_t pw = witness->v[c].v;
            for (uint32_t j = 0; j < k; j++) {
                W.at(j, c) = pw;
                pw = F.mul_raw(pw, witness->alpha[c].v);
            }
        }
        Matrix stacked(2 * k, n);
        std::copy(Ge.a.begin(), Ge.a.end(), stacked.a.begin());
        std::copy(W.a.begin(), W.a.end(), stacked.a.begin() + (size_t)k * n);
        if (rank(F, W) != k || rank(F, stacked) != k)
            throw certification_error("structural witness does not generate the code");
        witness_ok = true;
    }

    DistanceResult dr = min_distance(F, Ge, budget);
    std::ostringstream notes;
    notes << "hull: gram+intersection agree; distance: " << dist_method_name(dr.method);
    if (dr.method == DistMethod::exceeds_budget && witness_ok) {
        dr.d = n - k + 1;
        dr.method = DistMethod::structural;
        notes.str("");
        notes << "hull: gram+intersection agree; distance: structural "
                 "(distinct evaluation points, nonzero multipliers)";
    }
    cert.d = dr.d;
    cert.d_method = dr.method;
    cert.is_mds = dr.d.has_value() && *dr.d == n - k + 1;
    cert.method_notes = notes.str();
    return cert;
}

Certificate certify(const Field& F, const Matrix& G, const Claim& claim,
                    const StructuralWitness* witness, const std::vector<Fel>* hull_witness,
                    WorkBudget& budget) {
    Certificate cert = analyze(F, G, witness, budget);
    std::ostringstream os;
    if (cert.rank_deficiency != 0) {
        os << "generator matrix is rank deficient by " << cert.rank_deficiency;
        throw certification_error(os.str());
    }
    if (cert.n != claim.n || cert.k != claim.k) {
        os << "code is [" << cert.n << "," << cert.k << "], claimed [" << claim.n << ","
           << claim.k << "]";
        throw certification_error(os.str());
    }
    if (cert.hull_dim != claim.hull_dim) {
        os << "hull dimension is " << cert.hull_dim << ", claimed " << claim.hull_dim;
        throw certification_error(os.str());
    }
    if (claim.mds) {
        if (!cert.d.has_value()) {
            os << "minimum distance could not be established within budget and no structural "
                  "witness applies";
            throw certification_error(os.str());
        }
        if (!cert.is_mds) {
            os << "minimum distance is " << *cert.d << ", not " << cert.n - cert.k + 1
               << ": code is not MDS";
            throw certification_error(os.str());
        }
    }
    if (hull_witness) {
        const auto& w = *hull_witness;
        if (w.size() != cert.n) throw certification_error("hull witness has wrong length");
        std::vector<uint32_t> wr(cert.n);
        bool nonzero = false;
        for (uint32_t i = 0; i < cert.n; i++) {
            F.check(w[i]);
            wr[i] = w[i].v;
            nonzero = nonzero || wr[i] != 0;
        }
        if (!nonzero) throw certification_error("hull witness is the zero vector");
        if (dot_raw(F, wr.data(), wr.data(), cert.n) != 0)
            throw certification_error("hull witness is not self-orthogonal");
        RrefResult rr = rref(F, G);
        Matrix Ge = pivot_rows(rr);
        for (uint32_t i = 0; i < cert.k; i++)
            if (dot_raw(F, &Ge.a[(size_t)i * cert.n], wr.data(), cert.n) != 0)
                throw certification_error("hull witness is not orthogonal to the code");
        Matrix stacked(cert.k + 1, cert.n);
        std::copy(Ge.a.begin(), Ge.a.end(), stacked.a.begin());
        std::copy(wr.begin(), wr.end(), stacked.a.begin() + (size_t)cert.k * cert.n);
        if (rank(F, stacked) != cert.k)
            throw certification_error("hull witness is not a codeword");
        // Nonzero, in C, orthogonal to all of C: spans the hull when dim 1.
        if (cert.hull_dim != 1)
            throw certification_error("hull witness given but hull dimension is not 1");
    }
    return cert;
}

}  // namespace hf
