#include "gf.hpp"

#include <algorithm>
#include <atomic>

namespace hf {

namespace {
std::atomic<uint32_t> next_fid{1};

constexpr uint32_t kMaxQ = 1u << 20;
constexpr uint32_t kAddTableMaxQ = 1024;  // full addition table up to 1 MiB

std::vector<uint32_t> trim(std::vector<uint32_t> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}
}  // namespace

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
    std::vector<uint32_t> fs;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

namespace gfp {

std::vector<uint32_t> mulmod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                             const std::vector<uint32_t>& mod, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> res(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            res[i + j] = (res[i + j] + (uint64_t)a[i] * b[j]) % p;
    }
    size_t dm = mod.size() - 1;
    while (res.size() > dm) {
        uint32_t c = res.back();
        if (c) {
            size_t shift = res.size() - 1 - dm;
            for (size_t i = 0; i <= dm; ++i)
                res[shift + i] = (res[shift + i] + (uint64_t)(p - 1) * c % p * mod[i]) % p;
        }
        res.pop_back();
    }
    return trim(std::move(res));
}

namespace {
std::vector<uint32_t> powmod(std::vector<uint32_t> base, uint64_t e,
                             const std::vector<uint32_t>& mod, uint32_t p) {
    std::vector<uint32_t> r{1};
    while (e) {
        if (e & 1) r = mulmod(r, base, mod, p);
        base = mulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

std::vector<uint32_t> sub_x(std::vector<uint32_t> f, uint32_t p) {
    if (f.size() < 2) f.resize(2, 0);
    f[1] = (f[1] + p - 1) % p;
    return trim(std::move(f));
}

std::vector<uint32_t> gcd(std::vector<uint32_t> a, std::vector<uint32_t> b, uint32_t p) {
    auto pmod = [&](std::vector<uint32_t> x, const std::vector<uint32_t>& y) {
        size_t dy = y.size() - 1;
        // inverse of leading coeff of y
        uint32_t il = 1;
        for (uint32_t t = 0; t < p - 2; ++t) il = (uint64_t)il * y.back() % p;
        while (x.size() >= y.size() && !x.empty()) {
            uint32_t c = (uint64_t)x.back() * il % p;
            size_t shift = x.size() - 1 - dy;
            for (size_t i = 0; i <= dy; ++i)
                x[shift + i] = (x[shift + i] + (uint64_t)(p - 1) * c % p * y[i]) % p;
            x = trim(std::move(x));
            if (x.empty()) break;
        }
        return x;
    };
    while (!b.empty()) {
        auto r = pmod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<uint32_t> polyrem(std::vector<uint32_t> x, const std::vector<uint32_t>& y,
                              uint32_t p) {
    size_t dy = y.size() - 1;
    uint32_t il = 1;
    for (uint32_t t = 0; t < p - 2; ++t) il = (uint64_t)il * y.back() % p;
    while (x.size() >= y.size() && !x.empty()) {
        uint32_t c = (uint64_t)x.back() * il % p;
        size_t shift = x.size() - 1 - dy;
        for (size_t i = 0; i <= dy; ++i)
            x[shift + i] = (x[shift + i] + (uint64_t)(p - 1) * c % p * y[i]) % p;
        x = trim(std::move(x));
    }
    return x;
}

// Smallest monic proper factor of a reducible f: trial division over degrees
// up to m/2, so the search space stays near sqrt(p^m).
std::vector<uint32_t> smallest_factor(const std::vector<uint32_t>& f, uint32_t p) {
    uint32_t m = (uint32_t)f.size() - 1;
    for (uint32_t d = 1; 2 * d <= m; ++d) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < d; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            std::vector<uint32_t> cand(d + 1, 0);
            uint64_t t = idx;
            for (uint32_t i = 0; i < d; ++i) {
                cand[i] = (uint32_t)(t % p);
                t /= p;
            }
            cand[d] = 1;
            if (polyrem(f, cand, p).empty()) return cand;
        }
    }
    return {};
}
}  // namespace

bool irreducible(const std::vector<uint32_t>& f, uint32_t p, std::vector<uint32_t>* factor_out) {
    uint32_t m = (uint32_t)f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    std::vector<uint32_t> x{0, 1};
    // x^(p^m) == x mod f
    auto xq = x;
    for (uint32_t i = 0; i < m; ++i) xq = powmod(xq, p, f, p);
    if (!sub_x(xq, p).empty()) {
        if (factor_out) *factor_out = smallest_factor(f, p);
        return false;
    }
    for (uint32_t l : prime_factors(m)) {
        uint32_t d = m / l;
        auto xd = x;
        for (uint32_t i = 0; i < d; ++i) xd = powmod(xd, p, f, p);
        auto g = gcd(f, sub_x(xd, p), p);
        if (g.size() - 1 != 0) {
            if (factor_out) *factor_out = smallest_factor(f, p);
            return false;
        }
    }
    return true;
}

std::vector<uint32_t> default_modulus(uint32_t p, uint32_t m) {
    if (!is_prime_u32(p)) throw precondition_error("p must be prime");
    if (m == 0) throw precondition_error("m must be positive");
    if (m == 1) return {0, 1};  // x itself
    uint64_t pm = 1;
    for (uint32_t i = 0; i < m; ++i) {
        pm *= p;
        if (pm > kMaxQ) throw precondition_error("field order exceeds 2^20");
    }
    for (uint64_t j = 0; j < pm; ++j) {
        std::vector<uint32_t> mod(m + 1, 0);
        uint64_t t = j;
        for (uint32_t i = 0; i < m; ++i) {
            mod[i] = t % p;
            t /= p;
        }
        mod[m] = 1;
        if (irreducible(mod, p)) return mod;
    }
    throw error("no irreducible polynomial found");  // unreachable for prime p
}

}  // namespace gfp

Field::Field(uint32_t p, uint32_t m) : p_(p), m_(m), mod_(gfp::default_modulus(p, m)) {
    init();
}

Field::Field(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus)
    : p_(p), m_(m), mod_(modulus) {
    if (mod_.size() != m_ + 1)
        throw precondition_error("modulus must have degree m");
    for (uint32_t c : mod_)
        if (c >= p_) throw precondition_error("modulus coefficient out of range");
    if (mod_.back() != 1) throw precondition_error("modulus must be monic");
    std::vector<uint32_t> factor;
    if (!gfp::irreducible(mod_, p_, &factor)) {
        std::string msg = "modulus is reducible";
        if (!factor.empty()) {
            msg += "; divisible by [";
            for (size_t i = 0; i < factor.size(); ++i)
                msg += (i ? "," : "") + std::to_string(factor[i]);
            msg += "] (coefficients, constant term first)";
        }
        throw precondition_error(msg);
    }
    init();
}

void Field::init() {
    if (!is_prime_u32(p_)) throw precondition_error("p must be prime");
    if (m_ == 0) throw precondition_error("m must be positive");
    uint64_t q = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        q *= p_;
        if (q > kMaxQ) throw precondition_error("field order exceeds 2^20");
    }
    q_ = (uint32_t)q;
    fid_ = next_fid.fetch_add(1);

    negtab_.resize(q_);
    for (uint32_t a = 0; a < q_; ++a) {
        uint32_t t = a, out = 0, mul = 1;
        for (uint32_t i = 0; i < m_; ++i) {
            uint32_t d = t % p_;
            out += ((p_ - d) % p_) * mul;
            mul *= p_;
            t /= p_;
        }
        negtab_[a] = out;
    }
    if (q_ <= kAddTableMaxQ) {
        addtab_.resize((size_t)q_ * q_);
        for (uint32_t a = 0; a < q_; ++a)
            for (uint32_t b = 0; b < q_; ++b)
                addtab_[(size_t)a * q_ + b] = add_slow(a, b);
    }

    // smallest primitive element, then log/exp tables
    auto pf = prime_factors(q_ - 1);
    auto pow_poly = [&](uint32_t a, uint64_t e) {
        uint32_t r = 1, b = a;
        while (e) {
            if (e & 1) r = mul_poly(r, b);
            b = mul_poly(b, b);
            e >>= 1;
        }
        return r;
    };
    gen_ = 0;
    for (uint32_t cand = 1; cand < q_; ++cand) {
        bool ok = true;
        for (uint32_t l : pf)
            if (pow_poly(cand, (q_ - 1) / l) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            gen_ = cand;
            break;
        }
    }
    if (gen_ == 0) throw error("no primitive element found");

    exp_.resize(2 * (q_ - 1));
    log_.assign(q_, 0);
    uint32_t x = 1;
    for (uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = mul_poly(x, gen_);
    }
    for (uint32_t i = q_ - 1; i < 2 * (q_ - 1); ++i) exp_[i] = exp_[i - (q_ - 1)];
}

uint32_t Field::add_slow(uint32_t a, uint32_t b) const {
    uint32_t out = 0, mul = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t da = a % p_, db = b % p_;
        out += ((da + db) % p_) * mul;
        mul *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

uint32_t Field::mul_poly(uint32_t a, uint32_t b) const {
    std::vector<uint32_t> da(m_), db(m_);
    uint32_t t = a;
    for (uint32_t i = 0; i < m_; ++i) {
        da[i] = t % p_;
        t /= p_;
    }
    t = b;
    for (uint32_t i = 0; i < m_; ++i) {
        db[i] = t % p_;
        t /= p_;
    }
    auto r = gfp::mulmod(trim(da), trim(db), mod_, p_);
    uint32_t out = 0, mul = 1;
    for (size_t i = 0; i < m_; ++i) {
        if (i < r.size()) out += r[i] * mul;
        mul *= p_;
    }
    return out;
}

Fel Field::el(uint32_t index) const {
    if (index >= q_) throw precondition_error("element index out of range");
    return Fel{index, fid_};
}

Fel Field::from_int(int64_t n) const {
    int64_t r = n % (int64_t)p_;
    if (r < 0) r += p_;
    return Fel{(uint32_t)r, fid_};
}

Fel Field::inv(Fel a) const {
    chk(a);
    if (a.v == 0) throw precondition_error("division by zero");
    return Fel{inv_raw(a.v), fid_};
}

Fel Field::div(Fel a, Fel b) const {
    chk(a);
    chk(b);
    if (b.v == 0) throw precondition_error("division by zero");
    return Fel{div_raw(a.v, b.v), fid_};
}

Fel Field::pow(Fel a, int64_t e) const {
    chk(a);
    if (a.v == 0) {
        if (e < 0) throw precondition_error("0 has no negative power");
        return e == 0 ? one() : zero();
    }
    int64_t ord = q_ - 1;
    int64_t le = ((int64_t)log_[a.v] * (e % ord)) % ord;
    if (le < 0) le += ord;
    return Fel{exp_[le], fid_};
}

bool Field::is_square(Fel a) const {
    chk(a);
    if (p_ == 2 || a.v == 0) return true;
    return log_[a.v] % 2 == 0;
}

Fel Field::sqrt(Fel a) const {
    chk(a);
    if (a.v == 0) return zero();
    if (p_ == 2) {
        // Frobenius: squaring is a bijection, sqrt(x) = x^(q/2)
        return pow(a, q_ / 2);
    }
    uint32_t l = log_[a.v];
    if (l % 2 != 0) throw precondition_error("element is not a square");
    uint32_t r = exp_[l / 2];
    uint32_t r2 = neg_raw(r);
    return Fel{std::min(r, r2), fid_};
}

Fel Field::smallest_nonresidue() const {
    if (p_ == 2) throw precondition_error("every element of an even-order field is a square");
    for (uint32_t a = 1; a < q_; ++a)
        if (log_[a] % 2 != 0) return Fel{a, fid_};
    throw error("no nonresidue found");  // unreachable, q > 2
}

uint32_t Field::log(Fel a) const {
    chk(a);
    if (a.v == 0) throw precondition_error("log of zero");
    return log_[a.v];
}

std::vector<Fel> Field::subfield_elements(uint32_t r) const {
    if (r == 0 || m_ % r != 0) throw precondition_error("subfield degree must divide m");
    uint64_t pr = 1;
    for (uint32_t i = 0; i < r; ++i) pr *= p_;
    std::vector<Fel> out;
    out.push_back(zero());
    // nonzero fixed points of the r-th Frobenius power form the subgroup of
    // order p^r - 1
    for (uint32_t a = 1; a < q_; ++a) {
        if ((uint64_t)log_[a] * pr % (q_ - 1) == log_[a]) out.push_back(Fel{a, fid_});
    }
    if (out.size() != pr)
        throw error("subfield extraction failed");  // would indicate a table bug
    return out;
}

std::vector<Fel> Field::enumerate() const {
    std::vector<Fel> out;
    out.reserve(q_);
    for (uint32_t a = 0; a < q_; ++a) out.push_back(Fel{a, fid_});
    return out;
}

}  // namespace hf
