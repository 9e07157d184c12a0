#include "poly.hpp"

namespace hf {

namespace {
Poly trim(Poly f) {
    while (!f.c.empty() && f.c.back().v == 0) f.c.pop_back();
    return f;
}
}  // namespace

Poly poly_zero() { return {}; }

Poly poly_const(const Field& F, Fel a) {
    Poly f;
    if (a.v) f.c = {a};
    (void)F;
    return f;
}

Poly poly_one(const Field& F) { return Poly{{F.one()}}; }

Poly poly_x(const Field& F) { return Poly{{F.zero(), F.one()}}; }

Poly poly_linear(const Field& F, Fel a) { return Poly{{F.neg(a), F.one()}}; }

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
    Poly out;
    size_t n = std::max(a.c.size(), b.c.size());
    out.c.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        Fel x = i < a.c.size() ? a.c[i] : F.zero();
        Fel y = i < b.c.size() ? b.c[i] : F.zero();
        out.c.push_back(F.add(x, y));
    }
    return trim(std::move(out));
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
    Poly nb = b;
    for (auto& x : nb.c) x = F.neg(x);
    return poly_add(F, a, nb);
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return poly_zero();
    Poly out;
    out.c.assign(a.c.size() + b.c.size() - 1, F.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i].v) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] = F.add(out.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    return trim(std::move(out));
}

Poly poly_scale(const Field& F, const Poly& a, Fel s) {
    Poly out = a;
    for (auto& x : out.c) x = F.mul(x, s);
    return trim(std::move(out));
}

Poly poly_pow(const Field& F, const Poly& a, uint32_t e) {
    Poly r = poly_one(F), b = a;
    while (e) {
        if (e & 1) r = poly_mul(F, r, b);
        b = poly_mul(F, b, b);
        e >>= 1;
    }
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw precondition_error("polynomial division by zero");
    Poly rem = a;
    Poly quot;
    if (a.c.size() >= b.c.size()) quot.c.assign(a.c.size() - b.c.size() + 1, F.zero());
    Fel ilb = F.inv(b.lead());
    while (!rem.is_zero() && rem.c.size() >= b.c.size()) {
        Fel coef = F.mul(rem.lead(), ilb);
        size_t shift = rem.c.size() - b.c.size();
        quot.c[shift] = coef;
        for (size_t i = 0; i < b.c.size(); ++i)
            rem.c[shift + i] = F.sub(rem.c[shift + i], F.mul(coef, b.c[i]));
        rem = trim(std::move(rem));
    }
    return {trim(std::move(quot)), std::move(rem)};
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

Poly poly_monic(const Field& F, const Poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(F, a, F.inv(a.lead()));
}

Poly poly_compose(const Field& F, const Poly& b, const Poly& a) {
    Poly acc = poly_zero();
    for (size_t i = b.c.size(); i-- > 0;) {
        acc = poly_mul(F, acc, a);
        acc = poly_add(F, acc, poly_const(F, b.c[i]));
    }
    return acc;
}

Poly poly_from_roots(const Field& F, const std::vector<Fel>& roots) {
    Poly h = poly_one(F);
    for (Fel r : roots) h = poly_mul(F, h, poly_linear(F, r));
    return h;
}

Fel poly_eval(const Field& F, const Poly& f, Fel x) {
    Fel acc = F.zero();
    for (size_t i = f.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f.c[i]);
    return acc;
}

Poly poly_derivative(const Field& F, const Poly& f) {
    Poly out;
    for (size_t i = 1; i < f.c.size(); ++i) {
        // i * c_i with i reduced into the prime subfield
        Fel c = F.mul(F.from_int((int64_t)i), f.c[i]);
        out.c.push_back(c);
    }
    return trim(std::move(out));
}

std::vector<std::pair<Fel, uint32_t>> poly_roots(const Field& F, const Poly& f) {
    if (f.is_zero()) throw precondition_error("zero polynomial has every element as a root");
    std::vector<std::pair<Fel, uint32_t>> out;
    for (uint32_t a = 0; a < F.q(); ++a) {
        Fel x = F.el(a);
        if (poly_eval(F, f, x).v != 0) continue;
        uint32_t mult = 0;
        Poly g = f;
        Poly lin = poly_linear(F, x);
        while (true) {
            auto [q, r] = poly_divmod(F, g, lin);
            if (!r.is_zero()) break;
            ++mult;
            g = std::move(q);
        }
        out.push_back({x, mult});
    }
    return out;
}

bool is_squarefree_on(const Field& F, const Poly& f, const std::vector<Fel>& points) {
    Poly fp = poly_derivative(F, f);
    for (Fel a : points) {
        if (poly_eval(F, f, a).v == 0 && poly_eval(F, fp, a).v == 0) return false;
    }
    return true;
}

}  // namespace hf
