// Dense univariate polynomials over a Field.
//
// Coefficients are stored constant term first with no trailing zeros, so the
// zero polynomial is the empty vector and deg(f) = coeffs.size() - 1.
#pragma once

#include <optional>
#include <utility>

#include "gf.hpp"

namespace hf {

struct Poly {
    std::vector<Fel> c;

    bool is_zero() const { return c.empty(); }
    // Degree of the zero polynomial is -1 by convention here.
    int deg() const { return (int)c.size() - 1; }
    Fel lead() const { return c.back(); }
};

Poly poly_zero();
Poly poly_const(const Field& F, Fel a);
Poly poly_one(const Field& F);
Poly poly_x(const Field& F);
// (x - a)
Poly poly_linear(const Field& F, Fel a);

Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
Poly poly_scale(const Field& F, const Poly& a, Fel s);
Poly poly_pow(const Field& F, const Poly& a, uint32_t e);
// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b);
// Monic gcd; gcd(0,0) = 0.
Poly poly_gcd(const Field& F, Poly a, Poly b);
Poly poly_monic(const Field& F, const Poly& a);
// b(a(x))
Poly poly_compose(const Field& F, const Poly& b, const Poly& a);

// prod (x - r_i); repeated roots allowed and yield higher multiplicity.
Poly poly_from_roots(const Field& F, const std::vector<Fel>& roots);
Fel poly_eval(const Field& F, const Poly& f, Fel x);
Poly poly_derivative(const Field& F, const Poly& f);
// All roots in the field with multiplicities, found by exhaustive scan and
// repeated division.  Pairs are ordered by root index.
std::vector<std::pair<Fel, uint32_t>> poly_roots(const Field& F, const Poly& f);
// True iff f has no repeated root among the given points: f(a) = 0 implies
// f'(a) != 0.  Points off the zero set are fine.
bool is_squarefree_on(const Field& F, const Poly& f, const std::vector<Fel>& points);

}  // namespace hf
