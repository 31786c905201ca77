#pragma once

#include <cstdint>
#include <vector>

#include "mckay/bitmatrix.hpp"

namespace mckay::sylow {

using f2::BitMatrix;

// Element (x, s) of the Sylow 2-subgroup U of Sp_{2n}(2):
// x upper unitriangular, s symmetric, both n x n over F2.
struct UElement {
    BitMatrix x, s;
    UElement(BitMatrix x_, BitMatrix s_);
    long n() const { return static_cast<long>(x.rows()); }
    bool operator==(const UElement&) const = default;
};

BitMatrix antidiagonal_j(long n);
BitMatrix symplectic_gram(long n);  // [[0,J],[J,0]], its own transpose and inverse
bool preserves_form(const BitMatrix& u);

// Block matrix [[x, x s J],[0, J tx^{-1} J]]; passes preserves_form.
BitMatrix embed(const UElement& e);

// Product in U, computed by the semidirect formula
// (x_a x_b, s_b + x_b^{-1} s_a t(x_b^{-1})) and checked against
// embed(a) * embed(b) on every call.
UElement u_multiply(const UElement& a, const UElement& b);
UElement u_inverse(const UElement& a);

BitMatrix v_act(const BitMatrix& x, const BitMatrix& s);  // x s tx
BitMatrix theta(const BitMatrix& x, const BitMatrix& s);  // x s tx + s

// Strictly upper transvections I + E_{ij}, i < j, row-major order.
std::vector<BitMatrix> transvection_generators(long n);

struct ThetaSpan {
    long sym_dim = 0;  // n(n+1)/2
    long dim = 0;
    long codim = 0;
    std::vector<BitMatrix> basis;  // symmetric matrices, echelon order
};

// Span of theta_x(s) over transvection generators x and the standard
// basis of Sym_n; the cocycle identity theta_{xy}(s) = theta_x(y.s)
// + theta_y(s) makes this the full sum over x in V. Requires n >= 2.
ThetaSpan theta_image_span(long n);

// Same span with x ranging over all of V; n <= 4.
ThetaSpan theta_image_span_full(long n);

bool in_theta_span(const ThetaSpan& span, const BitMatrix& s);

// 2^{codim} * 2^{n-1} with codim taken from theta_image_span(n).
unsigned long long abelianization_order(long n);

// Order of the closure of all commutators a^{-1}b^{-1}ab over U,
// scanning every pair on a bit-packed model. Requires 2 <= n <= 4.
unsigned long long brute_commutator_order(long n);         // threaded scan
unsigned long long brute_commutator_order_serial(long n);  // reference

// 2^{n-1}; for n <= 5 the commutator closure of V is computed and the
// quotient order checked against the formula. Requires n >= 2.
unsigned long long v_abelianization_order(long n);

}  // namespace mckay::sylow
