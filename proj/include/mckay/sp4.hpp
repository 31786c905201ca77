#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "mckay/engine.hpp"

namespace mckay::sp4 {

// 2x2 integer matrix, row-major; entries stay word-sized throughout.
using Mat2 = std::array<std::array<long, 2>, 2>;

Mat2 mat2_identity();
Mat2 mat2_mul(const Mat2& a, const Mat2& b);

// Reflection and graph-map matrices generating the Weyl group of B2
// and its order-2 outer action. Any convention passing the checks in
// weyl_b2 and graph_map is acceptable; answers downstream must not
// depend on the choice.
struct Convention {
    Mat2 s1, s2, phi;
};
Convention default_convention();    // s1 = swap, s2 = diag(1,-1), phi = [[1,1],[1,-1]]
Convention alternate_convention();  // s1 = -swap, s2 = diag(1,-1), phi = [[1,-1],[-1,-1]]

// Multiplicative order of q mod ell, guaranteed in {1,2,4}; ell must be
// an odd prime dividing (q^4-1)(q^2-1).
long order_of_q_mod_ell(long q, long ell);

// The 8 signed-permutation matrices, closure of {s1, s2} in BFS order;
// verifies the dihedral presentation s1^2 = s2^2 = (s1 s2)^4 = 1.
std::vector<Mat2> weyl_b2(const Convention& conv = default_convention());

// w_e: identity, (s1 s2)^2 = -I, or s1 s2 for e = 1, 2, 4.
Mat2 coxeter_data(long e, const Convention& conv = default_convention());

// Centralizer of w_e in the Weyl group: all 8 elements for e in {1,2},
// the cyclic group generated by s1 s2 for e = 4.
std::vector<Mat2> relative_weyl(long e, const Convention& conv = default_convention());

// phi with phi^2 = 2I whose conjugation swaps the two reflection
// classes; also checks (s1 phi)^2 = 2 w_4.
struct GraphMap {
    Mat2 mat;
};
GraphMap graph_map(const Convention& conv = default_convention());

// Cokernel of q w_e - 1 on the cocharacter lattice, as Z_d1 x Z_d2 with
// the relative Weyl group and the graph-map base (phi for e in {1,2},
// s1 phi for e = 4) transported through the Smith normal form
// isomorphism. Entry [i][j] of an action matrix is taken mod d_i.
struct TorusModel {
    long q = 0, e = 0;
    long d1 = 0, d2 = 0;                      // invariant factors, d1 | d2
    std::vector<Mat2> weyl_action;            // aligned with relative_weyl(e)
    Mat2 sigma_base;                          // transported phi or s1 phi
};
TorusModel torus_structure(long q, long e, const Convention& conv = default_convention());

// Orbits of the relative Weyl group on the character group of the
// torus, each with its stabilizer order. Members are (u1, u2) with
// u_i < d_i; orbits are sorted by minimal member.
struct ThetaOrbit {
    std::vector<std::array<long, 2>> members;  // lexicographically sorted
    long stabilizer_order = 0;
};
struct ThetaCensus {
    long q = 0, e = 0;
    std::vector<ThetaOrbit> orbits;
    long trivial_orbits = 0;    // always 1
    long regular_orbits = 0;    // stabilizer 1
    long stab_two_orbits = 0;   // stabilizer 2
};
ThetaCensus theta_census(long q, long e, const Convention& conv = default_convention());

// Clifford count over the abelian normal torus: |Irr(W_e)| for the
// trivial orbit, 2 per stabilizer-2 orbit, 1 per regular orbit.
long predicted_irr_count(long q, long e, const Convention& conv = default_convention());

// N = T x| W_e as an explicit group of pairs (t, w), with sigma the
// a-th power of the transported graph map acting on both factors.
// sigma is sampled for the automorphism property at construction.
struct LocalGroup {
    TorusModel torus;
    std::vector<Mat2> weyl;
    engine::ConcreteGroup group;
    std::function<engine::Element(engine::Element)> sigma;
    long a = 0;
};
LocalGroup build_local_group(long q, long e, long a,
                             const Convention& conv = default_convention());

// sigma-fixed irreducible count, computed two ways: fixed classes of
// the explicit group (Brauer) and the census-side case analysis
// (stable regular orbit: 1, stable stabilizer-2 orbit: 2, trivial
// orbit: sigma-fixed members of Irr(W_e)). fixed_irr_detail returns
// both so callers can compare; fixed_irr_count throws std::logic_error
// if they disagree.
struct FixedCount {
    long brauer = 0;
    long census = 0;
};
FixedCount fixed_irr_detail(long q, long e, long a,
                            const Convention& conv = default_convention());
long fixed_irr_count(long q, long e, long a, const Convention& conv = default_convention());

// sigma-fixed members of Irr(W_e): 3 (a odd) or 5 (a even) for e in
// {1,2}, always 4 for e = 4; computed by Brauer on the 8- or 4-element
// group, not hardcoded.
long weyl_fixed_irr(long e, long a, const Convention& conv = default_convention());

// Moved unipotent characters of degree prime to ell, per e: the unique
// equal-degree pair moves exactly when e in {1,2} and a is odd.
// Consistency with weyl_fixed_irr is checked.
struct UnipotentSummary {
    long moved_e1 = 0, moved_e2 = 0, moved_e4 = 0;
};
UnipotentSummary unipotent_side_summary(long a);

}  // namespace mckay::sp4
