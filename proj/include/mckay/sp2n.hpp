#pragma once

#include <cstddef>
#include <vector>

#include "mckay/bitmatrix.hpp"
#include "mckay/engine.hpp"

namespace mckay::engine {

// Symplectic transvections x -> x + <x,v> v for v over the standard
// basis vectors and adjacent sums e_i + e_{i+1}. Each generator
// preserves the form [[0,J],[J,0]]; the set is validated by the order
// check 2^{n^2} prod (4^i - 1) downstream. Requires n >= 2.
std::vector<f2::BitMatrix> sp2n_generators(long n);

// BFS closure of sp2n_generators(n) on packed 2n x 2n matrices.
// Requires 2 <= n <= 4 (packing limit dim <= 8).
ConcreteGroup sp2n_group(long n, std::size_t element_cap, int jobs = 1);

// Packed embeddings of all 2^{n^2} elements of the Sylow 2-subgroup U,
// x-major then s-major over the free bits. Requires 2 <= n <= 4.
std::vector<Element> sylow_u_packed_elements(long n);

}  // namespace mckay::engine
