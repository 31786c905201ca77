#include "doctest.h"
#include "mckay/bitmatrix.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

using mckay::f2::BitMatrix;
using mckay::f2::mat_inverse;
using mckay::f2::mat_mul;
using mckay::f2::span_dimension;

namespace {

// Oracle: naive cubic multiply, bit by bit.
BitMatrix reference_mul(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            bool acc = false;
            for (std::size_t k = 0; k < a.cols(); ++k) acc ^= a.get(i, k) && b.get(k, j);
            r.set(i, j, acc);
        }
    return r;
}

BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    std::size_t r = rows.size(), c = rows.begin()->size();
    BitMatrix m(r, c);
    std::size_t i = 0;
    for (auto& row : rows) {
        std::size_t j = 0;
        for (int v : row) m.set(i, j++, v != 0);
        ++i;
    }
    return m;
}

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    BitMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.set(i, j, (rng() & 1) != 0);
    return m;
}

BitMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        BitMatrix m = random_matrix(rng, n, n);
        if (m.rank() == n) return m;
    }
}

}  // namespace

TEST_CASE("mat_mul fixed examples") {
    // [[1,1],[0,1]]^2 = I (upper unitriangular square), and J2 * J2 = I.
    BitMatrix u = from_rows({{1, 1}, {0, 1}});
    CHECK(mat_mul(u, u) == BitMatrix::identity(2));
    BitMatrix j2 = BitMatrix::antidiagonal(2);
    CHECK(mat_mul(j2, j2) == BitMatrix::identity(2));
}

TEST_CASE("mat_mul matches the naive reference") {
    std::mt19937_64 rng(12345);
    for (int t = 0; t < 200; ++t) {
        std::size_t a = 1 + rng() % 70, b = 1 + rng() % 70, c = 1 + rng() % 70;
        BitMatrix x = random_matrix(rng, a, b), y = random_matrix(rng, b, c);
        CHECK(mat_mul(x, y) == reference_mul(x, y));
    }
}

TEST_CASE("mat_mul is associative on random triples") {
    std::mt19937_64 rng(999);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 1 + rng() % 64;
        BitMatrix a = random_matrix(rng, n, n), b = random_matrix(rng, n, n),
                  c = random_matrix(rng, n, n);
        CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
    }
}

TEST_CASE("mat_inverse fixed examples") {
    BitMatrix m = from_rows({{1, 1}, {1, 0}});
    CHECK(mat_inverse(m) == from_rows({{0, 1}, {1, 1}}));
    // I + E12 is an involution.
    BitMatrix t = from_rows({{1, 1}, {0, 1}});
    CHECK(mat_inverse(t) == t);
}

TEST_CASE("mat_inverse round-trips on random invertibles") {
    std::mt19937_64 rng(271828);
    int count = 0;
    while (count < 1000) {
        std::size_t n = 1 + rng() % 32;
        BitMatrix m = random_invertible(rng, n);
        BitMatrix inv = mat_inverse(m);
        CHECK(mat_mul(m, inv) == BitMatrix::identity(n));
        CHECK(mat_mul(inv, m) == BitMatrix::identity(n));
        ++count;
    }
}

TEST_CASE("mat_inverse rejects singular input") {
    BitMatrix z(3, 3);
    CHECK_THROWS_AS((void)mat_inverse(z), std::domain_error);
    BitMatrix m = from_rows({{1, 1}, {1, 1}});
    CHECK_THROWS_AS((void)mat_inverse(m), std::domain_error);
}

TEST_CASE("span_dimension fixed examples") {
    CHECK(span_dimension({}) == 0);
    // (1,1,0), (0,1,1), (1,0,1) span a 2-dimensional space: they sum to 0.
    std::vector<BitMatrix> vecs = {from_rows({{1, 1, 0}}), from_rows({{0, 1, 1}}),
                                   from_rows({{1, 0, 1}})};
    CHECK(span_dimension(vecs) == 2);
}

TEST_CASE("span_dimension is invariant under permutation and redundant vectors") {
    std::mt19937_64 rng(5150);
    for (int t = 0; t < 100; ++t) {
        std::size_t c = 4 + rng() % 24, k = 1 + rng() % 10;
        std::vector<BitMatrix> vecs;
        for (std::size_t i = 0; i < k; ++i) vecs.push_back(random_matrix(rng, 1, c));
        std::size_t d = span_dimension(vecs);

        std::vector<BitMatrix> shuffled = vecs;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(span_dimension(shuffled) == d);

        // Append a random combination of the vectors; the span cannot grow.
        BitMatrix combo(1, c);
        for (auto& v : vecs)
            if (rng() & 1) combo = combo + v;
        vecs.push_back(combo);
        CHECK(span_dimension(vecs) == d);
    }
}

TEST_CASE("transpose, packing and predicates") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 1 + rng() % 8;
        BitMatrix m = random_matrix(rng, n, n);
        CHECK(m.transposed().transposed() == m);
        CHECK(BitMatrix::from_packed(m.to_packed(), n) == m);
    }
    CHECK(BitMatrix::identity(5).is_upper_unitriangular());
    CHECK(from_rows({{1, 1}, {0, 1}}).is_upper_unitriangular());
    CHECK_FALSE(from_rows({{1, 0}, {1, 1}}).is_upper_unitriangular());
    CHECK(from_rows({{0, 1}, {1, 1}}).is_symmetric());
    CHECK_FALSE(from_rows({{0, 1}, {0, 0}}).is_symmetric());
}
