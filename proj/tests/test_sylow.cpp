#include "mckay/sylow.hpp"

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "mckay/intmatrix.hpp"
#include "mckay/selfdual.hpp"

using namespace mckay::sylow;
using mckay::f2::BitMatrix;

namespace {

BitMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    BitMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j] != 0);
    return m;
}

BitMatrix e_matrix(std::size_t n, std::size_t i, std::size_t j) {
    BitMatrix m(n, n);
    m.set(i, j, true);
    return m;
}

UElement random_u_element(std::size_t n, std::mt19937& rng) {
    BitMatrix x = BitMatrix::identity(n);
    BitMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) x.set(i, j, rng() & 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            bool b = rng() & 1;
            s.set(i, j, b);
            s.set(j, i, b);
        }
    return UElement(x, s);
}

}  // namespace

TEST_CASE("UElement validation") {
    CHECK_NOTHROW(UElement(BitMatrix::identity(3), BitMatrix(3, 3)));
    CHECK_THROWS_AS(UElement(BitMatrix(2, 2), BitMatrix(2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(UElement(from_rows({{1, 0}, {1, 1}}), BitMatrix(2, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(UElement(BitMatrix::identity(2), from_rows({{0, 1}, {0, 0}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(UElement(BitMatrix::identity(2), BitMatrix(3, 3)), std::invalid_argument);
}

TEST_CASE("symplectic form") {
    for (long n = 1; n <= 6; ++n) {
        BitMatrix g = symplectic_gram(n);
        CHECK(g == g.transposed());
        CHECK(g * g == BitMatrix::identity(2 * static_cast<std::size_t>(n)));
    }
    CHECK(symplectic_gram(2) ==
          from_rows({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}));
}

TEST_CASE("embed fixed examples") {
    CHECK(embed(UElement(BitMatrix::identity(2), BitMatrix(2, 2))) == BitMatrix::identity(4));

    // (I, E11): top right E11*J = [[0,1],[0,0]]
    BitMatrix s11(2, 2);
    s11.set(0, 0, true);
    CHECK(embed(UElement(BitMatrix::identity(2), s11)) ==
          from_rows({{1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));

    // (I+E12, 0): bottom right J*(I+E21)*J = I+E12
    BitMatrix x12 = BitMatrix::identity(2);
    x12.set(0, 1, true);
    CHECK(embed(UElement(x12, BitMatrix(2, 2))) ==
          from_rows({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}}));
}

TEST_CASE("u_multiply fixed examples") {
    std::size_t n = 2;
    BitMatrix i2 = BitMatrix::identity(n);
    BitMatrix s22 = e_matrix(n, 1, 1);
    BitMatrix x12 = i2;
    x12.set(0, 1, true);

    // symmetric parts add when x = I
    BitMatrix s11 = e_matrix(n, 0, 0);
    UElement p = u_multiply(UElement(i2, s11), UElement(i2, s22));
    CHECK(p.x == i2);
    CHECK(p.s == s11 + s22);

    // (I, E22) * (I+E12, 0) = (I+E12, all-ones)
    UElement q = u_multiply(UElement(i2, s22), UElement(x12, BitMatrix(n, n)));
    CHECK(q.x == x12);
    CHECK(q.s == from_rows({{1, 1}, {1, 1}}));

    // right identity
    std::mt19937 rng(7);
    UElement a = random_u_element(4, rng);
    CHECK(u_multiply(a, UElement(BitMatrix::identity(4), BitMatrix(4, 4))) == a);
}

TEST_CASE("embed is a homomorphism onto form-preserving matrices") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = 2 + rng() % 7;  // up to 8
        UElement a = random_u_element(n, rng);
        UElement b = random_u_element(n, rng);
        UElement ab = u_multiply(a, b);  // embed agreement checked inside
        CHECK(embed(ab) == embed(a) * embed(b));
        CHECK(preserves_form(embed(a)));
        UElement ai = u_inverse(a);
        CHECK(u_multiply(a, ai) == UElement(BitMatrix::identity(n), BitMatrix(n, n)));
    }
}

TEST_CASE("|U| is the 2-part of the group order") {
    using mckay::f2::BigInt;
    for (long n = 2; n <= 8; ++n) {
        BigInt odd = 1;
        for (long i = 1; i <= n; ++i) odd *= (BigInt(1) << (2 * i)) - 1;  // 4^i - 1
        CHECK(odd % 2 == 1);
        // so |Sp_{2n}(2)| = 2^{n^2} * odd has 2-part exactly 2^{n^2} = |U|
        BigInt u_order = BigInt(1) << (n * n);
        CHECK(u_order == (BigInt(1) << (n * (n + 1) / 2)) * (BigInt(1) << (n * (n - 1) / 2)));
    }
}

TEST_CASE("theta span fixed dimensions") {
    ThetaSpan s2 = theta_image_span(2);
    CHECK(s2.sym_dim == 3);
    CHECK(s2.dim == 1);
    CHECK(s2.codim == 2);
    CHECK(s2.basis.size() == 1);
    CHECK(s2.basis[0] == from_rows({{1, 1}, {1, 0}}));  // E11+E12+E21

    ThetaSpan s3 = theta_image_span(3);
    CHECK(s3.dim == 4);
    CHECK(s3.codim == 2);

    for (long n = 2; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(theta_image_span(n).codim == 2);
    }
    CHECK_THROWS_AS(theta_image_span(1), std::invalid_argument);
}

TEST_CASE("generator span equals the full sum over V") {
    for (long n = 2; n <= 4; ++n) {
        ThetaSpan gen = theta_image_span(n);
        ThetaSpan full = theta_image_span_full(n);
        CHECK(gen.dim == full.dim);
        CHECK(gen.codim == full.codim);
    }
}

TEST_CASE("cocycle identity") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + rng() % 5;
        UElement a = random_u_element(n, rng);
        UElement b = random_u_element(n, rng);
        const BitMatrix& x = a.x;
        const BitMatrix& y = b.x;
        const BitMatrix& s = a.s;
        CHECK(theta(x * y, s) == theta(x, v_act(y, s)) + theta(y, s));
    }
}

TEST_CASE("complement and trivial quotient action") {
    for (long n : {2L, 3L, 4L, 5L, 8L, 12L}) {
        CAPTURE(n);
        std::size_t un = static_cast<std::size_t>(n);
        ThetaSpan span = theta_image_span(n);
        BitMatrix c1 = e_matrix(un, un - 2, un - 2);  // E_{n-1,n-1}
        BitMatrix c2 = e_matrix(un, un - 1, un - 1);  // E_{n,n}
        // the two diagonal units complete the span to all of Sym_n
        std::vector<BitMatrix> vecs;
        for (const BitMatrix& b : span.basis) vecs.push_back(b);
        vecs.push_back(c1);
        vecs.push_back(c2);
        std::vector<BitMatrix> flats;
        for (const BitMatrix& v : vecs) {
            BitMatrix f(1, un * (un + 1) / 2);
            std::size_t pos = 0;
            for (std::size_t i = 0; i < un; ++i)
                for (std::size_t j = i; j < un; ++j) f.set(0, pos++, v.get(i, j));
            flats.push_back(f);
        }
        CHECK(mckay::f2::span_dimension(flats) == un * (un + 1) / 2);
        // V acts trivially on the quotient: theta of the complement lands in S'
        for (const BitMatrix& x : transvection_generators(n)) {
            CHECK(in_theta_span(span, theta(x, c1)));
            CHECK(in_theta_span(span, theta(x, c2)));
        }
    }
}

TEST_CASE("abelianization orders") {
    CHECK(abelianization_order(2) == 8);
    CHECK(abelianization_order(3) == 16);
    CHECK(abelianization_order(4) == 32);
    for (long n = 2; n <= 12; ++n) CHECK(abelianization_order(n) == (1ULL << (n + 1)));
}

TEST_CASE("brute commutator closures") {
    CHECK(brute_commutator_order(2) == 2);
    CHECK(brute_commutator_order(3) == 32);
    CHECK(brute_commutator_order_serial(2) == 2);
    CHECK(brute_commutator_order_serial(3) == 32);
    // |U| / |[U,U]| = |U^ab|
    CHECK((1ULL << 4) / brute_commutator_order(2) == abelianization_order(2));
    CHECK((1ULL << 9) / brute_commutator_order(3) == abelianization_order(3));
    CHECK_THROWS_AS(brute_commutator_order(1), std::invalid_argument);
    CHECK_THROWS_AS(brute_commutator_order(5), std::invalid_argument);
}

TEST_CASE("V abelianization") {
    CHECK(v_abelianization_order(2) == 2);
    CHECK(v_abelianization_order(3) == 4);
    CHECK(v_abelianization_order(4) == 8);
    CHECK(v_abelianization_order(5) == 16);
    CHECK(v_abelianization_order(9) == 256);  // formula range
    CHECK_THROWS_AS(v_abelianization_order(1), std::invalid_argument);
}

TEST_CASE("linear character count matches the odd-character census") {
    for (long n = 2; n <= 12; ++n)
        CHECK(abelianization_order(n) == mckay::selfdual::odd_irr_count(n));
}
