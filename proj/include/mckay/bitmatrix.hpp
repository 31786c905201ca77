#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace mckay::f2 {

// Dense matrix over F2. Rows are packed into 64-bit words; row operations
// are word-wise XOR. Padding bits past `cols` are kept zero so that
// equality and hashing can work on raw words.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    // J_n: ones on the antidiagonal, (i, n-1-i).
    static BitMatrix antidiagonal(std::size_t n);
    // Unpacks row-major bits of `bits` into an n x n matrix, n <= 8.
    static BitMatrix from_packed(std::uint64_t bits, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, bool v);

    std::uint64_t word(std::size_t i, std::size_t w) const { return data_[i * wpr_ + w]; }
    std::uint64_t& word(std::size_t i, std::size_t w) { return data_[i * wpr_ + w]; }

    // Row-major bit packing for n <= 8; inverse of from_packed.
    std::uint64_t to_packed() const;

    bool operator==(const BitMatrix& o) const = default;

    BitMatrix operator+(const BitMatrix& o) const;  // entrywise XOR
    BitMatrix operator*(const BitMatrix& o) const;
    BitMatrix transposed() const;
    // Gauss-Jordan inverse; throws std::domain_error if singular.
    BitMatrix inverse() const;
    std::size_t rank() const;

    bool is_zero() const;
    bool is_symmetric() const;
    bool is_upper_unitriangular() const;

    std::string to_string() const;  // rows of 0/1 characters, for diagnostics

    std::size_t hash() const;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

struct BitMatrixHash {
    std::size_t operator()(const BitMatrix& m) const { return m.hash(); }
};

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
BitMatrix mat_inverse(const BitMatrix& m);

// Stacks 1-row matrices (all the same width) into one matrix.
BitMatrix stack_rows(const std::vector<BitMatrix>& vectors);
// Dimension of the span of a set of bit vectors (each a 1 x c matrix).
// The empty set has span dimension 0.
std::size_t span_dimension(const std::vector<BitMatrix>& vectors);

}  // namespace mckay::f2
