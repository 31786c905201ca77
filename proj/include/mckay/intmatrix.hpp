#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace mckay::f2 {

using BigInt = boost::multiprecision::cpp_int;

// Dense matrix over Z with arbitrary-precision entries; used for Smith
// normal form computations where intermediate entries can grow.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const BigInt& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const = default;

    IntMatrix operator*(const IntMatrix& o) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> data_;
};

struct SmithResult {
    // Invariant factors d1 | d2 | ... , nonnegative, zeros (if any) last.
    std::vector<BigInt> invariant_factors;
    // Unimodular transforms with U * m * V = diag(invariant_factors).
    IntMatrix u, v;
};

// Invariant factors only.
std::vector<BigInt> smith_normal_form(const IntMatrix& m);
// Full decomposition with transforms.
SmithResult smith_with_transforms(const IntMatrix& m);

}  // namespace mckay::f2
