#include "mckay/bitmatrix.hpp"

#include <bit>
#include <stdexcept>

namespace mckay::f2 {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_(cols == 0 ? 0 : (cols + 63) / 64),
      data_(rows * ((cols + 63) / 64), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::antidiagonal(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, n - 1 - i, true);
    return m;
}

BitMatrix BitMatrix::from_packed(std::uint64_t bits, std::size_t n) {
    if (n > 8) throw std::invalid_argument("from_packed: n must be <= 8");
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((bits >> (i * n + j)) & 1u) m.set(i, j, true);
    return m;
}

std::uint64_t BitMatrix::to_packed() const {
    if (rows_ != cols_ || rows_ > 8) throw std::invalid_argument("to_packed: need square n <= 8");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, j)) bits |= std::uint64_t{1} << (i * rows_ + j);
    return bits;
}

bool BitMatrix::get(std::size_t i, std::size_t j) const {
    return (data_[i * wpr_ + j / 64] >> (j % 64)) & 1u;
}

void BitMatrix::set(std::size_t i, std::size_t j, bool v) {
    std::uint64_t& w = data_[i * wpr_ + j / 64];
    std::uint64_t mask = std::uint64_t{1} << (j % 64);
    if (v) w |= mask; else w &= ~mask;
}

BitMatrix BitMatrix::operator+(const BitMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("add: shape mismatch");
    BitMatrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] ^= o.data_[k];
    return r;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("mul: shape mismatch");
    BitMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t w = 0; w < wpr_; ++w) {
            std::uint64_t bits = data_[i * wpr_ + w];
            while (bits) {
                std::size_t k = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                for (std::size_t ow = 0; ow < o.wpr_; ++ow)
                    r.data_[i * o.wpr_ + ow] ^= o.data_[k * o.wpr_ + ow];
            }
        }
    }
    return r;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t w = 0; w < wpr_; ++w) {
            std::uint64_t bits = data_[i * wpr_ + w];
            while (bits) {
                std::size_t j = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                r.set(j, i, true);
            }
        }
    return r;
}

BitMatrix BitMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: not square");
    BitMatrix a = *this;
    BitMatrix inv = identity(rows_);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = rows_;
        for (std::size_t i = col; i < rows_; ++i)
            if (a.get(i, col)) { pivot = i; break; }
        if (pivot == rows_) throw std::domain_error("inverse: singular matrix");
        if (pivot != col) {
            for (std::size_t w = 0; w < wpr_; ++w) {
                std::swap(a.word(col, w), a.word(pivot, w));
                std::swap(inv.word(col, w), inv.word(pivot, w));
            }
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i != col && a.get(i, col)) {
                for (std::size_t w = 0; w < wpr_; ++w) {
                    a.word(i, w) ^= a.word(col, w);
                    inv.word(i, w) ^= inv.word(col, w);
                }
            }
        }
    }
    return inv;
}

std::size_t BitMatrix::rank() const {
    BitMatrix a = *this;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t pivot = rows_;
        for (std::size_t i = r; i < rows_; ++i)
            if (a.get(i, col)) { pivot = i; break; }
        if (pivot == rows_) continue;
        if (pivot != r)
            for (std::size_t w = 0; w < wpr_; ++w) std::swap(a.word(r, w), a.word(pivot, w));
        for (std::size_t i = r + 1; i < rows_; ++i)
            if (a.get(i, col))
                for (std::size_t w = 0; w < wpr_; ++w) a.word(i, w) ^= a.word(r, w);
        ++r;
    }
    return r;
}

bool BitMatrix::is_zero() const {
    for (std::uint64_t w : data_) if (w) return false;
    return true;
}

bool BitMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (get(i, j) != get(j, i)) return false;
    return true;
}

bool BitMatrix::is_upper_unitriangular() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (!get(i, i)) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (get(i, j)) return false;
    }
    return true;
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) s += get(i, j) ? '1' : '0';
        s += '\n';
    }
    return s;
}

std::size_t BitMatrix::hash() const {
    // FNV-1a over the words plus the shape.
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(rows_);
    mix(cols_);
    for (std::uint64_t w : data_) mix(w);
    return static_cast<std::size_t>(h);
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) { return a * b; }
BitMatrix mat_inverse(const BitMatrix& m) { return m.inverse(); }

BitMatrix stack_rows(const std::vector<BitMatrix>& vectors) {
    if (vectors.empty()) return BitMatrix(0, 0);
    std::size_t cols = vectors[0].cols();
    BitMatrix m(vectors.size(), cols);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].rows() != 1 || vectors[i].cols() != cols)
            throw std::invalid_argument("stack_rows: need 1-row matrices of equal width");
        for (std::size_t w = 0; w < m.words_per_row(); ++w) m.word(i, w) = vectors[i].word(0, w);
    }
    return m;
}

std::size_t span_dimension(const std::vector<BitMatrix>& vectors) {
    if (vectors.empty()) return 0;
    return stack_rows(vectors).rank();
}

}  // namespace mckay::f2
