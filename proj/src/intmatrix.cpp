#include "mckay/intmatrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace mckay::f2 {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix mul: shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) os << at(i, j) << (j + 1 < cols_ ? " " : "");
        os << '\n';
    }
    return os.str();
}

namespace {

// Row/column reduction state; every operation keeps u * orig * v == a.
struct SmithWork {
    IntMatrix a, u, v;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    // row i -= q * row j
    void sub_row(std::size_t i, std::size_t j, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) -= q * a.at(j, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) -= q * u.at(j, c);
    }
    // col i -= q * col j
    void sub_col(std::size_t i, std::size_t j, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < a.rows(); ++r) a.at(r, i) -= q * a.at(r, j);
        for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, i) -= q * v.at(r, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    }
};

}  // namespace

SmithResult smith_with_transforms(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithWork w{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
    const std::size_t n = rows < cols ? rows : cols;

    for (std::size_t t = 0; t < n; ++t) {
        bool block_zero = false;
        // Smallest-absolute-value pivot; repeat until the pivot divides its
        // row and column exactly. Terminates because |pivot| strictly drops.
        for (;;) {
            std::size_t pi = rows, pj = cols;
            BigInt best = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    const BigInt& e = w.a.at(i, j);
                    if (e == 0) continue;
                    BigInt ae = abs(e);
                    if (pi == rows || ae < best) { best = ae; pi = i; pj = j; }
                }
            if (pi == rows) { block_zero = true; break; }
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                w.sub_row(i, t, w.a.at(i, t) / w.a.at(t, t));
                if (w.a.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                w.sub_col(j, t, w.a.at(t, j) / w.a.at(t, t));
                if (w.a.at(t, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (block_zero) break;
    }

    // Divisibility chain d_i | d_j for i < j, via the standard gcd fold on
    // the 2x2 diagonal block: every entry produced is a Z-combination of
    // the two diagonal entries, hence divisible by their gcd.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            BigInt di = w.a.at(i, i), dj = w.a.at(j, j);
            if (dj == 0 && di == 0) continue;
            if (di != 0 && dj % di == 0) continue;
            w.sub_col(i, j, BigInt(-1));  // col i += col j; puts dj at (j, i)
            for (;;) {
                BigInt aii = w.a.at(i, i), aji = w.a.at(j, i);
                if (aji == 0) break;
                if (aii == 0 || abs(aji) < abs(aii)) { w.swap_rows(i, j); continue; }
                w.sub_row(j, i, aji / aii);
            }
            BigInt aii = w.a.at(i, i), aij = w.a.at(i, j);
            if (aii == 0 || aij % aii != 0)
                throw std::logic_error("smith: gcd fold failed");
            w.sub_col(j, i, aij / aii);
        }
    }

    for (std::size_t i = 0; i < n; ++i)
        if (w.a.at(i, i) < 0) w.negate_row(i);

    SmithResult res;
    res.invariant_factors.reserve(n);
    bool seen_zero = false;
    for (std::size_t i = 0; i < n; ++i) {
        const BigInt& d = w.a.at(i, i);
        if (d == 0) seen_zero = true;
        else if (seen_zero)
            throw std::logic_error("smith: zero factor before a nonzero one");
        res.invariant_factors.push_back(d);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const BigInt& di = res.invariant_factors[i];
        if (di != 0 && res.invariant_factors[i + 1] % di != 0)
            throw std::logic_error("smith: divisibility chain violated");
    }

    res.u = std::move(w.u);
    res.v = std::move(w.v);
    return res;
}

std::vector<BigInt> smith_normal_form(const IntMatrix& m) {
    return smith_with_transforms(m).invariant_factors;
}

}  // namespace mckay::f2
