#include "mckay/dixon.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace mckay::engine {

namespace {

using i64 = std::int64_t;

i64 mod_pow(i64 b, i64 e, i64 p) {
    i64 r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

i64 mod_inv(i64 a, i64 p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::logic_error("mod_inv: zero");
    return mod_pow(a, p - 2, p);
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

i64 find_modulus(i64 order, i64 exponent) {
    for (i64 p = exponent + 1;; p += exponent) {
        if (p > 1000000000) throw std::runtime_error("dixon: modulus search failure");
        if (p > order && is_prime(p)) return p;
    }
}

using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;  // row-major

// Reduced row echelon form in place; returns pivot columns.
std::vector<long> rref(Mat& m, i64 p) {
    std::vector<long> pivots;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] % p == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        i64 inv = mod_inv(m[r][c], p);
        for (std::size_t j = 0; j < cols; ++j) m[r][j] = m[r][j] * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            i64 f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
        }
        pivots.push_back(static_cast<long>(c));
        ++r;
    }
    m.resize(r);
    return pivots;
}

// Kernel basis of the square matrix m, canonically ordered.
std::vector<Vec> kernel_basis(Mat m, i64 p) {
    std::size_t n = m.size();
    std::vector<long> pivots = rref(m, p);
    std::vector<char> is_pivot(n, 0);
    for (long c : pivots) is_pivot[static_cast<std::size_t>(c)] = 1;
    std::vector<Vec> out;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(n, 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            std::size_t pc = static_cast<std::size_t>(pivots[r]);
            v[pc] = (p - m[r][free_col] % p) % p;
        }
        out.push_back(std::move(v));
    }
    return out;
}

i64 determinant(Mat m, i64 p) {
    std::size_t n = m.size();
    i64 det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m[sel][c] % p == 0) ++sel;
        if (sel == n) return 0;
        if (sel != c) {
            std::swap(m[sel], m[c]);
            det = p - det;
        }
        det = det * m[c][c] % p;
        i64 inv = mod_inv(m[c][c], p);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            i64 f = m[i][c] * inv % p;
            for (std::size_t j = c; j < n; ++j)
                m[i][j] = ((m[i][j] - f * m[c][j]) % p + p) % p;
        }
    }
    return det % p;
}

// Coefficients of det(m - x I), degree n, by evaluation at x = 0..n and
// Lagrange interpolation.
Vec char_poly(const Mat& m, i64 p) {
    std::size_t n = m.size();
    if (static_cast<i64>(n) >= p) throw std::logic_error("char_poly: modulus too small");
    Vec xs(n + 1), ys(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Mat shifted = m;
        for (std::size_t i = 0; i < n; ++i)
            shifted[i][i] = ((shifted[i][i] - static_cast<i64>(k)) % p + p) % p;
        xs[k] = static_cast<i64>(k);
        ys[k] = determinant(std::move(shifted), p);
    }
    // Lagrange: sum_k y_k prod_{j != k} (x - x_j)/(x_k - x_j)
    Vec coeffs(n + 1, 0);
    for (std::size_t k = 0; k <= n; ++k) {
        Vec num{1};  // polynomial product, lowest degree first
        i64 den = 1;
        for (std::size_t j = 0; j <= n; ++j) {
            if (j == k) continue;
            Vec next(num.size() + 1, 0);
            for (std::size_t t = 0; t < num.size(); ++t) {
                next[t + 1] = (next[t + 1] + num[t]) % p;
                next[t] = (next[t] + num[t] % p * ((p - xs[j]) % p)) % p;
            }
            num = std::move(next);
            den = den * ((xs[k] - xs[j]) % p + p) % p;
        }
        i64 f = ys[k] * mod_inv(den, p) % p;
        for (std::size_t t = 0; t < num.size() && t <= n; ++t)
            coeffs[t] = (coeffs[t] + num[t] * f) % p;
    }
    return coeffs;
}

std::vector<i64> poly_roots(const Vec& coeffs, i64 p) {
    std::vector<i64> roots;
    for (i64 x = 0; x < p; ++x) {
        i64 v = 0;
        for (std::size_t t = coeffs.size(); t-- > 0;) v = (v * x + coeffs[t]) % p;
        if (v == 0) roots.push_back(x);
    }
    return roots;
}

// Subspace with a reduced-echelon basis; vectors are rows.
struct Subspace {
    Mat basis;
    std::vector<long> pivots;
};

Subspace make_subspace(Mat vectors, i64 p) {
    Subspace s;
    s.pivots = rref(vectors, p);
    s.basis = std::move(vectors);
    return s;
}

}  // namespace

std::vector<long> dixon_degrees(const ConcreteGroup& g) {
    if (g.size() > 5000) throw std::invalid_argument("dixon_degrees: group above the 5000 cap");
    const i64 order = static_cast<i64>(g.size());
    const i64 p = find_modulus(order, g.exponent());

    ClassPartition part = conjugacy_classes(g);
    const std::size_t r = part.classes.size();

    // class of the inverse of each class
    std::vector<std::size_t> inverse_class(r);
    for (std::size_t k = 0; k < r; ++k) {
        Element rep = g.element(part.representatives[k]);
        inverse_class[k] = part.class_of[g.index_of(g.invert(rep))];
    }

    // structure constants a[i][j][k]: for fixed representative z_k,
    // a_{ijk} = #{ x in C_i : x^{-1} z_k in C_j }
    std::vector<Mat> a(r, Mat(r, Vec(r, 0)));
    for (std::size_t k = 0; k < r; ++k) {
        Element zk = g.element(part.representatives[k]);
        for (std::size_t xi = 0; xi < g.size(); ++xi) {
            Element x = g.element(xi);
            std::size_t i = part.class_of[xi];
            Element y = g.multiply(g.invert(x), zk);
            std::size_t j = part.class_of[g.index_of(y)];
            ++a[i][j][k];
        }
    }

    // simultaneous eigenspaces of the class matrices A_i, (A_i w)_j =
    // sum_k a_{ijk} w_k
    std::vector<Subspace> spaces;
    {
        Mat full(r, Vec(r, 0));
        for (std::size_t i = 0; i < r; ++i) full[i][i] = 1;
        spaces.push_back(make_subspace(std::move(full), p));
    }
    for (std::size_t i = 0; i < r; ++i) {
        bool all_lines = true;
        for (const Subspace& s : spaces) all_lines = all_lines && s.basis.size() == 1;
        if (all_lines) break;
        std::vector<Subspace> next;
        for (Subspace& s : spaces) {
            std::size_t d = s.basis.size();
            if (d == 1) {
                next.push_back(std::move(s));
                continue;
            }
            // restriction c of A_i to the subspace: A_i b_t = sum c[t'][t] b_t'
            Mat c(d, Vec(d, 0));
            for (std::size_t t = 0; t < d; ++t) {
                Vec img(r, 0);
                for (std::size_t j = 0; j < r; ++j) {
                    i64 acc = 0;
                    for (std::size_t k = 0; k < r; ++k)
                        acc = (acc + a[i][j][k] % p * s.basis[t][k]) % p;
                    img[j] = acc;
                }
                // coordinates via the reduced basis pivots
                Vec coord(d, 0);
                for (std::size_t b = 0; b < d; ++b)
                    coord[b] = img[static_cast<std::size_t>(s.pivots[b])];
                // exactness: the image must lie in the subspace
                Vec back(r, 0);
                for (std::size_t b = 0; b < d; ++b)
                    for (std::size_t k = 0; k < r; ++k)
                        back[k] = (back[k] + coord[b] * s.basis[b][k]) % p;
                if (back != img) throw std::logic_error("dixon: subspace not invariant");
                for (std::size_t b = 0; b < d; ++b) c[b][t] = coord[b];
            }
            Vec cp = char_poly(c, p);
            for (i64 lambda : poly_roots(cp, p)) {
                Mat shifted = c;
                for (std::size_t t = 0; t < d; ++t)
                    shifted[t][t] = ((shifted[t][t] - lambda) % p + p) % p;
                std::vector<Vec> kern = kernel_basis(std::move(shifted), p);
                if (kern.empty()) throw std::logic_error("dixon: root without eigenvector");
                Mat ambient;
                for (const Vec& kv : kern) {
                    Vec v(r, 0);
                    for (std::size_t b = 0; b < d; ++b)
                        for (std::size_t k = 0; k < r; ++k)
                            v[k] = (v[k] + kv[b] * s.basis[b][k]) % p;
                    ambient.push_back(std::move(v));
                }
                next.push_back(make_subspace(std::move(ambient), p));
            }
        }
        spaces = std::move(next);
    }
    if (spaces.size() != r) throw std::logic_error("dixon: eigenspace count mismatch");

    const std::size_t id_class = part.class_of[g.index_of(g.identity())];
    std::vector<long> degrees;
    for (const Subspace& s : spaces) {
        if (s.basis.size() != 1) throw std::logic_error("dixon: eigenspace not a line");
        Vec w = s.basis[0];
        i64 scale = mod_inv(w[id_class], p);
        for (i64& v : w) v = v * scale % p;
        // first orthogonality: chi(1)^2 = |G| / sum_k w_k w_{k'} / |C_k|
        i64 sum = 0;
        for (std::size_t k = 0; k < r; ++k) {
            i64 term = w[k] * w[inverse_class[k]] % p;
            sum = (sum + term * mod_inv(static_cast<i64>(part.classes[k].size()), p)) % p;
        }
        i64 d2 = order % p * mod_inv(sum, p) % p;
        i64 d = 0;
        while (d * d < d2) ++d;
        if (d * d != d2 || d2 > order) throw std::logic_error("dixon: degree not a square");
        degrees.push_back(static_cast<long>(d));
    }
    std::sort(degrees.begin(), degrees.end());
    i64 check = 0;
    for (long d : degrees) check += static_cast<i64>(d) * d;
    if (check != order) throw std::logic_error("dixon: degree squares do not sum to |G|");
    return degrees;
}

}  // namespace mckay::engine
