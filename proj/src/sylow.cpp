#include "mckay/sylow.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mckay::sylow {

UElement::UElement(BitMatrix x_, BitMatrix s_) : x(std::move(x_)), s(std::move(s_)) {
    if (x.rows() != x.cols() || s.rows() != s.cols() || x.rows() != s.rows())
        throw std::invalid_argument("UElement: mismatched shapes");
    if (!x.is_upper_unitriangular()) throw std::invalid_argument("UElement: x not unitriangular");
    if (!s.is_symmetric()) throw std::invalid_argument("UElement: s not symmetric");
}

BitMatrix antidiagonal_j(long n) { return BitMatrix::antidiagonal(static_cast<std::size_t>(n)); }

BitMatrix symplectic_gram(long n) {
    std::size_t un = static_cast<std::size_t>(n);
    BitMatrix g(2 * un, 2 * un);
    for (std::size_t i = 0; i < un; ++i) {
        g.set(i, 2 * un - 1 - i, true);
        g.set(un + i, un - 1 - i, true);
    }
    return g;
}

bool preserves_form(const BitMatrix& u) {
    if (u.rows() != u.cols() || u.rows() % 2 != 0)
        throw std::invalid_argument("preserves_form: need an even square matrix");
    BitMatrix g = symplectic_gram(static_cast<long>(u.rows() / 2));
    return u.transposed() * g * u == g;
}

BitMatrix embed(const UElement& e) {
    std::size_t n = e.x.rows();
    BitMatrix j = BitMatrix::antidiagonal(n);
    BitMatrix tr = e.x * e.s * j;                       // top right
    BitMatrix br = j * e.x.inverse().transposed() * j;  // bottom right
    BitMatrix out(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            out.set(i, k, e.x.get(i, k));
            out.set(i, n + k, tr.get(i, k));
            out.set(n + i, n + k, br.get(i, k));
        }
    return out;
}

UElement u_multiply(const UElement& a, const UElement& b) {
    if (a.n() != b.n()) throw std::invalid_argument("u_multiply: mismatched n");
    BitMatrix xbi = b.x.inverse();
    UElement r(a.x * b.x, b.s + xbi * a.s * xbi.transposed());
    if (embed(r) != embed(a) * embed(b)) throw std::logic_error("u_multiply: embed mismatch");
    return r;
}

UElement u_inverse(const UElement& a) {
    return UElement(a.x.inverse(), a.x * a.s * a.x.transposed());
}

BitMatrix v_act(const BitMatrix& x, const BitMatrix& s) { return x * s * x.transposed(); }

BitMatrix theta(const BitMatrix& x, const BitMatrix& s) { return v_act(x, s) + s; }

std::vector<BitMatrix> transvection_generators(long n) {
    std::vector<BitMatrix> out;
    std::size_t un = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = i + 1; j < un; ++j) {
            BitMatrix m = BitMatrix::identity(un);
            m.set(i, j, true);
            out.push_back(m);
        }
    return out;
}

namespace {

// Flattens a symmetric matrix to its upper triangle, (i,j) i <= j in
// row-major order, as a 1 x n(n+1)/2 bit vector.
BitMatrix flatten_sym(const BitMatrix& s) {
    std::size_t n = s.rows();
    BitMatrix v(1, n * (n + 1) / 2);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) v.set(0, pos++, s.get(i, j));
    return v;
}

BitMatrix unflatten_sym(const BitMatrix& v, std::size_t n) {
    BitMatrix s(n, n);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            bool bit = v.get(0, pos++);
            s.set(i, j, bit);
            s.set(j, i, bit);
        }
    return s;
}

std::vector<BitMatrix> sym_basis(std::size_t n) {
    std::vector<BitMatrix> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            BitMatrix s(n, n);
            s.set(i, j, true);
            s.set(j, i, true);
            out.push_back(s);
        }
    return out;
}

long leading_col(const BitMatrix& v) {
    for (std::size_t c = 0; c < v.cols(); ++c)
        if (v.get(0, c)) return static_cast<long>(c);
    return -1;
}

// Reduced echelon basis of the span of the flattened vectors, rows
// sorted by pivot column.
std::vector<BitMatrix> echelon_basis(const std::vector<BitMatrix>& vecs) {
    std::vector<BitMatrix> rows;  // one row per pivot, not yet fully reduced
    for (BitMatrix v : vecs) {
        for (const BitMatrix& r : rows) {
            long p = leading_col(r);
            if (v.get(0, static_cast<std::size_t>(p))) v = v + r;
        }
        if (leading_col(v) >= 0) rows.push_back(v);
    }
    std::sort(rows.begin(), rows.end(),
              [](const BitMatrix& a, const BitMatrix& b) { return leading_col(a) < leading_col(b); });
    // single back-substitution pass makes the basis reduced
    for (std::size_t i = rows.size(); i-- > 0;)
        for (std::size_t k = i + 1; k < rows.size(); ++k) {
            long p = leading_col(rows[k]);
            if (rows[i].get(0, static_cast<std::size_t>(p))) rows[i] = rows[i] + rows[k];
        }
    return rows;
}

ThetaSpan span_from_images(long n, const std::vector<BitMatrix>& xs) {
    std::size_t un = static_cast<std::size_t>(n);
    std::vector<BitMatrix> flats;
    for (const BitMatrix& x : xs)
        for (const BitMatrix& s : sym_basis(un)) flats.push_back(flatten_sym(theta(x, s)));
    ThetaSpan out;
    out.sym_dim = static_cast<long>(un * (un + 1) / 2);
    auto rows = echelon_basis(flats);
    out.dim = static_cast<long>(rows.size());
    out.codim = out.sym_dim - out.dim;
    for (const BitMatrix& r : rows) out.basis.push_back(unflatten_sym(r, un));
    return out;
}

}  // namespace

ThetaSpan theta_image_span(long n) {
    if (n < 2) throw std::invalid_argument("theta_image_span: n must be >= 2");
    return span_from_images(n, transvection_generators(n));
}

ThetaSpan theta_image_span_full(long n) {
    if (n < 2 || n > 4) throw std::invalid_argument("theta_image_span_full: n must be in 2..4");
    std::size_t un = static_cast<std::size_t>(n);
    long bits = n * (n - 1) / 2;
    std::vector<BitMatrix> xs;
    for (std::uint64_t c = 0; c < (1ULL << bits); ++c) {
        BitMatrix x = BitMatrix::identity(un);
        long pos = 0;
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t j = i + 1; j < un; ++j)
                if ((c >> pos++) & 1) x.set(i, j, true);
        xs.push_back(x);
    }
    return span_from_images(n, xs);
}

bool in_theta_span(const ThetaSpan& span, const BitMatrix& s) {
    if (!s.is_symmetric()) throw std::invalid_argument("in_theta_span: s not symmetric");
    BitMatrix v = flatten_sym(s);
    for (const BitMatrix& b : span.basis) {
        BitMatrix bf = flatten_sym(b);
        long p = leading_col(bf);
        if (p >= 0 && v.get(0, static_cast<std::size_t>(p))) v = v + bf;
    }
    return leading_col(v) < 0;
}

unsigned long long abelianization_order(long n) {
    if (n < 2 || n > 60) throw std::invalid_argument("abelianization_order: n out of range");
    ThetaSpan span = theta_image_span(n);
    return 1ULL << (span.codim + n - 1);
}

namespace {

// Bit-packed model of the unitriangular group V: the x part packs the
// strict upper triangle in row-major order.
struct PackedV {
    long n;
    long xbits;
    std::vector<std::uint32_t> vmul;  // [x1 << xbits | x2]
    std::vector<std::uint32_t> vinv;  // [x]

    explicit PackedV(long n_) : n(n_), xbits(n * (n - 1) / 2) {
        std::size_t nx = std::size_t{1} << xbits;
        std::vector<BitMatrix> xmats(nx);
        for (std::size_t c = 0; c < nx; ++c) xmats[c] = unpack_x(static_cast<std::uint32_t>(c));
        vinv.resize(nx);
        for (std::size_t c = 0; c < nx; ++c) vinv[c] = pack_x(xmats[c].inverse());
        vmul.resize(nx * nx);
        for (std::size_t a = 0; a < nx; ++a)
            for (std::size_t b = 0; b < nx; ++b)
                vmul[(a << xbits) | b] = pack_x(xmats[a] * xmats[b]);
    }

    BitMatrix unpack_x(std::uint32_t c) const {
        std::size_t un = static_cast<std::size_t>(n);
        BitMatrix x = BitMatrix::identity(un);
        long pos = 0;
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t j = i + 1; j < un; ++j)
                if ((c >> pos++) & 1) x.set(i, j, true);
        return x;
    }

    std::uint32_t pack_x(const BitMatrix& x) const {
        std::size_t un = static_cast<std::size_t>(n);
        std::uint32_t c = 0;
        long pos = 0;
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t j = i + 1; j < un; ++j) {
                if (x.get(i, j)) c |= std::uint32_t{1} << pos;
                ++pos;
            }
        return c;
    }
};

// Extends PackedV with the s part (upper triangle with diagonal); an
// element id of U is (x << sbits) | s.
struct PackedU : PackedV {
    long sbits;
    std::vector<std::uint32_t> sact;  // [x << sbits | s] = pack(x s tx)

    explicit PackedU(long n_) : PackedV(n_), sbits(n * (n + 1) / 2) {
        std::size_t nx = std::size_t{1} << xbits;
        std::size_t ns = std::size_t{1} << sbits;
        sact.resize(nx * ns);
        for (std::size_t c = 0; c < nx; ++c) {
            BitMatrix x = unpack_x(static_cast<std::uint32_t>(c));
            BitMatrix xt = x.transposed();
            for (std::size_t s = 0; s < ns; ++s)
                sact[(c << sbits) | s] = pack_s(x * unpack_s(static_cast<std::uint32_t>(s)) * xt);
        }
    }

    BitMatrix unpack_s(std::uint32_t c) const {
        std::size_t un = static_cast<std::size_t>(n);
        BitMatrix s(un, un);
        long pos = 0;
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t j = i; j < un; ++j) {
                bool bit = (c >> pos++) & 1;
                s.set(i, j, bit);
                s.set(j, i, bit);
            }
        return s;
    }

    std::uint32_t pack_s(const BitMatrix& s) const {
        std::size_t un = static_cast<std::size_t>(n);
        std::uint32_t c = 0;
        long pos = 0;
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t j = i; j < un; ++j) {
                if (s.get(i, j)) c |= std::uint32_t{1} << pos;
                ++pos;
            }
        return c;
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t xa = a >> sbits, sa = a & ((1u << sbits) - 1);
        std::uint32_t xb = b >> sbits, sb = b & ((1u << sbits) - 1);
        std::uint32_t x = vmul[(std::size_t{xa} << xbits) | xb];
        std::uint32_t s = sb ^ sact[(std::size_t{vinv[xb]} << sbits) | sa];
        return (x << sbits) | s;
    }
};

// Marks the packed id of [a, b] for every pair (a, b) with x-parts
// (x1, x2) into `seen`, hoisting the per-(x1, x2) tables.
void scan_commutators_for_xpair(const PackedU& u, std::uint32_t x1, std::uint32_t x2,
                                std::vector<std::uint64_t>& seen) {
    const long sb = u.sbits;
    const std::uint32_t ns = 1u << sb;
    std::uint32_t ix1 = u.vinv[x1], ix2 = u.vinv[x2];
    auto vm = [&](std::uint32_t a, std::uint32_t b) {
        return u.vmul[(std::size_t{a} << u.xbits) | b];
    };
    std::uint32_t xc = vm(vm(vm(ix1, ix2), x1), x2);       // x1^-1 x2^-1 x1 x2
    std::uint32_t mb = vm(vm(ix2, ix1), x2);               // x2^-1 x1^-1 x2
    const std::uint32_t* rowA = &u.sact[std::size_t{ix2} << sb];
    const std::uint32_t* rowB = &u.sact[std::size_t{mb} << sb];
    const std::uint32_t* rowC = &u.sact[std::size_t{x1} << sb];
    const std::uint64_t base = std::uint64_t{xc} << sb;
    for (std::uint32_t s1 = 0; s1 < ns; ++s1) {
        const std::uint32_t a = rowA[s1];
        const std::uint32_t c = rowC[s1];
        for (std::uint32_t s2 = 0; s2 < ns; ++s2) {
            std::uint32_t sp = s2 ^ a ^ rowB[s2 ^ c];
            std::uint64_t id = base | sp;
            seen[id >> 6] |= std::uint64_t{1} << (id & 63);
        }
    }
}

unsigned long long closure_order(const PackedU& u, const std::vector<std::uint32_t>& gens) {
    long total_bits = u.xbits + u.sbits;
    std::vector<std::uint64_t> member((std::size_t{1} << total_bits) / 64 + 1, 0);
    auto test_and_set = [&](std::uint32_t id) {
        std::uint64_t& w = member[id >> 6];
        std::uint64_t bit = std::uint64_t{1} << (id & 63);
        if (w & bit) return false;
        w |= bit;
        return true;
    };
    std::vector<std::uint32_t> frontier;
    std::uint32_t identity = 0;
    test_and_set(identity);
    frontier.push_back(identity);
    unsigned long long count = 1;
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t g : frontier)
            for (std::uint32_t c : gens) {
                std::uint32_t p = u.mul(g, c);
                if (test_and_set(p)) {
                    ++count;
                    next.push_back(p);
                }
            }
        frontier = std::move(next);
    }
    return count;
}

unsigned long long commutator_order_impl(long n, bool parallel) {
    if (n < 2 || n > 4) throw std::invalid_argument("brute_commutator_order: n must be in 2..4");
    PackedU u(n);
    const std::uint32_t nx = 1u << u.xbits;
    std::vector<std::uint64_t> seen((std::size_t{1} << (u.xbits + u.sbits)) / 64 + 1, 0);
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel
        {
            std::vector<std::uint64_t> local(seen.size(), 0);
#pragma omp for schedule(dynamic)
            for (std::int64_t x1 = 0; x1 < nx; ++x1)
                for (std::uint32_t x2 = 0; x2 < nx; ++x2)
                    scan_commutators_for_xpair(u, static_cast<std::uint32_t>(x1), x2, local);
#pragma omp critical
            for (std::size_t i = 0; i < seen.size(); ++i) seen[i] |= local[i];
        }
#else
        parallel = false;
#endif
    }
    if (!parallel) {
        for (std::uint32_t x1 = 0; x1 < nx; ++x1)
            for (std::uint32_t x2 = 0; x2 < nx; ++x2) scan_commutators_for_xpair(u, x1, x2, seen);
    }
    std::vector<std::uint32_t> gens;
    for (std::size_t w = 0; w < seen.size(); ++w)
        for (std::uint64_t bits = seen[w]; bits; bits &= bits - 1)
            gens.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
    return closure_order(u, gens);
}

}  // namespace

unsigned long long brute_commutator_order(long n) { return commutator_order_impl(n, true); }

unsigned long long brute_commutator_order_serial(long n) { return commutator_order_impl(n, false); }

unsigned long long v_abelianization_order(long n) {
    if (n < 2) throw std::invalid_argument("v_abelianization_order: n must be >= 2");
    if (n <= 5) {
        // brute closure of [V,V] on packed strict-upper matrices
        long bits = n * (n - 1) / 2;
        std::size_t nx = std::size_t{1} << bits;
        PackedV u(n);
        std::vector<bool> seen(nx, false);
        for (std::size_t a = 0; a < nx; ++a)
            for (std::size_t b = 0; b < nx; ++b) {
                std::uint32_t ia = u.vinv[a], ib = u.vinv[b];
                auto vm = [&](std::uint32_t p, std::uint32_t q) {
                    return u.vmul[(std::size_t{p} << bits) | q];
                };
                seen[vm(vm(vm(ia, ib), static_cast<std::uint32_t>(a)), static_cast<std::uint32_t>(b))] = true;
            }
        std::vector<std::uint32_t> gens;
        for (std::size_t i = 0; i < nx; ++i)
            if (seen[i]) gens.push_back(static_cast<std::uint32_t>(i));
        // closure on x ids alone
        std::vector<bool> member(nx, false);
        std::vector<std::uint32_t> frontier{0};
        member[0] = true;
        unsigned long long count = 1;
        while (!frontier.empty()) {
            std::vector<std::uint32_t> next;
            for (std::uint32_t g : frontier)
                for (std::uint32_t c : gens) {
                    std::uint32_t p = u.vmul[(std::size_t{g} << bits) | c];
                    if (!member[p]) {
                        member[p] = true;
                        ++count;
                        next.push_back(p);
                    }
                }
            frontier = std::move(next);
        }
        unsigned long long v_order = nx;
        if (v_order / count != (1ULL << (n - 1)))
            throw std::logic_error("v_abelianization_order: closure disagrees with formula");
    }
    return 1ULL << (n - 1);
}

}  // namespace mckay::sylow
