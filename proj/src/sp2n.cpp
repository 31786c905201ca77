#include "mckay/sp2n.hpp"

#include <stdexcept>

#include "mckay/sylow.hpp"

namespace mckay::engine {

using f2::BitMatrix;

namespace {

// T_v = I + v (tv G): x -> x + <x, v> v.
BitMatrix transvection(const BitMatrix& v, const BitMatrix& gram) {
    std::size_t d = gram.rows();
    BitMatrix vt_g = v.transposed() * gram;  // 1 x d of pairings <v, e_j>
    BitMatrix t = BitMatrix::identity(d);
    for (std::size_t i = 0; i < d; ++i)
        if (v.get(i, 0))
            for (std::size_t j = 0; j < d; ++j)
                if (vt_g.get(0, j)) t.set(i, j, !t.get(i, j));
    return t;
}

}  // namespace

std::vector<BitMatrix> sp2n_generators(long n) {
    if (n < 2) throw std::invalid_argument("sp2n_generators: n >= 2");
    std::size_t d = static_cast<std::size_t>(2 * n);
    BitMatrix gram = sylow::symplectic_gram(n);
    std::vector<BitMatrix> gens;
    for (std::size_t i = 0; i < d; ++i) {
        BitMatrix v(d, 1);
        v.set(i, 0, true);
        gens.push_back(transvection(v, gram));
    }
    for (std::size_t i = 0; i + 1 < d; ++i) {
        BitMatrix v(d, 1);
        v.set(i, 0, true);
        v.set(i + 1, 0, true);
        gens.push_back(transvection(v, gram));
    }
    for (const BitMatrix& g : gens)
        if (!sylow::preserves_form(g)) throw std::logic_error("sp2n_generators: form not preserved");
    return gens;
}

ConcreteGroup sp2n_group(long n, std::size_t element_cap, int jobs) {
    if (n < 2 || n > 4) throw std::invalid_argument("sp2n_group: 2 <= n <= 4");
    std::vector<Element> packed;
    for (const BitMatrix& g : sp2n_generators(n)) packed.push_back(g.to_packed());
    return ConcreteGroup(matrix_group_ops(2 * n), packed, element_cap, jobs);
}

std::vector<Element> sylow_u_packed_elements(long n) {
    if (n < 2 || n > 4) throw std::invalid_argument("sylow_u_packed_elements: 2 <= n <= 4");
    std::size_t un = static_cast<std::size_t>(n);
    long xb = n * (n - 1) / 2, sb = n * (n + 1) / 2;
    std::vector<Element> out;
    out.reserve(1ull << (xb + sb));
    for (std::uint64_t xm = 0; xm < (1ull << xb); ++xm) {
        BitMatrix x = BitMatrix::identity(un);
        std::size_t bit = 0;
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t j = i + 1; j < un; ++j) x.set(i, j, (xm >> bit++) & 1);
        for (std::uint64_t sm = 0; sm < (1ull << sb); ++sm) {
            BitMatrix s(un, un);
            bit = 0;
            for (std::size_t i = 0; i < un; ++i)
                for (std::size_t j = i; j < un; ++j) {
                    bool v = (sm >> bit++) & 1;
                    s.set(i, j, v);
                    s.set(j, i, v);
                }
            out.push_back(sylow::embed(sylow::UElement(x, s)).to_packed());
        }
    }
    return out;
}

}  // namespace mckay::engine
