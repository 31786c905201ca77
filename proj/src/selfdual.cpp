#include "mckay/selfdual.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mckay::selfdual {

long degree(Poly f) {
    if (f == 0) throw std::invalid_argument("degree: zero polynomial");
    return 63 - std::countl_zero(f);
}

Poly multiply(Poly a, Poly b) {
    if (a == 0 || b == 0) return 0;
    if (degree(a) + degree(b) > 63) throw std::invalid_argument("multiply: degree overflow");
    Poly r = 0;
    for (Poly t = a; t; t &= t - 1) r ^= b << std::countr_zero(t);
    return r;
}

bool evaluate_at_one(Poly f) { return std::popcount(f) % 2 != 0; }

bool is_self_dual(Poly f) {
    if ((f & 1) == 0) return false;
    long d = degree(f);
    if (d % 2 != 0) return false;
    for (long i = 0; i <= d; ++i)
        if (((f >> i) & 1) != ((f >> (d - i)) & 1)) return false;
    return true;
}

std::vector<Poly> enumerate_selfdual(long k) {
    if (k < 0 || k > 20) throw std::invalid_argument("enumerate_selfdual: k out of range");
    if (k == 0) return {Poly{1}};
    std::vector<Poly> out;
    out.reserve(std::size_t{1} << k);
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << k); ++c) {
        Poly f = 1 | (Poly{1} << (2 * k));
        for (long i = 1; i < k; ++i)
            if ((c >> (i - 1)) & 1) f |= (Poly{1} << i) | (Poly{1} << (2 * k - i));
        if ((c >> (k - 1)) & 1) f |= Poly{1} << k;
        out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Divides f by X+1; returns the quotient or 0 when X+1 does not divide f.
Poly divide_by_x_plus_one(Poly f) {
    if (evaluate_at_one(f)) return 0;
    long d = degree(f);
    Poly q = 0;
    int carry = 0;  // running coefficient of the quotient, from the top down
    for (long i = d; i >= 1; --i) {
        carry ^= static_cast<int>((f >> i) & 1);
        if (carry) q |= Poly{1} << (i - 1);
    }
    if (carry != static_cast<int>(f & 1)) throw std::logic_error("divide_by_x_plus_one: remainder");
    return q;
}

}  // namespace

long x_plus_one_multiplicity(Poly f) {
    if (f == 0) throw std::invalid_argument("x_plus_one_multiplicity: zero polynomial");
    long e = 0;
    while (degree(f) >= 1 && !evaluate_at_one(f)) {
        f = divide_by_x_plus_one(f);
        ++e;
    }
    return e;
}

unsigned long long ClassCensus::total() const {
    unsigned long long t = 0;
    for (const auto& [m, c] : counts) t += c;
    return t;
}

ClassCensus census_closed_form(long n) {
    if (n < 2) throw std::invalid_argument("census_closed_form: n must be >= 2");
    if (n > 62) throw std::invalid_argument("census_closed_form: n too large");
    ClassCensus c;
    c.n = n;
    c.source = "formula";
    for (long m = 0; m < n; ++m) c.counts[m] = 1ULL << (n - m - 1);
    c.counts[n] = 1;
    return c;
}

namespace {

ClassCensus census_by_enumeration(long n, bool parallel) {
    if (n < 2 || n > 20)
        throw std::invalid_argument("semisimple_class_census: n must be in 2..20");
    const auto polys = enumerate_selfdual(n);
    std::vector<long> mult(polys.size());
    std::int64_t count = static_cast<std::int64_t>(polys.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (std::int64_t i = 0; i < count; ++i)
        mult[static_cast<std::size_t>(i)] = x_plus_one_multiplicity(polys[static_cast<std::size_t>(i)]);
    (void)parallel;
    ClassCensus c;
    c.n = n;
    c.source = "enumeration";
    for (long e : mult) {
        if (e % 2 != 0) throw std::logic_error("census: odd (X+1)-multiplicity");
        ++c.counts[e / 2];
    }
    return c;
}

}  // namespace

ClassCensus semisimple_class_census(long n) { return census_by_enumeration(n, true); }

ClassCensus semisimple_class_census_serial(long n) { return census_by_enumeration(n, false); }

unsigned long long unipotent_odd_count_for_centralizer(long m) {
    if (m < 0) throw std::invalid_argument("unipotent_odd_count_for_centralizer: negative m");
    return m >= 2 ? 5 : 1;
}

unsigned long long odd_irr_count(long n) {
    if (n < 2 || n > 62) throw std::invalid_argument("odd_irr_count: n must be in 2..62");
    ClassCensus c = n <= 12 ? semisimple_class_census(n) : census_closed_form(n);
    unsigned long long total = 0;
    for (const auto& [m, cnt] : c.counts) total += cnt * unipotent_odd_count_for_centralizer(m);
    return total;
}

}  // namespace mckay::selfdual
