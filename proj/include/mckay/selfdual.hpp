#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mckay::selfdual {

// Polynomial over F2 as a coefficient bitmask, bit i = coefficient of X^i.
using Poly = std::uint64_t;

long degree(Poly f);            // throws on the zero polynomial
Poly multiply(Poly a, Poly b);  // carryless product; degrees must sum to <= 63
bool evaluate_at_one(Poly f);   // f(1), the coefficient parity

// Monic, palindromic coefficients, nonzero constant term, even degree.
bool is_self_dual(Poly f);

// All 2^k self-dual polynomials of degree 2k (just {1} for k = 0),
// sorted ascending as bitmasks. Requires 0 <= k <= 20.
std::vector<Poly> enumerate_selfdual(long k);

// Largest e with (X+1)^e dividing f, by repeated synthetic division.
long x_plus_one_multiplicity(Poly f);

struct ClassCensus {
    long n = 0;
    std::map<long, unsigned long long> counts;  // m -> number of classes
    std::string source;                         // "enumeration" or "formula"
    unsigned long long total() const;
};

// counts[m] = 2^{n-m-1} for m < n, counts[n] = 1. Requires n >= 2.
ClassCensus census_closed_form(long n);

// Census by exhausting enumerate_selfdual(n) and grouping by
// m = multiplicity/2, split across threads by coefficient prefix.
// Requires 2 <= n <= 20; throws if any multiplicity comes out odd.
ClassCensus semisimple_class_census(long n);

// Single-thread reference for the enumeration census.
ClassCensus semisimple_class_census_serial(long n);

// Odd-degree unipotent character count of the Sp_{2m} centralizer factor:
// 5 for m >= 2, 1 otherwise.
unsigned long long unipotent_odd_count_for_centralizer(long m);

// Sum over the census of counts[m] * unipotent_odd_count_for_centralizer(m);
// enumeration census for n <= 12, closed form above. Requires 2 <= n <= 62.
unsigned long long odd_irr_count(long n);

}  // namespace mckay::selfdual
