#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace mckay::symbols {

// Two-row symbol (S; T) with strictly increasing rows of naturals,
// 0 not in both rows, and |S| - |T| odd and positive. This normal form
// picks exactly one representative per shift class.
class Symbol {
public:
    Symbol(std::vector<long> s, std::vector<long> t);

    const std::vector<long>& top() const { return s_; }
    const std::vector<long>& bottom() const { return t_; }

    long entry_count() const { return static_cast<long>(s_.size() + t_.size()); }  // M, odd
    long defect() const { return static_cast<long>(s_.size() - t_.size()); }
    long rank() const;

    std::string to_json() const;    // {"S":[...],"T":[...]}
    std::string to_string() const;  // (a,b,c;d,e)

    auto operator<=>(const Symbol& o) const = default;

private:
    std::vector<long> s_, t_;
};

long rank(const Symbol& sym);

// All symbols of the given rank, canonically ordered, no duplicates.
// Walks M = 1, 3, 5, ... until the minimal possible rank for M entries
// (attained by prefix rows at defect 1) exceeds n.
std::vector<Symbol> enumerate_symbols(long n);

// Independent generator that iterates defects 1, 3, 5, ... separately;
// must produce the same set as enumerate_symbols.
std::vector<Symbol> enumerate_symbols_by_defect(long n);

// phi_{S,T} = |S cap T| + sum of min over pairs within S, within T,
// and across the rows.
long phi(const Symbol& sym);

// (m-1)(2m^2-7m+15)/24 for odd m; the division is exact.
long denominator_exponent(long m);

struct ValuationReport {
    long phi = 0;
    long denominator_exponent = 0;
    long valuation = 0;  // phi - denominator_exponent, always >= 0
};

// 2-adic valuation of the unipotent character degree attached to the symbol.
ValuationReport degree_2_valuation(const Symbol& sym);

// Symbols of rank n with odd degree, found by filtering enumerate_symbols
// on valuation zero. Requires n >= 2.
std::vector<Symbol> odd_degree_symbols(long n);

// The expected classification for n >= 2: (n;), (0,1,n;), (0,1;n),
// (1,n;0), (0,n;1), in canonical order.
std::vector<Symbol> odd_degree_classification(long n);

}  // namespace mckay::symbols
