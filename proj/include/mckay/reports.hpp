#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mckay::reports {

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

// Optional tabular payload (census rows, fixed-count rows); the csv
// render requires one.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<Check> checks;
    Table table;
    long long runtime_ms = 0;
    bool passed() const;  // every check passes
};

// Each cmd_* throws std::invalid_argument on a precondition violation
// (mapped to the usage exit code by the driver) and returns a Report
// whose checks carry exact decimal integers.

// Symbol enumeration per rank 2..max_n: two independent generators must
// agree, and the valuation-zero subset must equal the five-symbol
// classification. Requires 2 <= max_n <= 16.
Report cmd_prop1(long max_n);

// Semisimple class census for Sp_2n(F2) and the odd-degree character
// count 2^{n+1}. mode "enumerate" (n <= 12) exhausts self-dual
// polynomials; "formula" (n <= 62) uses the closed form. Carries the
// census table.
Report cmd_count(long n, const std::string& mode);

// Sylow 2-subgroup abelianization: theta-span codimension 2, order
// 2^{n+1}, cross-check against the odd-character count, V-part for
// n <= 5, and the pairwise commutator closure when brute (n <= 4).
// Requires 2 <= n <= 62.
Report cmd_sylow(long n, bool brute);

// Generated-group oracle for sp4f2 or sp6f2: order vs the product
// formula, N(U) = U; sp4f2 additionally runs the character degree
// computation. sp6f2 walks 1451520 elements and is gated behind
// confirm_large.
Report cmd_oracle(const std::string& target, bool confirm_large, int jobs = 1);

// Local equivariance at Sp4(2^m): torus invariant factors, |N|,
// predicted vs computed class counts, degree squares, and the fixed
// character counts for a = 1..2m computed both by fixed classes and by
// the orbit census. Requires q in {4, 8, 16, 32} and odd prime ell
// dividing (q^4 - 1)(q^2 - 1).
Report cmd_sp4(long q, long ell);

// Renders are byte-stable for identical inputs; runtime_ms is excluded
// from all three for that reason.
std::string render_table(const Report& r);
std::string render_json(const Report& r);
std::string render_csv(const Report& r);  // requires a table

}  // namespace mckay::reports
