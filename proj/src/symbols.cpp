#include "mckay/symbols.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mckay::symbols {

namespace {

void check_row(const std::vector<long>& r, const char* name) {
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] < 0) throw std::invalid_argument(std::string("symbol: negative entry in ") + name);
        if (i > 0 && r[i] <= r[i - 1])
            throw std::invalid_argument(std::string("symbol: row not strictly increasing: ") + name);
    }
}

std::string row_json(const std::vector<long>& r) {
    std::string s = "[";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(r[i]);
    }
    return s + "]";
}

}  // namespace

Symbol::Symbol(std::vector<long> s, std::vector<long> t) : s_(std::move(s)), t_(std::move(t)) {
    check_row(s_, "S");
    check_row(t_, "T");
    long d = static_cast<long>(s_.size()) - static_cast<long>(t_.size());
    if (d <= 0 || d % 2 == 0)
        throw std::invalid_argument("symbol: |S| - |T| must be odd and positive");
    if (!s_.empty() && !t_.empty() && s_[0] == 0 && t_[0] == 0)
        throw std::invalid_argument("symbol: 0 in both rows");
}

long Symbol::rank() const {
    long sum = std::accumulate(s_.begin(), s_.end(), 0L) +
               std::accumulate(t_.begin(), t_.end(), 0L);
    long half = (entry_count() - 1) / 2;
    long r = sum - half * half;
    if (r < 0) throw std::invalid_argument("symbol: negative rank");
    return r;
}

std::string Symbol::to_json() const {
    return "{\"S\":" + row_json(s_) + ",\"T\":" + row_json(t_) + "}";
}

std::string Symbol::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < s_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(s_[i]);
    }
    s += ';';
    for (std::size_t i = 0; i < t_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(t_[i]);
    }
    return s + ")";
}

long rank(const Symbol& sym) { return sym.rank(); }

namespace {

// Appends to `out` every strictly increasing row of `size` entries >= `lo`
// summing exactly to `sum`, extending `prefix`; then calls `emit`.
void gen_rows(long size, long lo, long sum, std::vector<long>& prefix,
              const std::function<void(const std::vector<long>&)>& emit) {
    if (size == 0) {
        if (sum == 0) emit(prefix);
        return;
    }
    // minimal achievable sum with entries lo, lo+1, ...
    for (long v = lo;; ++v) {
        long min_rest = (size - 1) * v + (size * (size - 1)) / 2;  // v+1 .. v+size-1
        if (v + min_rest > sum) break;
        prefix.push_back(v);
        gen_rows(size - 1, v + 1, sum - v, prefix, emit);
        prefix.pop_back();
    }
}

// Emits every symbol with |S| = p, |T| = t and entry total `target`.
void emit_symbols_for_sizes(long p, long t, long target, std::vector<Symbol>& out) {
    const long s_min = p * (p - 1) / 2;  // least possible S total, 0..p-1
    std::vector<long> tr;
    std::function<void(long, long, long)> walk = [&](long size, long lo, long used) {
        if (size == 0) {
            bool t_has_zero = !tr.empty() && tr[0] == 0;
            std::vector<long> srow;
            gen_rows(p, 0, target - used, srow, [&](const std::vector<long>& sr) {
                if (t_has_zero && !sr.empty() && sr[0] == 0) return;
                out.emplace_back(sr, tr);
            });
            return;
        }
        for (long v = lo;; ++v) {
            long min_rest = (size - 1) * v + (size * (size - 1)) / 2;
            if (used + v + min_rest + s_min > target) break;
            tr.push_back(v);
            walk(size - 1, v + 1, used + v);
            tr.pop_back();
        }
    };
    walk(t, 0, 0);
}

}  // namespace

std::vector<Symbol> enumerate_symbols(long n) {
    if (n < 1) throw std::invalid_argument("enumerate_symbols: rank must be >= 1");
    std::vector<Symbol> out;
    for (long m = 1; (m - 1) / 2 <= n; m += 2) {
        long half = (m - 1) / 2;
        long target = n + half * half;
        for (long p = half + 1; p <= m; ++p) {
            long t = m - p;
            emit_symbols_for_sizes(p, t, target, out);
        }
    }
    std::sort(out.begin(), out.end());
    for (auto& s : out)
        if (s.rank() != n) throw std::logic_error("enumerate_symbols: rank mismatch");
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::logic_error("enumerate_symbols: duplicate symbol");
    return out;
}

std::vector<Symbol> enumerate_symbols_by_defect(long n) {
    if (n < 1) throw std::invalid_argument("enumerate_symbols_by_defect: rank must be >= 1");
    std::vector<Symbol> out;
    for (long d = 1; (d * d - 1) / 4 <= n; d += 2) {
        for (long t = 0; t + (d * d - 1) / 4 <= n; ++t) {
            long p = t + d;
            long m = 2 * t + d;
            long half = (m - 1) / 2;
            emit_symbols_for_sizes(p, t, n + half * half, out);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long phi(const Symbol& sym) {
    const auto& s = sym.top();
    const auto& t = sym.bottom();
    long total = 0;
    // |S cap T|
    for (long a : s)
        if (std::binary_search(t.begin(), t.end(), a)) ++total;
    // pairs within each row contribute the smaller entry
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) total += std::min(s[i], s[j]);
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) total += std::min(t[i], t[j]);
    // cross pairs
    for (long a : s)
        for (long b : t) total += std::min(a, b);
    return total;
}

long denominator_exponent(long m) {
    if (m < 1 || m % 2 == 0)
        throw std::invalid_argument("denominator_exponent: m must be odd and >= 1");
    long num = (m - 1) * (2 * m * m - 7 * m + 15);
    if (num % 24 != 0) throw std::logic_error("denominator_exponent: 24 does not divide");
    return num / 24;
}

ValuationReport degree_2_valuation(const Symbol& sym) {
    ValuationReport r;
    r.phi = phi(sym);
    r.denominator_exponent = denominator_exponent(sym.entry_count());
    r.valuation = r.phi - r.denominator_exponent;
    if (r.valuation < 0) throw std::logic_error("degree_2_valuation: negative valuation");
    return r;
}

std::vector<Symbol> odd_degree_symbols(long n) {
    if (n < 2) throw std::invalid_argument("odd_degree_symbols: n must be >= 2");
    std::vector<Symbol> out;
    for (const Symbol& s : enumerate_symbols(n))
        if (degree_2_valuation(s).valuation == 0) out.push_back(s);
    return out;
}

std::vector<Symbol> odd_degree_classification(long n) {
    if (n < 2) throw std::invalid_argument("odd_degree_classification: n must be >= 2");
    std::vector<Symbol> out;
    out.emplace_back(std::vector<long>{n}, std::vector<long>{});
    out.emplace_back(std::vector<long>{0, 1, n}, std::vector<long>{});
    out.emplace_back(std::vector<long>{0, 1}, std::vector<long>{n});
    out.emplace_back(std::vector<long>{1, n}, std::vector<long>{0});
    out.emplace_back(std::vector<long>{0, n}, std::vector<long>{1});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mckay::symbols
