#include "mckay/reports.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "mckay/dixon.hpp"
#include "mckay/selfdual.hpp"
#include "mckay/sp2n.hpp"
#include "mckay/sp4.hpp"
#include "mckay/sylow.hpp"
#include "mckay/symbols.hpp"

namespace mckay::reports {
namespace {

using Clock = std::chrono::steady_clock;

std::string dec(unsigned long long v) { return std::to_string(v); }
std::string dec(long v) { return std::to_string(v); }
std::string dec(std::size_t v) { return std::to_string(v); }

Check eq(std::string name, std::string expected, std::string actual) {
    bool pass = expected == actual;
    return {std::move(name), std::move(expected), std::move(actual), pass};
}

std::string join_longs(const std::vector<long>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

std::string join_symbols(std::vector<symbols::Symbol> v) {
    std::sort(v.begin(), v.end());
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += v[i].to_string();
    }
    return out;
}

std::string join_census(const selfdual::ClassCensus& census) {
    std::string out;
    for (const auto& [m, count] : census.counts) {
        if (!out.empty()) out += ' ';
        out += std::to_string(m) + ":" + std::to_string(count);
    }
    return out;
}

void stamp_runtime(Report& r, Clock::time_point t0) {
    r.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

long log2_of(long q) {
    long m = 0;
    while ((1L << m) < q) ++m;
    return m;
}

}  // namespace

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Report cmd_prop1(long max_n) {
    if (max_n < 2 || max_n > 16)
        throw std::invalid_argument("prop1: max-n must be in 2..16");
    auto t0 = Clock::now();
    Report r;
    r.command = "prop1";
    r.parameters = {{"max_n", dec(max_n)}};
    for (long n = 2; n <= max_n; ++n) {
        std::string tag = "_rank_" + std::to_string(n);
        auto walk = symbols::enumerate_symbols(n);
        auto by_defect = symbols::enumerate_symbols_by_defect(n);
        auto sorted_walk = walk;
        auto sorted_defect = by_defect;
        std::sort(sorted_walk.begin(), sorted_walk.end());
        std::sort(sorted_defect.begin(), sorted_defect.end());
        r.checks.push_back({"symbols" + tag, dec(by_defect.size()), dec(walk.size()),
                            sorted_walk == sorted_defect});
        auto odd = symbols::odd_degree_symbols(n);
        r.checks.push_back(eq("odd_count" + tag, "5", dec(odd.size())));
        r.checks.push_back(eq("odd_set" + tag,
                              join_symbols(symbols::odd_degree_classification(n)),
                              join_symbols(odd)));
    }
    stamp_runtime(r, t0);
    return r;
}

Report cmd_count(long n, const std::string& mode) {
    if (mode != "enumerate" && mode != "formula")
        throw std::invalid_argument("count: mode must be enumerate or formula");
    if (n < 2 || n > 62)
        throw std::invalid_argument("count: n must be in 2..62");
    if (mode == "enumerate" && n > 12)
        throw std::invalid_argument("count: enumerate mode requires n <= 12");
    auto t0 = Clock::now();
    Report r;
    r.command = "count";
    r.parameters = {{"n", dec(n)}, {"mode", mode}};

    selfdual::ClassCensus census = mode == "enumerate" ? selfdual::semisimple_class_census(n)
                                                       : selfdual::census_closed_form(n);
    r.table.header = {"m", "classes"};
    for (const auto& [m, count] : census.counts)
        r.table.rows.push_back({dec(m), dec(count)});

    r.checks.push_back(eq("class_total", dec(1ULL << n), dec(census.total())));
    if (mode == "enumerate")
        r.checks.push_back(eq("census_cross", join_census(selfdual::census_closed_form(n)),
                              join_census(census)));
    unsigned long long odd = 0;
    for (const auto& [m, count] : census.counts)
        odd += count * selfdual::unipotent_odd_count_for_centralizer(m);
    r.checks.push_back(eq("odd_irr_count", dec(1ULL << (n + 1)), dec(odd)));
    stamp_runtime(r, t0);
    return r;
}

Report cmd_sylow(long n, bool brute) {
    if (n < 2 || n > 62)
        throw std::invalid_argument("sylow: n must be in 2..62");
    if (brute && n > 4)
        throw std::invalid_argument("sylow: brute requires n <= 4");
    auto t0 = Clock::now();
    Report r;
    r.command = "sylow";
    r.parameters = {{"n", dec(n)}, {"brute", brute ? "true" : "false"}};

    sylow::ThetaSpan span = sylow::theta_image_span(n);
    r.checks.push_back(eq("theta_codim", "2", dec(span.codim)));
    r.checks.push_back(
        eq("abelianization_order", dec(1ULL << (n + 1)), dec(sylow::abelianization_order(n))));
    if (brute) {
        unsigned long long quotient =
            (1ULL << (n * n)) / sylow::brute_commutator_order(n);
        r.checks.push_back(
            eq("commutator_quotient", dec(sylow::abelianization_order(n)), dec(quotient)));
    }
    r.checks.push_back(eq("linear_count_match", dec(selfdual::odd_irr_count(n)),
                          dec(sylow::abelianization_order(n))));
    if (n <= 5)
        r.checks.push_back(
            eq("v_abelianization", dec(1ULL << (n - 1)), dec(sylow::v_abelianization_order(n))));
    stamp_runtime(r, t0);
    return r;
}

Report cmd_oracle(const std::string& target, bool confirm_large, int jobs) {
    if (target != "sp4f2" && target != "sp6f2")
        throw std::invalid_argument("oracle: target must be sp4f2 or sp6f2");
    if (jobs < 1)
        throw std::invalid_argument("oracle: jobs must be positive");
    if (target == "sp6f2" && !confirm_large)
        throw std::invalid_argument(
            "oracle: sp6f2 walks 1451520 elements (about 1 GiB peak; tune MCKAY_MEM_CAP_MB); "
            "pass --confirm-large to proceed");
    auto t0 = Clock::now();
    Report r;
    r.command = "oracle";
    r.parameters = {{"target", target}, {"jobs", dec(static_cast<long>(jobs))}};

    long n = target == "sp4f2" ? 2 : 3;
    unsigned long long order = 1ULL << (n * n);
    for (long i = 1; i <= n; ++i) order *= (1ULL << (2 * i)) - 1;
    engine::ConcreteGroup group = engine::sp2n_group(n, order, jobs);
    r.checks.push_back(eq("group_order", dec(order), dec(group.size())));

    std::vector<engine::Element> u = engine::sylow_u_packed_elements(n);
    std::vector<engine::Element> nor = engine::normalizer(group, u, jobs);
    r.checks.push_back(eq("normalizer_order", dec(1ULL << (n * n)), dec(nor.size())));
    auto sorted_u = u;
    auto sorted_nor = nor;
    std::sort(sorted_u.begin(), sorted_u.end());
    std::sort(sorted_nor.begin(), sorted_nor.end());
    bool same_set = sorted_u == sorted_nor;
    r.checks.push_back({"normalizer_equals_sylow", "1", same_set ? "1" : "0", same_set});

    if (n == 2) {
        engine::ClassPartition part = engine::conjugacy_classes(group);
        r.checks.push_back(eq("class_count", "11", dec(part.classes.size())));
        std::vector<long> degrees = engine::dixon_degrees(group);
        r.checks.push_back(eq("degrees", "1 1 5 5 5 5 9 9 10 10 16", join_longs(degrees)));
        unsigned long long square_sum = 0;
        long odd_count = 0;
        for (long d : degrees) {
            square_sum += static_cast<unsigned long long>(d) * d;
            odd_count += d % 2;
        }
        r.checks.push_back(eq("degree_square_sum", dec(order), dec(square_sum)));
        r.checks.push_back(eq("odd_degree_count", "8", dec(odd_count)));
    }
    stamp_runtime(r, t0);
    return r;
}

Report cmd_sp4(long q, long ell) {
    if (q != 4 && q != 8 && q != 16 && q != 32)
        throw std::invalid_argument("sp4: q must be one of 4, 8, 16, 32");
    long e = sp4::order_of_q_mod_ell(q, ell);
    long m = log2_of(q);
    auto t0 = Clock::now();
    Report r;
    r.command = "sp4";
    r.parameters = {{"q", dec(q)}, {"ell", dec(ell)}, {"e", dec(e)}, {"m", dec(m)}};

    sp4::TorusModel torus = sp4::torus_structure(q, e);
    long closed_order = e == 1   ? (q - 1) * (q - 1)
                        : e == 2 ? (q + 1) * (q + 1)
                                 : q * q + 1;
    r.checks.push_back(eq("torus_order", dec(closed_order), dec(torus.d1 * torus.d2)));
    std::string closed_factors = e == 4 ? "1 " + dec(q * q + 1)
                                        : dec(e == 1 ? q - 1 : q + 1) + " " +
                                              dec(e == 1 ? q - 1 : q + 1);
    r.checks.push_back(
        eq("invariant_factors", closed_factors, dec(torus.d1) + " " + dec(torus.d2)));

    sp4::LocalGroup local = sp4::build_local_group(q, e, 1);
    long weyl_order = e == 4 ? 4 : 8;
    r.checks.push_back(eq("group_order", dec(closed_order * weyl_order), dec(local.group.size())));

    engine::ClassPartition part = engine::conjugacy_classes(local.group);
    r.checks.push_back(
        eq("class_count", dec(sp4::predicted_irr_count(q, e)), dec(part.classes.size())));
    if (local.group.size() <= 5000) {
        std::vector<long> degrees = engine::dixon_degrees(local.group);
        r.checks.push_back(eq("dixon_count", dec(part.classes.size()), dec(degrees.size())));
        unsigned long long square_sum = 0;
        for (long d : degrees) square_sum += static_cast<unsigned long long>(d) * d;
        r.checks.push_back(eq("degree_square_sum", dec(local.group.size()), dec(square_sum)));
    }

    r.table.header = {"a", "weyl_fixed", "fixed_brauer", "fixed_census"};
    for (long a = 1; a <= 2 * m; ++a) {
        std::string tag = "_a" + std::to_string(a);
        long weyl_fixed = sp4::weyl_fixed_irr(e, a);
        long weyl_expected = e == 4 ? 4 : (a % 2 ? 3 : 5);
        r.checks.push_back(eq("weyl_fixed" + tag, dec(weyl_expected), dec(weyl_fixed)));
        sp4::FixedCount fixed = sp4::fixed_irr_detail(q, e, a);
        r.checks.push_back(
            {"fixed_match" + tag, dec(fixed.census), dec(fixed.brauer),
             fixed.census == fixed.brauer});
        r.table.rows.push_back({dec(a), dec(weyl_fixed), dec(fixed.brauer), dec(fixed.census)});

        sp4::UnipotentSummary uni = sp4::unipotent_side_summary(a);
        long moved = e == 1 ? uni.moved_e1 : e == 2 ? uni.moved_e2 : uni.moved_e4;
        long moved_expected = (e != 4 && a % 2) ? 2 : 0;
        r.checks.push_back(eq("unipotent_moved" + tag, dec(moved_expected), dec(moved)));
    }
    stamp_runtime(r, t0);
    return r;
}

std::string render_table(const Report& r) {
    std::ostringstream out;
    out << "command: " << r.command << "\n";
    for (const auto& [name, value] : r.parameters) out << "  " << name << " = " << value << "\n";
    out << "\n";

    std::size_t w_name = 5, w_expected = 8, w_actual = 6;
    for (const Check& c : r.checks) {
        w_name = std::max(w_name, c.name.size());
        w_expected = std::max(w_expected, c.expected.size());
        w_actual = std::max(w_actual, c.actual.size());
    }
    auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w - s.size(), ' ');
    };
    out << "  " << pad("check", w_name) << "  " << pad("expected", w_expected) << "  "
        << pad("actual", w_actual) << "  result\n";
    for (const Check& c : r.checks)
        out << "  " << pad(c.name, w_name) << "  " << pad(c.expected, w_expected) << "  "
            << pad(c.actual, w_actual) << "  " << (c.pass ? "PASS" : "FAIL") << "\n";

    if (!r.table.rows.empty()) {
        out << "\n";
        std::vector<std::size_t> widths(r.table.header.size());
        for (std::size_t i = 0; i < r.table.header.size(); ++i)
            widths[i] = r.table.header[i].size();
        for (const auto& row : r.table.rows)
            for (std::size_t i = 0; i < row.size(); ++i)
                widths[i] = std::max(widths[i], row[i].size());
        auto emit_row = [&](const std::vector<std::string>& row) {
            out << " ";
            for (std::size_t i = 0; i < row.size(); ++i) out << " " << pad(row[i], widths[i]);
            out << "\n";
        };
        emit_row(r.table.header);
        for (const auto& row : r.table.rows) emit_row(row);
    }

    out << "\noverall: " << (r.passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string render_json(const Report& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : r.parameters) params[name] = value;
    j["parameters"] = params;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const Check& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["expected"] = c.expected;
        jc["actual"] = c.actual;
        jc["pass"] = c.pass;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    if (!r.table.rows.empty()) {
        nlohmann::ordered_json table;
        table["header"] = r.table.header;
        table["rows"] = r.table.rows;
        j["table"] = table;
    }
    j["pass"] = r.passed();
    return j.dump(2) + "\n";
}

std::string render_csv(const Report& r) {
    if (r.table.rows.empty())
        throw std::invalid_argument("csv: the " + r.command + " report has no table");
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            out << row[i];
        }
        out << "\n";
    };
    emit(r.table.header);
    for (const auto& row : r.table.rows) emit(row);
    return out.str();
}

}  // namespace mckay::reports
