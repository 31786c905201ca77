#include <exception>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "mckay/reports.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification driver: character counts and Sylow structure of Sp_2n(F2), "
                 "local equivariance for Sp4(2^m)"};
    app.require_subcommand(1);

    std::string format = "table";
    int jobs = 1;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_option("--jobs", jobs, "worker threads for group walks")
            ->check(CLI::PositiveNumber);
    };

    long max_n = 0;
    CLI::App* prop1 = app.add_subcommand("prop1", "odd-degree symbol classification per rank");
    prop1->add_option("--max-n", max_n, "largest rank, 2..16")->required();
    add_common(prop1);

    long count_n = 0;
    std::string mode = "enumerate";
    CLI::App* count = app.add_subcommand("count", "semisimple census and odd character count");
    count->add_option("--n", count_n, "rank, 2..62 (enumerate caps at 12)")->required();
    count->add_option("--mode", mode, "enumerate or formula");
    add_common(count);

    long sylow_n = 0;
    bool brute = false;
    CLI::App* sylow = app.add_subcommand("sylow", "Sylow 2-subgroup abelianization checks");
    sylow->add_option("--n", sylow_n, "rank, 2..62")->required();
    sylow->add_flag("--brute", brute, "also close all commutators pairwise (n <= 4)");
    add_common(sylow);

    std::string target;
    bool confirm_large = false;
    CLI::App* oracle = app.add_subcommand("oracle", "generated-group oracle for sp4f2 / sp6f2");
    oracle->add_option("target", target, "sp4f2 or sp6f2")->required();
    oracle->add_flag("--confirm-large", confirm_large,
                     "allow the 1451520-element sp6f2 walk (about 1 GiB peak)");
    add_common(oracle);

    long q = 0, ell = 0;
    CLI::App* sp4 = app.add_subcommand("sp4", "local equivariance at Sp4(2^m)");
    sp4->add_option("--q", q, "field size: 4, 8, 16, or 32")->required();
    sp4->add_option("--ell", ell, "odd prime dividing (q^4-1)(q^2-1)")->required();
    add_common(sp4);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        mckay::reports::Report report;
        if (app.got_subcommand(prop1))
            report = mckay::reports::cmd_prop1(max_n);
        else if (app.got_subcommand(count))
            report = mckay::reports::cmd_count(count_n, mode);
        else if (app.got_subcommand(sylow))
            report = mckay::reports::cmd_sylow(sylow_n, brute);
        else if (app.got_subcommand(oracle))
            report = mckay::reports::cmd_oracle(target, confirm_large, jobs);
        else
            report = mckay::reports::cmd_sp4(q, ell);

        std::string rendered = format == "json"  ? mckay::reports::render_json(report)
                               : format == "csv" ? mckay::reports::render_csv(report)
                                                 : mckay::reports::render_table(report);
        std::cout << rendered;
        return report.passed() ? 0 : kExitFail;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
