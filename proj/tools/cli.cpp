#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "permtop/complex.hpp"
#include "permtop/experiment.hpp"
#include "permtop/homotopy.hpp"
#include "permtop/integrals.hpp"
#include "permtop/nerve.hpp"
#include "permtop/verify.hpp"

namespace permtop {

namespace {

std::string decimal(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

nlohmann::ordered_json parse_json(const std::string& s)
{
    return nlohmann::ordered_json::parse(s);
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Homotopy types and connectivity of random permutation complexes"};
    app.require_subcommand(1);

    std::string perm_text;
    auto* htype = app.add_subcommand("htype", "Classify the order complex of a permutation");
    htype->add_option("--perm", perm_text, "One-line notation, e.g. \"3 2 5 4 1 7 6\" or 3254176")->required();

    int n = 0, r = 0;
    auto* exact = app.add_subcommand("exact-prob", "Exact p_r(n) by enumeration (n <= 10)");
    exact->add_option("--n", n)->required()->check(CLI::Range(0, kExactEnumerationGuard));
    exact->add_option("--r", r)->required()->check(CLI::Range(-1, 1000));

    std::uint64_t samples = 0, seed = 0;
    unsigned workers = 1;
    auto* estimate = app.add_subcommand("estimate", "Monte Carlo estimate of p_r(n)");
    estimate->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    estimate->add_option("--r", r)->required()->check(CLI::Range(-1, 1000));
    estimate->add_option("--samples", samples)->required()->check(CLI::PositiveNumber);
    estimate->add_option("--seed", seed)->required();
    estimate->add_option("--workers", workers)->check(CLI::PositiveNumber);

    std::vector<int> n_list;
    std::string out_path;
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo estimates over several n, written as CSV");
    sweep->add_option("--r", r)->required()->check(CLI::Range(-1, 1000));
    sweep->add_option("--n-list", n_list)->required()->delimiter(',')->check(CLI::PositiveNumber);
    sweep->add_option("--samples", samples)->required()->check(CLI::PositiveNumber);
    sweep->add_option("--seed", seed)->required();
    sweep->add_option("--workers", workers)->check(CLI::PositiveNumber);
    sweep->add_option("--out", out_path)->required();

    int k = 0, l = 0;
    std::uint64_t mc_samples = 0;
    auto* integral = app.add_subcommand("integral", "Exact I(k,l), its upper bound, optional Monte Carlo check");
    integral->add_option("--k", k)->required()->check(CLI::Range(0, kIntegralGuard));
    integral->add_option("--l", l)->required()->check(CLI::Range(0, kIntegralGuard));
    integral->add_option("--mc-samples", mc_samples);
    integral->add_option("--seed", seed, "Seed for the Monte Carlo check");

    auto* point_model = app.add_subcommand("point-model", "Sample a point configuration and classify it");
    // the number of spheres grows exponentially with n for random input
    point_model->add_option("--n", n)->required()->check(CLI::Range(0, 300));
    point_model->add_option("--seed", seed)->required();

    std::string suite = "all";
    int max_n = 7;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", suite)->check(CLI::IsMember(verify_suite_names()));
    verify->add_option("--max-n", max_n)->check(CLI::Range(1, 9));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    if (integral->parsed() && mc_samples > 0 && integral->count("--seed") == 0) {
        err << "--mc-samples requires --seed\n";
        return 2;
    }

    try {
        if (htype->parsed()) {
            out << homotopy_type(parse_permutation(perm_text)).to_json() << "\n";
        } else if (exact->parsed()) {
            const auto p = exact_p(n, r);
            out << to_string(p) << " (" << decimal(to_double(p)) << ")\n";
        } else if (estimate->parsed()) {
            err << "estimating p_" << r << "(" << n << ") from " << samples << " samples\n";
            out << estimate_p({n, r, samples, seed, workers}).to_json() << "\n";
        } else if (sweep->parsed()) {
            std::ofstream csv(out_path);
            if (!csv) {
                err << "cannot open " << out_path << "\n";
                return 2;
            }
            csv << EstimateResult::csv_header() << "\n";
            for (int m : n_list) {
                err << "n = " << m << "\n";
                csv << estimate_p({m, r, samples, seed, workers}).csv_row() << "\n";
            }
        } else if (integral->parsed()) {
            const auto check = check_I_bound(k, l);
            const auto bound = bound_I(k, l);
            nlohmann::ordered_json j;
            j["k"] = k;
            j["l"] = l;
            j["exact"] = to_string(check.lhs);
            j["exact_decimal"] = to_double(check.lhs);
            j["bound"] = to_double(bound.factor) * static_cast<double>(bound.log_term);
            j["bound_factor"] = to_string(bound.factor);
            j["holds"] = check.holds;
            if (mc_samples > 0) {
                Rng rng = make_stream(seed, 0);
                const auto mc = integral_I_mc(k, l, mc_samples, rng);
                j["mc_estimate"] = mc.estimate;
                j["mc_std_error"] = mc.std_error;
                j["mc_z"] = mc.std_error > 0 ? (mc.estimate - to_double(check.lhs)) / mc.std_error : 0.0;
            }
            out << j.dump() << "\n";
        } else if (point_model->parsed()) {
            Rng rng = make_stream(seed, 0);
            const auto q = sample_config(n, rng);
            nlohmann::ordered_json j;
            j["points"] = parse_json(q.to_json());
            if (n >= 1) {
                const auto pi = to_permutation(q);
                j["permutation"] = pi.values();
                j["homotopy_type"] = parse_json(homotopy_type(pi).to_json());
            } else {
                j["permutation"] = nlohmann::ordered_json::array();
                j["homotopy_type"] = parse_json(HomotopyType::empty().to_json());
            }
            j["minimal_elements"] = minimal_elements(q);
            out << j.dump() << "\n";
        } else if (verify->parsed()) {
            const auto results = run_verify_suite(suite, max_n);
            bool all = true;
            for (const auto& c : results) {
                out << (c.note ? "NOTE  " : c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(10) << c.suite << c.name;
                if (!c.detail.empty())
                    out << "  [" << c.detail << "]";
                out << "\n";
                all = all && (c.note || c.passed);
            }
            out << (all ? "all checks passed" : "some checks FAILED") << "\n";
            return all ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace permtop
