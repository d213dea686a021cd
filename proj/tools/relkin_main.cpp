// relkin: scenario runner for the two synchronization conventions.
//
// Subcommands: roundtrip, kappa-sweep, group-audit, equivalence, rod,
// compose. Reports go to stdout as text or JSON (--format); kappa-sweep
// additionally writes a CSV file. Exit status: 0 when every assertion in
// the run passed, 1 on assertion failure, 2 on usage or domain errors.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relkin/audit.hpp"
#include "relkin/batch.hpp"
#include "relkin/boost.hpp"
#include "relkin/ether.hpp"
#include "relkin/rng.hpp"
#include "relkin/scenarios.hpp"
#include "relkin/sync.hpp"
#include "relkin/velocity.hpp"

namespace {

using json = nlohmann::json;
using relkin::Velocity;
using relkin::audit::BatteryResult;

constexpr int kExitOk = 0;
constexpr int kExitAssertionFailed = 1;
constexpr int kExitUsage = 2;

// Full-precision decimal for CSV columns: round-trips to the same double.
std::string full_precision(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Human-readable text output, still good to 15 significant digits.
std::string pretty(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

struct CommonConfig {
    double c = 1.0;
    double tolerance = 1e-10;
    std::uint64_t seed = 42;
    std::string format = "text";
    std::string backend = "auto";
};

struct Report {
    std::string command;
    json config;
    json results;
    std::vector<BatteryResult> assertions;

    bool all_pass() const {
        return std::all_of(assertions.begin(), assertions.end(),
                           [](const BatteryResult& a) { return a.pass; });
    }

    void add(std::string name, double dev, double tol) {
        assertions.push_back(
            BatteryResult{std::move(name), dev, tol, dev <= tol, 0});
    }
};

json config_json(const std::string& command, const CommonConfig& cfg) {
    json j;
    j["command"] = command;
    j["c"] = cfg.c;
    j["tolerance"] = cfg.tolerance;
    j["seed"] = cfg.seed;
    j["format"] = cfg.format;
    j["backend"] = std::string(relkin::batch::backend_name());
    j["rng"] = relkin::rng::kEngineName;
    return j;
}

void print_text_value(std::ostream& os, const std::string& key,
                      const json& v, int indent) {
    os << std::string(static_cast<std::size_t>(indent), ' ') << key << ": ";
    if (v.is_object()) {
        os << "\n";
        for (const auto& [k, sub] : v.items()) {
            print_text_value(os, k, sub, indent + 2);
        }
        return;
    }
    if (v.is_number_float()) {
        os << pretty(v.get<double>());
    } else if (v.is_string()) {
        os << v.get<std::string>();
    } else {
        os << v.dump();
    }
    os << "\n";
}

int emit(const Report& report, const CommonConfig& cfg) {
    const std::string verdict = report.all_pass() ? "PASS" : "FAIL";
    if (cfg.format == "json") {
        json j;
        j["config"] = report.config;
        j["results"] = report.results;
        j["assertions"] = json::array();
        for (const auto& a : report.assertions) {
            j["assertions"].push_back({{"name", a.name},
                                       {"max_deviation", a.max_deviation},
                                       {"tolerance", a.tolerance},
                                       {"pass", a.pass}});
        }
        j["verdict"] = verdict;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "relkin " << report.command << "\n";
        print_text_value(std::cout, "config", report.config, 2);
        print_text_value(std::cout, "results", report.results, 2);
        for (const auto& a : report.assertions) {
            std::cout << "  assert " << a.name
                      << ": max_deviation=" << pretty(a.max_deviation)
                      << " tolerance=" << pretty(a.tolerance) << " "
                      << (a.pass ? "PASS" : "FAIL") << "\n";
        }
        std::cout << "verdict: " << verdict << "\n";
    }
    return report.all_pass() ? kExitOk : kExitAssertionFailed;
}

double rel_dev(double a, double b) {
    const double m = std::max(std::abs(a), std::abs(b));
    return m == 0.0 ? 0.0 : std::abs(a - b) / m;
}

// ---------------------------------------------------------------------------
// roundtrip

int cmd_roundtrip(double eps_value, double length, const std::string& basis,
                  const CommonConfig& cfg) {
    const Velocity eps(eps_value);
    const auto rec = relkin::ether::round_trip_true(length, eps);
    const auto forms = relkin::ether::round_trip_closed_form(length, eps);
    const auto true_rep =
        relkin::sync::round_trip_report(length, eps,
                                        relkin::sync::TimeBasis::TrueTime);
    const auto local_rep =
        relkin::sync::round_trip_report(length, eps,
                                        relkin::sync::TimeBasis::LocalTime);

    // Times cross the unit boundary here: reports carry t / c.
    const double tc = 1.0 / cfg.c;

    Report report;
    report.command = "roundtrip";
    report.config = config_json("roundtrip", cfg);
    report.config["eps"] = eps_value;
    report.config["length"] = length;
    report.config["basis"] = basis;

    if (basis == "true" || basis == "both") {
        report.results["true_time"] = {
            {"t1", rec.t1 * tc},       {"t2", rec.t2 * tc},
            {"t3", rec.t3 * tc},       {"xA1", rec.xA1},
            {"xB2", rec.xB2},          {"xA3", rec.xA3},
            {"forth", true_rep.forth * tc}, {"back", true_rep.back * tc},
            {"kappa", true_rep.kappa}};
    }
    if (basis == "local" || basis == "both") {
        report.results["local_time"] = {{"forth", local_rep.forth * tc},
                                        {"back", local_rep.back * tc},
                                        {"kappa", local_rep.kappa}};
    }
    report.results["closed_form"] = {{"t2", forms.t2 * tc},
                                     {"t3", forms.t3 * tc},
                                     {"xB2", forms.xB2},
                                     {"xA3", forms.xA3}};
    report.results["kappa_true_formula"] = relkin::sync::kappa_true(eps);

    report.add("geometric-vs-closed-form",
               std::max({rel_dev(rec.t2, forms.t2), rel_dev(rec.t3, forms.t3),
                         rel_dev(rec.xB2, forms.xB2),
                         rel_dev(rec.xA3, forms.xA3)}),
               cfg.tolerance);
    report.add("light-slope",
               std::max(std::abs(std::abs(rec.xB2 - rec.xA1) -
                                 (rec.t2 - rec.t1)),
                        std::abs(std::abs(rec.xA3 - rec.xB2) -
                                 (rec.t3 - rec.t2))),
               cfg.tolerance);
    report.add("local-time-covariance",
               std::max(rel_dev(local_rep.forth, length),
                        rel_dev(local_rep.back, length)),
               cfg.tolerance);
    report.add("kappa-true-vs-formula",
               std::abs(true_rep.kappa - relkin::sync::kappa_true(eps)),
               cfg.tolerance);
    report.add("kappa-local-is-half", std::abs(local_rep.kappa - 0.5),
               cfg.tolerance);

    return emit(report, cfg);
}

// ---------------------------------------------------------------------------
// kappa-sweep

std::vector<double> sweep_grid(double from, double to, double step) {
    if (from == to) {
        return {from};
    }
    const std::size_t n =
        static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = from + static_cast<double>(i) * step;
    }
    return grid;
}

int cmd_kappa_sweep(double from, double to, double step,
                    const std::string& out_path, const CommonConfig& cfg) {
    const std::vector<double> eps = sweep_grid(from, to, step);
    const std::size_t n = eps.size();
    std::vector<double> length(n, 1.0);
    std::vector<double> t2(n), t3(n), xB2(n), xA3(n), forth_l(n), back_l(n);
    relkin::batch::round_trip_batch(
        length, eps,
        relkin::batch::RoundTripArrays{t2, t3, xB2, xA3, forth_l, back_l});
    std::vector<double> kappa_formula(n);
    relkin::batch::kappa_true_batch(eps, kappa_formula);

    std::ostringstream csv;
    csv << "eps,kappa_true_sim,kappa_true_formula,kappa_local\n";
    double dev_formula = 0.0;
    double dev_local = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double forth_true = t2[i];
        const double back_true = t3[i] - t2[i];
        const double k_sim =
            relkin::sync::kappa_of(forth_true, back_true);
        const double k_local = relkin::sync::kappa_of(forth_l[i], back_l[i]);
        csv << full_precision(eps[i]) << "," << full_precision(k_sim) << ","
            << full_precision(kappa_formula[i]) << ","
            << full_precision(k_local) << "\n";
        dev_formula = std::max(dev_formula,
                               std::abs(k_sim - kappa_formula[i]));
        dev_local = std::max(dev_local, std::abs(k_local - 0.5));
    }

    if (out_path == "-") {
        std::cout << csv.str();
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "relkin: cannot open output file: " << out_path
                      << "\n";
            return kExitUsage;
        }
        file << csv.str();
    }

    Report report;
    report.command = "kappa-sweep";
    report.config = config_json("kappa-sweep", cfg);
    report.config["from"] = from;
    report.config["to"] = to;
    report.config["step"] = step;
    report.config["out"] = out_path;
    report.results["rows"] = n;
    report.add("kappa-sim-vs-formula", dev_formula, cfg.tolerance);
    report.add("kappa-local-is-half", dev_local, cfg.tolerance);

    if (out_path == "-") {
        // CSV already went to stdout; keep the stream a clean tabular file
        // and settle the verdict through the exit status alone.
        return report.all_pass() ? kExitOk : kExitAssertionFailed;
    }
    return emit(report, cfg);
}

// ---------------------------------------------------------------------------
// audits

Report audit_report(const std::string& command,
                    const relkin::audit::AuditReport& audit,
                    const CommonConfig& cfg) {
    Report report;
    report.command = command;
    report.config = config_json(command, cfg);
    report.results["max_deviation"] = audit.max_deviation();
    for (const auto& b : audit.batteries) {
        report.assertions.push_back(b);
    }
    return report;
}

int cmd_group_audit(std::size_t samples, const CommonConfig& cfg) {
    const auto audit =
        relkin::audit::group_audit(samples, cfg.seed, cfg.tolerance);
    Report report = audit_report("group-audit", audit, cfg);
    report.config["samples"] = samples;
    report.results["trials"] = samples;
    return emit(report, cfg);
}

int cmd_equivalence(std::size_t grid, const CommonConfig& cfg) {
    const auto audit =
        relkin::audit::equivalence_grid_audit(grid, cfg.seed, cfg.tolerance);
    Report report = audit_report("equivalence", audit, cfg);
    report.config["grid"] = grid;
    report.results["points"] = grid;
    return emit(report, cfg);
}

// ---------------------------------------------------------------------------
// rod

json rod_json(const relkin::scenarios::RodMeasurement& m) {
    return {{"convention",
             m.convention == relkin::scenarios::Convention::Einstein
                 ? "einstein"
                 : "poincare"},
            {"home_frame_length", m.measured_in_home_frame},
            {"cross_frame_length", m.measured_from_other_frame}};
}

int cmd_rod(double eps_value, double length, const std::string& convention,
            const CommonConfig& cfg) {
    const Velocity eps(eps_value);
    const double expected_cross = length / relkin::gamma(eps);

    Report report;
    report.command = "rod";
    report.config = config_json("rod", cfg);
    report.config["eps"] = eps_value;
    report.config["length"] = length;
    report.config["convention"] = convention;
    report.results["expected_cross_length"] = expected_cross;

    std::vector<relkin::scenarios::Convention> conventions;
    if (convention == "einstein" || convention == "both") {
        conventions.push_back(relkin::scenarios::Convention::Einstein);
    }
    if (convention == "poincare" || convention == "both") {
        conventions.push_back(relkin::scenarios::Convention::PoincareEther);
    }

    for (const auto c : conventions) {
        const auto m = relkin::scenarios::measure_rod(length, eps, c);
        const auto swapped =
            relkin::scenarios::measure_rod_swapped(length, eps, c);
        const bool einstein = c == relkin::scenarios::Convention::Einstein;
        const std::string tag = einstein ? "einstein" : "poincare";
        report.results[tag] = rod_json(m);
        report.results[tag]["swapped_cross_frame_length"] =
            swapped.measured_from_other_frame;
        if (!einstein) {
            report.results[tag]["ether_real_length"] =
                relkin::ether::RodConfiguration::make(length, eps)
                    .contracted_length;
        }
        report.add(tag + "-home-length",
                   rel_dev(m.measured_in_home_frame, length), cfg.tolerance);
        report.add(tag + "-cross-length",
                   rel_dev(m.measured_from_other_frame, expected_cross),
                   cfg.tolerance);
        report.add(tag + "-reciprocity",
                   rel_dev(swapped.measured_from_other_frame, expected_cross),
                   cfg.tolerance);
    }

    return emit(report, cfg);
}

// ---------------------------------------------------------------------------
// compose

int cmd_compose(double eps1, double l1, double eps2, double l2,
                const CommonConfig& cfg) {
    const relkin::Boost b1(Velocity(eps1), l1);
    const relkin::Boost b2(Velocity(eps2), l2);
    const relkin::Boost composed = relkin::boost_compose(b1, b2);

    // Independent route: multiply the 2x2 (t, x) matrices and read the
    // parameters back off the product.
    const auto matrix = [](const relkin::Boost& b) {
        const double kl = b.scale() * b.gamma();
        const double e = b.velocity().value();
        return std::array<double, 4>{kl, -kl * e, -kl * e, kl};
    };
    const auto m1 = matrix(b1);
    const auto m2 = matrix(b2);
    const std::array<double, 4> prod{
        m2[0] * m1[0] + m2[1] * m1[2], m2[0] * m1[1] + m2[1] * m1[3],
        m2[2] * m1[0] + m2[3] * m1[2], m2[2] * m1[1] + m2[3] * m1[3]};
    const auto mc = matrix(composed);
    double matrix_dev = 0.0;
    for (int i = 0; i < 4; ++i) {
        matrix_dev = std::max(matrix_dev, rel_dev(prod[static_cast<std::size_t>(i)],
                                                  mc[static_cast<std::size_t>(i)]));
    }

    const relkin::Boost round_trip =
        relkin::boost_compose(composed, relkin::boost_inverse(composed));

    Report report;
    report.command = "compose";
    report.config = config_json("compose", cfg);
    report.config["eps1"] = eps1;
    report.config["l1"] = l1;
    report.config["eps2"] = eps2;
    report.config["l2"] = l2;
    report.results["composed"] = {{"eps", composed.velocity().value()},
                                  {"scale", composed.scale()}};
    report.results["velocity_composition"] =
        relkin::compose_velocities(Velocity(eps1), Velocity(eps2)).value();

    report.add("matrix-cross-check", matrix_dev, cfg.tolerance);
    report.add("inverse-roundtrip",
               std::max(std::abs(round_trip.velocity().value()),
                        std::abs(round_trip.scale() - 1.0)),
               cfg.tolerance);

    return emit(report, cfg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Special-relativity kinematics under the two rival "
                 "synchronization conventions"};
    app.require_subcommand(1);

    CommonConfig cfg;
    app.add_option("--c", cfg.c, "Speed of light for report units")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--tolerance", cfg.tolerance, "Assertion tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for randomized audits")
        ->capture_default_str();
    app.add_option("--format", cfg.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--backend", cfg.backend, "Kernel backend")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}))
        ->capture_default_str();
    app.fallthrough();

    // Parse-time rejection of out-of-domain velocities.
    const CLI::Validator SubLuminal(
        [](std::string& s) -> std::string {
            const double v = std::strtod(s.c_str(), nullptr);
            if (!(std::abs(v) < 1.0)) {
                return "velocity ratio must satisfy |eps| < 1, got " + s;
            }
            return {};
        },
        "SUBLUMINAL");

    double eps = 0.0;
    double eps2 = 0.0;
    double l1 = 1.0;
    double l2 = 1.0;
    double length = 1.0;
    double from = 0.0;
    double to = 0.0;
    double step = 0.1;
    std::string out_path = "-";
    std::string convention = "both";
    std::string basis = "both";
    std::size_t samples = 10000;
    std::size_t grid = 100;

    auto* roundtrip = app.add_subcommand(
        "roundtrip", "Forth/back light exchange in true and local time");
    roundtrip->add_option("--eps", eps, "Station velocity v/c")
        ->required()
        ->check(SubLuminal);
    roundtrip->add_option("--length", length, "Rod rest length")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    roundtrip->add_option("--basis", basis, "Time basis to report")
        ->check(CLI::IsMember({"true", "local", "both"}))
        ->capture_default_str();

    auto* sweep = app.add_subcommand(
        "kappa-sweep", "Tabulate the synchrony parameter over a velocity grid");
    sweep->add_option("--from", from, "Grid start")
        ->required()
        ->check(SubLuminal);
    sweep->add_option("--to", to, "Grid end")->required()->check(SubLuminal);
    sweep->add_option("--step", step, "Grid step")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep->add_option("--out", out_path, "Output CSV path ('-' for stdout)")
        ->capture_default_str();

    auto* group = app.add_subcommand(
        "group-audit", "Randomized group-structure property batteries");
    group->add_option("--samples", samples, "Number of random trials")
        ->check(CLI::Range(std::size_t{1},
                           std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();

    auto* equivalence = app.add_subcommand(
        "equivalence", "Observable agreement of the two conventions");
    equivalence->add_option("--grid", grid, "Number of random (L, eps) points")
        ->check(CLI::Range(std::size_t{1},
                           std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();

    auto* rod = app.add_subcommand(
        "rod", "Rod length measurements under each convention");
    rod->add_option("--eps", eps, "Rod velocity v/c")
        ->required()
        ->check(SubLuminal);
    rod->add_option("--length", length, "Rod rest length")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    rod->add_option("--convention", convention, "Measurement pipeline")
        ->check(CLI::IsMember({"einstein", "poincare", "both"}))
        ->capture_default_str();

    auto* compose = app.add_subcommand(
        "compose", "Compose two transformations and cross-check");
    compose->add_option("--eps1", eps, "First velocity")
        ->required()
        ->check(SubLuminal);
    compose->add_option("--l1", l1, "First scale")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    compose->add_option("--eps2", eps2, "Second velocity")
        ->required()
        ->check(SubLuminal);
    compose->add_option("--l2", l2, "Second scale")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);  // prints help or the parse diagnostic
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cfg.backend == "scalar") {
            relkin::batch::set_backend(relkin::batch::Backend::Scalar);
        } else if (cfg.backend == "avx2") {
            relkin::batch::set_backend(relkin::batch::Backend::Avx2);
        } else {
            relkin::batch::set_backend(relkin::batch::Backend::Auto);
        }

        if (roundtrip->parsed()) {
            return cmd_roundtrip(eps, length, basis, cfg);
        }
        if (sweep->parsed()) {
            if (from > to) {
                std::cerr << "relkin: --from must not exceed --to\n";
                return kExitUsage;
            }
            (void)Velocity(from);
            (void)Velocity(to);
            return cmd_kappa_sweep(from, to, step, out_path, cfg);
        }
        if (group->parsed()) {
            return cmd_group_audit(samples, cfg);
        }
        if (equivalence->parsed()) {
            return cmd_equivalence(grid, cfg);
        }
        if (rod->parsed()) {
            return cmd_rod(eps, length, convention, cfg);
        }
        if (compose->parsed()) {
            return cmd_compose(eps, l1, eps2, l2, cfg);
        }
    } catch (const std::exception& e) {
        std::cerr << "relkin: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
