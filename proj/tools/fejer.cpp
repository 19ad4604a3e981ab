// Command-line front end: evaluation, scans, positivity certification,
// spike/jump measurement and root-table reproduction with CSV/JSON export.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fejer/certify.hpp"
#include "fejer/io.hpp"
#include "fejer/selftest.hpp"
#include "fejer/series.hpp"
#include "fejer/spikes.hpp"

namespace {

fejer::SumKind parse_kind(const std::string& s) {
    if (s == "s") return fejer::SumKind::SineBasic;
    if (s == "c") return fejer::SumKind::CosineBasic;
    if (s == "1") return fejer::SumKind::CosCos;
    if (s == "2") return fejer::SumKind::CosSin;
    if (s == "3") return fejer::SumKind::SinCos;
    if (s == "4") return fejer::SumKind::SinSin;
    throw std::invalid_argument("--sum must be one of s, c, 1, 2, 3, 4");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fejer-type trigonometric sums: evaluation, spikes and "
                 "positivity certification"};
    app.require_subcommand(1);

    std::string sum_str;
    std::int64_t n = 1;
    double x = 0.0, from = 0.0, to = 0.0;
    std::int64_t points = 0;
    std::int64_t m_max = 10;
    std::string format = "csv";
    bool pi_units = false;

    auto* eval = app.add_subcommand("eval", "evaluate one sum at one point");
    eval->add_option("--sum", sum_str, "family: s, c, 1, 2, 3 or 4")->required();
    eval->add_option("--n", n, "number of terms")->required()->check(CLI::PositiveNumber);
    eval->add_option("--x", x, "evaluation point in radians")->required();
    eval->add_flag("--pi-units", pi_units, "interpret --x as a multiple of pi");

    auto* scan = app.add_subcommand("scan", "evaluate a sum on a grid");
    scan->add_option("--sum", sum_str, "family: s, c, 1, 2, 3 or 4")->required();
    scan->add_option("--n", n, "number of terms")->required()->check(CLI::PositiveNumber);
    scan->add_option("--from", from, "grid start (radians)")->required();
    scan->add_option("--to", to, "grid end (radians)")->required();
    scan->add_option("--points", points, "number of grid points")->required();
    scan->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    scan->add_flag("--pi-units", pi_units, "interpret --from/--to as multiples of pi");

    auto* certify = app.add_subcommand("certify", "build the S^(4) positivity certificate");
    certify->add_option("--m-max", m_max, "number of certificate stages")
        ->required()->check(CLI::PositiveNumber);
    std::string cert_format = "json";
    certify->add_option("--format", cert_format, "report format")
        ->check(CLI::IsMember({"json"}));

    auto* spike = app.add_subcommand("spike", "spike prediction vs measurement");
    spike->add_option("--sum", sum_str, "family: 1, 2 or 3")->required();
    spike->add_option("--n", n, "number of terms")->required()->check(CLI::PositiveNumber);

    auto* jump = app.add_subcommand("jump", "measure the S^(4) jump near 2pi/3");
    jump->add_option("--n", n, "number of terms")->required()->check(CLI::PositiveNumber);

    auto* table1 = app.add_subcommand("table1", "root table B_m, x_m^-/pi, x_m^+/pi");
    table1->add_option("--m-max", m_max, "last stage to print")
        ->required()->check(CLI::PositiveNumber);

    auto* selftest = app.add_subcommand("selftest", "run the invariant suites");
    (void)selftest;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        if (eval->parsed()) {
            const auto kind = parse_kind(sum_str);
            const double xr = pi_units ? x * fejer::PI : x;
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g\n", fejer::eval_sum(kind, n, xr));
            std::cout << buf;
        } else if (scan->parsed()) {
            const auto kind = parse_kind(sum_str);
            const double a = pi_units ? from * fejer::PI : from;
            const double b = pi_units ? to * fejer::PI : to;
            const auto result = fejer::make_scan(kind, n, a, b, points);
            fejer::export_scan(result, format == "json" ? fejer::ExportFormat::Json
                                                        : fejer::ExportFormat::Csv,
                               std::cout);
        } else if (certify->parsed()) {
            const auto cert = fejer::build_certificate(m_max);
            std::cout << fejer::certificate_report(cert).dump(2) << "\n";
            if (!cert.all_verified) {
                std::cerr << "certificate stage " << cert.failed_stage << " failed\n";
                return 2;
            }
        } else if (spike->parsed()) {
            const auto kind = parse_kind(sum_str);
            const auto est = fejer::spike_height(kind, n);
            nlohmann::json j{{"kind", fejer::sum_kind_name(est.kind)},
                             {"location", est.location},
                             {"n", est.n},
                             {"predicted", est.predicted},
                             {"measured", est.measured},
                             {"growth_coefficient", est.growth_coefficient}};
            std::cout << j.dump(2) << "\n";
        } else if (jump->parsed()) {
            const auto jm = fejer::measure_jump(n);
            nlohmann::json j{{"n", jm.n},
                             {"window_half_width", jm.window_half_width},
                             {"left_level", jm.left_level},
                             {"right_level", jm.right_level},
                             {"jump", jm.jump},
                             {"prediction", fejer::jump_prediction()}};
            std::cout << j.dump(2) << "\n";
        } else if (table1->parsed()) {
            fejer::print_root_table(m_max, std::cout);
        } else if (selftest->parsed()) {
            if (!fejer::selftest::run_all(std::cout))
                return 2;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
