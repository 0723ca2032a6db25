// Command-line front end: single-stratum reports, per-p_g moduli summaries,
// delta profiles, and verification sweeps, as JSON, CSV, or text tables.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/validation error.

#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "noether/errors.hpp"
#include "noether/render.hpp"

namespace {

using noether::render::OutputFormat;

struct FormatOption {
    OutputFormat value = OutputFormat::Table;
};

void add_format_flag(CLI::App* cmd, FormatOption& opt) {
    static const std::map<std::string, OutputFormat> names{
        {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}, {"table", OutputFormat::Table}};
    cmd->add_option("--format", opt.value, "output format (default table)")
        ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical threefolds on the Noether line: stratification calculator"};
    app.require_subcommand(1);

    std::int64_t d = 0, d0 = 0, pg = 0, from = 0, to = 0;

    CLI::App* stratum = app.add_subcommand("stratum", "one stratum record for a type (d, d0)");
    stratum->add_option("--d", d, "first classifying integer (p_g = 3d - 2)")->required();
    stratum->add_option("--d0", d0, "second classifying integer")->required();
    FormatOption stratum_format;
    add_format_flag(stratum, stratum_format);

    CLI::App* moduli_cmd = app.add_subcommand("moduli", "moduli summary for one p_g");
    CLI::Option* pg_opt = moduli_cmd->add_option("--pg", pg, "geometric genus (>= 11)");
    CLI::Option* d_opt = moduli_cmd->add_option("--d", d, "alternative: d with p_g = 3d - 2");
    pg_opt->excludes(d_opt);
    d_opt->excludes(pg_opt);
    FormatOption moduli_format;
    add_format_flag(moduli_cmd, moduli_format);

    CLI::App* profile = app.add_subcommand("profile", "delta profile and stratum table for one d");
    profile->add_option("--d", d, "d >= 5")->required();
    FormatOption profile_format;
    add_format_flag(profile, profile_format);

    CLI::App* verify = app.add_subcommand("verify", "closed-form vs brute-force sweep");
    verify->add_option("--from", from, "first d (>= 5)")->required();
    verify->add_option("--to", to, "last d")->required();
    FormatOption verify_format;
    add_format_flag(verify, verify_format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (stratum->parsed()) {
            const auto f = noether::fibration::validate(d, d0);
            std::cout << noether::render::render_stratum(f, stratum_format.value);
            return 0;
        }
        if (moduli_cmd->parsed()) {
            if (pg_opt->count() == 0 && d_opt->count() == 0) {
                std::cerr << "moduli: one of --pg or --d is required\n";
                return 2;
            }
            if (d_opt->count() > 0)
                pg = noether::checked::sub(noether::checked::mul(3, d), 2);
            const auto summary = noether::moduli::moduli_summary(pg);
            std::cout << noether::render::render_moduli(summary, moduli_format.value);
            return 0;
        }
        if (profile->parsed()) {
            const auto prof = noether::moduli::delta_profile(d);
            const auto rows = noether::render::profile_rows(d);
            std::cout << noether::render::render_profile(prof, rows, profile_format.value);
            return 0;
        }
        if (verify->parsed()) {
            const auto report = noether::oracle::verify_range(from, to);
            std::cout << noether::render::render_verify(report, verify_format.value);
            return report.passed() ? 0 : 1;
        }
    } catch (const noether::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
