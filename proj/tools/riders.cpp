// riders: counts, tables and quasi-polynomial coefficients for nonattacking
// bishops and anassas, plus the verification batteries.
//
// Exit status: 0 success, 1 verification failure, 2 usage or output error.

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "riders/riders.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "csv";
    std::string out;

    std::string piece;
    std::int64_t m = 0;
    std::int64_t k = 0;
    std::optional<std::int64_t> below;

    std::int64_t m_max = 0;
    bool rectangular = false;
    std::int64_t offset = 0;
    std::string sequence_id;

    bool collapse = false;

    std::string suite;
    int verify_m_max = 6;
    int verify_k_max = 5;
};

riders::Family family_or_throw(const std::string& name)
{
    const auto f = riders::parse_family(name);
    if (!f)
        throw UsageError("unknown piece '" + name + "' (expected bishop, anassa, white or black)");
    return *f;
}

riders::Format format_or_throw(const std::string& name)
{
    const auto f = riders::parse_format(name);
    if (!f)
        throw UsageError("unknown format '" + name + "' (expected csv, tsv, bfile or json)");
    return *f;
}

void emit(const Options& opt, const std::string& text)
{
    if (opt.out.empty()) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream file(opt.out, std::ios::binary | std::ios::trunc);
    if (!file)
        throw UsageError("cannot open '" + opt.out + "' for writing: " + std::strerror(errno));
    file << text;
    file.close();
    if (!file)
        throw UsageError("failed writing '" + opt.out + "': " + std::strerror(errno));
}

int run_count(const Options& opt)
{
    const riders::Family family = family_or_throw(opt.piece);
    const riders::Format format = format_or_throw(opt.format);
    if (opt.k < 0)
        throw UsageError("k must be nonnegative");
    riders::Integer value;
    if (opt.below) {
        if (family != riders::Family::anassa)
            throw UsageError("--below applies to anassa only");
        if (*opt.below < 0)
            throw UsageError("--below must be nonnegative");
        value = riders::anassa_pk_closed(opt.m, opt.k, *opt.below);
    } else {
        value = riders::count_closed(family, opt.m, opt.k);
    }
    if (format == riders::Format::json) {
        nlohmann::ordered_json j;
        j["piece"] = opt.piece;
        j["m"] = opt.m;
        j["k"] = opt.k;
        if (opt.below)
            j["below"] = *opt.below;
        j["count"] = value.str();
        emit(opt, j.dump(2) + "\n");
    } else {
        emit(opt, value.str() + "\n");
    }
    return exit_ok;
}

int run_table(const Options& opt)
{
    const riders::Family family = family_or_throw(opt.piece);
    const riders::Format format = format_or_throw(opt.format);
    if (opt.m_max < 0)
        throw UsageError("m_max must be nonnegative");
    const riders::CountTable table = riders::build_table(family, opt.m_max, opt.rectangular);
    emit(opt, riders::write_table(table, format, {opt.offset, opt.sequence_id}));
    return exit_ok;
}

int run_coeffs(const Options& opt)
{
    const riders::Family family = family_or_throw(opt.piece);
    const riders::Format format = format_or_throw(opt.format);
    if (opt.k < 0)
        throw UsageError("k must be nonnegative");
    if (format == riders::Format::bfile)
        throw UsageError("coefficient tables have no b-file form");
    riders::QuasiPolynomial qp = riders::quasipolynomial(family, opt.k);
    if (opt.collapse)
        qp = riders::collapse_period(std::move(qp));
    emit(opt, riders::write_coefficients(family, opt.k, qp, format));
    return exit_ok;
}

int run_verify(const Options& opt)
{
    if (opt.verify_m_max < 0 || opt.verify_k_max < 0)
        throw UsageError("verification bounds must be nonnegative");
    riders::VerifyBounds bounds;
    bounds.oracle_m_max = opt.verify_m_max;
    bounds.collapse_m_max = opt.verify_m_max;
    bounds.coeff_k_max = opt.verify_k_max;

    std::vector<riders::Report> reports;
    const bool all = opt.suite == "all";
    if (all || opt.suite == "oracle")
        reports.push_back(riders::verify_oracle(bounds));
    if (all || opt.suite == "identities")
        reports.push_back(riders::verify_identities());
    if (all || opt.suite == "collapse")
        reports.push_back(riders::verify_collapse_suite(bounds));
    if (all || opt.suite == "coeffs")
        reports.push_back(riders::verify_coeffs(bounds));
    if (reports.empty())
        throw UsageError("unknown suite '" + opt.suite + "' (expected oracle, identities, collapse, coeffs or all)");

    std::string text;
    bool ok = true;
    for (const auto& r : reports) {
        text += r.suite() + ": " + (r.ok() ? "PASS" : "FAIL") + " (" + std::to_string(r.passed()) + " passed, " +
                std::to_string(r.failures().size()) + " failed)\n";
        for (const auto& f : r.failures())
            text += "  " + f + "\n";
        ok = ok && r.ok();
    }
    emit(opt, text);
    return ok ? exit_ok : exit_verify_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Nonattacking bishop and anassa placements: counts, tables, coefficients, verification"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format: csv, tsv, bfile, json")->capture_default_str();
    app.add_option("--out", opt.out, "Write output to PATH instead of standard output");

    auto* count = app.add_subcommand("count", "Print the closed-form count for k pieces on the m x m board");
    count->add_option("piece", opt.piece, "bishop, anassa, white or black")->required();
    count->add_option("m", opt.m, "Board size")->required();
    count->add_option("k", opt.k, "Number of pieces")->required();
    count->add_option("--below", opt.below, "Anassa only: exactly P pieces strictly below the main diagonal");

    auto* table = app.add_subcommand("table", "Print the count triangle for m = 0..m_max");
    table->add_option("piece", opt.piece, "bishop, anassa, white or black")->required();
    table->add_option("m_max", opt.m_max, "Largest board size")->required();
    table->add_flag("--rect", opt.rectangular, "Pad rows with zeros to a common width");
    table->add_option("--offset", opt.offset, "First b-file index")->capture_default_str();
    table->add_option("--seq", opt.sequence_id, "Sequence label for the b-file header");

    auto* coeffs = app.add_subcommand("coeffs", "Print quasi-polynomial coefficients in m for k pieces");
    coeffs->add_option("piece", opt.piece, "bishop, anassa, white or black")->required();
    coeffs->add_option("k", opt.k, "Number of pieces")->required();
    coeffs->add_flag("--collapse", opt.collapse, "Merge residue classes with identical coefficients");

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("suite", opt.suite, "oracle, identities, collapse, coeffs or all")->required();
    verify->add_option("--m-max", opt.verify_m_max, "Largest board for oracle and collapse checks")
        ->capture_default_str();
    verify->add_option("--k-max", opt.verify_k_max, "Largest k for coefficient checks")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (count->parsed())
            return run_count(opt);
        if (table->parsed())
            return run_table(opt);
        if (coeffs->parsed())
            return run_coeffs(opt);
        return run_verify(opt);
    } catch (const UsageError& e) {
        std::cerr << "riders: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "riders: internal error: " << e.what() << "\n";
        return exit_verify_failed;
    }
}
