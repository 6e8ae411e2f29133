// Command-line front end: path enumeration, complex export, homology tables
// and the verification suites.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "polyech/json_io.hpp"
#include "polyech/verify.hpp"

using namespace polyech;

namespace {

json read_json(const std::string& file)
{
    std::ifstream in(file);
    if (!in) throw FormatError("cannot open " + file);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(file + ": " + e.what());
    }
}

std::pair<i64, i64> parse_range(const std::string& s)
{
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            i64 v = std::stoll(s);
            return {v, v};
        }
        i64 a = std::stoll(s.substr(0, dots)), b = std::stoll(s.substr(dots + 2));
        if (a > b) throw FormatError("empty degree range " + s);
        return {a, b};
    } catch (const std::logic_error&) {
        throw FormatError("degree range must look like a..b, got " + s);
    }
}

// The size parameter grown by --stabilize.
i64& stage_of(ComplexSpec& s)
{
    switch (s.kind) {
    case SpecKind::Bar: return s.diameter;
    case SpecKind::XAxis: return s.box;
    case SpecKind::Periodic: return s.depth;
    default: throw FormatError("--stabilize needs a bar, xaxis or periodic spec");
    }
}

void print_groups(const json& rows, bool table)
{
    if (!table) {
        std::cout << rows.dump(2) << '\n';
        return;
    }
    std::cout << std::left << std::setw(8) << "degree" << std::setw(6) << "rank" << std::setw(20) << "torsion"
              << "notes\n";
    for (const auto& r : rows) {
        std::string t;
        for (const auto& v : r["torsion"]) t += (t.empty() ? "" : ",") + v.dump();
        std::string notes = r["partial"].get<bool>() ? "partial" : "";
        if (r.contains("stage"))
            notes += std::string(notes.empty() ? "" : " ") + "stage " + r["stage"].dump() +
                     (r["stabilized"].get<bool>() ? "" : " (not stabilized)");
        std::cout << std::setw(8) << r["degree"].get<i64>() << std::setw(6) << r["rank"].get<i64>() << std::setw(20)
                  << (t.empty() ? "-" : t) << notes << '\n';
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Polygon chain complexes: enumeration, homology and verification"};
    app.require_subcommand(1);

    auto* paths = app.add_subcommand("paths", "Admissible path utilities");
    paths->require_subcommand(1);
    auto* enumerate = paths->add_subcommand("enumerate", "All paths at or below a path");
    std::string below_file;
    enumerate->add_option("--below", below_file, "Path JSON file")->required();

    auto* complex = app.add_subcommand("complex", "Chain complex export");
    complex->require_subcommand(1);
    auto* build = complex->add_subcommand("build", "Write bases and boundary matrices");
    std::string spec_file, out_dir;
    build->add_option("--spec", spec_file, "Spec JSON file")->required();
    build->add_option("--out", out_dir, "Output directory")->required();

    auto* homology_cmd = app.add_subcommand("homology", "Homology groups of a spec");
    std::string degrees = "0..4", format = "json";
    bool stabilize_flag = false;
    i64 max_stage = 8, window = 2;
    double budget = 300;
    homology_cmd->add_option("--spec", spec_file, "Spec JSON file")->required();
    homology_cmd->add_option("--degrees", degrees, "Degree range a..b")->capture_default_str();
    homology_cmd->add_flag("--stabilize", stabilize_flag, "Grow the truncation until inclusions are isomorphisms");
    homology_cmd->add_option("--max-stage", max_stage, "Largest stage tried by --stabilize")->capture_default_str();
    homology_cmd->add_option("--window", window, "Consecutive isomorphisms required")->capture_default_str();
    homology_cmd->add_option("--budget", budget, "Seconds per degree for --stabilize")->capture_default_str();
    homology_cmd->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    VerifyOptions vopt;
    verify_cmd->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--seed", vopt.seed, "Random seed")->capture_default_str();
    verify_cmd->add_option("--budget", vopt.budget, "Seconds for stabilizations")->capture_default_str();
    verify_cmd->add_flag("--strict", vopt.strict, "Count flagged checks as failures");
    verify_cmd->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enumerate) {
            AdmissiblePath top = path_from_json(read_json(below_file));
            json out = json::array();
            for (const auto& p : enumerate_below(top)) out.push_back(to_json(p));
            std::cout << json{{"count", out.size()}, {"paths", out}}.dump(2) << '\n';
            return 0;
        }
        if (*build) {
            ComplexSpec spec = spec_from_json(read_json(spec_file));
            GradedComplex c = build_complex(spec);
            std::filesystem::create_directories(out_dir);
            json manifest{{"spec", to_json(spec)}, {"degrees", json::object()}};
            if (c.reliable) manifest["reliable"] = {c.reliable->first, c.reliable->second};
            for (const auto& [d, b] : c.basis) {
                json gens = json::array();
                for (const auto& g : b) gens.push_back(to_json(g));
                std::ofstream(out_dir + "/basis_" + std::to_string(d) + ".json") << gens.dump() << '\n';
                manifest["degrees"][std::to_string(d)] = b.size();
            }
            for (const auto& [d, m] : c.boundary) {
                std::ofstream f(out_dir + "/boundary_" + std::to_string(d) + ".txt");
                write_triplets(f, m);
            }
            std::ofstream(out_dir + "/manifest.json") << manifest.dump(2) << '\n';
            std::cout << manifest.dump(2) << '\n';
            return 0;
        }
        if (*homology_cmd) {
            auto [lo, hi] = parse_range(degrees);
            json raw = read_json(spec_file);
            std::string kind = raw.is_object() ? raw.value("kind", "") : "";
            if ((kind == "bar" || kind == "xaxis") && !raw.contains("degrees")) raw["degrees"] = {lo, hi};
            ComplexSpec spec = spec_from_json(raw);
            json rows = json::array();
            if (stabilize_flag) {
                ComplexSpec base = spec;
                i64 first = stage_of(base);
                for (i64 d = lo; d <= hi; ++d) {
                    auto family = [&](i64 s) {
                        ComplexSpec x = base;
                        stage_of(x) = s;
                        return x;
                    };
                    auto r = stabilize(family, d, window, first, std::max(first, max_stage), budget);
                    ComplexSpec at = family(r.stage);
                    json row = to_json(r.group, at);
                    row["stage"] = r.stage;
                    row["stabilized"] = r.stabilized;
                    rows.push_back(row);
                }
            } else {
                GradedComplex c = build_complex(spec);
                HomologyEngine e(c);
                for (i64 d = lo; d <= hi; ++d) rows.push_back(to_json(e.group(d), spec));
            }
            print_groups(rows, format == "table");
            return 0;
        }
        if (*verify_cmd) {
            SuiteReport r = run_suite(suite, vopt);
            if (format == "table") print_table(std::cout, r);
            else std::cout << to_json(r).dump(2) << '\n';
            return r.exit_status();
        }
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
