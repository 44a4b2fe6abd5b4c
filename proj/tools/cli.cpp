#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gmoat/bench.hpp"
#include "gmoat/density.hpp"
#include "gmoat/io.hpp"
#include "gmoat/moat.hpp"
#include "gmoat/plot.hpp"
#include "gmoat/sieve.hpp"
#include "gmoat/walker.hpp"

namespace gmoat::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Turns `key = value` lines into `--key=value` arguments.
std::vector<std::string> config_args(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot read config file " + file);
    std::vector<std::string> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(file + ":" + std::to_string(lineno) + ": expected key = value");
        }
        auto key = trim(line.substr(0, eq));
        auto value = trim(line.substr(eq + 1));
        if (key.empty() || key == "config") {
            throw UsageError(file + ":" + std::to_string(lineno) + ": invalid key '" + key + "'");
        }
        out.push_back("--" + key + "=" + value);
    }
    return out;
}

std::string find_config(const std::vector<std::string>& args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
        if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
    }
    return {};
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.output_path.empty()) {
        out << text;
        return;
    }
    try {
        write_atomically(cfg.output_path, text);
    } catch (const std::runtime_error& e) {
        throw IoError(e.what());
    }
}

std::string load(const std::string& path) {
    try {
        return read_file(path);
    } catch (const std::runtime_error& e) {
        throw IoError(e.what());
    }
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    if (cfg.format.empty()) return;
    for (const char* f : allowed) {
        if (cfg.format == f) return;
    }
    throw UsageError("format '" + cfg.format + "' is not available for this command");
}

void check_norm_max(const RunConfig& cfg) {
    if (cfg.norm_max < 2) throw UsageError("norm-max must be ≥ 2");
}

void cmd_sieve(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"csv", "json"});
    check_norm_max(cfg);
    auto set = sieve_octant(cfg.norm_max, cfg.include_axes);
    if (cfg.format == "json") {
        std::ostringstream json;
        json << '[';
        for (std::size_t i = 0; i < set.size(); ++i) {
            const auto& z = set.primes()[i];
            json << (i ? "," : "") << '[' << z.re << ',' << z.im << ']';
        }
        json << "]\n";
        emit(cfg, json.str(), out);
    } else {
        emit(cfg, prime_csv(set.primes()), out);
    }
}

void cmd_walk(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    require_format(cfg, {"json"});
    check_norm_max(cfg);
    auto set = sieve_octant(cfg.norm_max, cfg.include_axes);
    auto paths = walk_all(set, cfg.cramer_c);
    auto coverage = verify_coverage(paths, set);
    std::size_t steps = 0;
    std::size_t touching = 0;
    for (const auto& p : paths) {
        for (const auto& d : p.disks) {
            ++steps;
            touching += d.touches_bound ? 1 : 0;
        }
    }
    err << "paths=" << paths.size() << " orphans=" << coverage.orphan_count
        << " missing=" << coverage.missing.size() << " duplicated=" << coverage.duplicated.size()
        << " disks_touching_bound=" << touching << "/" << steps << "\n";
    emit(cfg, paths_json(paths), out);
}

void cmd_moat(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"json"});
    check_norm_max(cfg);
    const bool by_step = cfg.step_sq != 0;
    const bool by_paths = !cfg.paths_file.empty();
    if (by_step == by_paths) throw UsageError("moat takes exactly one of --step-sq or --paths");

    MoatReport report;
    if (by_paths) {
        auto paths = parse_paths_json(load(cfg.paths_file));
        report = moat_from_paths(paths, cfg.norm_max);
    } else {
        if (cfg.step_sq < 1) throw UsageError("step-sq must be >= 1");
        auto set = sieve_octant(cfg.norm_max, cfg.include_axes);
        auto points = cfg.reflect_octant ? mirrored(set)
                                         : std::vector<GaussInt>(set.primes().begin(), set.primes().end());
        report = moat_report(points, cfg.norm_max, cfg.step_sq);
    }
    emit(cfg, moat_json(report), out);
}

void cmd_density(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"csv"});
    check_norm_max(cfg);
    if (cfg.bands < 1) throw UsageError("bands must be >= 1");
    auto set = sieve_octant(cfg.norm_max, cfg.include_axes);
    emit(cfg, density_csv(annulus_density_profile(set, cfg.bands)), out);
}

void cmd_bench(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"csv"});
    check_norm_max(cfg);
    std::vector<BenchResult> results;
    std::stringstream names(cfg.methods);
    std::string name;
    while (std::getline(names, name, ',')) {
        name = trim(name);
        if (name.empty()) continue;
        BenchMethod method;
        try {
            method = parse_bench_method(name);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        results.push_back(run_bench(method, cfg.norm_max, cfg.cramer_c));
    }
    if (results.empty()) throw UsageError("no bench methods given");
    emit(cfg, bench_csv(results), out);
}

void cmd_plot(const RunConfig& cfg, bool norm_given, std::ostream& out) {
    require_format(cfg, {"svg"});
    auto scene = load_plot_scene(load(cfg.input_path));
    if (norm_given) scene.norm_max = cfg.norm_max;
    emit(cfg, render_svg(scene), out);
}

void add_shared_options(CLI::App& sub, RunConfig& cfg, std::string& cramer_text) {
    sub.add_option("--norm-max", cfg.norm_max, "Largest norm a^2+b^2 to include");
    sub.add_option("--cramer-c", cramer_text, "Search radius constant c in ceil(c ln(p)^2)");
    sub.add_flag("--include-axes", cfg.include_axes, "Carry axis primes (p,0), p = 3 mod 4");
    sub.add_flag("--reflect-octant", cfg.reflect_octant,
                 "Mirror primes across re=im before moat queries (default true)");
    sub.add_option("--step-sq", cfg.step_sq, "Squared step bound for moat components");
    sub.add_option("--paths", cfg.paths_file, "Paths JSON for the path-partition moat");
    sub.add_option("--bands", cfg.bands, "Number of annulus bands");
    sub.add_option("--methods", cfg.methods, "Comma-separated bench methods");
    sub.add_option("--format", cfg.format, "csv, json or svg");
    sub.add_option("--out", cfg.output_path, "Output file (default stdout)");
    sub.add_option("--config", "File of key = value lines mirroring the flags");
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string cramer_text = "1";

    CLI::App app{"Gaussian prime walks, moats and density reports", "gmoat"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    struct Command {
        const char* name;
        const char* help;
    };
    const Command commands[] = {
        {"sieve", "Write first-octant Gaussian primes as CSV"},
        {"walk", "Partition the primes into paths (JSON)"},
        {"moat", "Moat report from --step-sq or --paths (JSON)"},
        {"density", "Annulus density profile (CSV)"},
        {"bench", "Primality-check counts per search method (CSV)"},
        {"plot", "Render a sieve/walk/moat report as SVG"},
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& c : commands) {
        auto* sub = app.add_subcommand(c.name, c.help);
        add_shared_options(*sub, cfg, cramer_text);
        subs[c.name] = sub;
    }
    subs["plot"]->add_option("input", cfg.input_path, "Report file to draw")->required();

    try {
        std::vector<std::string> args = raw_args;
        if (auto config = find_config(args); !config.empty() && !args.empty()) {
            auto injected = config_args(config);
            args.insert(args.begin() + 1, injected.begin(), injected.end());
        }
        std::reverse(args.begin(), args.end());
        try {
            app.parse(args);
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return kOk;
        } catch (const CLI::CallForAllHelp&) {
            out << app.help("", CLI::AppFormatMode::All);
            return kOk;
        } catch (const CLI::ParseError& e) {
            err << "error: " << e.what() << "\n" << app.help();
            return kUsage;
        }

        try {
            cfg.cramer_c = parse_ratio(cramer_text);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("cramer-c: ") + e.what());
        }

        if (subs["sieve"]->parsed()) cmd_sieve(cfg, out);
        else if (subs["walk"]->parsed()) cmd_walk(cfg, out, err);
        else if (subs["moat"]->parsed()) cmd_moat(cfg, out);
        else if (subs["density"]->parsed()) cmd_density(cfg, out);
        else if (subs["bench"]->parsed()) cmd_bench(cfg, out);
        else cmd_plot(cfg, subs["plot"]->count("--norm-max") > 0, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIo;
    } catch (const FormatError& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return kMalformed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::range_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}

}  // namespace gmoat::cli
