// Command-line front end: enumerate patterns, build representations, run the
// verification suite, compute Casimir spectra, count transition variants.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ckgz/case_spec.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

void emit(const ckgz::Json& out, const std::string& path) {
    if (path.empty()) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::ofstream f(path);
        f << out.dump(2) << "\n";
    }
}

struct CaseFlags {
    ckgz::CaseSpec spec;
    std::string hw_csv, j_csv, window_spec, case_file;

    void attach(CLI::App* cmd) {
        cmd->add_option("--case", case_file, "JSON case file; flags override its fields");
        cmd->add_option("--n", spec.n, "algebra rank");
        cmd->add_option("--j", j_csv, "parameter kinds, comma separated (1|iota|i)");
        cmd->add_option("--hw", hw_csv, "highest weight, comma separated");
        cmd->add_option("--k", [this](const CLI::results_t& v) { spec.k = std::stod(v[0]); return true; },
                        "contracted top-row amplitude");
        cmd->add_option("--zeta", [this](const CLI::results_t& v) { spec.zeta = std::stod(v[0]); return true; },
                        "contracted phase label");
        cmd->add_option("--xi", [this](const CLI::results_t& v) { spec.xi = std::stod(v[0]); return true; },
                        "rank-3 top-row phase label");
        cmd->add_option("--r", [this](const CLI::results_t& v) { spec.r = std::stod(v[0]); return true; },
                        "rank-3 middle-row amplitude");
        cmd->add_option("--a", [this](const CLI::results_t& v) { spec.a = std::stod(v[0]); return true; },
                        "continued-series label a");
        cmd->add_option("--b", [this](const CLI::results_t& v) { spec.b = std::stod(v[0]); return true; },
                        "continued-series label b");
        cmd->add_option("--m23", [this](const CLI::results_t& v) { spec.m23 = std::stoi(v[0]); return true; },
                        "rank-3 top-row integer");
        cmd->add_option("--mt12", [this](const CLI::results_t& v) { spec.mt12 = std::stoi(v[0]); return true; },
                        "discrete-series upper label");
        cmd->add_option("--mt22", [this](const CLI::results_t& v) { spec.mt22 = std::stoi(v[0]); return true; },
                        "discrete-series lower label");
        cmd->add_option("--series", spec.series, "series tag for analytic continuation");
        cmd->add_option("--window", window_spec, "basis window lo:hi for unbounded labels");
        cmd->add_option("--jet-order", spec.jet_order, "derivative order capacity");
        cmd->add_option("--seed", spec.seed, "seed for randomized checks");
        cmd->add_option("--tol", spec.tol, "tolerance for checks");
        cmd->add_flag("--su", spec.su_constraint, "impose the traceless diagonal constraint");
    }

    ckgz::CaseSpec resolve() {
        ckgz::CaseSpec out = spec;
        if (!case_file.empty()) {
            std::ifstream f(case_file);
            if (!f) throw std::runtime_error("cannot open case file " + case_file);
            ckgz::Json j;
            f >> j;
            out = ckgz::CaseSpec::from_json(j);
            // flags already parsed into spec override the file where set
            if (!j_csv.empty()) out.j.clear();
            if (spec.k) out.k = spec.k;
            if (spec.zeta) out.zeta = spec.zeta;
            if (spec.xi) out.xi = spec.xi;
            if (spec.r) out.r = spec.r;
            if (spec.a) out.a = spec.a;
            if (spec.b) out.b = spec.b;
            if (spec.m23) out.m23 = spec.m23;
            if (spec.mt12) out.mt12 = spec.mt12;
            if (spec.mt22) out.mt22 = spec.mt22;
        }
        if (!j_csv.empty()) {
            out.j.clear();
            std::string cur;
            for (char c : j_csv + ",") {
                if (c == ',') {
                    if (!cur.empty()) out.j.push_back(cur);
                    cur.clear();
                } else {
                    cur += c;
                }
            }
        }
        if (!hw_csv.empty()) out.hw = parse_int_list(hw_csv);
        if (out.j.empty()) out.j.assign(out.n - 1, "1");
        if (!window_spec.empty()) {
            auto colon = window_spec.find(':');
            if (colon == std::string::npos) throw std::runtime_error("window must be lo:hi");
            out.window_lo = std::stoi(window_spec.substr(0, colon));
            out.window_hi = std::stoi(window_spec.substr(colon + 1));
        }
        return out;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gel'fand-Zetlin representations of Cayley-Klein unitary algebras"};
    app.require_subcommand(1);
    std::string output;
    app.add_option("--output", output, "write JSON output to a file instead of stdout");

    auto* enumerate = app.add_subcommand("enumerate", "list classical patterns under a highest weight");
    std::string enum_hw;
    bool count_only = false;
    enumerate->add_option("--hw", enum_hw, "highest weight, comma separated")->required();
    enumerate->add_flag("--count-only", count_only, "print the dimension only");

    auto* build = app.add_subcommand("build", "construct generator matrices for a case");
    CaseFlags build_flags;
    build_flags.attach(build);

    auto* verify = app.add_subcommand("verify", "run verification checks; exit 0 iff all pass");
    CaseFlags verify_flags;
    verify_flags.attach(verify);
    std::string checks_csv;
    verify->add_option("--checks", checks_csv, "subset of checks, comma separated");

    auto* casimir = app.add_subcommand("casimir", "closed-form Casimir spectrum for a case");
    CaseFlags casimir_flags;
    casimir_flags.attach(casimir);

    auto* variants = app.add_subcommand("variants", "transition-variant counts");
    int variants_n = 2;
    variants->add_option("--n", variants_n, "algebra rank")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        ckgz::CommandResult res;
        if (enumerate->parsed()) {
            res = ckgz::cmd_enumerate(parse_int_list(enum_hw), count_only);
        } else if (build->parsed()) {
            res = ckgz::cmd_build(build_flags.resolve());
        } else if (verify->parsed()) {
            std::vector<std::string> checks;
            if (!checks_csv.empty()) {
                std::string cur;
                for (char c : checks_csv + ",") {
                    if (c == ',') {
                        if (!cur.empty()) checks.push_back(cur);
                        cur.clear();
                    } else {
                        cur += c;
                    }
                }
            }
            res = ckgz::cmd_verify(verify_flags.resolve(), checks);
        } else if (casimir->parsed()) {
            res = ckgz::cmd_casimir(casimir_flags.resolve());
        } else if (variants->parsed()) {
            res = ckgz::cmd_variants(variants_n);
        }
        emit(res.output, output);
        return res.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
