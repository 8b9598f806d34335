// Batch front-end.  Subcommands run the check suites or evaluate expressions
// and emit a single JSON report; exit code 0 = all checks pass, 1 = a check
// failed, 2 = usage or configuration error.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "endostar/expr.hpp"
#include "endostar/suites.hpp"

using namespace endostar;

namespace {

struct CliOptions {
    RunConfig cfg;
    std::string bases_csv;
    std::string expr;
    std::string out_path;
    size_t certificates = 25;
    int purity_power = 8;
    int rank = 1;
    std::string torsion_csv;
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        if (comma == std::string::npos) {
            if (start < s.size()) out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

void emit(const json& report, const std::string& out_path) {
    std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        f << text;
    }
}

int finish(const SuiteResult& r, const CliOptions& opt) {
    json report = r.report;
    report["schema"] = "endostar/1";
    report["config"] = opt.cfg.echo();
    emit(report, opt.out_path);
    return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks for the endomorphism algebra engine"};
    app.require_subcommand(1);
    app.fallthrough();

    CliOptions opt;
    bool seed_given = false;

    app.add_option("--instance", opt.cfg.instance, "group instance: shift-z | free-shift | times2");
    app.add_option("--bases", opt.bases_csv, "base subgroup family, e.g. G or G,H");
    auto* seed_opt = app.add_option("--seed", opt.cfg.seed, "random seed (default 1)");
    app.add_option("--depth", opt.cfg.depth, "window depth (0 = instance default)");
    app.add_option("--samples", opt.cfg.samples, "sample count per suite");
    app.add_option("--witness-cap", opt.cfg.witness_cap, "enumeration cap for witness searches");
    app.add_option("--out", opt.out_path, "write the JSON report to this file");

    auto* relations = app.add_subcommand("relations", "defining relations on a window");
    auto* mul_cmd = app.add_subcommand("mul", "evaluate a product expression");
    mul_cmd->add_option("--expr", opt.expr, "expression to evaluate")->required();
    auto* theta_cmd = app.add_subcommand("theta", "conditional expectation of an expression");
    theta_cmd->add_option("--expr", opt.expr, "expression to evaluate")->required();
    auto* certify_cmd = app.add_subcommand("certify", "build a certificate for an expression");
    certify_cmd->add_option("--expr", opt.expr, "self-adjoint expression");
    certify_cmd->add_option("--count", opt.certificates, "randomized certificates when no --expr");
    auto* ideals = app.add_subcommand("ideals", "semigroup and constructible-ideal checks");
    auto* ktheory_cmd = app.add_subcommand("ktheory", "shift-map kernel/cokernel checks");
    ktheory_cmd->add_option("--rank", opt.rank, "free rank of the coefficient group");
    ktheory_cmd->add_option("--torsion", opt.torsion_csv, "torsion orders, e.g. 3,2");
    auto* all_cmd = app.add_subcommand("all", "every suite plus purity probes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    seed_given = seed_opt->count() > 0;

    try {
        if (!seed_given) {
            if (const char* env = std::getenv("ENDOSTAR_SEED")) opt.cfg.seed = std::strtoull(env, nullptr, 10);
        }
        opt.cfg.bases = split_csv(opt.bases_csv);

        if (relations->parsed()) return finish(suite_relations(opt.cfg), opt);
        if (ideals->parsed()) {
            SuiteResult ore = suite_ore(opt.cfg);
            SuiteResult idl = suite_ideals(opt.cfg);
            SuiteResult r;
            r.pass = ore.pass && idl.pass;
            r.report = json{{"suites", json::array({ore.report, idl.report})}, {"pass", r.pass}};
            return finish(r, opt);
        }
        if (ktheory_cmd->parsed()) {
            CoeffGroup A;
            A.rank = opt.rank;
            for (const auto& t : split_csv(opt.torsion_csv)) A.torsion.push_back(std::stoll(t));
            return finish(suite_ktheory(A, std::max<size_t>(opt.cfg.samples, 1000), opt.cfg.seed),
                          opt);
        }
        if (all_cmd->parsed()) return finish(suite_all(opt.cfg), opt);

        auto G = configured_instance(opt.cfg);
        if (mul_cmd->parsed()) {
            AlgebraElement x = parse_expr(*G, opt.expr);
            SuiteResult r;
            r.pass = true;
            r.report = json{{"expr", opt.expr}, {"value", to_json(*G, x)}};
            return finish(r, opt);
        }
        if (theta_cmd->parsed()) {
            AlgebraElement x = parse_expr(*G, opt.expr);
            SuiteResult r;
            r.pass = true;
            r.report = json{{"expr", opt.expr}, {"value", to_json(*G, theta(*G, x))}};
            return finish(r, opt);
        }
        if (certify_cmd->parsed()) {
            if (opt.expr.empty()) return finish(suite_certify(opt.cfg, opt.certificates), opt);
            AlgebraElement x = parse_expr(*G, opt.expr);
            CertifyConfig cc;
            cc.witness_cap = opt.cfg.witness_cap;
            Certificate cert = certify(*G, x, cc);
            SuiteResult r;
            r.pass = cert.verified;
            r.report = json{{"expr", opt.expr}, {"certificate", to_json(*G, cert)}};
            return finish(r, opt);
        }
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::ParseError || e.code() == ErrorCode::InvalidArgument ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
