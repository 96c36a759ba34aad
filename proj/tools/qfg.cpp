#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qfg/graph.hpp"
#include "qfg/kkop.hpp"
#include "qfg/primality.hpp"
#include "qfg/reality.hpp"
#include "qfg/redsets.hpp"
#include "qfg/textio.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitRefuted = 3;

struct CommonOptions {
    std::string ledger_path;
    long budget = 50000;
};

qfg::AssumptionLedger load_ledger(const CommonOptions& opts) {
    if (opts.ledger_path.empty()) return {};
    return qfg::load_ledger_file(opts.ledger_path);
}

qfg::RealityBudget reality_budget(const CommonOptions& opts) {
    qfg::RealityBudget b;
    b.kkop_budget = opts.budget;
    b.search_nodes = std::max<long>(opts.budget, 1000);
    return b;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

bool parse_range(const std::string& text, int& lo, int& hi) {
    auto pos = text.find("..");
    if (pos == std::string::npos) return false;
    try {
        lo = std::stoi(text.substr(0, pos));
        hi = std::stoi(text.substr(pos + 2));
    } catch (...) {
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-factorization graph toolkit for type-A quantum affine algebras"};
    app.require_subcommand(1);

    std::string spec, dot_path, json_path, left_spec, right_spec, replay_path;
    bool fundamental = false, normalize = false;
    CommonOptions common;
    int rank = 0;
    std::vector<int> redset_args;
    std::string centers_range, nodes_range;
    int max_degree = 2;

    auto* cmd_factorize = app.add_subcommand("factorize", "print the q-factorization");
    cmd_factorize->add_option("spec", spec, "polynomial, e.g. \"A3; 2:0 1:3 3:3 2:6x2\"")
        ->required();
    cmd_factorize->add_flag("--normalize", normalize, "shift centers to 0 per component");

    auto* cmd_graph = app.add_subcommand("graph", "print or export the factorization graph");
    cmd_graph->add_option("spec", spec)->required();
    cmd_graph->add_option("--dot", dot_path, "write DOT output to this path");
    cmd_graph->add_flag("--fundamental", fundamental, "use the fundamental factorization");
    cmd_graph->add_flag("--normalize", normalize);

    auto* cmd_redset = app.add_subcommand("redset", "print a reducibility set");
    cmd_redset->add_option("args", redset_args, "i j r s")->expected(4);
    cmd_redset->add_option("--rank", rank, "diagram rank")->required();
    auto* sub_opt = cmd_redset->add_option("--sub", "restrict to the subdiagram [lo,hi]");
    sub_opt->expected(2);

    auto* cmd_prime3 = app.add_subcommand("prime3", "3-vertex primality criterion");
    cmd_prime3->add_option("spec", spec)->required();

    auto* cmd_prime = app.add_subcommand("prime", "primality via the available criteria");
    cmd_prime->add_option("spec", spec)->required();

    auto* cmd_kkop = app.add_subcommand("kkop", "upper bound for the invariant of a pair");
    cmd_kkop->add_option("--left", left_spec)->required();
    cmd_kkop->add_option("--right", right_spec)->required();
    cmd_kkop->add_option("--budget", common.budget);
    cmd_kkop->add_option("--ledger", common.ledger_path);
    cmd_kkop->add_option("--json", json_path, "write the trace as JSON");

    auto* cmd_certify = app.add_subcommand("certify", "search for a reality certificate");
    cmd_certify->add_option("spec", spec)->required();
    cmd_certify->add_option("--ledger", common.ledger_path);
    cmd_certify->add_option("--budget", common.budget);
    cmd_certify->add_option("--json", json_path, "write the certificate as JSON");

    auto* cmd_index = app.add_subcommand("index", "report the quochain and reality indexes");
    cmd_index->add_option("spec", spec)->required();
    cmd_index->add_option("--ledger", common.ledger_path);
    cmd_index->add_option("--budget", common.budget);

    auto* cmd_survey = app.add_subcommand("survey", "enumerate and certify a window");
    cmd_survey->add_option("--rank", rank)->required();
    cmd_survey->add_option("--centers", centers_range, "LO..HI")->required();
    cmd_survey->add_option("--nodes", nodes_range, "LO..HI (default: all nodes)");
    cmd_survey->add_option("--max-degree", max_degree)->required();
    cmd_survey->add_option("--budget", common.budget);

    auto* cmd_replay = app.add_subcommand("replay", "re-validate a certificate file");
    cmd_replay->add_option("path", replay_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (*cmd_factorize) {
            qfg::PseudoFactorization in = qfg::parse_poly_spec(spec);
            qfg::PseudoFactorization qf = qfg::q_factorize(qfg::poly_of(in));
            if (normalize) qf = qfg::normalize_per_component(qf);
            std::cout << qfg::print_poly_spec(qf) << "\n";
            return kExitOk;
        }

        if (*cmd_graph) {
            qfg::PseudoFactorization in = qfg::parse_poly_spec(spec);
            qfg::PseudoFactorization f = fundamental
                                             ? qfg::fundamental_factorization(qfg::poly_of(in))
                                             : qfg::q_factorize(qfg::poly_of(in));
            if (normalize) f = qfg::normalize_per_component(f);
            qfg::QFGraph g = qfg::build_graph(f);
            std::string dot = qfg::to_dot(g);
            if (!dot_path.empty())
                write_file(dot_path, dot);
            else
                std::cout << dot;
            return kExitOk;
        }

        if (*cmd_redset) {
            qfg::CartanContext ctx = qfg::make_type_a(rank);
            int i = redset_args[0], j = redset_args[1], r = redset_args[2], s = redset_args[3];
            qfg::ReducibilitySet set;
            if (sub_opt->count()) {
                auto vals = sub_opt->as<std::vector<int>>();
                set = qfg::red_set_restricted(ctx, qfg::make_subdiagram(ctx, vals[0], vals[1]), i,
                                              j, r, s);
            } else {
                set = qfg::red_set(ctx, i, j, r, s);
            }
            for (size_t k = 0; k < set.size(); ++k) std::cout << (k ? "," : "") << set[k];
            std::cout << "\n";
            return kExitOk;
        }

        if (*cmd_prime3 || *cmd_prime) {
            qfg::PseudoFactorization in = qfg::parse_poly_spec(spec);
            qfg::QFGraph g = qfg::build_graph(qfg::q_factorize(qfg::poly_of(in)));
            qfg::PrimalityVerdict v =
                *cmd_prime3 ? qfg::three_vertex_primality(g) : qfg::decide_primality(g);
            switch (v.kind) {
                case qfg::PrimalityVerdict::Kind::Prime:
                    std::cout << "prime: " << v.justification << "\n";
                    return kExitOk;
                case qfg::PrimalityVerdict::Kind::Factors:
                    std::cout << "not prime: " << qfg::print_poly_spec(qfg::q_factorize(v.factor))
                              << " (x) " << qfg::print_poly_spec(qfg::q_factorize(v.cofactor))
                              << "\n";
                    return kExitRefuted;
                case qfg::PrimalityVerdict::Kind::Unknown:
                    std::cout << "unknown: " << v.justification << "\n";
                    return kExitInconclusive;
            }
        }

        if (*cmd_kkop) {
            qfg::DrinfeldPoly a = qfg::poly_of(qfg::parse_poly_spec(left_spec));
            qfg::DrinfeldPoly b = qfg::poly_of(qfg::parse_poly_spec(right_spec));
            qfg::AssumptionLedger ledger = load_ledger(common);
            qfg::KkopOptions opts;
            opts.budget = common.budget;
            opts.ledger = ledger.empty() ? nullptr : &ledger;
            qfg::KkopBound kb = qfg::bound(a, b, opts);
            if (!json_path.empty())
                write_file(json_path, qfg::trace_to_json(kb.trace).dump(2) + "\n");
            if (!kb.bounded()) {
                std::cout << "no bound derived within budget\n";
                return kExitInconclusive;
            }
            std::cout << "upper bound: " << kb.upper << "  (lower: " << kb.lower << ")\n";
            std::cout << qfg::describe_trace(kb.trace);
            return kExitOk;
        }

        if (*cmd_certify || *cmd_index) {
            qfg::PseudoFactorization in = qfg::parse_poly_spec(spec);
            qfg::QFGraph g = qfg::build_graph(qfg::q_factorize(qfg::poly_of(in)));
            qfg::AssumptionLedger ledger = load_ledger(common);
            qfg::CertifyResult r = qfg::certify_real(g, ledger, reality_budget(common));
            std::cout << "status: " << qfg::status_name(r.index.status) << "\n";
            std::cout << "Q >= " << r.index.q_lower << "  R <= " << r.index.r_upper << "  ("
                      << g.size() << " vertices)\n";
            if (*cmd_certify && r.certificate) std::cout << qfg::describe_certificate(*r.certificate);
            if (*cmd_certify && !json_path.empty()) {
                if (r.certificate)
                    write_file(json_path, qfg::certificate_to_json(*r.certificate).dump(2) + "\n");
                else
                    std::cout << "no certificate to write\n";
            }
            return r.certificate ? kExitOk : kExitInconclusive;
        }

        if (*cmd_survey) {
            qfg::SurveyParams p;
            p.rank = rank;
            p.node_lo = 1;
            p.node_hi = rank;
            if (!centers_range.empty() && !parse_range(centers_range, p.center_lo, p.center_hi))
                throw std::invalid_argument("bad --centers range, expected LO..HI");
            if (!nodes_range.empty() && !parse_range(nodes_range, p.node_lo, p.node_hi))
                throw std::invalid_argument("bad --nodes range, expected LO..HI");
            p.max_degree = max_degree;
            p.enum_budget = common.budget * 4;
            qfg::SurveyReport rep = qfg::survey(p);
            std::cout << "enumerated " << rep.enumerated << " polynomials, " << rep.connected
                      << " connected graphs\n";
            for (const auto& [name, count] : rep.status_counts)
                std::cout << "  " << name << ": " << count << "\n";
            if (!rep.candidates.empty()) {
                std::cout << "basic candidates (no proper subgraph certifies; not conclusive):\n";
                for (const auto& e : rep.candidates) std::cout << "  " << e.key << "\n";
            }
            return kExitOk;
        }

        if (*cmd_replay) {
            qfg::QuochainCertificate cert = qfg::load_certificate_file(replay_path);
            std::string error;
            if (qfg::validate_certificate(cert, &error)) {
                std::cout << "certificate replays: " << cert.parts.size() << " parts"
                          << (cert.conditional ? " (conditional)" : "") << "\n";
                return kExitOk;
            }
            std::cout << "replay failed: " << error << "\n";
            return kExitRefuted;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
