#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pis/certcheck.hpp"
#include "pis/classifier.hpp"
#include "pis/genus.hpp"
#include "pis/graph.hpp"
#include "pis/ideal.hpp"
#include "pis/ring.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

bool looks_like_file(const std::string& s) {
    std::ifstream in(s);
    return in.good();
}

struct BudgetFlags {
    std::int64_t ms = 60'000;
    std::int64_t nodes = 10'000'000;
    std::uint64_t seed = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--budget-ms", ms, "wall-clock budget per search stage (ms)");
        cmd->add_option("--budget-nodes", nodes, "node budget per search stage");
        cmd->add_option("--seed", seed, "random seed for the embedding search");
    }

    pis::GenusOptions options() const {
        pis::GenusOptions o;
        o.budget.max_ms = ms;
        o.budget.max_nodes = nodes;
        o.seed = seed;
        return o;
    }
};

int run_suite(const std::string& manifest_path, const BudgetFlags& flags, int jobs,
              const std::string& report_dir) {
    nlohmann::json manifest = nlohmann::json::parse(slurp(manifest_path));
    if (!manifest.is_array()) throw std::runtime_error("manifest must be a JSON array");

    struct Case {
        std::string spec;
        std::string expected;
        std::string note;
        pis::GenusOptions opts;
    };
    std::vector<Case> cases;
    for (const auto& e : manifest) {
        Case c;
        c.spec = e.at("spec").get<std::string>();
        c.expected = e.at("expected").get<std::string>();
        if (e.contains("note")) c.note = e["note"].get<std::string>();
        c.opts = flags.options();
        if (e.contains("budget_ms")) c.opts.budget.max_ms = e["budget_ms"].get<std::int64_t>();
        if (e.contains("budget_nodes"))
            c.opts.budget.max_nodes = e["budget_nodes"].get<std::int64_t>();
        // manifest self-consistency: the expectation must match the decision rules
        auto desc = pis::parse_ring_spec(c.spec);
        auto sys = pis::RingSystem::analyze(desc);
        auto cls = pis::predict(pis::profile_factors(sys));
        if (pis::to_string(cls) != c.expected)
            throw std::runtime_error("manifest case '" + c.spec + "' expects " + c.expected +
                                     " but the decision rules give " + pis::to_string(cls));
        cases.push_back(std::move(c));
    }

    std::vector<std::future<pis::VerificationReport>> futures(cases.size());
    std::size_t next = 0;
    std::vector<pis::VerificationReport> reports(cases.size());
    while (next < cases.size()) {
        std::size_t batch = std::min<std::size_t>(std::max(jobs, 1), cases.size() - next);
        for (std::size_t i = 0; i < batch; ++i) {
            const Case& c = cases[next + i];
            futures[next + i] = std::async(std::launch::async, [&c] {
                return pis::verify_ring(c.spec, c.opts);
            });
        }
        for (std::size_t i = 0; i < batch; ++i)
            reports[next + i] = futures[next + i].get();
        next += batch;
    }

    bool any_mismatch = false;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        std::cout << pis::report_summary_line(reports[i]) << "\n";
        if (reports[i].verdict == pis::Verdict::Mismatch) any_mismatch = true;
        if (!report_dir.empty()) {
            std::string name = report_dir + "/case_" + std::to_string(i) + ".json";
            spill(name, pis::report_to_json(reports[i]));
        }
    }
    std::cout << (any_mismatch ? "RESULT: mismatch" : "RESULT: ok") << "\n";
    return any_mismatch ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime ideal sum graphs of finite rings and certified genus bounds"};
    app.require_subcommand(0, 1);

    std::vector<std::string> cert_pair;
    app.add_option("--verify-certificate", cert_pair,
                   "re-check a certificate file against a graph file")
        ->expected(2);

    // ideals
    auto* cmd_ideals = app.add_subcommand("ideals", "enumerate the ideal lattice of a ring");
    std::string ideals_spec;
    cmd_ideals->add_option("spec", ideals_spec, "ring spec, e.g. \"Z/16 x Z/4\"")->required();

    // graph
    auto* cmd_graph = app.add_subcommand("graph", "construct and export the PIS graph");
    std::string graph_spec, graph_format = "json";
    cmd_graph->add_option("spec", graph_spec, "ring spec")->required();
    cmd_graph->add_option("--format", graph_format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));

    // genus
    auto* cmd_genus = app.add_subcommand("genus", "certified genus bounds of a graph or ring");
    std::string genus_target, cert_out;
    BudgetFlags genus_flags;
    cmd_genus->add_option("target", genus_target, "ring spec or graph JSON file")->required();
    cmd_genus->add_option("--cert-out", cert_out, "write the certificate JSON here");
    genus_flags.attach(cmd_genus);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "predict the genus class and check it");
    std::string verify_spec, verify_cert_out;
    BudgetFlags verify_flags;
    cmd_verify->add_option("spec", verify_spec, "ring spec")->required();
    cmd_verify->add_option("--cert-out", verify_cert_out, "write the certificate JSON here");
    verify_flags.attach(cmd_verify);

    // suite
    auto* cmd_suite = app.add_subcommand("suite", "run a manifest of verification cases");
    std::string suite_manifest, report_dir;
    int jobs = 1;
    BudgetFlags suite_flags;
    cmd_suite->add_option("manifest", suite_manifest, "JSON array of cases")->required();
    cmd_suite->add_option("--jobs", jobs, "parallel cases");
    cmd_suite->add_option("--report-dir", report_dir, "write per-case reports here");
    suite_flags.attach(cmd_suite);

    CLI11_PARSE(app, argc, argv);

    try {
        if (!cert_pair.empty()) {
            auto check = pis::verify_certificate(slurp(cert_pair[0]), slurp(cert_pair[1]));
            std::cout << (check.ok ? "OK: " : "FAIL: ") << check.message << "\n";
            return check.ok ? 0 : 1;
        }
        if (*cmd_ideals) {
            auto sys = pis::RingSystem::analyze(pis::parse_ring_spec(ideals_spec));
            std::cout << pis::lattice_to_json(sys) << "\n";
            return 0;
        }
        if (*cmd_graph) {
            auto desc = pis::parse_ring_spec(graph_spec);
            auto sys = pis::RingSystem::analyze(desc);
            auto g = pis::build_pis(sys);
            auto fmt = graph_format == "dot" ? pis::GraphFormat::Dot : pis::GraphFormat::Json;
            std::cout << pis::export_graph(g, fmt, desc.text()) << "\n";
            return 0;
        }
        if (*cmd_genus) {
            pis::LabeledGraph g;
            std::string name = genus_target;
            if (looks_like_file(genus_target)) {
                g = pis::import_graph_json(slurp(genus_target));
            } else {
                auto desc = pis::parse_ring_spec(genus_target);
                auto sys = pis::RingSystem::analyze(desc);
                g = pis::build_pis(sys);
                name = desc.text();
            }
            auto bounds = pis::genus_bounds(g, genus_flags.options());
            std::string json = pis::bounds_to_json(bounds);
            std::cout << json << "\n";
            if (!cert_out.empty()) spill(cert_out, json);
            // an unknown upper bound is an analysis limit, not an error
            return 0;
        }
        if (*cmd_verify) {
            auto rep = pis::verify_ring(verify_spec, verify_flags.options());
            std::cout << pis::report_to_json(rep) << "\n";
            std::cerr << pis::report_summary_line(rep) << "\n";
            if (!verify_cert_out.empty()) spill(verify_cert_out, rep.certificate_json);
            return rep.verdict == pis::Verdict::Mismatch ? 1 : 0;
        }
        if (*cmd_suite) {
            return run_suite(suite_manifest, suite_flags, jobs, report_dir);
        }
        std::cout << app.help() << "\n";
        return 0;
    } catch (const pis::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
