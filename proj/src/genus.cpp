#include "pis/genus.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace pis {

int kn_genus(int n) {
    if (n < 1) throw std::invalid_argument("kn_genus needs n >= 1");
    if (n <= 4) return 0;
    long long num = std::int64_t(n - 3) * (n - 4);
    return int((num + 11) / 12);
}

int kmn_genus(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("kmn_genus needs m,n >= 1");
    if (m < 2 || n < 2) return 0;
    long long num = std::int64_t(m - 2) * (n - 2);
    return int((num + 3) / 4);
}

int euler_lower_bound(const LabeledGraph& g) {
    if (g.vertex_count() == 0) return 0;
    if (connected_components(g).size() != 1)
        throw std::invalid_argument("euler_lower_bound expects a connected graph");
    const long E = g.edge_count();
    if (E == 0) return 0;
    const int y = girth(g);
    if (y == kInfiniteGirth) return 0;
    // g >= ceil((E(y-2) - y(V-2)) / (2y))
    long long num = E * std::int64_t(y - 2) - std::int64_t(y) * (g.vertex_count() - 2);
    if (num <= 0) return 0;
    long long den = 2ll * y;
    return int((num + den - 1) / den);
}

// ------------------------------------------------------------ genus_bounds

namespace {

Budget remaining_budget(const Budget& total, const BudgetMeter& meter) {
    Budget b;
    b.max_nodes = std::max<std::int64_t>(0, total.max_nodes - meter.nodes());
    b.max_ms = std::max<std::int64_t>(0, total.max_ms - meter.elapsed_ms());
    return b;
}

SubdivisionWitness remap_witness(const SubdivisionWitness& w, const std::vector<int>& map_back) {
    SubdivisionWitness out = w;
    for (int& v : out.branch_map) v = map_back[v];
    for (auto& p : out.paths)
        for (int& v : p) v = map_back[v];
    return out;
}

// candidate patterns for one block, strongest first
std::vector<Pattern> certificate_patterns(int max_genus) {
    const Pattern k5 = Pattern::clique(5);
    const Pattern k33 = Pattern::biclique(3, 3);
    const Pattern k54 = Pattern::biclique(5, 4);
    const Pattern k55 = Pattern::biclique(5, 5);
    std::vector<Pattern> out;
    if (max_genus >= 3) {
        out.push_back(k55);
        out.push_back(Pattern::merged_at_branch(k54, k33));
        out.push_back(Pattern::disjoint_union(k54, k33));
    }
    if (max_genus >= 2) {
        out.push_back(k54);
        out.push_back(Pattern::merged_at_branch(k33, k33));
        out.push_back(Pattern::disjoint_union(k33, k33));
        out.push_back(Pattern::merged_at_branch(k5, k33));
        out.push_back(Pattern::disjoint_union(k5, k33));
        out.push_back(Pattern::merged_at_branch(k5, k5));
        out.push_back(Pattern::disjoint_union(k5, k5));
    }
    out.push_back(k5);
    out.push_back(k33);
    return out;
}

LowerCertificate block_lower(const LabeledGraph& block, const std::vector<int>& map_back,
                             const GenusOptions& opts, BudgetMeter& stage) {
    LowerCertificate best;
    const int eb = euler_lower_bound(block);
    if (eb > 0) {
        best.kind = LowerCertificate::Kind::Euler;
        best.bound = eb;
        best.subgraph_vertices = map_back;
        best.girth_used = girth(block);
    }
    const std::vector<Pattern> pats = certificate_patterns(opts.max_certificate_genus);
    int max_genus = 0;
    for (const Pattern& p : pats) max_genus = std::max(max_genus, p.genus);
    // escalating node slices so one expensive pattern cannot starve the rest
    std::vector<char> resolved(pats.size(), 0);
    for (std::int64_t slice = 30'000;
         best.bound < max_genus && !stage.exhausted(); slice *= 4) {
        bool pending = false;
        for (std::size_t pi = 0; pi < pats.size(); ++pi) {
            const Pattern& pat = pats[pi];
            if (resolved[pi] || pat.genus <= best.bound) continue;
            if (stage.exhausted()) break;
            Budget b = remaining_budget(opts.budget, stage);
            b.max_nodes = std::min(b.max_nodes, slice);
            SubdivisionResult r = find_subdivision(block, pat, b);
            stage.consume(r.nodes);
            if (r.outcome == SearchOutcome::BudgetExhausted) {
                pending = true;
                continue;
            }
            resolved[pi] = 1;
            if (r.outcome != SearchOutcome::Found) continue;
            SubdivisionWitness w = remap_witness(*r.witness, map_back);
            LowerCertificate cert;
            if (pat.parts.empty()) {
                cert.kind = LowerCertificate::Kind::Subdivision;
                cert.bound = pat.genus;
                cert.witness = std::move(w);
            } else {
                cert.kind = LowerCertificate::Kind::BlockSum;
                cert.bound = pat.genus;
                for (const SubdivisionWitness& pw : split_witness(pat, *r.witness)) {
                    LowerCertificate part;
                    part.kind = LowerCertificate::Kind::Subdivision;
                    part.bound = pw.pattern_genus;
                    part.witness = remap_witness(pw, map_back);
                    cert.parts.push_back(std::move(part));
                }
            }
            if (cert.bound > best.bound) best = std::move(cert);
        }
        if (!pending) break;
    }
    return best;
}

void flatten_into(LowerCertificate&& cert, std::vector<LowerCertificate>& parts) {
    if (cert.kind == LowerCertificate::Kind::BlockSum) {
        for (auto& p : cert.parts) flatten_into(std::move(p), parts);
    } else if (cert.bound > 0) {
        parts.push_back(std::move(cert));
    }
}

} // namespace

GenusBounds genus_bounds(const LabeledGraph& g, const GenusOptions& opts) {
    GenusBounds out;
    const auto comps = connected_components(g);
    const auto blks = blocks(g);

    BudgetMeter lower_stage(opts.budget);
    std::vector<LowerCertificate> block_certs;
    std::vector<int> comp_lower(comps.size(), 0);
    std::vector<int> comp_of(g.vertex_count(), 0);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = int(c);

    for (const Block& b : blks) {
        if (b.edges.size() < 2) continue; // a bridge has genus 0
        LabeledGraph sub = induced_subgraph(g, b.vertices);
        // keep only the block's own edges (induced edges of other blocks
        // cannot appear: blocks share at most one vertex)
        LowerCertificate cert = block_lower(sub, b.vertices, opts, lower_stage);
        if (cert.bound > 0) {
            comp_lower[comp_of[b.vertices[0]]] += cert.bound;
            block_certs.push_back(std::move(cert));
        }
    }

    out.lower = 0;
    for (int cl : comp_lower) out.lower += cl;

    std::vector<LowerCertificate> parts;
    for (auto& c : block_certs) flatten_into(std::move(c), parts);
    if (parts.empty()) {
        out.lower_certificate.kind = LowerCertificate::Kind::Trivial;
        out.lower_certificate.bound = 0;
    } else if (parts.size() == 1) {
        out.lower_certificate = std::move(parts[0]);
    } else {
        out.lower_certificate.kind = LowerCertificate::Kind::BlockSum;
        out.lower_certificate.bound = out.lower;
        out.lower_certificate.parts = std::move(parts);
    }

    if (!opts.want_upper) return out;

    // upper: per component, scan targets upward from the component's
    // certified lower bound. An impossible target must not starve the ones
    // above it, so the per-target node slice escalates round by round.
    int total_upper = 0;
    int total_faces = 0;
    RotationSystem rotation(g.vertex_count());
    bool all_found = true;
    const Budget upper_budget = opts.upper_budget.value_or(opts.budget);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        LabeledGraph sub = induced_subgraph(g, comps[c]);
        BudgetMeter stage(upper_budget);
        std::optional<EmbeddingResult> best;
        int best_genus = 0;
        // targets below an already-achieved genus stay live so a later,
        // larger slice can still improve the bound
        int live_upto = opts.upper_extra_targets;
        std::vector<char> resolved(opts.upper_extra_targets + 1, 0);
        for (std::int64_t slice = 30'000; !stage.exhausted(); slice *= 4) {
            bool pending = false;
            for (int k = 0; k <= live_upto; ++k) {
                if (resolved[k] || stage.exhausted()) continue;
                Budget b = remaining_budget(upper_budget, stage);
                b.max_nodes = std::min(b.max_nodes, slice);
                EmbeddingResult r = search_embedding(sub, comp_lower[c] + k, b, opts.seed,
                                                     opts.exhaustive_threshold);
                stage.consume(r.nodes);
                if (r.outcome == SearchOutcome::Found) {
                    int genus = genus_of_embedding(sub, r.faces);
                    if (!best || genus < best_genus) {
                        best = r;
                        best_genus = genus;
                    }
                    live_upto = std::min(live_upto, genus - comp_lower[c] - 1);
                    resolved[k] = 1;
                } else if (r.outcome == SearchOutcome::NotFound) {
                    resolved[k] = 1; // exhaustively ruled out
                } else {
                    pending = true;
                }
            }
            if (!pending || live_upto < 0) break;
        }
        if (!best) {
            all_found = false;
            break;
        }
        total_upper += best_genus;
        total_faces += best->faces;
        for (std::size_t i = 0; i < comps[c].size(); ++i) {
            rotation[comps[c][i]].clear();
            for (int w : (*best->rotation)[i])
                rotation[comps[c][i]].push_back(comps[c][w]);
        }
    }
    if (all_found) {
        out.upper = total_upper;
        UpperCertificate uc;
        uc.rotation = std::move(rotation);
        uc.faces = total_faces;
        uc.genus = total_upper;
        out.upper_certificate = std::move(uc);
        if (out.upper < out.lower)
            throw std::logic_error("certified lower bound exceeds found upper bound");
    }
    return out;
}

// ---------------------------------------------------------------- JSON

namespace {

nlohmann::json witness_to_json(const SubdivisionWitness& w) {
    nlohmann::json j;
    j["pattern"] = w.pattern_name;
    j["pattern_genus"] = w.pattern_genus;
    nlohmann::json pe = nlohmann::json::array();
    for (auto [a, b] : w.pattern_edges) pe.push_back(nlohmann::json::array({a, b}));
    j["pattern_edges"] = std::move(pe);
    j["branch_map"] = w.branch_map;
    j["paths"] = w.paths;
    return j;
}

SubdivisionWitness witness_from_json(const nlohmann::json& j) {
    SubdivisionWitness w;
    w.pattern_name = j.at("pattern").get<std::string>();
    w.pattern_genus = j.at("pattern_genus").get<int>();
    for (const auto& e : j.at("pattern_edges"))
        w.pattern_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    w.branch_map = j.at("branch_map").get<std::vector<int>>();
    w.paths = j.at("paths").get<std::vector<std::vector<int>>>();
    return w;
}

nlohmann::json lower_to_json(const LowerCertificate& c) {
    nlohmann::json j;
    j["bound"] = c.bound;
    switch (c.kind) {
        case LowerCertificate::Kind::Trivial: j["type"] = "trivial"; break;
        case LowerCertificate::Kind::Euler:
            j["type"] = "euler";
            j["vertices"] = c.subgraph_vertices;
            j["girth"] = c.girth_used;
            break;
        case LowerCertificate::Kind::Subdivision:
            j["type"] = "subdivision";
            j["witness"] = witness_to_json(*c.witness);
            break;
        case LowerCertificate::Kind::BlockSum: {
            j["type"] = "block_sum";
            nlohmann::json parts = nlohmann::json::array();
            for (const auto& p : c.parts) parts.push_back(lower_to_json(p));
            j["parts"] = std::move(parts);
            break;
        }
    }
    return j;
}

LowerCertificate lower_from_json(const nlohmann::json& j) {
    LowerCertificate c;
    c.bound = j.at("bound").get<int>();
    const std::string type = j.at("type").get<std::string>();
    if (type == "trivial") {
        c.kind = LowerCertificate::Kind::Trivial;
    } else if (type == "euler") {
        c.kind = LowerCertificate::Kind::Euler;
        c.subgraph_vertices = j.at("vertices").get<std::vector<int>>();
        c.girth_used = j.at("girth").get<int>();
    } else if (type == "subdivision") {
        c.kind = LowerCertificate::Kind::Subdivision;
        c.witness = witness_from_json(j.at("witness"));
    } else if (type == "block_sum") {
        c.kind = LowerCertificate::Kind::BlockSum;
        for (const auto& p : j.at("parts")) c.parts.push_back(lower_from_json(p));
    } else {
        throw std::invalid_argument("unknown lower certificate type: " + type);
    }
    return c;
}

} // namespace

std::string bounds_to_json(const GenusBounds& b) {
    nlohmann::json j;
    j["version"] = 1;
    j["lower"] = b.lower;
    if (b.upper) j["upper"] = *b.upper;
    else j["upper"] = nullptr;
    j["lower_certificate"] = lower_to_json(b.lower_certificate);
    if (b.upper_certificate) {
        nlohmann::json u;
        u["rotation"] = b.upper_certificate->rotation;
        u["faces"] = b.upper_certificate->faces;
        u["genus"] = b.upper_certificate->genus;
        j["upper_certificate"] = std::move(u);
    } else {
        j["upper_certificate"] = nullptr;
    }
    return j.dump(2);
}

GenusBounds bounds_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    GenusBounds b;
    b.lower = j.at("lower").get<int>();
    if (!j.at("upper").is_null()) b.upper = j.at("upper").get<int>();
    b.lower_certificate = lower_from_json(j.at("lower_certificate"));
    if (!j.at("upper_certificate").is_null()) {
        UpperCertificate u;
        u.rotation = j.at("upper_certificate").at("rotation").get<RotationSystem>();
        u.faces = j.at("upper_certificate").at("faces").get<int>();
        u.genus = j.at("upper_certificate").at("genus").get<int>();
        b.upper_certificate = std::move(u);
    }
    return b;
}

} // namespace pis
