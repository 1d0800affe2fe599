#include "pis/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "pis/graph.hpp"

namespace pis {

std::string to_string(GenusClass c) {
    switch (c) {
        case GenusClass::Planar: return "Planar";
        case GenusClass::One: return "One";
        case GenusClass::Two: return "Two";
        case GenusClass::AtLeastThree: return "AtLeastThree";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Confirmed: return "confirmed";
        case Verdict::LowerOnly: return "lower-only";
        case Verdict::Mismatch: return "mismatch";
    }
    return "?";
}

FactorProfile profile_factor(const FiniteRing& factor, const IdealLattice& lat) {
    if (!is_local_ring(lat))
        throw std::invalid_argument("profile_factor expects a local ring");
    FactorProfile p;
    p.proper_nonzero_ideal_count = lat.size() - 2;
    p.is_field = p.proper_nonzero_ideal_count == 0;
    p.is_principal = is_principal_ring(lat);
    int maximal = -1;
    for (int i = 0; i < lat.size(); ++i)
        if (lat.is_maximal[i]) maximal = i;
    p.eta_of_maximal = lat.eta[maximal].value_or(0);
    // two elements x,y with closure {x,y} = M, x^2 = y^2 = 0, neither
    // generating M alone (otherwise M would just be principal)
    if (!p.is_principal) {
        const ElemSet& M = lat.ideals[maximal].members;
        std::vector<int> nilsq;
        for (int x : M.members())
            if (factor.mul(x, x) == factor.zero()) nilsq.push_back(x);
        for (std::size_t i = 0; i < nilsq.size() && !p.two_generated_nilsquare; ++i) {
            if (principal_ideal(factor, nilsq[i]).members == M) continue;
            for (std::size_t j = i + 1; j < nilsq.size(); ++j) {
                if (principal_ideal(factor, nilsq[j]).members == M) continue;
                if (ideal_generated_by(factor, {nilsq[i], nilsq[j]}) == M) {
                    p.two_generated_nilsquare = true;
                    break;
                }
            }
        }
    }
    return p;
}

std::vector<FactorProfile> profile_factors(const RingSystem& sys) {
    std::vector<FactorProfile> out;
    for (std::size_t i = 0; i < sys.factor_rings.size(); ++i)
        out.push_back(profile_factor(sys.factor_rings[i], sys.factor_lattices[i]));
    return out;
}

namespace {

int field_count(const std::vector<FactorProfile>& p) {
    int c = 0;
    for (const auto& f : p) c += f.is_field;
    return c;
}

} // namespace

bool matches_planar(const std::vector<FactorProfile>& p) {
    const int n = int(p.size());
    const int nf = field_count(p);
    if ((n == 2 || n == 3) && nf == n) return true;
    if (n == 2 && nf == 1) {
        const FactorProfile& other = p[0].is_field ? p[1] : p[0];
        if (other.is_principal) return true;
    }
    if (n == 2 && p[0].proper_nonzero_ideal_count == 1 && p[1].proper_nonzero_ideal_count == 1)
        return true;
    return false;
}

bool matches_one(const std::vector<FactorProfile>& p) {
    const int n = int(p.size());
    const int nf = field_count(p);
    if (n == 3 && nf == 2) {
        for (const auto& f : p)
            if (!f.is_field && f.proper_nonzero_ideal_count == 1) return true;
        return false;
    }
    if (n == 2 && nf == 0) {
        // one factor with exactly {I1, M1} (principal, eta 3), the other with
        // exactly {M2} (principal, eta 2)
        for (int i = 0; i < 2; ++i) {
            const FactorProfile& a = p[i];
            const FactorProfile& b = p[1 - i];
            if (a.proper_nonzero_ideal_count == 2 && a.is_principal &&
                b.proper_nonzero_ideal_count == 1)
                return true;
        }
    }
    return false;
}

bool matches_two(const std::vector<FactorProfile>& p) {
    const int n = int(p.size());
    if (n != 2) return false;
    const int nf = field_count(p);
    if (nf == 1) {
        const FactorProfile& other = p[0].is_field ? p[1] : p[0];
        if (other.two_generated_nilsquare) return true;
    }
    if (nf == 0 && p[0].is_principal && p[1].is_principal) {
        int e1 = std::max(p[0].eta_of_maximal, p[1].eta_of_maximal);
        int e2 = std::min(p[0].eta_of_maximal, p[1].eta_of_maximal);
        if ((e1 == 4 || e1 == 5) && e2 == 2) return true;
    }
    return false;
}

GenusClass predict(std::vector<FactorProfile> profiles) {
    if (profiles.size() < 2)
        throw std::invalid_argument("predict needs a non-local ring (>= 2 factors)");
    // canonical order: fields last, then by descending eta
    std::stable_sort(profiles.begin(), profiles.end(),
                     [](const FactorProfile& a, const FactorProfile& b) {
                         if (a.is_field != b.is_field) return !a.is_field;
                         return a.eta_of_maximal > b.eta_of_maximal;
                     });
    if (matches_planar(profiles)) return GenusClass::Planar;
    if (matches_one(profiles)) return GenusClass::One;
    if (matches_two(profiles)) return GenusClass::Two;
    return GenusClass::AtLeastThree;
}

Verdict judge(GenusClass predicted, const GenusBounds& b) {
    const int lo = b.lower;
    const bool has_upper = b.upper.has_value();
    const int up = has_upper ? *b.upper : -1;
    if (has_upper && up < lo) return Verdict::Mismatch;
    if (predicted == GenusClass::AtLeastThree) {
        if (has_upper && up < 3) return Verdict::Mismatch;
        return lo >= 3 ? Verdict::Confirmed : Verdict::LowerOnly;
    }
    const int value = predicted == GenusClass::Planar ? 0 : predicted == GenusClass::One ? 1 : 2;
    if (lo > value || (has_upper && up < value)) return Verdict::Mismatch;
    if (lo == value && has_upper && up == value) return Verdict::Confirmed;
    return Verdict::LowerOnly;
}

VerificationReport verify_ring(const std::string& spec_text, const GenusOptions& opts) {
    RingDescriptor desc = parse_ring_spec(spec_text);
    RingSystem sys = RingSystem::analyze(desc);
    VerificationReport rep;
    rep.ring_spec = desc.text();
    rep.predicted = predict(profile_factors(sys));
    LabeledGraph g = build_pis(sys);
    rep.vertices = g.vertex_count();
    rep.edges = g.edge_count();
    GenusOptions local = opts;
    if (rep.predicted == GenusClass::AtLeastThree) {
        // the class only needs the certified lower bound; keep the upper
        // probe short instead of burning the full budget per target
        local.upper_extra_targets = std::min(local.upper_extra_targets, 1);
        Budget ub = local.upper_budget.value_or(local.budget);
        ub.max_ms = std::min<std::int64_t>(ub.max_ms, 10'000);
        ub.max_nodes = std::min<std::int64_t>(ub.max_nodes, 2'000'000);
        local.upper_budget = ub;
    }
    rep.bounds = genus_bounds(g, local);
    rep.verdict = judge(rep.predicted, rep.bounds);
    rep.graph_json = export_graph(g, GraphFormat::Json, rep.ring_spec);
    rep.certificate_json = bounds_to_json(rep.bounds);
    if (rep.verdict == Verdict::LowerOnly) {
        rep.note = "bounds [" + std::to_string(rep.bounds.lower) + ", " +
                   (rep.bounds.upper ? std::to_string(*rep.bounds.upper) : "?") +
                   "] do not pin predicted class " + to_string(rep.predicted) +
                   "; certificate gap logged";
    } else if (rep.verdict == Verdict::Mismatch) {
        rep.note = "computed bounds exclude predicted class " + to_string(rep.predicted);
    }
    return rep;
}

std::string report_to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["version"] = 1;
    j["ring"] = r.ring_spec;
    j["predicted"] = to_string(r.predicted);
    j["vertices"] = r.vertices;
    j["edges"] = r.edges;
    j["lower"] = r.bounds.lower;
    if (r.bounds.upper) j["upper"] = *r.bounds.upper;
    else j["upper"] = nullptr;
    j["verdict"] = to_string(r.verdict);
    j["note"] = r.note;
    j["graph"] = nlohmann::json::parse(r.graph_json);
    j["certificate"] = nlohmann::json::parse(r.certificate_json);
    return j.dump(2);
}

std::string report_summary_line(const VerificationReport& r) {
    std::string up = r.bounds.upper ? std::to_string(*r.bounds.upper) : "?";
    std::string line = r.ring_spec + ": predicted " + to_string(r.predicted) + ", bounds [" +
                       std::to_string(r.bounds.lower) + ", " + up + "], " +
                       to_string(r.verdict);
    if (!r.note.empty()) line += " (" + r.note + ")";
    return line;
}

} // namespace pis
