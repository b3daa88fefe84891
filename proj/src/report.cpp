#include "rdp/report.hpp"

#include <limits>
#include <sstream>

namespace rdp {

Report make_report(const DualGraph& g) {
    Report r;
    r.name = g.name();
    r.vertex_count = g.size();
    const SymMatrix m = intersection_matrix(g);
    r.definiteness = definiteness(m);
    r.classification = classify(g);
    if (g.connected() && r.definiteness.kind == DefinitenessKind::NegativeDefinite) {
        r.z_num = fundamental_cycle(g);
        r.p_a = arithmetic_genus(*r.z_num, g);
        r.rational = (*r.p_a == 0);
        if (*r.rational) r.multiplicity = -pairing(*r.z_num, *r.z_num, m);
    }
    return r;
}

std::string definiteness_text(DefinitenessKind k) {
    switch (k) {
    case DefinitenessKind::NegativeDefinite: return "negative definite";
    case DefinitenessKind::NegativeSemidefiniteDegenerate: return "negative semidefinite, degenerate";
    case DefinitenessKind::Indefinite: return "indefinite";
    }
    return "";
}

std::string cycle_entries_text(const DualGraph& g, const Cycle& z) {
    std::ostringstream out;
    for (int i = 0; i < g.size(); ++i) {
        if (i > 0) out << ' ';
        out << g.vertex(i).id << '=' << to_string(z[static_cast<std::size_t>(i)]);
    }
    return out.str();
}

std::string classification_text(const Classification& c) {
    if (const auto* t = std::get_if<AdeType>(&c)) return t->str();
    const auto& n = std::get<NotAde>(c);
    std::ostringstream out;
    out << "not ADE (" << reason_token(n.reason);
    if (n.reason == NotAde::Reason::ArmConditionFailed)
        out << "; arms: " << n.arms[0] << ',' << n.arms[1] << ',' << n.arms[2];
    if (!n.witness.empty()) {
        out << "; witness:";
        for (const auto& id : n.witness) out << ' ' << id;
    }
    out << ')';
    return out.str();
}

std::string report_text(const DualGraph& g, const Report& r) {
    std::ostringstream out;
    out << "graph: " << r.name << '\n';
    out << "vertices: " << r.vertex_count << '\n';
    out << "definiteness: " << definiteness_text(r.definiteness.kind) << '\n';
    if (!r.definiteness.witness.empty())
        out << "witness: " << cycle_entries_text(g, r.definiteness.witness) << '\n';
    out << "classification: " << classification_text(r.classification) << '\n';
    if (r.z_num) out << "Z_num: " << cycle_entries_text(g, *r.z_num) << '\n';
    if (r.p_a) out << "p_a: " << to_string(*r.p_a) << '\n';
    if (r.rational) out << "rational: " << (*r.rational ? "yes" : "no") << '\n';
    if (r.multiplicity) out << "multiplicity: " << to_string(*r.multiplicity) << '\n';
    return out.str();
}

std::string zn_text(const DualGraph& g, const Cycle& z, const Int& self, const Int& pa) {
    std::ostringstream out;
    out << "Z_num: " << cycle_entries_text(g, z) << '\n';
    out << "self-intersection: " << to_string(self) << '\n';
    out << "p_a: " << to_string(pa) << '\n';
    return out.str();
}

std::string rational_text(const Int& pa) {
    std::ostringstream out;
    out << "p_a: " << to_string(pa) << '\n';
    out << "rational: " << (pa == 0 ? "yes" : "no") << '\n';
    return out.str();
}

std::string mult_text(const Int& m) { return "multiplicity: " + to_string(m) + "\n"; }

std::string hj_text(const CyclicType& t, const std::vector<long long>& chain, const DualGraph& g) {
    std::ostringstream out;
    out << "# " << t.n << '/' << t.q << " = [";
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i > 0) out << ',';
        out << chain[i];
    }
    out << "]\n";
    out << render_graph(g);
    return out.str();
}

std::string mckay_text(const FiniteSubgroup& grp, AdeType t, long long order, const Equation& eq,
                       const DualGraph& g) {
    std::ostringstream out;
    out << "# mckay group " << grp.str() << '\n';
    out << "# " << t.str() << ", order " << order << ", " << eq.str() << '\n';
    out << render_graph(g);
    return out.str();
}

std::string roots_text(AdeType t, const RootSystem& rs, std::size_t positive_count,
                       const RootVector& highest, const Int& det, const std::array<long long, 5>& census) {
    std::ostringstream out;
    out << "type: " << t.str() << '\n';
    out << "rank: " << rs.rank << '\n';
    out << "roots: " << rs.roots.size() << '\n';
    out << "positive roots: " << positive_count << '\n';
    out << "highest root:";
    for (long long x : highest) out << ' ' << x;
    out << '\n';
    out << "Cartan determinant: " << to_string(det) << '\n';
    out << "angle census:";
    for (long long c : census) out << ' ' << c;
    out << '\n';
    return out.str();
}

Json json_int(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return static_cast<long long>(v);
    return to_string(v);
}

Json graph_json(const DualGraph& g) {
    Json vertices = Json::array();
    for (int i = 0; i < g.size(); ++i) {
        const Vertex& v = g.vertex(i);
        Json jv;
        jv["id"] = v.id;
        jv["weight"] = v.weight;
        jv["genus"] = v.genus;
        vertices.push_back(std::move(jv));
    }
    Json edges = Json::array();
    for (const auto& [ends, mult] : g.edges()) {
        Json je;
        je["a"] = g.vertex(ends.first).id;
        je["b"] = g.vertex(ends.second).id;
        je["mult"] = mult;
        edges.push_back(std::move(je));
    }
    Json j;
    j["name"] = g.name();
    j["vertices"] = std::move(vertices);
    j["edges"] = std::move(edges);
    return j;
}

Json cycle_json(const DualGraph& g, const Cycle& z) {
    Json j = Json::object();
    for (int i = 0; i < g.size(); ++i) j[g.vertex(i).id] = json_int(z[static_cast<std::size_t>(i)]);
    return j;
}

Json definiteness_json(const DualGraph& g, const Definiteness& d) {
    Json j;
    switch (d.kind) {
    case DefinitenessKind::NegativeDefinite: j["kind"] = "negative_definite"; break;
    case DefinitenessKind::NegativeSemidefiniteDegenerate: j["kind"] = "negative_semidefinite_degenerate"; break;
    case DefinitenessKind::Indefinite: j["kind"] = "indefinite"; break;
    }
    if (!d.witness.empty()) j["witness"] = cycle_json(g, d.witness);
    return j;
}

Json classification_json(const Classification& c) {
    Json j;
    if (const auto* t = std::get_if<AdeType>(&c)) {
        j["kind"] = "ade";
        j["type"] = t->str();
        return j;
    }
    const auto& n = std::get<NotAde>(c);
    j["kind"] = "not_ade";
    j["reason"] = reason_token(n.reason);
    j["witness"] = n.witness;
    if (n.reason == NotAde::Reason::ArmConditionFailed) j["arms"] = n.arms;
    return j;
}

Json check_json(const DualGraph& g, const Report& r) {
    Json j;
    j["schema"] = 1;
    j["command"] = "check";
    j["graph"] = graph_json(g);
    j["definiteness"] = definiteness_json(g, r.definiteness);
    j["classification"] = classification_json(r.classification);
    if (r.z_num) j["z_num"] = cycle_json(g, *r.z_num);
    if (r.p_a) j["p_a"] = json_int(*r.p_a);
    if (r.rational) j["rational"] = *r.rational;
    if (r.multiplicity) j["multiplicity"] = json_int(*r.multiplicity);
    return j;
}

Json classify_json(const DualGraph& g, const Classification& c) {
    Json j;
    j["schema"] = 1;
    j["command"] = "classify";
    j["name"] = g.name();
    j["classification"] = classification_json(c);
    return j;
}

Json zn_json(const DualGraph& g, const Cycle& z, const Int& self, const Int& pa) {
    Json j;
    j["schema"] = 1;
    j["command"] = "zn";
    j["name"] = g.name();
    j["z_num"] = cycle_json(g, z);
    j["self_intersection"] = json_int(self);
    j["p_a"] = json_int(pa);
    return j;
}

Json rational_json(const DualGraph& g, const Int& pa) {
    Json j;
    j["schema"] = 1;
    j["command"] = "rational";
    j["name"] = g.name();
    j["p_a"] = json_int(pa);
    j["rational"] = (pa == 0);
    return j;
}

Json mult_json(const DualGraph& g, const Int& m) {
    Json j;
    j["schema"] = 1;
    j["command"] = "mult";
    j["name"] = g.name();
    j["multiplicity"] = json_int(m);
    return j;
}

Json gen_json(const DualGraph& g) {
    Json j;
    j["schema"] = 1;
    j["command"] = "gen";
    j["graph"] = graph_json(g);
    return j;
}

Json hj_json(const CyclicType& t, const std::vector<long long>& chain, const DualGraph& g) {
    Json j;
    j["schema"] = 1;
    j["command"] = "hj";
    j["n"] = t.n;
    j["q"] = t.q;
    j["chain"] = chain;
    j["graph"] = graph_json(g);
    return j;
}

Json mckay_json(const FiniteSubgroup& grp, AdeType t, long long order, const Equation& eq,
                const DualGraph& g) {
    Json j;
    j["schema"] = 1;
    j["command"] = "mckay";
    j["group"] = grp.str();
    j["order"] = order;
    j["type"] = t.str();
    j["equation"] = eq.str();
    j["graph"] = graph_json(g);
    return j;
}

Json roots_json(AdeType t, const RootSystem& rs, std::size_t positive_count, const RootVector& highest,
                const Int& det, const std::array<long long, 5>& census) {
    Json j;
    j["schema"] = 1;
    j["command"] = "roots";
    j["type"] = t.str();
    j["rank"] = rs.rank;
    j["count"] = rs.roots.size();
    j["positive_count"] = positive_count;
    j["highest_root"] = highest;
    j["cartan_determinant"] = json_int(det);
    j["angle_census"] = census;
    return j;
}

} // namespace rdp
