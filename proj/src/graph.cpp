#include "rdp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "rdp/errors.hpp"

namespace rdp {

namespace {

bool valid_id(std::string_view id) {
    if (id.empty()) return false;
    for (char c : id) {
        bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
        if (!ok) return false;
    }
    return true;
}

std::optional<long long> parse_ll(std::string_view s) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string t;
    while (in >> t) tokens.push_back(t);
    return tokens;
}

// Bare DOT identifiers: alphanumeric not starting with a digit, or a numeral.
bool dot_bare(std::string_view id) {
    bool digits = std::all_of(id.begin(), id.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (digits) return !id.empty();
    return valid_id(id) && !(id[0] >= '0' && id[0] <= '9');
}

std::string dot_node(const std::string& id) {
    if (dot_bare(id)) return id;
    return "\"" + id + "\"";
}

} // namespace

DualGraph::DualGraph(std::string name, std::vector<Vertex> vertices, const std::vector<EdgeSpec>& edges)
    : name_(std::move(name)), vertices_(std::move(vertices)) {
    if (name_.empty()) throw std::invalid_argument("graph name must be nonempty");
    for (int i = 0; i < size(); ++i) {
        const Vertex& v = vertices_[static_cast<std::size_t>(i)];
        if (!valid_id(v.id)) throw std::invalid_argument("invalid vertex id '" + v.id + "'");
        if (v.genus < 0) throw std::invalid_argument("vertex '" + v.id + "' has negative genus");
        if (!index_.emplace(v.id, i).second)
            throw std::invalid_argument("duplicate vertex id '" + v.id + "'");
    }
    for (const EdgeSpec& e : edges) {
        auto ia = index_of(e.a);
        auto ib = index_of(e.b);
        if (!ia) throw std::invalid_argument("edge endpoint '" + e.a + "' is not a vertex");
        if (!ib) throw std::invalid_argument("edge endpoint '" + e.b + "' is not a vertex");
        if (*ia == *ib) throw std::invalid_argument("self-loop on vertex '" + e.a + "'");
        if (e.mult < 1) throw std::invalid_argument("edge multiplicity must be >= 1");
        auto key = std::minmax(*ia, *ib);
        edges_[{key.first, key.second}] += e.mult;
    }
}

std::optional<int> DualGraph::index_of(std::string_view id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

long long DualGraph::edge_multiplicity(int i, int j) const {
    if (i == j) return 0;
    auto key = std::minmax(i, j);
    auto it = edges_.find({key.first, key.second});
    return it == edges_.end() ? 0 : it->second;
}

std::vector<int> DualGraph::neighbors(int i) const {
    std::vector<int> out;
    for (int j = 0; j < size(); ++j)
        if (j != i && edge_multiplicity(i, j) > 0) out.push_back(j);
    return out;
}

bool DualGraph::has_multi_edge() const {
    for (const auto& [key, mult] : edges_)
        if (mult > 1) return true;
    return false;
}

bool DualGraph::connected() const {
    if (size() == 0) return false;
    std::vector<char> seen(static_cast<std::size_t>(size()), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++count;
        for (int w : neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return count == size();
}

DualGraph parse_graph(std::string_view text, std::string name) {
    std::vector<Vertex> vertices;
    std::vector<EdgeSpec> edges;
    std::map<std::string, int, std::less<>> seen_ids;

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw parse_error("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> tok = split_ws(line);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (tok[0] == "v") {
            if (tok.size() < 3 || tok.size() > 4) fail("expected 'v <id> <weight> [<genus>]'");
            if (!valid_id(tok[1])) fail("invalid vertex id '" + tok[1] + "'");
            if (seen_ids.count(tok[1])) fail("duplicate vertex id '" + tok[1] + "'");
            auto weight = parse_ll(tok[2]);
            if (!weight) fail("invalid weight '" + tok[2] + "'");
            long long genus = 0;
            if (tok.size() == 4) {
                auto g = parse_ll(tok[3]);
                if (!g || *g < 0) fail("invalid genus '" + tok[3] + "'");
                genus = *g;
            }
            seen_ids.emplace(tok[1], static_cast<int>(vertices.size()));
            vertices.push_back({tok[1], *weight, genus});
        } else if (tok[0] == "e") {
            if (tok.size() < 3 || tok.size() > 4) fail("expected 'e <id1> <id2> [<mult>]'");
            if (!seen_ids.count(tok[1])) fail("unknown vertex '" + tok[1] + "'");
            if (!seen_ids.count(tok[2])) fail("unknown vertex '" + tok[2] + "'");
            if (tok[1] == tok[2]) fail("self-loop on vertex '" + tok[1] + "'");
            long long mult = 1;
            if (tok.size() == 4) {
                auto m = parse_ll(tok[3]);
                if (!m || *m < 1) fail("invalid multiplicity '" + tok[3] + "'");
                mult = *m;
            }
            edges.push_back({tok[1], tok[2], mult});
        } else {
            fail("unknown directive '" + tok[0] + "'");
        }
    }
    return DualGraph(std::move(name), std::move(vertices), edges);
}

std::string render_graph(const DualGraph& g) {
    std::string out;
    for (const Vertex& v : g.vertices()) {
        out += "v " + v.id + " " + std::to_string(v.weight);
        if (v.genus > 0) out += " " + std::to_string(v.genus);
        out += "\n";
    }
    for (const auto& [key, mult] : g.edges()) {
        out += "e " + g.vertex(key.first).id + " " + g.vertex(key.second).id;
        if (mult > 1) out += " " + std::to_string(mult);
        out += "\n";
    }
    return out;
}

std::string to_dot(const DualGraph& g) {
    std::string title = dot_bare(g.name()) && !(g.name()[0] >= '0' && g.name()[0] <= '9') ? g.name() : "G";
    if (g.size() == 0) return "graph " + title + " { }\n";
    std::string out = "graph " + title + " {\n";
    for (const Vertex& v : g.vertices()) {
        out += "  " + dot_node(v.id) + " [label=\"" + v.id + " (" + std::to_string(v.weight) + ")\"];\n";
    }
    for (const auto& [key, mult] : g.edges()) {
        for (long long m = 0; m < mult; ++m)
            out += "  " + dot_node(g.vertex(key.first).id) + " -- " + dot_node(g.vertex(key.second).id) + ";\n";
    }
    out += "}\n";
    return out;
}

DualGraph standard_diagram(AdeType t) {
    std::vector<Vertex> vertices;
    std::vector<EdgeSpec> edges;
    auto chain = [&](int count) {
        for (int i = 1; i <= count; ++i) {
            vertices.push_back({"e" + std::to_string(i), -2, 0});
            if (i > 1) edges.push_back({"e" + std::to_string(i - 1), "e" + std::to_string(i), 1});
        }
    };
    switch (t.series()) {
    case AdeType::Series::A:
        chain(t.rank());
        break;
    case AdeType::Series::D:
        chain(t.rank() - 1);
        vertices.push_back({"f", -2, 0});
        edges.push_back({"e2", "f", 1});
        break;
    case AdeType::Series::E:
        chain(t.rank() - 1);
        vertices.push_back({"b", -2, 0});
        edges.push_back({"e3", "b", 1});
        break;
    }
    return DualGraph(t.str(), std::move(vertices), edges);
}

DualGraph t_tree(int p, int q, int r) {
    if (p < 1 || q < 1 || r < 1) throw std::invalid_argument("t_tree requires p,q,r >= 1");
    std::vector<Vertex> vertices;
    std::vector<EdgeSpec> edges;
    const char* prefix[3] = {"a", "b", "c"};
    int len[3] = {p - 1, q - 1, r - 1};
    for (int arm = 0; arm < 3; ++arm) {
        for (int i = 1; i <= len[arm]; ++i) {
            vertices.push_back({prefix[arm] + std::to_string(i), -2, 0});
            if (i > 1) edges.push_back({prefix[arm] + std::to_string(i - 1), prefix[arm] + std::to_string(i), 1});
        }
        if (len[arm] > 0) edges.push_back({prefix[arm] + std::to_string(len[arm]), "z", 1});
    }
    vertices.push_back({"z", -2, 0});
    std::string name = "T" + std::to_string(p) + "_" + std::to_string(q) + "_" + std::to_string(r);
    return DualGraph(std::move(name), std::move(vertices), edges);
}

DualGraph loop_graph(int n) {
    if (n < 2) throw std::invalid_argument("loop_graph requires n >= 2");
    std::vector<Vertex> vertices;
    std::vector<EdgeSpec> edges;
    for (int i = 1; i <= n; ++i) {
        vertices.push_back({"e" + std::to_string(i), -2, 0});
        if (i > 1) edges.push_back({"e" + std::to_string(i - 1), "e" + std::to_string(i), 1});
    }
    edges.push_back({"e" + std::to_string(n), "e1", 1});
    return DualGraph("loop" + std::to_string(n), std::move(vertices), edges);
}

DualGraph cross_graph(int n) {
    if (n < 1) throw std::invalid_argument("cross_graph requires n >= 1");
    std::vector<Vertex> vertices;
    std::vector<EdgeSpec> edges;
    for (int i = 1; i <= n; ++i) {
        vertices.push_back({"e" + std::to_string(i), -2, 0});
        if (i > 1) edges.push_back({"e" + std::to_string(i - 1), "e" + std::to_string(i), 1});
    }
    for (int i = 1; i <= 4; ++i) vertices.push_back({"f" + std::to_string(i), -2, 0});
    edges.push_back({"f1", "e1", 1});
    edges.push_back({"f2", "e1", 1});
    edges.push_back({"f3", "e" + std::to_string(n), 1});
    edges.push_back({"f4", "e" + std::to_string(n), 1});
    return DualGraph("cross" + std::to_string(n), std::move(vertices), edges);
}

} // namespace rdp
