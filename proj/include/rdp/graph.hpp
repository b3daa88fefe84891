#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rdp/types.hpp"

namespace rdp {

struct Vertex {
    std::string id;        // token of [A-Za-z0-9_]+
    long long weight = 0;  // self-intersection of the curve
    long long genus = 0;   // arithmetic genus of the curve, >= 0

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct EdgeSpec {
    std::string a;
    std::string b;
    long long mult = 1;
};

// Weighted dual graph of a resolution: one vertex per exceptional curve,
// edge multiplicity = intersection number of the two distinct curves.
// Vertex order is significant; every vector quantity indexes by it.
// Immutable after construction.
class DualGraph {
public:
    DualGraph() = default;
    // Validates: unique well-formed ids, existing endpoints, no self-loops,
    // multiplicities >= 1. Parallel EdgeSpec entries accumulate.
    DualGraph(std::string name, std::vector<Vertex> vertices, const std::vector<EdgeSpec>& edges);

    const std::string& name() const { return name_; }
    int size() const { return static_cast<int>(vertices_.size()); }
    const Vertex& vertex(int i) const { return vertices_.at(static_cast<std::size_t>(i)); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::optional<int> index_of(std::string_view id) const;

    // Keys are index pairs (i,j) with i < j; values are multiplicities >= 1.
    const std::map<std::pair<int, int>, long long>& edges() const { return edges_; }
    long long edge_multiplicity(int i, int j) const;

    // Distinct adjacent vertices, ascending index order.
    std::vector<int> neighbors(int i) const;
    int degree(int i) const { return static_cast<int>(neighbors(i).size()); }

    bool has_multi_edge() const;
    // False for the empty graph: an exceptional set is nonempty.
    bool connected() const;

    // Name is a label, not part of the graph value.
    friend bool operator==(const DualGraph& a, const DualGraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }
    friend bool operator!=(const DualGraph& a, const DualGraph& b) { return !(a == b); }

private:
    std::string name_ = "G";
    std::vector<Vertex> vertices_;
    std::map<std::pair<int, int>, long long> edges_;
    std::map<std::string, int, std::less<>> index_;
};

// Line-based file format:
//   # comment            (ignored, as are blank lines)
//   v <id> <weight> [<genus>]
//   e <id1> <id2> [<mult>]
// Repeated e-lines accumulate multiplicity. Errors carry the line number.
DualGraph parse_graph(std::string_view text, std::string name = "G");

// Canonical text form: vertex lines in order, then edge lines sorted by
// index pair; genus printed only when > 0, multiplicity only when > 1.
// parse_graph(render_graph(g)) == g.
std::string render_graph(const DualGraph& g);

// Undirected DOT with vertex labels "id (weight)"; multi-edges repeat lines.
std::string to_dot(const DualGraph& g);

// The ADE diagram with all weights -2: A(n) a path; D(n) a path of n-1
// vertices with a fork on the second one; E6/E7/E8 a path of 5/6/7 vertices
// with a branch on the third one. Chain vertices come first (e1, e2, ...),
// the fork/branch vertex last (f or b).
DualGraph standard_diagram(AdeType t);

// T-tree with three arms of p-1, q-1, r-1 vertices joined to one center,
// all weights -2. Vertex order: each arm tip-to-center, then the center.
DualGraph t_tree(int p, int q, int r);

// Simple cycle of n >= 3 vertices, or a double edge for n = 2; all weights -2.
DualGraph loop_graph(int n);

// Path of n >= 1 vertices with two extra leaves on each end; all weights -2.
// Vertex order: path e1..en, then leaves f1, f2 (on e1), f3, f4 (on en).
DualGraph cross_graph(int n);

} // namespace rdp
