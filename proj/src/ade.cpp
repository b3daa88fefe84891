#include "rdp/ade.hpp"

#include <algorithm>
#include <stdexcept>

namespace rdp {

namespace {

NotAde not_ade(NotAde::Reason r, std::vector<std::string> witness) {
    NotAde n;
    n.reason = r;
    n.witness = std::move(witness);
    return n;
}

// One cycle of the graph, as vertex ids, via DFS back edge. Only called when
// the (connected, simple) graph has at least as many edges as vertices.
std::vector<std::string> find_cycle(const DualGraph& g) {
    const int n = g.size();
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    std::vector<int> order;
    parent[0] = -1;
    order.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int w : g.neighbors(v)) {
            if (parent[static_cast<std::size_t>(w)] != -2) {
                if (w == parent[static_cast<std::size_t>(v)]) continue;
                // Back edge v-w: both lie on a cycle through their tree paths.
                std::vector<int> path_v, path_w;
                for (int x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) path_v.push_back(x);
                for (int x = w; x != -1; x = parent[static_cast<std::size_t>(x)]) path_w.push_back(x);
                // Drop the common tail above the lowest common ancestor.
                while (path_v.size() > 1 && path_w.size() > 1 &&
                       path_v[path_v.size() - 2] == path_w[path_w.size() - 2]) {
                    path_v.pop_back();
                    path_w.pop_back();
                }
                std::vector<std::string> ids;
                for (int x : path_v) ids.push_back(g.vertex(x).id);
                for (auto it = path_w.rbegin(); it != path_w.rend(); ++it)
                    if (*it != path_v.back() && *it != path_v.front()) ids.push_back(g.vertex(*it).id);
                return ids;
            }
            parent[static_cast<std::size_t>(w)] = v;
            order.push_back(w);
        }
    }
    throw std::logic_error("find_cycle called on an acyclic graph");
}

} // namespace

std::string reason_token(NotAde::Reason r) {
    switch (r) {
    case NotAde::Reason::NotConnected: return "not_connected";
    case NotAde::Reason::WeightNotMinusTwo: return "weight_not_minus_two";
    case NotAde::Reason::PositiveGenusVertex: return "positive_genus_vertex";
    case NotAde::Reason::MultiEdge: return "multi_edge";
    case NotAde::Reason::ContainsLoop: return "contains_loop";
    case NotAde::Reason::VertexDegreeExceeded: return "vertex_degree_exceeded";
    case NotAde::Reason::MultipleBranchPoints: return "multiple_branch_points";
    default: return "arm_condition_failed";
    }
}

Classification classify(const DualGraph& g) {
    const int n = g.size();
    if (!g.connected()) {
        if (n == 0) return not_ade(NotAde::Reason::NotConnected, {});
        // Witness: some vertex unreachable from the first one.
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        for (int i = 0; i < n; ++i)
            if (!seen[static_cast<std::size_t>(i)])
                return not_ade(NotAde::Reason::NotConnected, {g.vertex(i).id});
    }
    for (int i = 0; i < n; ++i)
        if (g.vertex(i).weight != -2)
            return not_ade(NotAde::Reason::WeightNotMinusTwo, {g.vertex(i).id});
    for (int i = 0; i < n; ++i)
        if (g.vertex(i).genus != 0)
            return not_ade(NotAde::Reason::PositiveGenusVertex, {g.vertex(i).id});
    for (const auto& [key, mult] : g.edges())
        if (mult > 1)
            return not_ade(NotAde::Reason::MultiEdge, {g.vertex(key.first).id, g.vertex(key.second).id});
    if (static_cast<int>(g.edges().size()) >= n)
        return not_ade(NotAde::Reason::ContainsLoop, find_cycle(g));
    // Connected with n-1 simple edges: a tree from here on.
    for (int i = 0; i < n; ++i)
        if (g.degree(i) > 3)
            return not_ade(NotAde::Reason::VertexDegreeExceeded, {g.vertex(i).id});
    std::vector<int> branch_points;
    for (int i = 0; i < n; ++i)
        if (g.degree(i) == 3) branch_points.push_back(i);
    if (branch_points.size() > 1) {
        std::vector<std::string> ids;
        for (int i : branch_points) ids.push_back(g.vertex(i).id);
        return not_ade(NotAde::Reason::MultipleBranchPoints, std::move(ids));
    }
    if (branch_points.empty()) return AdeType::A(n);

    // One branch point: walk its three path arms.
    int center = branch_points[0];
    std::vector<long long> arm_counts;
    for (int start : g.neighbors(center)) {
        long long count = 0;
        int prev = center, v = start;
        for (;;) {
            ++count;
            std::vector<int> next = g.neighbors(v);
            next.erase(std::remove(next.begin(), next.end(), prev), next.end());
            if (next.empty()) break;
            prev = v;
            v = next[0];
        }
        arm_counts.push_back(count);
    }
    std::sort(arm_counts.begin(), arm_counts.end());
    long long a = arm_counts[0], b = arm_counts[1], c = arm_counts[2];
    if (a == 1 && b == 1) return AdeType::D(static_cast<int>(c) + 3);
    if (a == 1 && b == 2 && c >= 2 && c <= 4) return AdeType::E(static_cast<int>(c) + 4);
    NotAde out = not_ade(NotAde::Reason::ArmConditionFailed, {g.vertex(center).id});
    out.arms = {a + 1, b + 1, c + 1};
    return out;
}

Cycle expected_fundamental_cycle(AdeType t) {
    const int n = t.rank();
    std::vector<long long> v;
    switch (t.series()) {
    case AdeType::Series::A:
        v.assign(static_cast<std::size_t>(n), 1);
        break;
    case AdeType::Series::D:
        // Chain 1,2,...,2,1 (n-1 vertices), fork 1.
        v.assign(static_cast<std::size_t>(n - 1), 2);
        v.front() = 1;
        v.back() = 1;
        v.push_back(1);
        break;
    case AdeType::Series::E:
        if (n == 6) v = {1, 2, 3, 2, 1, 2};
        else if (n == 7) v = {2, 3, 4, 3, 2, 1, 2};
        else v = {2, 4, 6, 5, 4, 3, 2, 3};
        break;
    }
    Cycle out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Int(v[i]);
    return out;
}

FiniteSubgroup group_for_type(AdeType t) {
    switch (t.series()) {
    case AdeType::Series::A: return FiniteSubgroup::cyclic(t.rank() + 1);
    case AdeType::Series::D: return FiniteSubgroup::binary_dihedral(t.rank() - 2);
    default:
        if (t.rank() == 6) return FiniteSubgroup::binary_tetrahedral();
        if (t.rank() == 7) return FiniteSubgroup::binary_octahedral();
        return FiniteSubgroup::binary_icosahedral();
    }
}

} // namespace rdp
