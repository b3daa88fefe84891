#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "rdp/ade.hpp"
#include "rdp/graph.hpp"
#include "rdp/lattice.hpp"
#include "rdp/types.hpp"
#include "support/oracles.hpp"

using namespace rdp;

namespace {

bool is_ade(const Classification& c) { return std::holds_alternative<AdeType>(c); }

const NotAde& refusal(const Classification& c) { return std::get<NotAde>(c); }

AdeType type_of(const Classification& c) { return std::get<AdeType>(c); }

// The witness of a ContainsLoop refusal must be an actual cycle in g:
// distinct vertices, length >= 3, consecutive ids adjacent (cyclically).
void check_cycle_witness(const DualGraph& g, const std::vector<std::string>& w) {
    REQUIRE(w.size() >= 3);
    std::set<std::string> distinct(w.begin(), w.end());
    CHECK(distinct.size() == w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto a = g.index_of(w[i]);
        const auto b = g.index_of(w[(i + 1) % w.size()]);
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        CHECK(g.edge_multiplicity(*a, *b) >= 1);
    }
}

bool mask_connected(int n, unsigned mask) {
    std::array<unsigned, 8> adj{};
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1u) {
                adj[static_cast<std::size_t>(i)] |= 1u << j;
                adj[static_cast<std::size_t>(j)] |= 1u << i;
            }
    unsigned seen = 1u, frontier = 1u;
    while (frontier != 0) {
        unsigned next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier >> v & 1u) next |= adj[static_cast<std::size_t>(v)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1u << n) - 1u;
}

DualGraph unit_graph_from_mask(int n, unsigned mask) {
    std::vector<Vertex> vs;
    for (int i = 0; i < n; ++i) vs.push_back({"u" + std::to_string(i + 1), -2, 0});
    std::vector<EdgeSpec> es;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1u) es.push_back({vs[static_cast<std::size_t>(i)].id, vs[static_cast<std::size_t>(j)].id, 1});
    return DualGraph("M", vs, es);
}

} // namespace

TEST_SUITE("ade") {

TEST_CASE("type tokens parse and print") {
    CHECK(AdeType::A(1).str() == "A1");
    CHECK(AdeType::D(12).str() == "D12");
    CHECK(AdeType::E(7).str() == "E7");
    CHECK(AdeType::parse("A12") == AdeType::A(12));
    CHECK(AdeType::parse("D4") == AdeType::D(4));
    CHECK(AdeType::parse("E8") == AdeType::E(8));
    for (const char* bad : {"A0", "D3", "D2", "E5", "E9", "F4", "a1", "A", "E", "A1x", "A-1", ""})
        CHECK(!AdeType::parse(bad).has_value());
}

TEST_CASE("standard diagrams classify back to their type") {
    for (int n = 1; n <= 50; ++n)
        CHECK(type_of(classify(standard_diagram(AdeType::A(n)))) == AdeType::A(n));
    for (int n = 4; n <= 50; ++n)
        CHECK(type_of(classify(standard_diagram(AdeType::D(n)))) == AdeType::D(n));
    for (int n = 6; n <= 8; ++n)
        CHECK(type_of(classify(standard_diagram(AdeType::E(n)))) == AdeType::E(n));
}

TEST_CASE("T-trees classify by arm lengths") {
    CHECK(type_of(classify(t_tree(1, 3, 5))) == AdeType::A(7));
    CHECK(type_of(classify(t_tree(2, 2, 1))) == AdeType::A(3)); // never D(3)
    CHECK(type_of(classify(t_tree(2, 2, 2))) == AdeType::D(4));
    CHECK(type_of(classify(t_tree(2, 2, 6))) == AdeType::D(8));
    CHECK(type_of(classify(t_tree(2, 3, 3))) == AdeType::E(6));
    CHECK(type_of(classify(t_tree(2, 3, 4))) == AdeType::E(7));
    CHECK(type_of(classify(t_tree(2, 3, 5))) == AdeType::E(8));

    for (auto [p, q, r] : {std::array<int, 3>{3, 3, 3}, {2, 4, 4}, {2, 3, 6}, {2, 3, 7}, {4, 4, 5}}) {
        const Classification c = classify(t_tree(p, q, r));
        REQUIRE(!is_ade(c));
        CHECK(refusal(c).reason == NotAde::Reason::ArmConditionFailed);
        CHECK(refusal(c).arms == std::array<long long, 3>{p, q, r});
        CHECK(refusal(c).witness == std::vector<std::string>{"z"});
    }
}

TEST_CASE("each refusal reason with its witness") {
    const Classification empty = classify(DualGraph("E", {}, {}));
    CHECK(refusal(empty).reason == NotAde::Reason::NotConnected);
    CHECK(refusal(empty).witness.empty());

    const Classification split = classify(DualGraph("G", {{"a", -2, 0}, {"b", -2, 0}}, {}));
    CHECK(refusal(split).reason == NotAde::Reason::NotConnected);
    CHECK(refusal(split).witness == std::vector<std::string>{"b"});

    const Classification weight = classify(DualGraph("G", {{"a", -3, 0}}, {}));
    CHECK(refusal(weight).reason == NotAde::Reason::WeightNotMinusTwo);
    CHECK(refusal(weight).witness == std::vector<std::string>{"a"});

    const Classification genus = classify(DualGraph("G", {{"a", -2, 1}}, {}));
    CHECK(refusal(genus).reason == NotAde::Reason::PositiveGenusVertex);
    CHECK(refusal(genus).witness == std::vector<std::string>{"a"});

    const Classification multi = classify(loop_graph(2));
    CHECK(refusal(multi).reason == NotAde::Reason::MultiEdge);
    CHECK(refusal(multi).witness == std::vector<std::string>{"e1", "e2"});

    const Classification tri = classify(loop_graph(3));
    CHECK(refusal(tri).reason == NotAde::Reason::ContainsLoop);
    check_cycle_witness(loop_graph(3), refusal(tri).witness);

    const Classification star = classify(cross_graph(1));
    CHECK(refusal(star).reason == NotAde::Reason::VertexDegreeExceeded);
    CHECK(refusal(star).witness == std::vector<std::string>{"e1"});

    const Classification cross = classify(cross_graph(2));
    CHECK(refusal(cross).reason == NotAde::Reason::MultipleBranchPoints);
    CHECK(refusal(cross).witness == std::vector<std::string>{"e1", "e2"});
}

TEST_CASE("loop witness is trimmed to the cycle") {
    // square with a tail: the tail vertex never enters the witness
    const DualGraph g("G",
                      {{"a", -2, 0}, {"b", -2, 0}, {"c", -2, 0}, {"d", -2, 0}, {"t", -2, 0}},
                      {{"a", "b", 1}, {"b", "c", 1}, {"c", "d", 1}, {"d", "a", 1}, {"a", "t", 1}});
    const Classification c = classify(g);
    REQUIRE(refusal(c).reason == NotAde::Reason::ContainsLoop);
    const auto& w = refusal(c).witness;
    CHECK(std::set<std::string>(w.begin(), w.end()) == std::set<std::string>{"a", "b", "c", "d"});
    check_cycle_witness(g, w);
}

TEST_CASE("the first listed reason wins") {
    // disconnected beats bad weight
    const Classification a = classify(DualGraph("G", {{"a", -3, 0}, {"b", -2, 0}}, {}));
    CHECK(refusal(a).reason == NotAde::Reason::NotConnected);

    // bad weight beats positive genus, regardless of vertex order
    const Classification b = classify(DualGraph("G", {{"a", -2, 1}, {"b", -3, 0}}, {{"a", "b", 1}}));
    CHECK(refusal(b).reason == NotAde::Reason::WeightNotMinusTwo);
    CHECK(refusal(b).witness == std::vector<std::string>{"b"});

    // positive genus beats the multi-edge
    const Classification c = classify(DualGraph("G", {{"a", -2, 1}, {"b", -2, 0}}, {{"a", "b", 2}}));
    CHECK(refusal(c).reason == NotAde::Reason::PositiveGenusVertex);

    // multi-edge beats the loop it closes
    const Classification d = classify(DualGraph(
        "G", {{"a", -2, 0}, {"b", -2, 0}, {"c", -2, 0}},
        {{"a", "b", 2}, {"b", "c", 1}, {"c", "a", 1}}));
    CHECK(refusal(d).reason == NotAde::Reason::MultiEdge);
    CHECK(refusal(d).witness == std::vector<std::string>{"a", "b"});

    // a loop beats high degree: "a" has degree four, the triangle still wins
    const Classification e = classify(DualGraph(
        "G", {{"a", -2, 0}, {"b", -2, 0}, {"c", -2, 0}, {"x", -2, 0}, {"y", -2, 0}},
        {{"a", "b", 1}, {"b", "c", 1}, {"c", "a", 1}, {"a", "x", 1}, {"a", "y", 1}}));
    CHECK(refusal(e).reason == NotAde::Reason::ContainsLoop);
}

TEST_CASE("expected fundamental cycles match the computed ones") {
    std::vector<AdeType> types;
    for (int n = 1; n <= 12; ++n) types.push_back(AdeType::A(n));
    for (int n = 4; n <= 12; ++n) types.push_back(AdeType::D(n));
    for (int n = 6; n <= 8; ++n) types.push_back(AdeType::E(n));
    for (AdeType t : types)
        CHECK(expected_fundamental_cycle(t) == fundamental_cycle(standard_diagram(t)));
}

TEST_CASE("group correspondence by series") {
    CHECK(group_for_type(AdeType::A(3)) == FiniteSubgroup::cyclic(4));
    CHECK(group_for_type(AdeType::A(1)).str() == "C2");
    CHECK(group_for_type(AdeType::D(5)) == FiniteSubgroup::binary_dihedral(3));
    CHECK(group_for_type(AdeType::D(4)).str() == "D~2");
    CHECK(group_for_type(AdeType::E(6)).str() == "T~");
    CHECK(group_for_type(AdeType::E(7)).str() == "O~");
    CHECK(group_for_type(AdeType::E(8)).str() == "I~");
}

TEST_CASE("unit trees and sweeps: ADE exactly when negative definite") {
    // exhaustive over all connected simple graphs with weight -2 on up to
    // six vertices, then a random layer of seven-vertex connected graphs
    long long total = 0, ade_count = 0;
    for (int n = 1; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
            if (!mask_connected(n, mask)) continue;
            const DualGraph g = unit_graph_from_mask(n, mask);
            const bool ade = is_ade(classify(g));
            const bool negdef =
                definiteness(intersection_matrix(g)).kind == DefinitenessKind::NegativeDefinite;
            if (ade != negdef) {
                CAPTURE(render_graph(g));
                REQUIRE(ade == negdef);
            }
            ++total;
            ade_count += ade ? 1 : 0;
        }
    }
    CHECK(total == 1 + 1 + 4 + 38 + 728 + 26704); // connected graphs on 1..6 labeled vertices
    CHECK(ade_count > 0);
    CHECK(ade_count < total);

    std::mt19937 rng(123457);
    for (int round = 0; round < 3000; ++round) {
        const DualGraph g = testsupport::random_connected_graph(rng, 7, -2, -2);
        const bool ade = is_ade(classify(g));
        const bool negdef =
            definiteness(intersection_matrix(g)).kind == DefinitenessKind::NegativeDefinite;
        if (ade != negdef) {
            CAPTURE(render_graph(g));
            REQUIRE(ade == negdef);
        }
    }
}

} // TEST_SUITE
