#include <doctest.h>

#include <string>
#include <vector>

#include "rdp/report.hpp"

using namespace rdp;

namespace {

std::vector<std::string> key_order(const Json& j) {
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    return keys;
}

} // namespace

TEST_SUITE("report") {

TEST_CASE("field presence tracks the graph class") {
    const Report e8 = make_report(standard_diagram(AdeType::E(8)));
    CHECK(e8.name == "E8");
    CHECK(e8.vertex_count == 8);
    CHECK(e8.definiteness.kind == DefinitenessKind::NegativeDefinite);
    CHECK(e8.definiteness.witness.empty());
    REQUIRE(e8.z_num.has_value());
    CHECK(*e8.p_a == 0);
    CHECK(*e8.rational == true);
    CHECK(*e8.multiplicity == 2);

    const Report loop = make_report(loop_graph(3));
    CHECK(loop.definiteness.kind == DefinitenessKind::NegativeSemidefiniteDegenerate);
    CHECK(loop.definiteness.witness == std::vector<Int>{1, 1, 1});
    CHECK(!loop.z_num.has_value());
    CHECK(!loop.p_a.has_value());
    CHECK(!loop.rational.has_value());
    CHECK(!loop.multiplicity.has_value());

    // rational but only after the cycle exists; multiplicity gated on p_a = 0
    const Report ell = make_report(DualGraph("ell", {{"e", -1, 1}}, {}));
    CHECK(ell.definiteness.kind == DefinitenessKind::NegativeDefinite);
    REQUIRE(ell.z_num.has_value());
    CHECK(*ell.p_a == 1);
    CHECK(*ell.rational == false);
    CHECK(!ell.multiplicity.has_value());

    const Report indef = make_report(t_tree(2, 3, 7));
    CHECK(indef.definiteness.kind == DefinitenessKind::Indefinite);
    CHECK(!indef.definiteness.witness.empty());
    CHECK(!indef.z_num.has_value());

    const Report split = make_report(DualGraph("G", {{"a", -2, 0}, {"b", -2, 0}}, {}));
    CHECK(split.definiteness.kind == DefinitenessKind::NegativeDefinite);
    CHECK(!split.z_num.has_value()); // connectivity gates the cycle fields

    const Report empty = make_report(DualGraph("E", {}, {}));
    CHECK(empty.vertex_count == 0);
    CHECK(empty.definiteness.kind == DefinitenessKind::NegativeDefinite);
    CHECK(!empty.z_num.has_value());
}

TEST_CASE("full text report") {
    const DualGraph g = standard_diagram(AdeType::E(8));
    CHECK(report_text(g, make_report(g)) ==
          "graph: E8\n"
          "vertices: 8\n"
          "definiteness: negative definite\n"
          "classification: E8\n"
          "Z_num: e1=2 e2=4 e3=6 e4=5 e5=4 e6=3 e7=2 b=3\n"
          "p_a: 0\n"
          "rational: yes\n"
          "multiplicity: 2\n");

    const DualGraph loop = loop_graph(3);
    CHECK(report_text(loop, make_report(loop)) ==
          "graph: loop3\n"
          "vertices: 3\n"
          "definiteness: negative semidefinite, degenerate\n"
          "witness: e1=1 e2=1 e3=1\n"
          "classification: not ADE (contains_loop; witness: e2 e1 e3)\n");

    const DualGraph empty("empty", {}, {});
    CHECK(report_text(empty, make_report(empty)) ==
          "graph: empty\n"
          "vertices: 0\n"
          "definiteness: negative definite\n"
          "classification: not ADE (not_connected)\n");
}

TEST_CASE("classification text forms") {
    CHECK(classification_text(classify(standard_diagram(AdeType::D(4)))) == "D4");
    CHECK(classification_text(classify(t_tree(3, 3, 3))) ==
          "not ADE (arm_condition_failed; arms: 3,3,3; witness: z)");
    CHECK(classification_text(classify(DualGraph("G", {{"a", -3, 0}}, {}))) ==
          "not ADE (weight_not_minus_two; witness: a)");
}

TEST_CASE("single-value text blocks") {
    const DualGraph g = standard_diagram(AdeType::A(2));
    CHECK(zn_text(g, {Int(1), Int(1)}, Int(-2), Int(0)) ==
          "Z_num: e1=1 e2=1\nself-intersection: -2\np_a: 0\n");
    CHECK(rational_text(Int(0)) == "p_a: 0\nrational: yes\n");
    CHECK(rational_text(Int(2)) == "p_a: 2\nrational: no\n");
    CHECK(mult_text(Int(7)) == "multiplicity: 7\n");
}

TEST_CASE("hj and mckay text blocks") {
    const auto chain = hj_expand(5, 4);
    CHECK(hj_text(CyclicType::make(5, 4), chain, chain_graph(chain)) ==
          "# 5/4 = [2,2,2,2]\n"
          "v e1 -2\n"
          "v e2 -2\n"
          "v e3 -2\n"
          "v e4 -2\n"
          "e e1 e2\n"
          "e e2 e3\n"
          "e e3 e4\n");

    const FiniteSubgroup grp = FiniteSubgroup::binary_icosahedral();
    const AdeType t = mckay_type(grp);
    const std::string text = mckay_text(grp, t, group_order(grp), invariant_equation(grp), standard_diagram(t));
    CHECK(text.substr(0, text.find('\n')) == "# mckay group I~");
    CHECK(text.find("# E8, order 120, x^2+y^3+z^5\n") != std::string::npos);
    CHECK(text.find("v e1 -2\n") != std::string::npos);
}

TEST_CASE("check json: shape, order, round trip") {
    const DualGraph g = standard_diagram(AdeType::E(8));
    const Json j = check_json(g, make_report(g));
    CHECK(key_order(j) == std::vector<std::string>{"schema", "command", "graph", "definiteness", "classification",
                                                   "z_num", "p_a", "rational", "multiplicity"});
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "check");
    CHECK(j["graph"]["name"] == "E8");
    CHECK(j["definiteness"]["kind"] == "negative_definite");
    CHECK(!j["definiteness"].contains("witness"));
    CHECK(j["classification"]["kind"] == "ade");
    CHECK(j["classification"]["type"] == "E8");
    CHECK(key_order(j["z_num"]) ==
          std::vector<std::string>{"e1", "e2", "e3", "e4", "e5", "e6", "e7", "b"});
    CHECK(j["z_num"]["e3"] == 6);
    CHECK(j["p_a"] == 0);
    CHECK(j["rational"] == true);
    CHECK(j["multiplicity"] == 2);
    CHECK(Json::parse(j.dump()) == j);
    CHECK(j.dump() == check_json(g, make_report(g)).dump());

    const Json l = check_json(loop_graph(3), make_report(loop_graph(3)));
    CHECK(l["definiteness"]["kind"] == "negative_semidefinite_degenerate");
    CHECK(l["definiteness"]["witness"] == Json({{"e1", 1}, {"e2", 1}, {"e3", 1}}));
    CHECK(l["classification"]["kind"] == "not_ade");
    CHECK(l["classification"]["reason"] == "contains_loop");
    CHECK(!l.contains("z_num"));
    CHECK(!l.contains("p_a"));
    CHECK(!l.contains("rational"));
    CHECK(!l.contains("multiplicity"));
}

TEST_CASE("classification json carries arms only for the arm failure") {
    const Json arm = classification_json(classify(t_tree(2, 3, 6)));
    CHECK(arm["kind"] == "not_ade");
    CHECK(arm["reason"] == "arm_condition_failed");
    CHECK(arm["witness"] == Json::array({"z"}));
    CHECK(arm["arms"] == Json::array({2, 3, 6}));

    const Json loop = classification_json(classify(loop_graph(3)));
    CHECK(!loop.contains("arms"));
    CHECK(loop["witness"].is_array());

    const Json ade = classification_json(classify(standard_diagram(AdeType::A(1))));
    CHECK(key_order(ade) == std::vector<std::string>{"kind", "type"});
}

TEST_CASE("graph json lists vertices and edges in order") {
    const DualGraph g("G", {{"a", -2, 0}, {"b", -3, 1}}, {{"a", "b", 2}});
    const Json j = graph_json(g);
    CHECK(j["name"] == "G");
    REQUIRE(j["vertices"].size() == 2);
    CHECK(j["vertices"][0] == Json({{"id", "a"}, {"weight", -2}, {"genus", 0}}));
    CHECK(j["vertices"][1] == Json({{"id", "b"}, {"weight", -3}, {"genus", 1}}));
    REQUIRE(j["edges"].size() == 1);
    CHECK(j["edges"][0] == Json({{"a", "a"}, {"b", "b"}, {"mult", 2}}));
}

TEST_CASE("integers leave the long long range as strings") {
    CHECK(json_int(Int(42)) == Json(42));
    CHECK(json_int(Int(-7)) == Json(-7));
    CHECK(json_int(Int("9223372036854775807")) == Json(9223372036854775807LL));
    const Json big = json_int(Int("123456789012345678901234567890"));
    REQUIRE(big.is_string());
    CHECK(big == "123456789012345678901234567890");
    const Json neg = json_int(Int("-99999999999999999999"));
    REQUIRE(neg.is_string());
    CHECK(neg == "-99999999999999999999");
}

TEST_CASE("subcommand json shapes") {
    const Json z = zn_json(standard_diagram(AdeType::A(2)), {Int(1), Int(1)}, Int(-2), Int(0));
    CHECK(key_order(z) == std::vector<std::string>{"schema", "command", "name", "z_num", "self_intersection", "p_a"});
    CHECK(z["command"] == "zn");
    CHECK(z["self_intersection"] == -2);

    const Json r = rational_json(standard_diagram(AdeType::A(2)), Int(3));
    CHECK(r["command"] == "rational");
    CHECK(r["p_a"] == 3);
    CHECK(r["rational"] == false);

    const Json m = mult_json(standard_diagram(AdeType::A(2)), Int(2));
    CHECK(m["command"] == "mult");
    CHECK(m["multiplicity"] == 2);

    const Json gen = gen_json(standard_diagram(AdeType::D(4)));
    CHECK(key_order(gen) == std::vector<std::string>{"schema", "command", "graph"});
    CHECK(gen["graph"]["vertices"].size() == 4);

    const auto chain = hj_expand(12, 5);
    const Json h = hj_json(CyclicType::make(12, 5), chain, chain_graph(chain));
    CHECK(key_order(h) == std::vector<std::string>{"schema", "command", "n", "q", "chain", "graph"});
    CHECK(h["n"] == 12);
    CHECK(h["q"] == 5);
    CHECK(h["chain"] == Json::array({3, 2, 3}));

    const FiniteSubgroup grp = FiniteSubgroup::binary_dihedral(3);
    const AdeType t = mckay_type(grp);
    const Json mk = mckay_json(grp, t, group_order(grp), invariant_equation(grp), standard_diagram(t));
    CHECK(key_order(mk) ==
          std::vector<std::string>{"schema", "command", "group", "order", "type", "equation", "graph"});
    CHECK(mk["group"] == "D~3");
    CHECK(mk["order"] == 12);
    CHECK(mk["type"] == "D5");
    CHECK(mk["equation"] == "x^4+xy^2+z^2");

    const CartanMatrix c = cartan_matrix(AdeType::A(2));
    const RootSystem rs = generate_roots(c);
    const auto ps = positive_and_simple(rs, canonical_direction(rs.rank));
    const Json ro = roots_json(AdeType::A(2), rs, ps.positive.size(), highest_root(rs),
                               cartan_determinant(c), angle_census(rs, c));
    CHECK(key_order(ro) == std::vector<std::string>{"schema", "command", "type", "rank", "count", "positive_count",
                                                    "highest_root", "cartan_determinant", "angle_census"});
    CHECK(ro["count"] == 6);
    CHECK(ro["positive_count"] == 3);
    CHECK(ro["highest_root"] == Json::array({1, 1}));
    CHECK(ro["cartan_determinant"] == 3);
    CHECK(ro["angle_census"] == Json::array({0, 12, 0, 0, 3}));
}

} // TEST_SUITE
