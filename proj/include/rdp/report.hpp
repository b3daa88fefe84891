#pragma once

#include <array>
#include <optional>
#include <string>

#include <json.hpp>

#include "rdp/ade.hpp"
#include "rdp/cycle.hpp"
#include "rdp/graph.hpp"
#include "rdp/lattice.hpp"
#include "rdp/quotient.hpp"
#include "rdp/roots.hpp"
#include "rdp/types.hpp"

namespace rdp {

using Json = nlohmann::ordered_json;

// Everything `check` prints. Cycle-dependent fields exist only when the graph
// is connected and negative definite; multiplicity only when also rational.
struct Report {
    std::string name;
    int vertex_count = 0;
    Definiteness definiteness;
    Classification classification = NotAde{};
    std::optional<Cycle> z_num;
    std::optional<Int> p_a;
    std::optional<bool> rational;
    std::optional<Int> multiplicity;
};

Report make_report(const DualGraph& g);

// Text renderers. Each returns a complete block ending in one newline.
std::string definiteness_text(DefinitenessKind k);
std::string cycle_entries_text(const DualGraph& g, const Cycle& z); // "e1=2 e2=4"
std::string classification_text(const Classification& c);
std::string report_text(const DualGraph& g, const Report& r);
std::string zn_text(const DualGraph& g, const Cycle& z, const Int& self, const Int& pa);
std::string rational_text(const Int& pa);
std::string mult_text(const Int& m);
std::string hj_text(const CyclicType& t, const std::vector<long long>& chain, const DualGraph& g);
std::string mckay_text(const FiniteSubgroup& grp, AdeType t, long long order, const Equation& eq,
                       const DualGraph& g);
std::string roots_text(AdeType t, const RootSystem& rs, std::size_t positive_count,
                       const RootVector& highest, const Int& det, const std::array<long long, 5>& census);

// JSON builders. Field order is part of the schema (golden files are byte
// compared); every top-level object starts with "schema": 1.
Json json_int(const Int& v);
Json graph_json(const DualGraph& g);
Json cycle_json(const DualGraph& g, const Cycle& z);
Json definiteness_json(const DualGraph& g, const Definiteness& d);
Json classification_json(const Classification& c);
Json check_json(const DualGraph& g, const Report& r);
Json classify_json(const DualGraph& g, const Classification& c);
Json zn_json(const DualGraph& g, const Cycle& z, const Int& self, const Int& pa);
Json rational_json(const DualGraph& g, const Int& pa);
Json mult_json(const DualGraph& g, const Int& m);
Json gen_json(const DualGraph& g);
Json hj_json(const CyclicType& t, const std::vector<long long>& chain, const DualGraph& g);
Json mckay_json(const FiniteSubgroup& grp, AdeType t, long long order, const Equation& eq,
                const DualGraph& g);
Json roots_json(AdeType t, const RootSystem& rs, std::size_t positive_count, const RootVector& highest,
                const Int& det, const std::array<long long, 5>& census);

} // namespace rdp
