#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "rdp/cycle.hpp"
#include "rdp/graph.hpp"
#include "rdp/types.hpp"

namespace rdp {

// Why a graph is not an ADE diagram, with re-checkable witness data.
// Checks run in the order the reasons are listed; the first failure wins.
struct NotAde {
    enum class Reason {
        NotConnected,
        WeightNotMinusTwo,
        PositiveGenusVertex,
        MultiEdge,
        ContainsLoop,
        VertexDegreeExceeded,
        MultipleBranchPoints,
        ArmConditionFailed,
    };

    Reason reason;
    // Offending vertex ids: the unreachable vertex, the off-weight vertex,
    // both endpoints of a multi-edge, the vertices of a cycle, the high-degree
    // vertex, all branch points, or the branch point of a failed T-tree.
    std::vector<std::string> witness;
    // For ArmConditionFailed: the T-tree parameters (p,q,r), ascending, with
    // 1/p + 1/q + 1/r <= 1. Zero otherwise.
    std::array<long long, 3> arms{0, 0, 0};
};

std::string reason_token(NotAde::Reason r); // snake_case name, e.g. "contains_loop"

using Classification = std::variant<AdeType, NotAde>;

// Pure graph traversal: A(n) for paths, D/E by the arm profile at the unique
// degree-3 vertex; everything else NotAde. Never emits D(n) with n < 4.
Classification classify(const DualGraph& g);

// Fundamental-cycle coefficients of the type's standard diagram, in
// standard_diagram vertex order (chain first, fork or branch vertex last).
Cycle expected_fundamental_cycle(AdeType t);

// The finite subgroup of SL(2,C) whose quotient singularity resolves to t:
// A(n) -> Cyclic(n+1), D(n) -> BinaryDihedral(n-2), E6/E7/E8 -> binary
// tetrahedral/octahedral/icosahedral. Inverse of mckay_type.
FiniteSubgroup group_for_type(AdeType t);

} // namespace rdp
