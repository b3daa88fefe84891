#pragma once

#include <functional>
#include <vector>

#include "rdp/graph.hpp"
#include "rdp/lattice.hpp"
#include "rdp/numeric.hpp"

namespace rdp {

// Coefficients of a divisor supported on the exceptional curves, indexed by
// vertex order. A positive cycle has all entries >= 0 and at least one > 0.
using Cycle = std::vector<Int>;

// k_i = K.E_i = -weight_i - 2 + 2 genus_i (adjunction on the single curve).
std::vector<Int> canonical_pairings(const DualGraph& g);

struct NumericalCondition {
    bool satisfied = false;     // all pairings <= 0
    std::vector<Int> pairings;  // (M z)_i = Z.E_i per vertex
};

// Z.E_i <= 0 for every i. Requires a positive cycle.
NumericalCondition numerical_condition(const Cycle& z, const DualGraph& g);

// p_a(Z) = 1 + (Z.Z + Z.K)/2. Z.Z + Z.K is always even; violation of that
// parity is checked and reported as a logic error, never divided through.
// Rejects the zero cycle.
Int arithmetic_genus(const Cycle& z, const DualGraph& g);

// Same value computed by peeling single curves off Z and applying
// p_a(Z' + E_i) = p_a(Z') + p_a(E_i) + Z'.E_i - 1.
Int genus_by_additivity(const Cycle& z, const DualGraph& g);

namespace detail {
// Chooses the vertex to increment among the indices violating Z.E_i <= 0
// (passed in ascending order). The result is independent of this choice.
using Picker = std::function<std::size_t(const std::vector<std::size_t>&)>;
Cycle fundamental_cycle_with_picker(const DualGraph& g, const Picker& pick);
} // namespace detail

// Minimal positive cycle Z with Z.E_i <= 0 for all i (coefficient-wise
// minimum among all solutions). Iterates from the all-ones cycle, bumping
// the lowest-index violating vertex. Requires a connected graph with
// negative definite intersection form; refused otherwise.
Cycle fundamental_cycle(const DualGraph& g);

// Brute-force check: enumerate all cycles with coefficients in [0, bound],
// keep those satisfying the numerical condition, return the coefficient-wise
// minimum. Same preconditions as fundamental_cycle; reports when no solution
// exists within the bound instead of returning a wrong answer.
Cycle fundamental_cycle_oracle(const DualGraph& g, long long bound);

// p_a(Z_num) == 0 (Artin's combinatorial rationality criterion).
bool is_rational(const DualGraph& g);

// -Z_num.Z_num, valid for rational singularities only; non-rational input
// is refused with the failed hypothesis named.
Int multiplicity(const DualGraph& g);

} // namespace rdp
