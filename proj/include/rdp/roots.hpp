#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "rdp/graph.hpp"
#include "rdp/numeric.hpp"
#include "rdp/types.hpp"

namespace rdp {

// Symmetric simply-laced Cartan matrix: 2 on the diagonal, 0 or -1 off it.
// Equals the negated intersection matrix of the -2-weighted diagram.
struct CartanMatrix {
    int n = 0;
    std::vector<long long> a; // row-major, n*n

    long long at(int i, int j) const {
        return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
    }
};

using RootVector = std::vector<long long>; // simple-root coordinates

// Roots sorted lexicographically; the simple basis is the unit vectors.
struct RootSystem {
    int rank = 0;
    std::vector<RootVector> roots;

    std::vector<RootVector> simple_basis() const;
};

// C = -intersection_matrix(standard_diagram(t)), in standard diagram order.
CartanMatrix cartan_matrix(AdeType t);

// Negated intersection matrix of any graph with all weights -2 and simple
// edges; rejects other graphs.
CartanMatrix cartan_from_graph(const DualGraph& g);

// Bilinear form u^T C v (twice the normalized Killing pairing) and the
// reflection s_i(b) = b - (Cb)_i e_i in simple-root coordinates.
Int cartan_pairing(const RootVector& u, const RootVector& v, const CartanMatrix& c);

// Closure of the simple roots under all simple reflections. The positive
// definiteness of C is checked first (otherwise the closure would not
// terminate); the cap bounds the root count and errors instead of looping.
RootSystem generate_roots(const CartanMatrix& c, std::size_t cap = 480);

// The positive root dominating every positive root coefficient-wise.
RootVector highest_root(const RootSystem& rs);

// Histogram of 4<a,b>^2 / (<a,a><b,b>) over unordered pairs of distinct
// roots; every value lands in {0,1,2,3,4} (and in {0,1,4} when simply laced).
std::array<long long, 5> angle_census(const RootSystem& rs, const CartanMatrix& c);

struct PositiveSimple {
    std::vector<RootVector> positive;
    std::vector<RootVector> simple; // positives that are not sums of two positives
};

// Splits the system by the sign of the linear functional whose values on the
// simple basis are the direction entries. The direction must be generic
// (nonzero on every root); checked, not assumed.
PositiveSimple positive_and_simple(const RootSystem& rs, const RootVector& direction);

// (n, n-1, ..., 1): strictly positive, hence generic for sign-uniform roots.
RootVector canonical_direction(int n);

Int cartan_determinant(const CartanMatrix& c);

} // namespace rdp
