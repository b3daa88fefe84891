#pragma once

#include <vector>

#include "rdp/graph.hpp"
#include "rdp/numeric.hpp"

namespace rdp {

// Dense symmetric integer matrix; set() writes both mirror entries.
class SymMatrix {
public:
    SymMatrix() : n_(0) {}
    explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

    int size() const { return n_; }
    const Int& at(int i, int j) const { return a_[idx(i, j)]; }
    void set(int i, int j, Int v) {
        a_[idx(i, j)] = v;
        a_[idx(j, i)] = std::move(v);
    }

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }
    int n_;
    std::vector<Int> a_;
};

// M_ii = weight(i), M_ij = edge multiplicity (0 if no edge).
SymMatrix intersection_matrix(const DualGraph& g);

// Bilinear extension a^T M b. Throws std::invalid_argument on dimension mismatch.
Int pairing(const std::vector<Int>& a, const std::vector<Int>& b, const SymMatrix& m);

enum class DefinitenessKind {
    NegativeDefinite,
    NegativeSemidefiniteDegenerate,
    Indefinite,
};

// Witness conventions: empty for NegativeDefinite; a nonzero integer null
// vector (pairing 0) for the degenerate case; an integer vector of positive
// self-pairing for Indefinite. Forms with a positive direction are reported
// Indefinite; a null verdict is only reached when no positive pivot appears.
struct Definiteness {
    DefinitenessKind kind = DefinitenessKind::NegativeDefinite;
    std::vector<Int> witness;
};

// Exact classification by fraction-free symmetric (Bareiss) elimination with
// symmetric permutation on zero pivots; pivot signs are leading-minor signs.
// No floating point, no tolerances.
Definiteness definiteness(const SymMatrix& m);

// Diagonal of a matrix congruent to M, by symmetric rational elimination.
// Zero pivots are handled by symmetric permutation, or by a symmetric
// column+row addition when the whole remaining diagonal vanishes; a fully
// zero remaining block yields zero entries. Sign pattern matches
// definiteness(M): all negative iff negative definite, a zero present iff
// degenerate semidefinite.
std::vector<Rat> congruence_diagonal(const SymMatrix& m);

// Exact determinant (fraction-free elimination with row pivoting).
Int determinant(const SymMatrix& m);

} // namespace rdp
