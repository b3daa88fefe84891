#include "rdp/lattice.hpp"

#include <stdexcept>
#include <utility>

#include <boost/integer/common_factor.hpp>

namespace rdp {

namespace {

// Scale a rational vector to a primitive integer vector with positive lead.
std::vector<Int> primitive_integer(const std::vector<Rat>& v) {
    Int scale = 1;
    for (const Rat& x : v) scale = boost::integer::lcm(scale, x.denominator());
    std::vector<Int> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i].numerator() * (scale / v[i].denominator());
    Int g = 0;
    for (const Int& x : w) g = boost::integer::gcd(g, x);
    if (g > 1)
        for (Int& x : w) x /= g;
    for (const Int& x : w) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : w) y = -y;
        break;
    }
    return w;
}

struct EliminationResult {
    DefinitenessKind kind = DefinitenessKind::NegativeDefinite;
    std::vector<Rat> witness; // empty for NegativeDefinite
};

// Fraction-free symmetric elimination. After step k the diagonal entry k
// holds the leading principal minor D_k of the (symmetrically permuted)
// matrix; the sign of the k-th congruence pivot is sign(D_k * D_{k-1}).
// When track_basis is set, basis[c] holds the c-th congruence basis vector
// in original coordinates, so witnesses can be read off directly.
EliminationResult eliminate(const SymMatrix& m, bool track_basis) {
    const int n = m.size();
    std::vector<std::vector<Int>> a(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    std::vector<std::vector<Rat>> basis;
    if (track_basis) {
        basis.assign(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
        for (int c = 0; c < n; ++c) basis[c][c] = Rat(1);
    }

    Int prev = 1; // D_{k-1}
    for (int k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            int swap_with = -1;
            for (int j = k + 1; j < n; ++j)
                if (a[j][j] != 0) {
                    swap_with = j;
                    break;
                }
            if (swap_with >= 0) {
                for (int t = k; t < n; ++t) std::swap(a[k][t], a[swap_with][t]);
                for (int t = k; t < n; ++t) std::swap(a[t][k], a[t][swap_with]);
                if (track_basis) std::swap(basis[k], basis[swap_with]);
            } else {
                // Whole remaining diagonal is zero.
                int oi = -1, oj = -1;
                for (int i = k; i < n && oi < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (a[i][j] != 0) {
                            oi = i;
                            oj = j;
                            break;
                        }
                if (oi < 0) {
                    // Zero block: basis vector k is a null direction.
                    EliminationResult r;
                    r.kind = DefinitenessKind::NegativeSemidefiniteDegenerate;
                    if (track_basis) r.witness = basis[k];
                    return r;
                }
                // The true complement block is the current block divided by
                // D_{k-1}, so (e_i + s*e_j) has self-pairing 2*s*a[oi][oj]/D_{k-1}.
                int s = sign_of(a[oi][oj]) * sign_of(prev);
                EliminationResult r;
                r.kind = DefinitenessKind::Indefinite;
                if (track_basis) {
                    r.witness = basis[oi];
                    for (int t = 0; t < n; ++t) r.witness[t] += Rat(s) * basis[oj][t];
                }
                return r;
            }
        }
        // Nonzero pivot: congruence pivot sign is sign(D_k) * sign(D_{k-1}).
        if (sign_of(a[k][k]) * sign_of(prev) > 0) {
            EliminationResult r;
            r.kind = DefinitenessKind::Indefinite;
            if (track_basis) r.witness = basis[k];
            return r;
        }
        if (track_basis) {
            for (int i = k + 1; i < n; ++i) {
                if (a[i][k] == 0) continue;
                const Rat f = make_rat(a[i][k], a[k][k]);
                for (int t = 0; t < n; ++t) basis[i][t] -= f * basis[k][t];
            }
        }
        const Int piv = a[k][k];
        for (int i = k + 1; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                Int v = (a[i][j] * piv - a[i][k] * a[k][j]) / prev; // exact division
                a[i][j] = v;
                a[j][i] = std::move(v);
            }
        }
        prev = piv;
    }
    return {};
}

} // namespace

SymMatrix intersection_matrix(const DualGraph& g) {
    const int n = g.size();
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, g.vertex(i).weight);
    for (const auto& [key, mult] : g.edges()) m.set(key.first, key.second, mult);
    return m;
}

Int pairing(const std::vector<Int>& a, const std::vector<Int>& b, const SymMatrix& m) {
    const int n = m.size();
    if (a.size() != static_cast<std::size_t>(n) || b.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("pairing: vector dimension does not match the form");
    Int total = 0;
    for (int i = 0; i < n; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        Int row = 0;
        for (int j = 0; j < n; ++j) row += m.at(i, j) * b[static_cast<std::size_t>(j)];
        total += a[static_cast<std::size_t>(i)] * row;
    }
    return total;
}

Definiteness definiteness(const SymMatrix& m) {
    EliminationResult first = eliminate(m, false);
    if (first.kind == DefinitenessKind::NegativeDefinite) return {first.kind, {}};
    // Same deterministic elimination path, now tracking the basis for a witness.
    EliminationResult r = eliminate(m, true);
    Definiteness d{r.kind, primitive_integer(r.witness)};
    // Witnesses certify the verdict; a failure here is a logic error.
    Int norm = pairing(d.witness, d.witness, m);
    bool nonzero = false;
    for (const Int& x : d.witness) nonzero = nonzero || x != 0;
    if (!nonzero) throw std::logic_error("definiteness: zero witness");
    if (d.kind == DefinitenessKind::NegativeSemidefiniteDegenerate && norm != 0)
        throw std::logic_error("definiteness: null witness has nonzero pairing");
    if (d.kind == DefinitenessKind::Indefinite && norm <= 0)
        throw std::logic_error("definiteness: indefinite witness lacks positive pairing");
    return d;
}

std::vector<Rat> congruence_diagonal(const SymMatrix& m) {
    const int n = m.size();
    std::vector<std::vector<Rat>> b(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i][j] = Rat(m.at(i, j));
    std::vector<Rat> d(static_cast<std::size_t>(n), Rat(0));

    auto symmetric_swap = [&](int k, int j) {
        for (int t = k; t < n; ++t) std::swap(b[k][t], b[j][t]);
        for (int t = k; t < n; ++t) std::swap(b[t][k], b[t][j]);
    };
    for (int k = 0; k < n; ++k) {
        if (sign_of(b[k][k]) == 0) {
            int swap_with = -1;
            for (int j = k + 1; j < n; ++j)
                if (sign_of(b[j][j]) != 0) {
                    swap_with = j;
                    break;
                }
            if (swap_with >= 0) {
                symmetric_swap(k, swap_with);
            } else {
                int oi = -1, oj = -1;
                for (int i = k; i < n && oi < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (sign_of(b[i][j]) != 0) {
                            oi = i;
                            oj = j;
                            break;
                        }
                if (oi < 0) break; // fully degenerate: remaining entries stay 0
                // Add column+row oj into oi; diagonal entry becomes 2*b[oi][oj].
                for (int t = k; t < n; ++t) b[oi][t] += b[oj][t];
                for (int t = k; t < n; ++t) b[t][oi] += b[t][oj];
                if (oi != k) symmetric_swap(k, oi);
            }
        }
        d[static_cast<std::size_t>(k)] = b[k][k];
        for (int i = k + 1; i < n; ++i) {
            if (sign_of(b[i][k]) == 0) continue;
            Rat f = b[i][k] / b[k][k];
            for (int j = i; j < n; ++j) {
                b[i][j] -= f * b[k][j];
                b[j][i] = b[i][j];
            }
        }
    }
    return d;
}

Int determinant(const SymMatrix& m) {
    const int n = m.size();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> a(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int pivot_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    pivot_row = i;
                    break;
                }
            if (pivot_row < 0) return 0;
            std::swap(a[k], a[pivot_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

} // namespace rdp
