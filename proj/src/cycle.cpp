#include "rdp/cycle.hpp"

#include <stdexcept>
#include <string>

#include "rdp/errors.hpp"

namespace rdp {

namespace {

void require_positive_cycle(const Cycle& z, const DualGraph& g) {
    if (z.size() != static_cast<std::size_t>(g.size()))
        throw std::invalid_argument("cycle dimension does not match the graph");
    bool positive = false;
    for (const Int& r : z) {
        if (r < 0) throw std::invalid_argument("cycle has a negative coefficient");
        positive = positive || r > 0;
    }
    if (!positive) throw std::invalid_argument("zero cycle rejected");
}

void require_fundamental_cycle_domain(const DualGraph& g) {
    if (!g.connected()) throw precondition_error("graph is not connected");
    if (definiteness(intersection_matrix(g)).kind != DefinitenessKind::NegativeDefinite)
        throw precondition_error("intersection form is not negative definite");
}

} // namespace

std::vector<Int> canonical_pairings(const DualGraph& g) {
    std::vector<Int> k(static_cast<std::size_t>(g.size()));
    for (int i = 0; i < g.size(); ++i) {
        const Vertex& v = g.vertex(i);
        k[static_cast<std::size_t>(i)] = Int(-v.weight) - 2 + 2 * Int(v.genus);
    }
    return k;
}

NumericalCondition numerical_condition(const Cycle& z, const DualGraph& g) {
    require_positive_cycle(z, g);
    SymMatrix m = intersection_matrix(g);
    NumericalCondition out;
    out.satisfied = true;
    out.pairings.resize(z.size());
    for (int i = 0; i < g.size(); ++i) {
        Int s = 0;
        for (int j = 0; j < g.size(); ++j) s += m.at(i, j) * z[static_cast<std::size_t>(j)];
        out.satisfied = out.satisfied && s <= 0;
        out.pairings[static_cast<std::size_t>(i)] = std::move(s);
    }
    return out;
}

Int arithmetic_genus(const Cycle& z, const DualGraph& g) {
    require_positive_cycle(z, g);
    SymMatrix m = intersection_matrix(g);
    std::vector<Int> k = canonical_pairings(g);
    Int zz = pairing(z, z, m);
    Int zk = 0;
    for (std::size_t i = 0; i < z.size(); ++i) zk += z[i] * k[i];
    Int total = zz + zk;
    if (total % 2 != 0) throw std::logic_error("parity violation: Z.Z + Z.K is odd");
    return 1 + total / 2;
}

Int genus_by_additivity(const Cycle& z, const DualGraph& g) {
    require_positive_cycle(z, g);
    SymMatrix m = intersection_matrix(g);
    // Peel one curve at a time: S grows from 0 to Z, p carries p_a(S).
    std::vector<Int> s(z.size(), Int(0));
    std::vector<Int> ms(z.size(), Int(0)); // (M s)_i, updated incrementally
    Int p = 0;
    bool started = false;
    for (std::size_t i = 0; i < z.size(); ++i) {
        for (Int t = 0; t < z[i]; ++t) {
            Int genus_i = Int(g.vertex(static_cast<int>(i)).genus);
            if (!started) {
                p = genus_i;
                started = true;
            } else {
                p = p + genus_i + ms[i] - 1;
            }
            s[i] += 1;
            for (std::size_t j = 0; j < z.size(); ++j) ms[j] += m.at(static_cast<int>(j), static_cast<int>(i));
        }
    }
    return p;
}

namespace detail {

Cycle fundamental_cycle_with_picker(const DualGraph& g, const Picker& pick) {
    require_fundamental_cycle_domain(g);
    const int n = g.size();
    SymMatrix m = intersection_matrix(g);
    Cycle z(static_cast<std::size_t>(n), Int(1));
    std::vector<Int> mz(static_cast<std::size_t>(n), Int(0)); // (M z)_i
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mz[static_cast<std::size_t>(i)] += m.at(i, j);
    for (;;) {
        std::vector<std::size_t> violating;
        for (std::size_t i = 0; i < z.size(); ++i)
            if (mz[i] > 0) violating.push_back(i);
        if (violating.empty()) return z;
        std::size_t i = pick(violating);
        z[i] += 1;
        for (std::size_t j = 0; j < z.size(); ++j)
            mz[j] += m.at(static_cast<int>(j), static_cast<int>(i));
    }
}

} // namespace detail

Cycle fundamental_cycle(const DualGraph& g) {
    return detail::fundamental_cycle_with_picker(g, [](const std::vector<std::size_t>& v) { return v.front(); });
}

Cycle fundamental_cycle_oracle(const DualGraph& g, long long bound) {
    require_fundamental_cycle_domain(g);
    if (bound < 1) throw std::invalid_argument("oracle bound must be >= 1");
    const int n = g.size();
    // Small exact integers suffice here; the enumeration walks an odometer
    // and maintains the pairing vector incrementally.
    std::vector<std::vector<long long>> m(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
    SymMatrix im = intersection_matrix(g);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<long long>(im.at(i, j));

    std::vector<long long> z(static_cast<std::size_t>(n), 0);
    std::vector<long long> mz(static_cast<std::size_t>(n), 0);
    std::vector<long long> best;
    bool found = false;
    for (;;) {
        // Advance the odometer (position 0 fastest).
        std::size_t p = 0;
        while (p < z.size() && z[p] == bound) {
            for (std::size_t j = 0; j < z.size(); ++j) mz[j] -= bound * m[j][p];
            z[p] = 0;
            ++p;
        }
        if (p == z.size()) break;
        z[p] += 1;
        for (std::size_t j = 0; j < z.size(); ++j) mz[j] += m[j][p];

        bool ok = true;
        for (std::size_t j = 0; j < z.size() && ok; ++j) ok = mz[j] <= 0;
        if (!ok) continue;
        if (!found) {
            best = z;
            found = true;
        } else {
            for (std::size_t j = 0; j < z.size(); ++j) best[j] = std::min(best[j], z[j]);
        }
    }
    if (!found)
        throw precondition_error("no solution within bound " + std::to_string(bound));

    Cycle result(best.size());
    for (std::size_t i = 0; i < best.size(); ++i) result[i] = Int(best[i]);
    // Min-closure: the coefficient-wise minimum is itself a solution.
    NumericalCondition check = numerical_condition(result, g);
    if (!check.satisfied)
        throw std::logic_error("oracle minimum fails the numerical condition");
    return result;
}

bool is_rational(const DualGraph& g) {
    return arithmetic_genus(fundamental_cycle(g), g) == 0;
}

Int multiplicity(const DualGraph& g) {
    Cycle z = fundamental_cycle(g);
    Int pa = arithmetic_genus(z, g);
    if (pa != 0)
        throw precondition_error("multiplicity requires a rational singularity (p_a(Z_num) = " + pa.str() + ")");
    return -pairing(z, z, intersection_matrix(g));
}

} // namespace rdp
