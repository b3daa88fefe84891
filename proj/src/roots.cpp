#include "rdp/roots.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "rdp/errors.hpp"
#include "rdp/lattice.hpp"

namespace rdp {

namespace {

void validate_cartan(const CartanMatrix& c) {
    if (c.n < 0) throw std::invalid_argument("Cartan matrix has negative size");
    const auto n = static_cast<std::size_t>(c.n);
    if (c.a.size() != n * n) throw std::invalid_argument("Cartan matrix storage does not match its size");
    for (int i = 0; i < c.n; ++i) {
        if (c.at(i, i) != 2) throw std::invalid_argument("Cartan matrix diagonal entry is not 2");
        for (int j = i + 1; j < c.n; ++j) {
            const long long v = c.at(i, j);
            if (v != 0 && v != -1) throw std::invalid_argument("Cartan matrix off-diagonal entry is not 0 or -1");
            if (v != c.at(j, i)) throw std::invalid_argument("Cartan matrix is not symmetric");
        }
    }
}

SymMatrix negated_to_sym(const CartanMatrix& c) {
    SymMatrix m(c.n);
    for (int i = 0; i < c.n; ++i)
        for (int j = i; j < c.n; ++j) m.set(i, j, Int(-c.at(i, j)));
    return m;
}

} // namespace

std::vector<RootVector> RootSystem::simple_basis() const {
    std::vector<RootVector> basis;
    basis.reserve(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i) {
        RootVector e(static_cast<std::size_t>(rank), 0);
        e[static_cast<std::size_t>(i)] = 1;
        basis.push_back(std::move(e));
    }
    return basis;
}

CartanMatrix cartan_matrix(AdeType t) { return cartan_from_graph(standard_diagram(t)); }

CartanMatrix cartan_from_graph(const DualGraph& g) {
    for (int i = 0; i < g.size(); ++i) {
        if (g.vertex(i).weight != -2)
            throw std::invalid_argument("Cartan matrix requires every vertex weight to be -2");
        if (g.vertex(i).genus != 0)
            throw std::invalid_argument("Cartan matrix requires every vertex genus to be 0");
    }
    for (const auto& [ends, mult] : g.edges())
        if (mult != 1) throw std::invalid_argument("Cartan matrix requires simple edges");

    const auto n = static_cast<std::size_t>(g.size());
    CartanMatrix c;
    c.n = g.size();
    c.a.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) c.a[i * n + i] = 2;
    for (const auto& [ends, mult] : g.edges()) {
        const auto i = static_cast<std::size_t>(ends.first);
        const auto j = static_cast<std::size_t>(ends.second);
        c.a[i * n + j] = -1;
        c.a[j * n + i] = -1;
    }
    return c;
}

Int cartan_pairing(const RootVector& u, const RootVector& v, const CartanMatrix& c) {
    const auto n = static_cast<std::size_t>(c.n);
    if (u.size() != n || v.size() != n) throw std::invalid_argument("vector length does not match the Cartan rank");
    Int total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < n; ++j) row += Int(c.at(static_cast<int>(i), static_cast<int>(j))) * v[j];
        total += Int(u[i]) * row;
    }
    return total;
}

RootSystem generate_roots(const CartanMatrix& c, std::size_t cap) {
    validate_cartan(c);
    if (definiteness(negated_to_sym(c)).kind != DefinitenessKind::NegativeDefinite)
        throw precondition_error("Cartan matrix is not positive definite");

    const auto n = static_cast<std::size_t>(c.n);
    std::set<RootVector> seen;
    std::vector<RootVector> work;
    for (std::size_t i = 0; i < n; ++i) {
        RootVector e(n, 0);
        e[i] = 1;
        if (seen.insert(e).second) work.push_back(std::move(e));
    }
    while (!work.empty()) {
        RootVector b = std::move(work.back());
        work.pop_back();
        // (Cb)_i, reused across the n reflections of b
        std::vector<long long> cb(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            long long s = 0;
            for (std::size_t j = 0; j < n; ++j) s += c.at(static_cast<int>(i), static_cast<int>(j)) * b[j];
            cb[i] = s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (cb[i] == 0) continue; // reflection fixes b
            RootVector r = b;
            r[i] -= cb[i];
            if (seen.insert(r).second) {
                if (seen.size() > cap)
                    throw std::logic_error("root closure exceeded the cap of " + std::to_string(cap));
                work.push_back(std::move(r));
            }
        }
    }

    RootSystem rs;
    rs.rank = c.n;
    rs.roots.assign(seen.begin(), seen.end()); // std::set iterates in lex order
    return rs;
}

RootVector highest_root(const RootSystem& rs) {
    if (rs.roots.empty()) throw std::invalid_argument("empty root system has no highest root");
    const RootVector* best = nullptr;
    Int best_sum = 0;
    for (const auto& r : rs.roots) {
        Int s = 0;
        for (long long x : r) s += x;
        if (best == nullptr || s > best_sum) {
            best = &r;
            best_sum = s;
        }
    }
    for (const auto& r : rs.roots) {
        bool positive = std::all_of(r.begin(), r.end(), [](long long x) { return x >= 0; });
        if (!positive) continue;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] > (*best)[i]) throw std::logic_error("highest root fails coefficient-wise dominance");
    }
    return *best;
}

std::array<long long, 5> angle_census(const RootSystem& rs, const CartanMatrix& c) {
    std::array<long long, 5> census{0, 0, 0, 0, 0};
    const auto& roots = rs.roots;
    std::vector<Int> norm(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) norm[i] = cartan_pairing(roots[i], roots[i], c);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            const Int ab = cartan_pairing(roots[i], roots[j], c);
            const Int num = 4 * ab * ab;
            const Int den = norm[i] * norm[j];
            if (den == 0 || num % den != 0) throw std::logic_error("angle invariant is not an integer");
            const Int q = num / den;
            if (q < 0 || q > 4) throw std::logic_error("angle invariant outside [0,4]");
            census[static_cast<std::size_t>(static_cast<long long>(q))] += 1;
        }
    }
    return census;
}

PositiveSimple positive_and_simple(const RootSystem& rs, const RootVector& direction) {
    const auto n = static_cast<std::size_t>(rs.rank);
    if (direction.size() != n) throw std::invalid_argument("direction length does not match the rank");

    auto dot = [&](const RootVector& r) {
        Int s = 0;
        for (std::size_t i = 0; i < n; ++i) s += Int(direction[i]) * r[i];
        return s;
    };

    PositiveSimple out;
    for (const auto& r : rs.roots) {
        const Int d = dot(r);
        if (d == 0) throw std::invalid_argument("direction is not generic: it vanishes on a root");
        if (d > 0) out.positive.push_back(r);
    }

    std::set<RootVector> pos(out.positive.begin(), out.positive.end());
    for (const auto& r : out.positive) {
        bool decomposable = false;
        for (const auto& p : out.positive) {
            RootVector q(n);
            for (std::size_t i = 0; i < n; ++i) q[i] = r[i] - p[i];
            if (pos.count(q) != 0) { // p == r gives q = 0, never a root
                decomposable = true;
                break;
            }
        }
        if (!decomposable) out.simple.push_back(r);
    }
    return out;
}

RootVector canonical_direction(int n) {
    if (n < 0) throw std::invalid_argument("negative rank");
    RootVector d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = n - i;
    return d;
}

Int cartan_determinant(const CartanMatrix& c) {
    validate_cartan(c);
    SymMatrix m(c.n);
    for (int i = 0; i < c.n; ++i)
        for (int j = i; j < c.n; ++j) m.set(i, j, Int(c.at(i, j)));
    return determinant(m);
}

} // namespace rdp
