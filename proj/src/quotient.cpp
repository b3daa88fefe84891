#include "rdp/quotient.hpp"

#include <numeric>
#include <stdexcept>

#include "rdp/errors.hpp"

namespace rdp {

CyclicType CyclicType::make(long long n, long long q) {
    if (n < 2) throw std::invalid_argument("cyclic quotient type requires n >= 2");
    if (q < 1 || q >= n) throw std::invalid_argument("cyclic quotient type requires 1 <= q < n");
    if (std::gcd(n, q) != 1) throw std::invalid_argument("cyclic quotient type requires gcd(n,q) = 1");
    return {n, q};
}

std::vector<long long> hj_expand(CyclicType t) {
    std::vector<long long> chain;
    long long n = t.n, q = t.q;
    while (q != 0) {
        long long b = (n + q - 1) / q; // ceil(n/q)
        chain.push_back(b);
        long long next_q = b * q - n;
        n = q;
        q = next_q;
    }
    return chain;
}

std::vector<long long> hj_expand(long long n, long long q) { return hj_expand(CyclicType::make(n, q)); }

Rat hj_evaluate(const std::vector<long long>& chain) {
    if (chain.empty()) throw std::invalid_argument("continued-fraction chain must be nonempty");
    for (long long b : chain)
        if (b < 2) throw std::invalid_argument("continued-fraction entries must be >= 2");
    Rat value(Int(chain.back()));
    for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it)
        value = Rat(Int(*it)) - Rat(Int(1)) / value;
    return value;
}

DualGraph chain_graph(const std::vector<long long>& chain) {
    if (chain.empty()) throw std::invalid_argument("chain must be nonempty");
    std::vector<Vertex> vertices;
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 1; i <= chain.size(); ++i) {
        if (chain[i - 1] < 2) throw std::invalid_argument("chain entries must be >= 2");
        vertices.push_back({"e" + std::to_string(i), -chain[i - 1], 0});
        if (i > 1) edges.push_back({"e" + std::to_string(i - 1), "e" + std::to_string(i), 1});
    }
    return DualGraph("chain", std::move(vertices), edges);
}

DualGraph plumb(long long center_weight, const std::vector<std::vector<long long>>& arms) {
    std::vector<Vertex> vertices;
    std::vector<EdgeSpec> edges;
    vertices.push_back({"c", center_weight, 0});
    for (std::size_t a = 0; a < arms.size(); ++a) {
        const auto& chain = arms[a];
        if (chain.empty()) throw std::invalid_argument("plumbing arm chains must be nonempty");
        std::string prev = "c";
        for (std::size_t i = 1; i <= chain.size(); ++i) {
            if (chain[i - 1] < 2) throw std::invalid_argument("plumbing arm entries must be >= 2");
            std::string id = "a" + std::to_string(a + 1) + "_" + std::to_string(i);
            vertices.push_back({id, -chain[i - 1], 0});
            edges.push_back({prev, id, 1});
            prev = id;
        }
    }
    return DualGraph("plumbing", std::move(vertices), edges);
}

AdeType mckay_type(FiniteSubgroup g) {
    switch (g.family()) {
    case FiniteSubgroup::Family::Cyclic:
        if (g.parameter() < 2)
            throw precondition_error("the trivial group gives a smooth quotient, not a singularity");
        return AdeType::A(static_cast<int>(g.parameter()) - 1);
    case FiniteSubgroup::Family::BinaryDihedral:
        return AdeType::D(static_cast<int>(g.parameter()) + 2);
    case FiniteSubgroup::Family::BinaryTetrahedral: return AdeType::E(6);
    case FiniteSubgroup::Family::BinaryOctahedral: return AdeType::E(7);
    default: return AdeType::E(8);
    }
}

long long group_order(FiniteSubgroup g) {
    switch (g.family()) {
    case FiniteSubgroup::Family::Cyclic: return g.parameter();
    case FiniteSubgroup::Family::BinaryDihedral: return 4 * g.parameter();
    case FiniteSubgroup::Family::BinaryTetrahedral: return 24;
    case FiniteSubgroup::Family::BinaryOctahedral: return 48;
    default: return 120;
    }
}

std::string Equation::str() const {
    std::string out;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        if (t > 0) out += "+";
        const Monomial& m = terms[t];
        std::string part;
        if (m.coeff != 1) part += std::to_string(m.coeff);
        const char* names = "xyz";
        long long exps[3] = {m.ex, m.ey, m.ez};
        for (int v = 0; v < 3; ++v) {
            if (exps[v] == 0) continue;
            part += names[v];
            if (exps[v] > 1) part += "^" + std::to_string(exps[v]);
        }
        if (part.empty()) part = std::to_string(m.coeff);
        out += part;
    }
    return out;
}

Equation invariant_equation(FiniteSubgroup g) {
    switch (g.family()) {
    case FiniteSubgroup::Family::Cyclic:
        if (g.parameter() < 2)
            throw precondition_error("the trivial group gives a smooth quotient, not a singularity");
        return {{{1, g.parameter(), 0, 0}, {1, 0, 2, 0}, {1, 0, 0, 2}}};
    case FiniteSubgroup::Family::BinaryDihedral:
        return {{{1, g.parameter() + 1, 0, 0}, {1, 1, 2, 0}, {1, 0, 0, 2}}};
    case FiniteSubgroup::Family::BinaryTetrahedral:
        return {{{1, 2, 0, 0}, {1, 0, 3, 0}, {1, 0, 0, 4}}};
    case FiniteSubgroup::Family::BinaryOctahedral:
        return {{{1, 2, 0, 0}, {1, 0, 3, 0}, {1, 0, 1, 3}}};
    default:
        return {{{1, 2, 0, 0}, {1, 0, 3, 0}, {1, 0, 0, 5}}};
    }
}

} // namespace rdp
