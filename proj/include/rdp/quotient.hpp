#pragma once

#include <string>
#include <vector>

#include "rdp/graph.hpp"
#include "rdp/numeric.hpp"
#include "rdp/types.hpp"

namespace rdp {

// Cyclic quotient singularity type (n,q): the quotient of C^2 by
// diag(xi, xi^q) with xi a primitive n-th root of unity.
struct CyclicType {
    long long n = 2;
    long long q = 1;

    // Validates n >= 2, 1 <= q < n, gcd(n,q) = 1.
    static CyclicType make(long long n, long long q);
};

// Continued-fraction expansion n/q = b_1 - 1/(b_2 - 1/(... - 1/b_k)) with
// every b_i >= 2: b_1 = ceil(n/q), recurse on (q, b_1 q - n) until the
// second component is 0. This is the unique all->=2 expansion.
std::vector<long long> hj_expand(CyclicType t);
std::vector<long long> hj_expand(long long n, long long q);

// Exact value of the continued fraction, in lowest terms. Entries must be >= 2.
Rat hj_evaluate(const std::vector<long long>& chain);

// Path graph with vertex i of weight -b_i (the resolution chain of the
// cyclic quotient singularity whose expansion is the chain).
DualGraph chain_graph(const std::vector<long long>& chain);

// One center of the given weight; each arm chain attached to the center by
// an edge from its first vertex. The arm list may be empty; each chain must
// be a valid HJ chain (nonempty, entries >= 2).
DualGraph plumb(long long center_weight, const std::vector<std::vector<long long>>& arms);

// Resolution graph type of the quotient singularity C^2/G:
// Cyclic(n) -> A(n-1) for n >= 2, BinaryDihedral(n) -> D(n+2),
// binary tetrahedral/octahedral/icosahedral -> E6/E7/E8.
// Cyclic(1) is refused (trivial group, smooth quotient).
AdeType mckay_type(FiniteSubgroup g);

// |G|: n, 4n, 24, 48, 120.
long long group_order(FiniteSubgroup g);

struct Monomial {
    long long coeff = 1;
    long long ex = 0, ey = 0, ez = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Hypersurface equation of the quotient singularity, f(x,y,z) = 0.
struct Equation {
    std::vector<Monomial> terms;

    // Conventional rendering: unit coefficients and exponents suppressed,
    // e.g. "x^3+xy^2+z^2".
    std::string str() const;

    friend bool operator==(const Equation&, const Equation&) = default;
};

// Invariant-theory equation per family: x^n+y^2+z^2 (cyclic),
// x^(n+1)+xy^2+z^2 (binary dihedral), x^2+y^3+z^4, x^2+y^3+yz^3,
// x^2+y^3+z^5 (T/O/I). Same domain as mckay_type.
Equation invariant_equation(FiniteSubgroup g);

} // namespace rdp
