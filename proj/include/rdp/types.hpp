#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace rdp {

// Simply-laced diagram type: A(n) for n >= 1, D(n) for n >= 4, E6/E7/E8.
// D(3) is never a value; the A3 = D3 coincidence is resolved in favor of A.
class AdeType {
public:
    enum class Series { A, D, E };

    static AdeType A(int n);
    static AdeType D(int n);
    static AdeType E(int n);

    Series series() const { return series_; }
    // Number of diagram vertices (the index n of A_n, D_n, E_n).
    int rank() const { return rank_; }

    std::string str() const;
    // Accepts tokens of the shape "A12", "D4", "E8"; rejects out-of-range indices.
    static std::optional<AdeType> parse(std::string_view token);

    friend bool operator==(const AdeType& a, const AdeType& b) {
        return a.series_ == b.series_ && a.rank_ == b.rank_;
    }
    friend bool operator!=(const AdeType& a, const AdeType& b) { return !(a == b); }

private:
    AdeType(Series s, int n) : series_(s), rank_(n) {}
    Series series_;
    int rank_;
};

// Finite subgroup of SL(2,C) up to conjugacy: cyclic, binary dihedral,
// or one of the three exceptional binary polyhedral groups.
class FiniteSubgroup {
public:
    enum class Family {
        Cyclic,
        BinaryDihedral,
        BinaryTetrahedral,
        BinaryOctahedral,
        BinaryIcosahedral,
    };

    static FiniteSubgroup cyclic(long long n);          // n >= 1
    static FiniteSubgroup binary_dihedral(long long n); // n >= 2
    static FiniteSubgroup binary_tetrahedral() { return {Family::BinaryTetrahedral, 0}; }
    static FiniteSubgroup binary_octahedral() { return {Family::BinaryOctahedral, 0}; }
    static FiniteSubgroup binary_icosahedral() { return {Family::BinaryIcosahedral, 0}; }

    Family family() const { return family_; }
    // Index parameter of the cyclic / binary dihedral families, 0 otherwise.
    long long parameter() const { return parameter_; }

    // Token notation: "C<n>", "D~<n>", "T~", "O~", "I~".
    std::string str() const;
    static std::optional<FiniteSubgroup> parse(std::string_view token);

    friend bool operator==(const FiniteSubgroup& a, const FiniteSubgroup& b) {
        return a.family_ == b.family_ && a.parameter_ == b.parameter_;
    }
    friend bool operator!=(const FiniteSubgroup& a, const FiniteSubgroup& b) { return !(a == b); }

private:
    FiniteSubgroup(Family f, long long n) : family_(f), parameter_(n) {}
    Family family_;
    long long parameter_;
};

} // namespace rdp
