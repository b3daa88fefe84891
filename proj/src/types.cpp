#include "rdp/types.hpp"

#include <charconv>
#include <stdexcept>

namespace rdp {

namespace {

std::optional<long long> parse_ll(std::string_view s) {
    long long value = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return value;
}

} // namespace

AdeType AdeType::A(int n) {
    if (n < 1) throw std::invalid_argument("A(n) requires n >= 1");
    return {Series::A, n};
}

AdeType AdeType::D(int n) {
    if (n < 4) throw std::invalid_argument("D(n) requires n >= 4");
    return {Series::D, n};
}

AdeType AdeType::E(int n) {
    if (n < 6 || n > 8) throw std::invalid_argument("E(n) requires n in {6,7,8}");
    return {Series::E, n};
}

std::string AdeType::str() const {
    switch (series_) {
    case Series::A: return "A" + std::to_string(rank_);
    case Series::D: return "D" + std::to_string(rank_);
    default: return "E" + std::to_string(rank_);
    }
}

std::optional<AdeType> AdeType::parse(std::string_view token) {
    if (token.size() < 2) return std::nullopt;
    char series = token[0];
    auto n = parse_ll(token.substr(1));
    if (!n) return std::nullopt;
    if (series == 'A' && *n >= 1) return A(static_cast<int>(*n));
    if (series == 'D' && *n >= 4) return D(static_cast<int>(*n));
    if (series == 'E' && *n >= 6 && *n <= 8) return E(static_cast<int>(*n));
    return std::nullopt;
}

FiniteSubgroup FiniteSubgroup::cyclic(long long n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
    return {Family::Cyclic, n};
}

FiniteSubgroup FiniteSubgroup::binary_dihedral(long long n) {
    if (n < 2) throw std::invalid_argument("binary dihedral index must be >= 2");
    return {Family::BinaryDihedral, n};
}

std::string FiniteSubgroup::str() const {
    switch (family_) {
    case Family::Cyclic: return "C" + std::to_string(parameter_);
    case Family::BinaryDihedral: return "D~" + std::to_string(parameter_);
    case Family::BinaryTetrahedral: return "T~";
    case Family::BinaryOctahedral: return "O~";
    default: return "I~";
    }
}

std::optional<FiniteSubgroup> FiniteSubgroup::parse(std::string_view token) {
    if (token == "T~") return binary_tetrahedral();
    if (token == "O~") return binary_octahedral();
    if (token == "I~") return binary_icosahedral();
    if (token.size() >= 2 && token[0] == 'C') {
        auto n = parse_ll(token.substr(1));
        if (n && *n >= 1) return cyclic(*n);
        return std::nullopt;
    }
    if (token.size() >= 3 && token[0] == 'D' && token[1] == '~') {
        auto n = parse_ll(token.substr(2));
        if (n && *n >= 2) return binary_dihedral(*n);
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace rdp
