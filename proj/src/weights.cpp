#include "zerosum/weights.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <stdexcept>

namespace zerosum {

namespace {

constexpr long long kWeightBound = 1'000'000;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

WeightSet WeightSet::from_list(std::vector<long long> values) {
    if (values.empty()) throw std::invalid_argument("weight set must be nonempty");
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (long long a : values) {
        if (a == 0) throw std::invalid_argument("weight 0 is not allowed (A is a subset of Z\\{0})");
        if (a < -kWeightBound || a > kWeightBound)
            throw std::invalid_argument("weight " + std::to_string(a) + " exceeds the |a| <= 10^6 bound");
    }
    WeightSet A;
    A.weights_ = std::move(values);
    A.symmetric_ = std::all_of(A.weights_.begin(), A.weights_.end(), [&](long long a) {
        return std::binary_search(A.weights_.begin(), A.weights_.end(), -a);
    });
    return A;
}

WeightSet WeightSet::parse(std::string_view spec, const FiniteAbelianGroup& G) {
    const std::string_view text = trim(spec);
    const std::string keyword = lower(text);
    if (keyword == "unit") return from_list({1});
    if (keyword == "pm1") return from_list({-1, 1});
    if (keyword == "full") {
        if (G.exponent() < 2)
            throw std::invalid_argument("'full' weights need exp(G) >= 2; group is trivial");
        std::vector<long long> values;
        for (int a = 1; a < G.exponent(); ++a) values.push_back(a);
        return from_list(std::move(values));
    }
    if (text.empty() || text.front() != '{' || text.back() != '}')
        throw std::invalid_argument("expected weight spec '{a1,a2,...}' or one of unit|pm1|full, got '" +
                                    std::string(spec) + "'");
    std::string_view body = text.substr(1, text.size() - 2);
    if (trim(body).empty()) throw std::invalid_argument("weight set must be nonempty");
    std::vector<long long> values;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = body.find(',', pos);
        std::string_view piece = trim(
            body.substr(pos, comma == std::string_view::npos ? body.size() - pos : comma - pos));
        long long value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
            throw std::invalid_argument("expected integer weight at '" + std::string(piece) +
                                        "' in '" + std::string(spec) + "'");
        values.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return from_list(std::move(values));
}

std::string WeightSet::canonical_name() const {
    std::string s = "{";
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(weights_[i]);
    }
    s += '}';
    return s;
}

std::vector<ElementIndex> weight_orbit_indices(const WeightSet& A, const FiniteAbelianGroup& G,
                                               ElementIndex g) {
    const GroupElement e = G.element_at(g);
    std::set<ElementIndex> orbit;
    for (long long a : A.weights()) orbit.insert(G.index_of(G.scalar_mul(a, e)));
    return {orbit.begin(), orbit.end()};
}

std::vector<GroupElement> weight_orbit(const WeightSet& A, const FiniteAbelianGroup& G,
                                       const GroupElement& g) {
    std::vector<GroupElement> out;
    for (ElementIndex i : weight_orbit_indices(A, G, G.index_of(g))) out.push_back(G.element_at(i));
    return out;
}

bool group_symmetric(const WeightSet& A, const FiniteAbelianGroup& G) {
    const long long n = G.exponent();
    std::set<long long> residues, negated;
    for (long long a : A.weights()) {
        const long long r = ((a % n) + n) % n;
        residues.insert(r);
        negated.insert((n - r) % n);
    }
    return residues == negated;
}

bool acts_as_pm1(const WeightSet& A, const FiniteAbelianGroup& G) {
    const long long n = G.exponent();
    std::set<long long> residues;
    for (long long a : A.weights()) residues.insert(((a % n) + n) % n);
    std::set<long long> pm1{1 % n, ((n - 1) % n + n) % n};
    return residues == pm1;
}

}  // namespace zerosum
