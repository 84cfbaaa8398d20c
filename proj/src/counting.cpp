#include "zerosum/counting.hpp"

#include <stdexcept>
#include <unordered_map>

namespace zerosum {

namespace {

ElementSet orbit_set(const WeightSet& A, const FiniteAbelianGroup& G, ElementIndex g) {
    ElementSet orbit(G.order());
    for (ElementIndex i : weight_orbit_indices(A, G, g)) orbit.set(i);
    return orbit;
}

}  // namespace

ElementSet sumset(const FiniteAbelianGroup& G, const ElementSet& X, const ElementSet& Y) {
    ElementSet out(G.order());
    X.for_each([&](ElementIndex x) {
        Y.for_each([&](ElementIndex y) { out.set(G.add_index(x, y)); });
    });
    return out;
}

CountVector count_vector(const Sequence& S, const WeightSet& A, const CountLimits& limits) {
    const FiniteAbelianGroup& G = S.group();
    if (S.length() > limits.max_length)
        throw BudgetError("sequence length " + std::to_string(S.length()) +
                          " exceeds the dynamic-program cap " + std::to_string(limits.max_length) +
                          "; use the brute-force oracle or raise the limit");

    // nonempty-index-set states; the empty index set stays implicit (count 1)
    std::unordered_map<ElementSet, BigInt, ElementSetHash> states;
    std::unordered_map<ElementSet, BigInt, ElementSetHash> next;

    for (const auto& [elem, mult] : S.multiplicities()) {
        const ElementSet orbit = orbit_set(A, G, elem);
        std::vector<ElementSet> orbit_pow;  // orbit_pow[j] = (j+1)-fold sumset
        orbit_pow.reserve(static_cast<std::size_t>(mult));
        orbit_pow.push_back(orbit);
        for (int j = 2; j <= mult; ++j) orbit_pow.push_back(sumset(G, orbit_pow.back(), orbit));
        std::vector<BigInt> choose(static_cast<std::size_t>(mult) + 1);
        for (int j = 0; j <= mult; ++j) choose[j] = binomial(mult, j);

        next.clear();
        // branches out of the empty index set (j >= 1 copies chosen)
        for (int j = 1; j <= mult; ++j) next[orbit_pow[j - 1]] += choose[j];
        for (const auto& [achievable, count] : states) {
            next[achievable] += count;  // j = 0
            for (int j = 1; j <= mult; ++j)
                next[sumset(G, achievable, orbit_pow[j - 1])] += count * choose[j];
        }
        if (next.size() > limits.max_states)
            throw BudgetError("achievable-set dictionary exceeded " +
                              std::to_string(limits.max_states) +
                              " states; shrink the instance or raise max_states");
        states.swap(next);
    }

    CountVector result;
    result.group = G;
    result.sequence_length = S.length();
    result.counts.assign(static_cast<std::size_t>(G.order()), BigInt(0));
    result.counts[0] = 1;  // the empty index set
    for (const auto& [achievable, count] : states)
        achievable.for_each([&](ElementIndex g) { result.counts[g] += count; });
    return result;
}

CountVector brute_force_count_vector(const Sequence& S, const WeightSet& A) {
    if (S.length() > 20)
        throw BudgetError("brute-force oracle caps |S| at 20, got " + std::to_string(S.length()));
    const FiniteAbelianGroup& G = S.group();

    CountVector result;
    result.group = G;
    result.sequence_length = S.length();
    result.counts.assign(static_cast<std::size_t>(G.order()), BigInt(0));
    result.counts[0] = 1;  // empty index set

    std::vector<ElementSet> orbits;
    orbits.reserve(static_cast<std::size_t>(S.length()));
    for (int i = 0; i < S.length(); ++i) orbits.push_back(orbit_set(A, G, S.term_index(i)));

    ElementSet zero(G.order());
    zero.set(0);

    // include/exclude walk over terms; reachable carries the achievable set
    auto walk = [&](auto&& self, int i, const ElementSet& reachable, bool nonempty) -> void {
        if (i == S.length()) {
            if (nonempty)
                reachable.for_each([&](ElementIndex g) { result.counts[g] += 1; });
            return;
        }
        self(self, i + 1, reachable, nonempty);
        self(self, i + 1, sumset(G, reachable, orbits[i]), true);
    };
    walk(walk, 0, zero, false);
    return result;
}

SumSupport sum_support(const Sequence& S, const WeightSet& A) {
    const FiniteAbelianGroup& G = S.group();
    ElementSet reach(G.order());
    for (const auto& [elem, mult] : S.multiplicities()) {
        const ElementSet orbit = orbit_set(A, G, elem);
        for (int j = 0; j < mult; ++j) {
            ElementSet grown = sumset(G, reach, orbit);
            grown |= orbit;
            grown |= reach;
            if (grown == reach) break;  // orbit absorbed; further copies change nothing
            reach = std::move(grown);
        }
    }
    SumSupport out{reach, reach};
    out.sigma_a_bullet.set(0);
    return out;
}

bool is_zero_sum_free(const Sequence& S, const WeightSet& A) {
    return !sum_support(S, A).sigma_a.test(0);
}

bool bound_holds(const BigInt& n0, int len, int davenport) {
    if (davenport < 1) throw std::invalid_argument("davenport constant must be >= 1");
    return n0 * pow2(davenport - 1) >= pow2(len);
}

}  // namespace zerosum
