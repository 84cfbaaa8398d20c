#include "zerosum/davenport.hpp"

#include <algorithm>
#include <chrono>

namespace zerosum {

std::vector<GroupElement> candidate_elements(const FiniteAbelianGroup& G, const WeightSet& A) {
    std::vector<GroupElement> out;
    for (ElementIndex g = 1; g < G.order(); ++g) {
        const auto orbit = weight_orbit_indices(A, G, g);
        if (!std::binary_search(orbit.begin(), orbit.end(), ElementIndex(0)))
            out.push_back(G.element_at(g));
    }
    return out;
}

namespace {

struct Searcher {
    Searcher(const FiniteAbelianGroup& group, const SearchLimits& search_limits)
        : G(group), limits(search_limits) {}

    const FiniteAbelianGroup& G;
    const SearchLimits& limits;
    std::vector<ElementIndex> candidates;
    std::vector<ElementSet> orbits;  // aligned with candidates

    std::uint64_t nodes = 0;
    bool truncated = false;
    int best_depth = 0;
    std::uint64_t best_count = 1;  // the empty sequence is the depth-0 witness
    std::vector<std::vector<ElementIndex>> best_witnesses;
    std::vector<ElementIndex> stack;

    void record(int depth) {
        if (depth > best_depth) {
            best_depth = depth;
            best_count = 0;
            best_witnesses.clear();
        }
        if (depth == best_depth) {
            ++best_count;
            if (best_witnesses.size() < limits.max_witnesses) best_witnesses.push_back(stack);
        }
    }

    // reachable = achievable sums of the prefix with 0 adjoined
    void extend(std::size_t from, const ElementSet& reachable, int depth) {
        for (std::size_t c = from; c < candidates.size(); ++c) {
            if (nodes >= limits.node_budget) {
                truncated = true;
                return;
            }
            ++nodes;
            ElementSet shifted = sumset(G, reachable, orbits[c]);
            if (shifted.test(0)) continue;  // extension would create a zero-sum
            shifted |= reachable;
            stack.push_back(candidates[c]);
            record(depth + 1);
            extend(c, shifted, depth + 1);
            stack.pop_back();
            if (truncated) return;
        }
    }
};

}  // namespace

DavenportResult max_zero_sum_free(const FiniteAbelianGroup& G, const WeightSet& A,
                                  const SearchLimits& limits) {
    const auto start = std::chrono::steady_clock::now();

    DavenportResult result;
    Searcher searcher{G, limits};

    std::vector<ElementIndex> candidates;
    for (const GroupElement& g : candidate_elements(G, A)) candidates.push_back(G.index_of(g));

    // Sign-flip invariance: with symmetric weight residues each element's
    // orbit equals its negation's, so one representative per {g,-g} pair
    // suffices for odd-order groups.
    if (G.order() % 2 == 1 && G.order() > 1 && group_symmetric(A, G)) {
        const GPlusPartition P = gplus_partition(G);
        std::erase_if(candidates, [&](ElementIndex g) { return P.side[g] < 0; });
        result.halved = true;
    }

    searcher.candidates = std::move(candidates);
    for (ElementIndex g : searcher.candidates)
        searcher.orbits.push_back([&] {
            ElementSet orbit(G.order());
            for (ElementIndex i : weight_orbit_indices(A, G, g)) orbit.set(i);
            return orbit;
        }());

    if (searcher.best_witnesses.size() < limits.max_witnesses)
        searcher.best_witnesses.push_back({});  // the empty sequence
    ElementSet root(G.order());
    root.set(0);
    searcher.extend(0, root, 0);

    result.max_zsf_length = searcher.best_depth;
    result.value = searcher.best_depth + 1;
    result.exact = !searcher.truncated;
    result.nodes_explored = searcher.nodes;
    result.witness_count = searcher.best_count;
    for (const auto& terms : searcher.best_witnesses)
        if (static_cast<int>(terms.size()) == searcher.best_depth)
            result.witnesses.emplace_back(G, terms);
    result.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

int davenport_constant(const FiniteAbelianGroup& G, const WeightSet& A,
                       const SearchLimits& limits) {
    const DavenportResult result = max_zero_sum_free(G, A, limits);
    if (!result.exact)
        throw BudgetError("zero-sum-free search for " + G.canonical_name() + " with " +
                          A.canonical_name() + " exhausted its node budget of " +
                          std::to_string(limits.node_budget) +
                          "; the value " + std::to_string(result.value) + " is only a lower bound");
    return result.value;
}

LengthVerifyResult verify_every_length_d_has_zero_sum(const FiniteAbelianGroup& G,
                                                      const WeightSet& A, int length,
                                                      const SearchLimits& limits) {
    LengthVerifyResult out;
    const BigInt total = binomial(static_cast<int>(G.order()) + length - 1, length);
    if (total > BigInt(limits.verify_budget)) {
        out.status = VerifyStatus::skipped;
        return out;
    }
    std::vector<ElementIndex> support;
    for (ElementIndex g = 0; g < G.order(); ++g) support.push_back(g);
    out.status = VerifyStatus::verified;
    for_each_sequence(G, support, length, [&](const Sequence& S) {
        ++out.sequences_checked;
        if (is_zero_sum_free(S, A)) {
            out.status = VerifyStatus::refuted;
            out.counterexample = S;
            return false;
        }
        return true;
    });
    return out;
}

}  // namespace zerosum
