#pragma once

#include "zerosum/element_set.hpp"
#include "zerosum/group.hpp"
#include "zerosum/sequence.hpp"
#include "zerosum/util.hpp"
#include "zerosum/weights.hpp"

#include <cstdint>

namespace zerosum {

/// Exact per-element counts: counts[g] is the number of index sets
/// I (including the empty set, which contributes to g = 0 only) for which
/// some weight assignment over I sums to g. Every count is at most 2^|S|.
struct CountVector {
    FiniteAbelianGroup group;
    std::vector<BigInt> counts;  // by dense element index
    int sequence_length = 0;

    const BigInt& at(ElementIndex g) const { return counts[static_cast<std::size_t>(g)]; }
};

struct CountLimits {
    int max_length = 40;                          // DP length cap
    std::size_t max_states = std::size_t(1) << 20;  // DP state-dictionary ceiling
};

/// {x + y : x in X, y in Y}. X and Y index the same group.
ElementSet sumset(const FiniteAbelianGroup& G, const ElementSet& X, const ElementSet& Y);

/// Exact counts for all g simultaneously via a set-valued dynamic program
/// over the distinct elements of S.
///
/// The DP state is the achievable set of a chosen index set I: the set of
/// all group elements some weight assignment over I reaches. States are
/// grouped in a dictionary achievable-set -> exact number of index sets.
/// The empty index set is a distinguished state, NOT the set {0}: a
/// nonempty I can also achieve exactly {0} when a weight kills every term
/// (e.g. A = {3}, term 3 in C_9), and those index sets must be counted
/// toward N[0] separately from the empty set.
///
/// An element of multiplicity v branches each state into v+1 successors
/// X + O_j weighted by binomial(v, j), where O_j is the j-fold sumset of
/// the element's weight orbit.
///
/// Throws BudgetError beyond max_length (use the oracle or raise the
/// limit) or when the state dictionary would exceed max_states.
CountVector count_vector(const Sequence& S, const WeightSet& A, const CountLimits& limits = {});

/// Independent oracle: walks all 2^|S| index sets, folding each term's
/// weight orbit into the achievable set. Rejects |S| > 20.
CountVector brute_force_count_vector(const Sequence& S, const WeightSet& A);

/// The set of weighted subsequence sums over nonempty index sets, and the
/// same with 0 adjoined.
struct SumSupport {
    ElementSet sigma_a;         // may or may not contain 0
    ElementSet sigma_a_bullet;  // sigma_a | {0}
};

SumSupport sum_support(const Sequence& S, const WeightSet& A);

/// True iff no nonempty index set reaches 0, i.e. 0 is not in sigma_A(S).
bool is_zero_sum_free(const Sequence& S, const WeightSet& A);

/// The lower bound N0 >= 2^(len - D + 1), evaluated exactly as
/// N0 * 2^(D-1) >= 2^len so negative exponents need no special case.
bool bound_holds(const BigInt& n0, int len, int davenport);

}  // namespace zerosum
