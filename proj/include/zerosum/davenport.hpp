#pragma once

#include "zerosum/counting.hpp"
#include "zerosum/group.hpp"
#include "zerosum/sequence.hpp"
#include "zerosum/weights.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace zerosum {

struct SearchLimits {
    std::uint64_t node_budget = 100'000'000;   // extension attempts in the DFS
    std::size_t max_witnesses = 16;            // longest-sequence witnesses kept
    std::uint64_t verify_budget = 20'000'000;  // multisets the exhaustive check may touch
};

/// Result of the longest zero-sum-free-sequence search. When exact,
/// value is the Davenport constant: one more than the longest length.
/// A budget-limited run is flagged exact = false and value is only a
/// lower bound; it is never silently wrong.
struct DavenportResult {
    int value = 1;
    int max_zsf_length = 0;
    bool exact = true;
    std::vector<Sequence> witnesses;     // first max_witnesses in canonical order
    std::uint64_t witness_count = 0;     // all maximal sequences found by the search
    std::uint64_t nodes_explored = 0;
    double elapsed_ms = 0.0;
    bool halved = false;  // search ran over the G+ representatives only
};

/// Elements that can appear in a zero-sum-free sequence: g != 0 whose
/// weight orbit avoids 0. Sorted by element index.
std::vector<GroupElement> candidate_elements(const FiniteAbelianGroup& G, const WeightSet& A);

/// Depth-first search over canonical (non-decreasing index) multisets of
/// candidate elements. Each prefix carries the bit set of its achievable
/// nonempty-subset sums with 0 adjoined; extending by g is allowed only
/// when that set shifted by g's orbit avoids 0. For odd |G| and weights
/// symmetric mod exp(G), sign-flip invariance halves the candidate set to
/// the G+ representatives (witness_count then counts normalized
/// witnesses).
DavenportResult max_zero_sum_free(const FiniteAbelianGroup& G, const WeightSet& A,
                                  const SearchLimits& limits = {});

/// max_zsf_length + 1 from an exact search; throws BudgetError when the
/// search was truncated.
int davenport_constant(const FiniteAbelianGroup& G, const WeightSet& A,
                       const SearchLimits& limits = {});

enum class VerifyStatus { verified, refuted, skipped };

struct LengthVerifyResult {
    VerifyStatus status = VerifyStatus::skipped;
    std::uint64_t sequences_checked = 0;
    std::optional<Sequence> counterexample;  // a zero-sum-free sequence of the given length
};

/// Complement check of the search: enumerates every canonical multiset of
/// the given length over ALL of G and confirms none is zero-sum-free.
/// Runs only when C(|G|+len-1, len) fits the verify budget; otherwise
/// reports skipped.
LengthVerifyResult verify_every_length_d_has_zero_sum(const FiniteAbelianGroup& G,
                                                      const WeightSet& A, int length,
                                                      const SearchLimits& limits = {});

}  // namespace zerosum
