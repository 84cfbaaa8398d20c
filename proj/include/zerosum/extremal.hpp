#pragma once

#include "zerosum/counting.hpp"
#include "zerosum/davenport.hpp"
#include "zerosum/group.hpp"
#include "zerosum/sequence.hpp"
#include "zerosum/util.hpp"
#include "zerosum/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zerosum {

/// 2^(length - D + 1): the exact floor of N[0] and the membership test of
/// the extremal set E(S). Requires length >= D - 1 so the exponent is
/// nonnegative.
BigInt extremal_threshold(int length, int davenport);

/// The elements whose count meets the extremal threshold exactly.
struct ESet {
    std::vector<ElementIndex> members;  // ascending
    BigInt threshold;
};

ESet e_set(const Sequence& S, const WeightSet& A, int davenport);
ESet e_set(const CountVector& counts, int davenport);

/// N[0] equals the threshold (defined for |S| >= D - 1; shorter sequences
/// are never extremal since counts are integers >= 1).
bool is_extremal(const Sequence& S, const WeightSet& A, int davenport);

struct EnumerateLimits {
    std::uint64_t budget = 20'000'000;  // canonical sequences the sweep may touch
};

struct ExtremalEnumeration {
    std::vector<Sequence> sequences;  // canonical order
    bool complete = true;             // false when the budget stopped the sweep
    std::uint64_t enumerated = 0;
};

/// All canonical sequences over G\{0} of the given length whose N[0]
/// meets the threshold exactly.
ExtremalEnumeration enumerate_extremal(const FiniteAbelianGroup& G, const WeightSet& A,
                                       int davenport, int length,
                                       const EnumerateLimits& limits = {});

/// For full weights: a longest zero-sum-free sequence U padded with zeros
/// to length k, i.e. U * 0^(k - D + 1). Every count of the result equals
/// 2^(k - D + 1); callers verify that postcondition in tests and suites.
/// Rejects non-full weight sets and k < D - 1.
Sequence construct_extremal_with_zeros(const FiniteAbelianGroup& G, const WeightSet& A, int k,
                                       const SearchLimits& limits = {});

enum class CheckStatus { passed, failed, skipped };

struct CheckResult {
    CheckStatus status = CheckStatus::skipped;
    std::string detail;  // failure witness or skip reason
};

/// For extremal S: the adjoined sum support covers all of G and every
/// count is at least the threshold.
CheckResult check_corollary3(const Sequence& S, const WeightSet& A, int davenport);

/// For weights acting as {-1,+1} and g dividing S: counts[g] == counts[0].
CheckResult check_corollary4(const Sequence& S, const WeightSet& A, const GroupElement& g);

/// For extremal S (0 not a term) and a term `a` with multiplicity >= 2, or
/// multiplicity 1 alongside -a: E(S) is contained in E(S with one `a`
/// removed). Skips instances whose hypotheses fail.
CheckResult check_lemma6(const Sequence& S, const WeightSet& A, const GroupElement& a,
                         int davenport);

/// A term of multiplicity >= 3 whose order is not 2 forces N[0] strictly
/// above the threshold. Skips instances without such a term.
CheckResult check_proposition7(const Sequence& S, const WeightSet& A, int davenport);

/// Multiplicity profile of extremal sequences over odd-order groups with
/// weights acting as {-1,+1}: squarefree at |S| = D - 1; at most one
/// doubled element (rest simple) at |S| >= D when G has no order-3
/// element.
CheckResult check_theorem8(const Sequence& S, const WeightSet& A, int davenport);

/// Solves sum_i c_i * basis_i = target over F_p by Gaussian elimination.
/// Returns the unique coefficient vector when the basis is independent
/// and the target lies in its span; otherwise nullopt.
std::optional<std::vector<int>> fp_solve(const std::vector<GroupElement>& basis,
                                         const GroupElement& target, int p);

/// Decomposition of a sequence over C_p^r as basis terms g_1..g_r plus
/// extras h_j = sum_{i in I_j} a_i g_i with nonzero coefficients and
/// pairwise disjoint supports I_j.
struct StructureDecomposition {
    struct Extra {
        GroupElement term;
        std::vector<int> support;       // 0-based positions into basis, ascending
        std::vector<int> coefficients;  // matching support, values in [1, p-1]
    };
    std::vector<GroupElement> basis;
    std::vector<Extra> extras;
};

/// Searches every size-r subset of S's terms (lexicographic order over the
/// canonical form) for an independent basis expressing the remaining terms
/// with pairwise disjoint supports; returns the first decomposition found.
/// Preconditions checked: G = C_p^r with p an odd prime, 0 does not divide
/// S, r <= |S| <= 2r. Extremality is the caller's concern.
std::optional<StructureDecomposition> decompose_theorem11(const Sequence& S, int p, int r);

}  // namespace zerosum
