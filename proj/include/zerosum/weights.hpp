#pragma once

#include "zerosum/group.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace zerosum {

/// A finite set of nonzero integer weights A. Weights live in Z, so the
/// `symmetric` flag records A = -A over the integers; theorem hypotheses
/// that need symmetry inside a particular group use group_symmetric()
/// instead (symmetry of the residues mod exp(G)).
class WeightSet {
public:
    /// Builds a weight set from explicit values: deduplicates and sorts.
    /// Rejects empty lists, zero weights, and |a| > 10^6.
    static WeightSet from_list(std::vector<long long> values);

    /// Parses one of: an explicit list "{-1,1}", or the keywords
    /// "unit" (A = {1}), "pm1" (A = {-1,1}), "full" (A = [1, exp(G)-1]).
    /// "full" is rejected on the trivial group.
    static WeightSet parse(std::string_view spec, const FiniteAbelianGroup& G);

    const std::vector<long long>& weights() const { return weights_; }
    bool symmetric() const { return symmetric_; }  ///< A = -A over Z

    /// Canonical serialization, ascending: "{-1,1}".
    std::string canonical_name() const;

private:
    std::vector<long long> weights_;  // sorted ascending, unique
    bool symmetric_ = false;
};

/// The orbit A*g = {a*g : a in A} as a deduplicated element list in index
/// order. The orbit of the identity is {0} for every A; an orbit may
/// contain 0 for g != 0 when some weight kills g (a*g = 0).
std::vector<GroupElement> weight_orbit(const WeightSet& A, const FiniteAbelianGroup& G,
                                       const GroupElement& g);

/// Same orbit as dense element indices, sorted ascending.
std::vector<ElementIndex> weight_orbit_indices(const WeightSet& A, const FiniteAbelianGroup& G,
                                               ElementIndex g);

/// True iff {a mod exp(G)} = {-a mod exp(G)} as residue sets. This is the
/// symmetry hypothesis the sign-flip arguments actually use.
bool group_symmetric(const WeightSet& A, const FiniteAbelianGroup& G);

/// True iff the weight residues mod exp(G) are exactly {1, exp(G)-1}
/// (i.e. A acts as {-1,+1} inside G). Several structure checks require
/// this shape rather than general symmetry.
bool acts_as_pm1(const WeightSet& A, const FiniteAbelianGroup& G);

}  // namespace zerosum
