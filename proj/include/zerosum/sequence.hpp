#pragma once

#include "zerosum/group.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zerosum {

/// A finite sequence over a group: an indexed multiset of elements.
/// Terms keep their positional identity (counting is over index sets),
/// but equality and enumeration work on the canonical multiset form,
/// i.e. terms sorted by dense element index.
///
/// Sequences are capped at 64 terms so index sets always fit a machine
/// word in the exhaustive counter.
class Sequence {
public:
    static constexpr int kMaxLength = 64;

    Sequence() = default;  ///< empty sequence over the trivial group
    explicit Sequence(FiniteAbelianGroup group);
    Sequence(FiniteAbelianGroup group, std::vector<ElementIndex> term_indices);

    static Sequence from_elements(const FiniteAbelianGroup& G,
                                  const std::vector<GroupElement>& terms);

    /// Parses a sequence literal: comma-separated coordinate tuples with
    /// optional '*k' multiplicity sugar, e.g. "(1,0,0)*2,(0,1,0)".
    /// The empty string is the empty sequence.
    static Sequence parse(const FiniteAbelianGroup& G, std::string_view literal);

    const FiniteAbelianGroup& group() const { return group_; }
    int length() const { return static_cast<int>(terms_.size()); }
    bool empty() const { return terms_.empty(); }

    ElementIndex term_index(int i) const { return terms_[i]; }
    GroupElement term(int i) const { return group_.element_at(terms_[i]); }
    const std::vector<ElementIndex>& term_indices() const { return terms_; }

    /// Distinct elements with multiplicities, sorted by element index.
    std::vector<std::pair<ElementIndex, int>> multiplicities() const;
    int multiplicity_of(const GroupElement& g) const;
    int multiplicity_of_index(ElementIndex g) const;
    bool contains_index(ElementIndex g) const { return multiplicity_of_index(g) > 0; }

    Sequence appended(const GroupElement& g) const;
    Sequence appended_index(ElementIndex g) const;
    /// Removes one occurrence (the first, keeping the rest in order).
    /// Rejects elements not present.
    Sequence removed_one(const GroupElement& g) const;

    Sequence canonical() const;  ///< terms sorted by element index
    bool is_canonical() const;

    /// Canonical literal with '*k' sugar, e.g. "(1,0,0)*2,(0,1,0)".
    std::string to_literal() const;

    /// Multiset equality of canonical forms (same group, same terms up to order).
    friend bool operator==(const Sequence& a, const Sequence& b);

private:
    FiniteAbelianGroup group_;
    std::vector<ElementIndex> terms_;
};

/// For odd-order groups: a fixed choice of one element from each pair
/// {g, -g}. The member with the smaller dense index goes into `plus`.
struct GPlusPartition {
    std::vector<ElementIndex> plus;
    std::vector<ElementIndex> minus;
    std::vector<std::int8_t> side;  // by element index: +1 plus, -1 minus, 0 identity
};

/// Rejects groups of even order.
GPlusPartition gplus_partition(const FiniteAbelianGroup& G);

/// Replaces every `minus` term by its negation and returns the canonical
/// form. Idempotent; preserves length.
Sequence sign_normalize(const Sequence& S, const GPlusPartition& P);

/// Visits every multiset of `length` support positions in non-decreasing
/// order (combinations with repetition). The visitor receives the chosen
/// positions and may return false to stop; returns false iff stopped.
bool for_each_multiset(int support_size, int length,
                       const std::function<bool(std::span<const int>)>& visit);

/// Visits every canonical sequence of the given length over the support
/// (deduplicated, sorted by index). Returns false iff the visitor stopped.
bool for_each_sequence(const FiniteAbelianGroup& G, std::vector<ElementIndex> support, int length,
                       const std::function<bool(const Sequence&)>& visit);

/// Materializes for_each_sequence; intended for small enumerations.
std::vector<Sequence> enumerate_sequences(const FiniteAbelianGroup& G,
                                          const std::vector<GroupElement>& support, int length);

}  // namespace zerosum
