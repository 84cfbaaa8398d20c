#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace zerosum {

/// A group element, stored as coordinates reduced against the group's
/// invariant factors: coords[i] in [0, d_i). The identity is all zeros.
struct GroupElement {
    std::vector<int> coords;
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Dense element index in [0, |G|): the mixed-radix value of the
/// coordinate vector, most significant coordinate first. Index 0 is
/// always the identity.
using ElementIndex = int;

/// A finite abelian group in invariant-factor form d_1 | d_2 | ... | d_r.
/// Construction normalizes any list of cyclic orders to this form, so two
/// isomorphic presentations compare equal field-for-field. The trivial
/// group is the empty factor list.
///
/// Instances are immutable and cheap to copy (shared internals); every
/// operation is pure, so values may be shared freely across threads.
class FiniteAbelianGroup {
public:
    /// Largest supported group order; construction rejects anything bigger.
    static constexpr long long kMaxOrder = 1 << 20;

    /// The trivial group {0}.
    FiniteAbelianGroup();

    /// Builds the group C_{n_1} x ... x C_{n_k} and normalizes it to
    /// invariant factors by regrouping prime powers. Rejects orders < 2.
    static FiniteAbelianGroup from_orders(const std::vector<int>& cyclic_orders);

    /// Parses a group spec such as "C3^2xC9" (case-insensitive). "C1" is
    /// accepted for the trivial group.
    static FiniteAbelianGroup parse(std::string_view text);

    const std::vector<int>& invariant_factors() const;
    long long order() const;
    int exponent() const;   ///< largest invariant factor (1 for the trivial group)
    int rank() const;

    /// Canonical form of the spec grammar, e.g. "C3xC3xC9"; "C1" when trivial.
    std::string canonical_name() const;

    GroupElement identity() const;
    /// Builds an element from arbitrary integer coordinates, reducing each
    /// modulo its factor. Rejects a wrong-length coordinate list.
    GroupElement element(const std::vector<long long>& coords) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement scalar_mul(long long k, const GroupElement& a) const;

    /// Least n >= 1 with n*a = 0: lcm over coordinates of d_i / gcd(d_i, a_i).
    int order_of(const GroupElement& a) const;

    ElementIndex index_of(const GroupElement& a) const;
    GroupElement element_at(ElementIndex i) const;  ///< rejects i outside [0, order)

    ElementIndex add_index(ElementIndex a, ElementIndex b) const;
    ElementIndex neg_index(ElementIndex a) const;
    ElementIndex scalar_mul_index(long long k, ElementIndex a) const;
    int order_of_index(ElementIndex a) const;

    /// All elements, identity first, in index order.
    std::vector<GroupElement> elements() const;

    /// Formats an element as a coordinate tuple, e.g. "(1,0,2)"; "()" for
    /// the trivial group's identity.
    std::string format_element(const GroupElement& a) const;
    /// Parses a coordinate tuple; coordinates may be any integers and are
    /// reduced. Rejects wrong arity or malformed syntax.
    GroupElement parse_element(std::string_view text) const;

    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        return a.invariant_factors() == b.invariant_factors();
    }

private:
    struct Data;
    explicit FiniteAbelianGroup(std::shared_ptr<const Data> data);
    std::shared_ptr<const Data> data_;
};

}  // namespace zerosum
