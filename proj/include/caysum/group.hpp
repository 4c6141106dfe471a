#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "caysum/errors.hpp"

namespace caysum {

/**
 * A finite abelian group presented as a direct product of cyclic groups,
 * Z_{n_1} x ... x Z_{n_r} with every n_j >= 2.  The user-supplied factor
 * orders are kept verbatim; the 2-part exponents m_i (one per even factor,
 * n_j = 2^{m} * odd) and the odd factor orders are derived at construction.
 */
class GroupSpec {
public:
    static GroupSpec from_factors(std::vector<long> factor_orders);

    const std::vector<long>& factor_orders() const { return factors_; }
    long order() const { return order_; }
    std::size_t rank() const { return factors_.size(); }

    /// Exponents m_i of the 2-power content of each even factor.
    const std::vector<int>& two_part_exponents() const { return two_exp_; }
    /// Odd parts > 1 of the factors (the odd factor orders after splitting).
    const std::vector<long>& odd_factor_orders() const { return odd_factors_; }

    bool even_order() const { return !two_exp_.empty(); }
    /// Every nonzero element has order 2: all factors are Z_2.
    bool is_elementary_abelian_2() const;

    std::string to_string() const;  // "Z4xZ2xZ3"

    bool operator==(const GroupSpec& o) const { return factors_ == o.factors_; }

private:
    GroupSpec() = default;
    std::vector<long> factors_;
    long order_ = 1;
    std::vector<int> two_exp_;
    std::vector<long> odd_factors_;
};

/// One residue per cyclic factor, in the user's factor order.
struct Element {
    std::vector<long> residues;

    Element() = default;
    explicit Element(std::vector<long> r) : residues(std::move(r)) {}

    auto operator<=>(const Element&) const = default;
};

std::string to_string(const GroupSpec& g, const Element& e);

/// A duplicate-free, lexicographically ordered collection of elements.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::vector<Element> items);

    bool contains(const Element& e) const;
    void insert(const Element& e);
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    const Element& operator[](std::size_t i) const { return items_[i]; }
    const std::vector<Element>& items() const { return items_; }

    bool operator==(const ElementSet&) const = default;
    auto operator<=>(const ElementSet&) const = default;

private:
    std::vector<Element> items_;
};

struct Subgroup {
    ElementSet generators;
    ElementSet elements;  // full closure, contains the identity
    long index = 0;       // [A : H]
};

// -- arithmetic ------------------------------------------------------------

Element zero(const GroupSpec& g);
Element add(const GroupSpec& g, const Element& a, const Element& b);
Element negate(const GroupSpec& g, const Element& a);
Element subtract(const GroupSpec& g, const Element& a, const Element& b);
Element doubled(const GroupSpec& g, const Element& a);
Element scalar_multiple(const GroupSpec& g, long k, const Element& a);

/// Throws structural_error if e does not have one in-range residue per factor.
void require_valid(const GroupSpec& g, const Element& e);
bool is_valid(const GroupSpec& g, const Element& e);

long element_order(const GroupSpec& g, const Element& a);

/// All group elements in lexicographic order.  O(|A|).
std::vector<Element> all_elements(const GroupSpec& g);

// -- squares and structure -------------------------------------------------

/// True iff a = 2y for some y, i.e. every residue in an even factor is even.
bool is_square(const GroupSpec& g, const Element& a);

/// The subgroup {2a : a in A} of all squares.
Subgroup squares_subgroup(const GroupSpec& g);

/// (Sylow 2-subgroup, Hall 2'-subgroup): elements of 2-power order and of
/// odd order; their internal direct product is the whole group.
std::pair<Subgroup, Subgroup> decompose_2_and_odd(const GroupSpec& g);

/// Smallest subgroup containing gens, by closure under addition.
Subgroup subgroup_generate(const GroupSpec& g, const ElementSet& gens);

/// Every subgroup exactly once, ordered by (order, element list).
/// Throws resource_error when |A| exceeds the bound.
std::vector<Subgroup> all_subgroups(const GroupSpec& g, long bound = 64);

struct CosetDecomposition {
    std::vector<ElementSet> cosets;  // ordered by least element; H itself first
    ElementSet transversal;          // lexicographically least element per coset
};
CosetDecomposition cosets_and_transversal(const GroupSpec& g, const Subgroup& h);

/// Prime-power elementary divisors of h as an abstract group, sorted
/// ascending; computed from the element-order census.  Two subgroups are
/// isomorphic iff the outputs are equal.
std::vector<long> invariant_factors(const GroupSpec& g, const Subgroup& h);

bool is_inverse_closed(const GroupSpec& g, const ElementSet& x);

/// True iff the element set of h is contained in the element set of k.
bool is_subgroup_of(const Subgroup& h, const Subgroup& k);

/// Verifies closure/identity/negation; throws structural_error otherwise.
void require_subgroup(const GroupSpec& g, const Subgroup& h);

}  // namespace caysum
