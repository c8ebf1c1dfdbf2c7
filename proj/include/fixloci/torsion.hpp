#pragma once

#include <map>
#include <string>
#include <vector>

#include "fixloci/numeric.hpp"

namespace fixloci {

/// Finite abelian group presented by invariant factors (each >= 2; the empty
/// list is the trivial group). Elements are residue vectors, reduced
/// componentwise.
class FiniteAbelianGroup {
public:
    using Element = std::vector<int>;

    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<int> factors);

    const std::vector<int>& factors() const { return factors_; }
    int arity() const { return static_cast<int>(factors_.size()); }
    long long order() const;

    Element identity() const { return Element(factors_.size(), 0); }
    Element reduce(Element e) const;
    Element add(const Element& a, const Element& b) const;
    /// k*e for any integer k (negative allowed).
    Element scale(long long k, const Element& e) const;
    bool contains(const Element& e) const;
    /// All elements in lexicographic order.
    std::vector<Element> elements() const;

    bool operator==(const FiniteAbelianGroup&) const = default;

private:
    std::vector<int> factors_;
};

/// Finitely supported integer combination of group elements. Zero
/// coefficients are never stored, so equality is support-wise. A
/// default-constructed element is the zero of every group ring and may be
/// combined with elements over any group.
class GroupRingElement {
public:
    GroupRingElement() = default;

    static GroupRingElement unit(const FiniteAbelianGroup& g);
    static GroupRingElement basis(const FiniteAbelianGroup& g,
                                  FiniteAbelianGroup::Element e);
    static GroupRingElement from_terms(const FiniteAbelianGroup& g,
                                       std::map<FiniteAbelianGroup::Element, Int> terms);

    bool is_zero() const { return coeffs_.empty(); }
    const FiniteAbelianGroup& group() const { return group_; }
    const std::map<FiniteAbelianGroup::Element, Int>& terms() const { return coeffs_; }

    /// Coefficient of the identity element.
    Int identity_coefficient() const;
    /// Sum of all coefficients; a ring homomorphism to the integers.
    Int augmentation() const;

    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator*(const GroupRingElement& o) const;
    GroupRingElement operator*(const Int& k) const;
    bool operator==(const GroupRingElement& o) const;

    std::string str() const;

private:
    void require_group(const GroupRingElement& o) const;
    FiniteAbelianGroup group_;
    std::map<FiniteAbelianGroup::Element, Int> coeffs_;
};

GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b);

} // namespace fixloci
