#include "fixloci/torsion.hpp"

#include <sstream>
#include <stdexcept>

namespace fixloci {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> factors)
    : factors_(std::move(factors)) {
    for (int f : factors_)
        if (f < 2) throw std::invalid_argument("invariant factors must be >= 2");
}

long long FiniteAbelianGroup::order() const {
    long long n = 1;
    for (int f : factors_) n *= f;
    return n;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::reduce(Element e) const {
    if (e.size() != factors_.size())
        throw std::invalid_argument("group element arity mismatch");
    for (size_t i = 0; i < e.size(); ++i) {
        e[i] %= factors_[i];
        if (e[i] < 0) e[i] += factors_[i];
    }
    return e;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::add(const Element& a,
                                                    const Element& b) const {
    if (a.size() != factors_.size() || b.size() != factors_.size())
        throw std::invalid_argument("group element arity mismatch");
    Element out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % factors_[i];
    return out;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::scale(long long k,
                                                      const Element& e) const {
    if (e.size() != factors_.size())
        throw std::invalid_argument("group element arity mismatch");
    Element out(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
        long long r = (k % factors_[i]) * e[i] % factors_[i];
        if (r < 0) r += factors_[i];
        out[i] = static_cast<int>(r);
    }
    return out;
}

bool FiniteAbelianGroup::contains(const Element& e) const {
    if (e.size() != factors_.size()) return false;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] >= factors_[i]) return false;
    return true;
}

std::vector<FiniteAbelianGroup::Element> FiniteAbelianGroup::elements() const {
    std::vector<Element> out;
    Element cur = identity();
    while (true) {
        out.push_back(cur);
        int i = static_cast<int>(factors_.size()) - 1;
        while (i >= 0 && cur[i] == factors_[i] - 1) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    // counting order above is already lexicographic
    return out;
}

GroupRingElement GroupRingElement::unit(const FiniteAbelianGroup& g) {
    return basis(g, g.identity());
}

GroupRingElement GroupRingElement::basis(const FiniteAbelianGroup& g,
                                         FiniteAbelianGroup::Element e) {
    if (!g.contains(e))
        throw std::invalid_argument("element does not lie in the group");
    GroupRingElement out;
    out.group_ = g;
    out.coeffs_[std::move(e)] = 1;
    return out;
}

GroupRingElement GroupRingElement::from_terms(
    const FiniteAbelianGroup& g,
    std::map<FiniteAbelianGroup::Element, Int> terms) {
    GroupRingElement out;
    out.group_ = g;
    for (auto it = terms.begin(); it != terms.end();) {
        if (!g.contains(it->first))
            throw std::invalid_argument("element does not lie in the group");
        it = it->second == 0 ? terms.erase(it) : std::next(it);
    }
    out.coeffs_ = std::move(terms);
    return out;
}

Int GroupRingElement::identity_coefficient() const {
    auto it = coeffs_.find(group_.identity());
    return it == coeffs_.end() ? Int(0) : it->second;
}

Int GroupRingElement::augmentation() const {
    Int s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

void GroupRingElement::require_group(const GroupRingElement& o) const {
    // a zero is compatible with every group
    if (is_zero() || o.is_zero()) return;
    if (!(group_ == o.group_))
        throw std::invalid_argument("group ring mismatch");
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    require_group(o);
    if (is_zero()) return o;
    GroupRingElement out = *this;
    for (const auto& [e, c] : o.coeffs_) {
        Int& slot = out.coeffs_[e];
        slot += c;
        if (slot == 0) out.coeffs_.erase(e);
    }
    return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    require_group(o);
    GroupRingElement out;
    if (is_zero() || o.is_zero()) return out;
    out.group_ = group_;
    for (const auto& [ea, ca] : coeffs_)
        for (const auto& [eb, cb] : o.coeffs_) {
            auto e = group_.add(ea, eb);
            Int& slot = out.coeffs_[e];
            slot += ca * cb;
            if (slot == 0) out.coeffs_.erase(e);
        }
    return out;
}

GroupRingElement GroupRingElement::operator*(const Int& k) const {
    GroupRingElement out;
    if (k == 0 || is_zero()) return out;
    out.group_ = group_;
    for (const auto& [e, c] : coeffs_) out.coeffs_[e] = c * k;
    return out;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return group_ == o.group_ && coeffs_ == o.coeffs_;
}

std::string GroupRingElement::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << c << "*";
        if (e.empty()) {
            os << "1";
        } else {
            os << "[";
            for (size_t i = 0; i < e.size(); ++i) os << e[i];
            os << "]";
        }
    }
    return os.str();
}

GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b) {
    return a * b;
}

} // namespace fixloci
