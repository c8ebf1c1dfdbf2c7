#include "fixloci/theta.hpp"

#include <stdexcept>

namespace fixloci {

namespace {

void check_spec(const ThetaFactorSpec& spec) {
    if (spec.global_order <= 0)
        throw std::invalid_argument("theta factor: global order must be positive");
    if (spec.global_order % spec.inertia_order() != 0)
        throw std::invalid_argument("theta factor: inertia order " +
                                    std::to_string(spec.inertia_order()) +
                                    " does not divide |G| = " +
                                    std::to_string(spec.global_order));
}

template <typename R, typename Weight>
TruncatedSeries<R> factor_series(const ThetaFactorSpec& spec, int order,
                                 Weight&& weight) {
    check_spec(spec);
    TruncatedSeries<R> out(order);
    for (const auto& v :
         enumerate_vectors(spec.lattice, spec.scale(), spec.global_order, order))
        out.at(static_cast<int>(v.e)) = out.at(static_cast<int>(v.e)) + weight(v);
    return out;
}

} // namespace

TruncatedSeries<Int> theta_factor(const ThetaFactorSpec& spec, int order) {
    return factor_series<Int>(spec, order, [](const LatticeVector&) { return Int(1); });
}

TruncatedSeries<GroupRingElement> theta_factor_torsion(const ThetaFactorSpec& spec,
                                                       int order) {
    if (!spec.torsion)
        throw std::invalid_argument("theta factor: missing torsion group");
    const FiniteAbelianGroup& g = *spec.torsion;
    const auto gamma = g.reduce(spec.decoration);
    return factor_series<GroupRingElement>(spec, order, [&](const LatticeVector& v) {
        return GroupRingElement::basis(g, g.scale(v.t, gamma));
    });
}

TruncatedSeries<Int> theta_series(const GroupAction& action, int order) {
    TruncatedSeries<Int> acc = TruncatedSeries<Int>::one(order, 1);
    for (const auto& t : action.config.terms()) {
        ThetaFactorSpec spec{build_root_lattice(t.type), action.order, {}, {}};
        auto factor = theta_factor(spec, order);
        for (int i = 0; i < t.multiplicity; ++i) acc = series_mul(acc, factor);
    }
    return acc;
}

TruncatedSeries<GroupRingElement> theta_series_torsion(const GroupAction& action,
                                                       int order) {
    if (action.surface != Surface::Abelian || !action.kummer_enabled)
        throw UnknownKeyError("action '" + action.name +
                              "' does not support the Kummer theta series");
    const FiniteAbelianGroup& g = *action.torsion;
    auto acc = TruncatedSeries<GroupRingElement>::one(order, GroupRingElement::unit(g));
    auto points = action.config.expanded();
    for (size_t i = 0; i < points.size(); ++i) {
        ThetaFactorSpec spec{build_root_lattice(points[i]), action.order, g,
                             action.decorations[i]};
        acc = series_mul(acc, theta_factor_torsion(spec, order));
    }
    return acc;
}

} // namespace fixloci
