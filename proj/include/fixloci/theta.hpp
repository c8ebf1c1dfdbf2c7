#pragma once

#include <optional>

#include "fixloci/catalog.hpp"
#include "fixloci/dynkin.hpp"
#include "fixloci/qseries.hpp"
#include "fixloci/torsion.hpp"

namespace fixloci {

/// One theta factor: a singular point of type `lattice` inside the quotient
/// by a group of order `global_order`. The inertia order g = |G_Delta| of the
/// point divides |G|; the factor substitutes z = q^{|G| d / g} and base
/// q^{|G|}, i.e. vector m contributes q^{e(m)} with
///   e(m) = (|G|/g)(m.d) + |G| q(m).
/// A decorated point additionally weighs m by gamma^{t(m)},
///   t(m) = m.d + g q(m),
/// the local rigid colength.
struct ThetaFactorSpec {
    RootLatticeData lattice;
    long long global_order = 0;
    std::optional<FiniteAbelianGroup> torsion;
    FiniteAbelianGroup::Element decoration; // used when torsion is set

    long long inertia_order() const { return lattice.group_order; }
    long long scale() const { return global_order / inertia_order(); }
};

TruncatedSeries<Int> theta_factor(const ThetaFactorSpec& spec, int order);
TruncatedSeries<GroupRingElement> theta_factor_torsion(const ThetaFactorSpec& spec,
                                                       int order);

/// Theta series of an action: the product over all configured points of
/// their theta factors, truncated at `order`. Integer coefficients.
/// Decorations, if any, are ignored here; see theta_series_torsion.
TruncatedSeries<Int> theta_series(const GroupAction& action, int order);

/// Group-ring-valued theta series of a Kummer-enabled action. Coefficients
/// live in Z[A^G]; the identity-coefficient projection counts components of
/// the fixed locus inside the generalized Kummer fiber.
TruncatedSeries<GroupRingElement> theta_series_torsion(const GroupAction& action,
                                                       int order);

} // namespace fixloci
