#pragma once

#include <optional>
#include <vector>

#include "fixloci/catalog.hpp"
#include "fixloci/theta.hpp"

namespace fixloci {

struct EmptyFixedLocusError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ComponentRow {
    long long k = 0; // complex dimension is 2k
    Int count;       // N_k
};

/// Fixed-locus census of one action on the Hilbert scheme of n points:
/// N_k components of dimension 2k for each 0 <= k <= floor(n/|G|). An empty
/// fixed locus is a distinguished outcome (top_k absent), not an all-zero
/// table.
struct ComponentReport {
    std::string action_name;
    int action_label = 0;
    Surface surface = Surface::K3;
    long long n = 0;
    long long group_order = 0;
    std::vector<ComponentRow> rows; // ascending k
    std::optional<long long> top_k;
    std::optional<long long> epsilon; // floor(n/|G|) - top_k
    long long p_empirical = 0;
    long long p_formula = 0;

    bool empty() const { return !top_k.has_value(); }
    const Int& count_at(long long k) const;
};

/// N_k = Theta_G(n - |G|k), taking the identity coefficient in the
/// group-ring case. Kummer queries require a Kummer-enabled action.
ComponentReport component_counts(const GroupAction& action, long long n);

struct StratumDimension {
    Int free_orbits; // O(n, m)
    Int dim_half;    // O + (m,m)/2; the stratum is nonempty iff >= 0
};

/// Dimension data of the stratum with tautological invariant m, one integer
/// vector per configured point (multiplicities expanded, canonical order).
/// Requires the weighted colength n - sum_i (|G|/g_i)(m_i . d_i) to be a
/// nonnegative multiple of |G|.
StratumDimension stratum_dimension(const GroupAction& action, long long n,
                                   const std::vector<std::vector<long long>>& m);

/// A local model C^2 / G_Delta: a single singular point of the given type
/// with |G| = |G_Delta|. Not a catalog row.
GroupAction local_model(DynkinType t);

struct TopDimension {
    long long top_k = 0;
    Int count;
    long long epsilon = 0;
};

/// Largest k with N_k > 0. Throws EmptyFixedLocusError when the fixed locus
/// is empty.
TopDimension top_dimension(const GroupAction& action, long long n);

struct SupportGcd {
    long long p_empirical = 0; // gcd of nonzero-support exponents <= bound
    long long p_formula = 0;   // |G| / lcm_i(g_i)
    bool agree = false;
};

SupportGcd support_gcd(const GroupAction& action, long long bound);

struct Table2Cell {
    long long k = 0;        // column index; generic n = m|G| + k p
    long long exponent = 0; // k p + epsilon |G|
    long long epsilon = 0;
    std::optional<Int> count; // absent if no support in this class was found
};

/// Top-dimensional component counts per residue class: for each k in
/// 0..|G|/p - 1 the first nonzero coefficient along exponents kp + j|G|,
/// j = epsilon = 0, 1, ...
std::vector<Table2Cell> table2_row(const GroupAction& action);

} // namespace fixloci
