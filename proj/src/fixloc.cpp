#include "fixloci/fixloc.hpp"

#include <numeric>

namespace fixloci {

namespace {

// Theta coefficients 0..order as plain integers, projecting to the identity
// coefficient for Kummer-enabled abelian actions.
std::vector<Int> theta_coefficients(const GroupAction& action, int order) {
    std::vector<Int> out(order + 1);
    if (action.surface == Surface::Abelian) {
        auto series = theta_series_torsion(action, order);
        for (int i = 0; i <= order; ++i)
            out[i] = series.coefficient(i).identity_coefficient();
    } else {
        auto series = theta_series(action, order);
        for (int i = 0; i <= order; ++i) out[i] = series.coefficient(i);
    }
    return out;
}

long long default_scan_bound(const GroupAction& action) { return 2 * action.order; }

} // namespace

const Int& ComponentReport::count_at(long long k) const {
    for (const auto& row : rows)
        if (row.k == k) return row.count;
    throw std::out_of_range("no component row for k = " + std::to_string(k));
}

ComponentReport component_counts(const GroupAction& action, long long n) {
    if (n < 1) throw std::invalid_argument("component_counts: n must be >= 1");
    ComponentReport rep;
    rep.action_name = action.name;
    rep.action_label = action.label;
    rep.surface = action.surface;
    rep.n = n;
    rep.group_order = action.order;

    auto coeffs = theta_coefficients(action, static_cast<int>(n));
    for (long long k = 0; n - action.order * k >= 0; ++k) {
        Int c = coeffs[static_cast<size_t>(n - action.order * k)];
        rep.rows.push_back({k, c});
        if (c > 0) rep.top_k = k;
    }
    if (rep.top_k) rep.epsilon = n / action.order - *rep.top_k;

    auto gcds = support_gcd(action, default_scan_bound(action));
    rep.p_empirical = gcds.p_empirical;
    rep.p_formula = gcds.p_formula;
    return rep;
}

StratumDimension stratum_dimension(const GroupAction& action, long long n,
                                   const std::vector<std::vector<long long>>& m) {
    auto points = action.config.expanded();
    if (m.size() != points.size())
        throw std::invalid_argument("stratum_dimension: one vector per configured point required");
    Int weighted = n;
    Int norm_sum = 0;
    for (size_t i = 0; i < points.size(); ++i) {
        auto lattice = build_root_lattice(points[i]);
        if (static_cast<int>(m[i].size()) != lattice.rank())
            throw std::invalid_argument("stratum_dimension: vector rank mismatch");
        long long g = lattice.group_order;
        Int dot = 0;
        for (int j = 0; j < lattice.rank(); ++j) dot += Int(m[i][j]) * lattice.dims[j];
        weighted -= Int(action.order / g) * dot;
        norm_sum += norm(lattice, m[i]);
    }
    if (weighted < 0)
        throw std::invalid_argument("stratum_dimension: weighted colength is negative");
    if (weighted % action.order != 0)
        throw std::invalid_argument("stratum_dimension: weighted colength not divisible by |G|");
    StratumDimension out;
    out.free_orbits = weighted / action.order;
    out.dim_half = out.free_orbits - norm_sum;
    return out;
}

GroupAction local_model(DynkinType t) {
    GroupAction a;
    a.label = 0;
    a.name = "local " + t.str();
    a.order = GroupAction::inertia_order(t);
    a.surface = Surface::K3;
    a.config = SingularityConfig({{t, 1}});
    a.invariant_lattice = "-";
    return a;
}

TopDimension top_dimension(const GroupAction& action, long long n) {
    auto rep = component_counts(action, n);
    if (rep.empty())
        throw EmptyFixedLocusError("fixed locus of " + action.name + " on length " +
                                   std::to_string(n) + " is empty");
    return {*rep.top_k, rep.count_at(*rep.top_k), *rep.epsilon};
}

SupportGcd support_gcd(const GroupAction& action, long long bound) {
    if (bound < action.order)
        throw std::invalid_argument("support_gcd: bound must be at least |G|");
    SupportGcd out;
    auto coeffs = theta_coefficients(action, static_cast<int>(bound));
    long long g = 0;
    for (long long i = 1; i <= bound; ++i)
        if (coeffs[static_cast<size_t>(i)] != 0) g = std::gcd(g, i);
    out.p_empirical = g;
    long long l = 1;
    for (const auto& t : action.config.terms())
        l = std::lcm(l, GroupAction::inertia_order(t.type));
    out.p_formula = action.order / l;
    out.agree = out.p_empirical == out.p_formula;
    return out;
}

std::vector<Table2Cell> table2_row(const GroupAction& action) {
    auto gcds = support_gcd(action, default_scan_bound(action));
    long long p = gcds.p_empirical;
    long long columns = action.order / p;
    const long long max_epsilon = 4;
    auto coeffs = theta_coefficients(
        action, static_cast<int>(p * (columns - 1) + max_epsilon * action.order));
    std::vector<Table2Cell> row;
    for (long long k = 0; k < columns; ++k) {
        Table2Cell cell;
        cell.k = k;
        for (long long eps = 0; eps <= max_epsilon; ++eps) {
            Int c = coeffs[static_cast<size_t>(k * p + eps * action.order)];
            if (c != 0) {
                cell.exponent = k * p + eps * action.order;
                cell.epsilon = eps;
                cell.count = c;
                break;
            }
        }
        row.push_back(std::move(cell));
    }
    return row;
}

} // namespace fixloci
