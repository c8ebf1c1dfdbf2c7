#pragma once

#include <vector>

#include "fixloci/catalog.hpp"
#include "fixloci/numeric.hpp"
#include "fixloci/torsion.hpp"

namespace fixloci {

struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Independent verification paths for the theta-series machinery. Everything
// here recomputes its inputs from first principles: Cartan matrices are
// rebuilt from adjacency, representation dimensions are derived as the kernel
// of the affine Cartan matrix, exponents come from a plain box enumeration,
// and products are counted tuple by tuple instead of by series
// multiplication.
namespace oracle {

/// Number of tuples (m_i) over the configured points with
/// sum_i e_i(m_i) = n - |G|k. Equals the theta coefficient when both are
/// correct; computed without any shared code path.
Int direct_count(const GroupAction& action, long long n, long long k);

/// Same, group-ring-valued: each tuple contributes the product of its
/// decoration weights gamma_i^{t_i}.
GroupRingElement direct_count_torsion(const GroupAction& action, long long n,
                                      long long k);

/// All coefficients 0..bound in one depth-first sweep.
std::vector<Int> direct_tally(const GroupAction& action, long long bound);
std::vector<GroupRingElement> direct_tally_torsion(const GroupAction& action,
                                                   long long bound);

/// The m-tuples themselves for one (n, k); one inner vector per configured
/// point. Intended for small cases (stratum-dimension cross-checks).
std::vector<std::vector<std::vector<long long>>>
enumerate_invariants(const GroupAction& action, long long n, long long k);

/// Z/a-weight census of a partition: box (row r, col c) has weight
/// (c - r) mod a. m_hat0 = n_0 regular copies; m^j = n_j - n_0 for
/// j = 1..a-1 is the tautological invariant in M_{A_{a-1}}.
struct PartitionProfile {
    std::vector<int> partition;
    int cyclic_order = 0;
    std::vector<long long> weight_counts; // n_0..n_{a-1}
    long long m_hat0 = 0;
    std::vector<long long> m_vector; // m^1..m^{a-1}
};

PartitionProfile partition_profile(const std::vector<int>& partition, int a);

/// q(m) of an m-vector in M_{A_{a-1}}, computed with the oracle's own Cartan
/// data.
Int profile_norm(const std::vector<long long>& m_vector, int a);

/// Number of lattice vectors of M_{A_{a-1}} with rigid colength
/// t(m) = m.d + a q(m) equal to l, for each l <= max_colength. Cross-checked
/// internally against the partition route: the rigid profiles (m_hat0 = q(m))
/// of partitions of l realize each such vector exactly once. Throws
/// VerificationError if the two routes disagree.
std::vector<long long> local_rigid_counts(int a, long long max_colength);

struct ColoredCheckReport {
    bool pass = true;
    std::string counterexample; // empty when pass
};

/// For every l <= l_max and every m-vector realized by partitions of l, the
/// number of realizing partitions must equal the number of a-tuples of
/// partitions of total size m_hat0 - q(m).
ColoredCheckReport colored_partition_check(int a, long long l_max);

/// All partitions of l, each weakly decreasing; deterministic order.
std::vector<std::vector<int>> partitions_of(long long l);

} // namespace oracle

} // namespace fixloci
