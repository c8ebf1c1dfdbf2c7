#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fixloci/numeric.hpp"

namespace fixloci {

/// Simply-laced Dynkin type. Valid ranks: A_n n>=1, D_n n>=4, E_6/E_7/E_8.
struct DynkinType {
    char family = 'A';
    int rank = 1;

    DynkinType() = default;
    DynkinType(char family, int rank);

    /// Parses "A_3", "D_4", "E_6". Throws std::invalid_argument otherwise.
    static DynkinType parse(std::string_view s);
    std::string str() const;

    bool operator==(const DynkinType&) const = default;
};

/// Root lattice of one ADE type together with its McKay data: the (negative
/// definite) Dynkin pairing on the span of the nontrivial irreducibles, the
/// vector of irreducible-representation dimensions and the order of the
/// corresponding subgroup of SU(2).
struct RootLatticeData {
    DynkinType dynkin;
    std::vector<std::vector<int>> gram; // gram[i][j] = (rho_i, rho_j)
    std::vector<int> dims;              // d^j = dim rho_j
    long long group_order = 0;          // |G_Delta| = sum d^2 + 1

    int rank() const { return static_cast<int>(dims.size()); }
};

RootLatticeData build_root_lattice(DynkinType t);

/// q(m) = -(m,m)/2 >= 0; zero exactly at m = 0. The lattice is even, so the
/// value is integral. Throws std::invalid_argument on dimension mismatch.
Int norm(const RootLatticeData& lattice, std::span<const long long> m);

struct LatticeVector {
    std::vector<int> m;
    long long e = 0; // scale*(m.d) + base*q(m)
    long long t = 0; // m.d + |G_Delta|*q(m), the local rigid colength
};

/// All lattice vectors with e(m) = scale*(m.d) + base*q(m) <= bound, sorted
/// by e then lexicographically by m. Complete: uses an exact rational
/// Cholesky factorization of -gram to drive the interval recursion.
std::vector<LatticeVector> enumerate_vectors(const RootLatticeData& lattice,
                                             long long scale, long long base,
                                             long long bound);

/// Debug oracle for enumerate_vectors: scans an exactly-justified coordinate
/// box and filters. Slow; kept for cross-checks.
std::vector<LatticeVector> enumerate_vectors_box(const RootLatticeData& lattice,
                                                 long long scale, long long base,
                                                 long long bound);

/// All m with q(m) <= max_norm, including m = 0.
std::vector<std::vector<int>> enumerate_by_norm(const RootLatticeData& lattice,
                                                long long max_norm);

} // namespace fixloci
