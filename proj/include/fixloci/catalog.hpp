#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fixloci/dynkin.hpp"
#include "fixloci/torsion.hpp"

namespace fixloci {

enum class Surface { K3, Abelian };

struct UnknownKeyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigTerm {
    DynkinType type;
    int multiplicity = 1;
    bool operator==(const ConfigTerm&) const = default;
};

/// Multiset of singular points of the quotient surface, one Dynkin type per
/// orbifold point. Total rank is capped at 19: the exceptional classes of the
/// resolution are independent in the Picard lattice of a K3.
class SingularityConfig {
public:
    SingularityConfig() = default;
    explicit SingularityConfig(std::vector<ConfigTerm> terms);

    /// Grammar: CONFIG := TERM ('+' TERM)*; TERM := [count] TYPE '_' rank;
    /// whitespace ignored; count defaults to 1. Term order is free.
    static SingularityConfig parse(std::string_view s);

    /// Canonical form: descending rank, A before D before E at equal rank.
    std::string str() const;

    const std::vector<ConfigTerm>& terms() const { return terms_; }
    /// One entry per point, multiplicities expanded, canonical order.
    std::vector<DynkinType> expanded() const;
    int total_rank() const;
    int point_count() const;

    bool operator==(const SingularityConfig&) const = default;

private:
    std::vector<ConfigTerm> terms_; // canonical order, multiplicities merged
};

/// One catalog row: a finite symplectic group action on a K3 or abelian
/// surface, known through its quotient-singularity configuration. The
/// invariant lattice is carried as an opaque string. Kummer-enabled rows
/// also carry the torsion group A^G and one decoration per singular point.
struct GroupAction {
    int label = 0;
    std::string name;
    long long order = 0; // |G|
    Surface surface = Surface::K3;
    SingularityConfig config;
    std::string invariant_lattice;
    bool admissible = false;
    bool kummer_enabled = false;
    std::optional<FiniteAbelianGroup> torsion; // A^G when kummer_enabled
    std::vector<FiniteAbelianGroup::Element> decorations; // aligned with expanded()
    std::string note; // recorded source discrepancies

    /// |G_Delta| of one configured point type.
    static long long inertia_order(DynkinType t);
};

const std::vector<GroupAction>& list_actions(Surface surface);
const GroupAction& lookup(int label, Surface surface);
const GroupAction& lookup(std::string_view key, Surface surface);
std::vector<const GroupAction*> admissible_actions();

/// The embedded catalog source, pipe-separated, exported verbatim by the CLI.
std::string_view catalog_text();

} // namespace fixloci
