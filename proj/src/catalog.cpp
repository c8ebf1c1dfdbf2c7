#include "fixloci/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace fixloci {

namespace {

int family_order(char f) { return f == 'A' ? 0 : f == 'D' ? 1 : 2; }

bool term_before(const ConfigTerm& a, const ConfigTerm& b) {
    if (a.type.rank != b.type.rank) return a.type.rank > b.type.rank;
    return family_order(a.type.family) < family_order(b.type.family);
}

} // namespace

SingularityConfig::SingularityConfig(std::vector<ConfigTerm> terms) {
    std::map<std::pair<int, int>, int> merged; // (rank desc key handled below)
    for (const auto& t : terms) {
        if (t.multiplicity <= 0)
            throw std::invalid_argument("configuration multiplicity must be positive");
        merged[{t.type.rank, family_order(t.type.family)}] += t.multiplicity;
    }
    for (const auto& [key, mult] : merged) {
        char fam = key.second == 0 ? 'A' : key.second == 1 ? 'D' : 'E';
        terms_.push_back({DynkinType(fam, key.first), mult});
    }
    std::sort(terms_.begin(), terms_.end(), term_before);
    if (total_rank() > 19)
        throw std::invalid_argument(
            "configuration total rank exceeds 19 (Picard bound): " + str());
}

SingularityConfig SingularityConfig::parse(std::string_view s) {
    std::string compact;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact.empty())
        throw std::invalid_argument("empty singularity configuration");
    std::vector<ConfigTerm> terms;
    size_t pos = 0;
    while (pos < compact.size()) {
        size_t next = compact.find('+', pos);
        std::string term = compact.substr(pos, next == std::string::npos
                                                   ? std::string::npos
                                                   : next - pos);
        if (term.empty())
            throw std::invalid_argument("malformed configuration: " + std::string(s));
        size_t i = 0;
        int count = 0;
        while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i])))
            count = count * 10 + (term[i++] - '0');
        if (i == term.size())
            throw std::invalid_argument("malformed configuration term: " + term);
        if (count == 0) count = 1;
        terms.push_back({DynkinType::parse(term.substr(i)), count});
        pos = next == std::string::npos ? compact.size() : next + 1;
        if (next != std::string::npos && pos == compact.size())
            throw std::invalid_argument("malformed configuration: " + std::string(s));
    }
    return SingularityConfig(std::move(terms));
}

std::string SingularityConfig::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << "+";
        if (terms_[i].multiplicity > 1) os << terms_[i].multiplicity;
        os << terms_[i].type.str();
    }
    return os.str();
}

std::vector<DynkinType> SingularityConfig::expanded() const {
    std::vector<DynkinType> out;
    for (const auto& t : terms_)
        for (int i = 0; i < t.multiplicity; ++i) out.push_back(t.type);
    return out;
}

int SingularityConfig::total_rank() const {
    int r = 0;
    for (const auto& t : terms_) r += t.multiplicity * t.type.rank;
    return r;
}

int SingularityConfig::point_count() const {
    int n = 0;
    for (const auto& t : terms_) n += t.multiplicity;
    return n;
}

long long GroupAction::inertia_order(DynkinType t) {
    switch (t.family) {
    case 'A': return t.rank + 1;
    case 'D': return 4LL * (t.rank - 2);
    default: return t.rank == 6 ? 24 : t.rank == 7 ? 48 : 120;
    }
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (true) {
        size_t next = s.find(sep, pos);
        out.emplace_back(s.substr(pos, next == std::string_view::npos
                                           ? std::string_view::npos
                                           : next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

long long to_int(const std::string& s) {
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw std::invalid_argument("catalog: bad integer field '" + s + "'");
    return v;
}

// torsion token: "f1,f2,...:elem elem ..." with one digit-string element per
// configured point, aligned with SingularityConfig::expanded().
void parse_torsion(const std::string& body, GroupAction& a) {
    auto colon = body.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("catalog: bad torsion token");
    std::vector<int> factors;
    for (const auto& f : split(body.substr(0, colon), ','))
        factors.push_back(static_cast<int>(to_int(f)));
    a.torsion = FiniteAbelianGroup(std::move(factors));
    std::istringstream es(body.substr(colon + 1));
    std::string tok;
    while (es >> tok) {
        FiniteAbelianGroup::Element e;
        for (char c : tok) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("catalog: bad torsion element " + tok);
            e.push_back(c - '0');
        }
        if (!a.torsion->contains(e))
            throw std::invalid_argument("catalog: torsion element out of range " + tok);
        a.decorations.push_back(std::move(e));
    }
}

GroupAction parse_row(const std::string& line, Surface surface) {
    auto fields = split(line, '|');
    if (fields.size() != 6)
        throw std::invalid_argument("catalog: expected 6 fields: " + line);
    GroupAction a;
    a.label = static_cast<int>(to_int(fields[0]));
    a.name = fields[1];
    a.order = to_int(fields[2]);
    a.surface = surface;
    a.config = SingularityConfig::parse(fields[3]);
    a.invariant_lattice = fields[4];
    for (const auto& flag : split(fields[5], ';')) {
        if (flag.empty()) continue;
        if (flag == "admissible") a.admissible = true;
        else if (flag == "kummer") a.kummer_enabled = true;
        else if (flag == "fujiki") { /* metadata row marker */ }
        else if (flag.starts_with("note=")) a.note = flag.substr(5);
        else if (flag.starts_with("torsion=")) parse_torsion(flag.substr(8), a);
        else throw std::invalid_argument("catalog: unknown flag " + flag);
    }
    if (a.kummer_enabled && !a.torsion)
        a.torsion = FiniteAbelianGroup(std::vector<int>{}); // trivial A^G, all decorations 1
    if (a.kummer_enabled && a.decorations.empty())
        a.decorations.assign(a.config.point_count(), a.torsion->identity());
    return a;
}

// The quotient of the surface by G resolves to a K3, which fixes the Euler
// characteristic: chi(S) = |G|(24 - R - l) + sum_i |G|/g_i with R the total
// exceptional rank and l the number of orbifold points. chi is 24 for K3
// actions and 0 for abelian ones; the identity determines |G| from the
// configuration alone, so it pins every transcribed order.
void validate(const GroupAction& a) {
    long long R = a.config.total_rank();
    long long l = a.config.point_count();
    Rat inertia_sum = 0;
    for (const auto& t : a.config.expanded()) {
        long long g = GroupAction::inertia_order(t);
        if (a.order % g != 0)
            throw std::invalid_argument("catalog: inertia order does not divide |G| in row " +
                                        a.name);
        inertia_sum += Rat(1, g);
    }
    long long chi = a.surface == Surface::K3 ? 24 : 0;
    if (Rat(a.order) * (Rat(24 - R - l) + inertia_sum) != chi)
        throw std::invalid_argument("catalog: Euler identity fails in row " + a.name);
    if (a.kummer_enabled) {
        if (static_cast<int>(a.decorations.size()) != a.config.point_count())
            throw std::invalid_argument("catalog: decoration count mismatch in row " +
                                        a.name);
        for (const auto& e : a.decorations)
            if (!a.torsion->contains(e))
                throw std::invalid_argument("catalog: decoration outside A^G in row " +
                                            a.name);
    }
}

struct Catalog {
    std::vector<GroupAction> k3;
    std::vector<GroupAction> abelian;
};

Catalog load() {
    Catalog cat;
    Surface current = Surface::K3;
    for (const auto& line : split(catalog_text(), '\n')) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.find("abelian") != std::string::npos) current = Surface::Abelian;
            continue;
        }
        GroupAction a = parse_row(line, current);
        validate(a);
        (current == Surface::K3 ? cat.k3 : cat.abelian).push_back(std::move(a));
    }
    return cat;
}

const Catalog& catalog() {
    static const Catalog cat = load();
    return cat;
}

} // namespace

const std::vector<GroupAction>& list_actions(Surface surface) {
    return surface == Surface::K3 ? catalog().k3 : catalog().abelian;
}

const GroupAction& lookup(int label, Surface surface) {
    for (const auto& a : list_actions(surface))
        if (a.label == label) return a;
    throw UnknownKeyError("unknown action label " + std::to_string(label));
}

const GroupAction& lookup(std::string_view key, Surface surface) {
    if (!key.empty() &&
        std::all_of(key.begin(), key.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return lookup(static_cast<int>(to_int(std::string(key))), surface);
    const GroupAction* found = nullptr;
    for (const auto& a : list_actions(surface)) {
        if (a.name != key) continue;
        if (found)
            throw UnknownKeyError("ambiguous action name '" + std::string(key) +
                                  "'; use the label instead");
        found = &a;
    }
    if (!found) throw UnknownKeyError("unknown action key '" + std::string(key) + "'");
    return *found;
}

std::vector<const GroupAction*> admissible_actions() {
    std::vector<const GroupAction*> out;
    for (const auto& a : list_actions(Surface::K3))
        if (a.admissible) out.push_back(&a);
    return out;
}

} // namespace fixloci
