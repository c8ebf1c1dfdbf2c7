#include "fixloci/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace fixloci::oracle {

namespace {

// ---- first-principles Dynkin data (deliberately not shared with dynkin.cpp)

std::vector<std::vector<int>> adjacency(DynkinType t) {
    int r = t.rank;
    std::vector<std::vector<int>> adj(r);
    auto link = [&](int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    if (t.family == 'A') {
        for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
    } else if (t.family == 'D') {
        for (int i = 0; i + 1 < r - 2; ++i) link(i, i + 1);
        link(r - 3, r - 2);
        link(r - 3, r - 1);
    } else {
        for (int i = 0; i + 1 < r - 1; ++i) link(i, i + 1);
        link(2, r - 1);
    }
    return adj;
}

std::vector<std::vector<Rat>> cartan(DynkinType t) {
    int r = t.rank;
    std::vector<std::vector<Rat>> C(r, std::vector<Rat>(r, 0));
    for (int i = 0; i < r; ++i) C[i][i] = 2;
    auto adj = adjacency(t);
    for (int i = 0; i < r; ++i)
        for (int j : adj[i]) C[i][j] = -1;
    return C;
}

// Attachment of the affine node. A_1 is the doubled bond.
std::vector<std::pair<int, int>> affine_links(DynkinType t) {
    if (t.family == 'A') {
        if (t.rank == 1) return {{0, 2}};
        return {{0, 1}, {t.rank - 1, 1}};
    }
    if (t.family == 'D') return {{1, 1}};
    if (t.rank == 6) return {{5, 1}};
    if (t.rank == 7) return {{0, 1}};
    return {{6, 1}};
}

// Representation dimensions derived as the kernel of the affine Cartan
// matrix, normalized so the trivial representation has dimension one.
std::vector<long long> mckay_dims(DynkinType t) {
    int r = t.rank;
    std::vector<std::vector<Rat>> C(r + 1, std::vector<Rat>(r + 1, 0));
    for (int i = 0; i < r; ++i) C[i][i] = 2;
    auto adj = adjacency(t);
    for (int i = 0; i < r; ++i)
        for (int j : adj[i]) C[i][j] = -1;
    C[r][r] = 2;
    for (auto [node, mult] : affine_links(t)) {
        C[node][r] = -mult;
        C[r][node] = -mult;
    }
    // solve C x = 0 with x_r = 1: move the affine column to the right side
    std::vector<std::vector<Rat>> a(r, std::vector<Rat>(r + 1));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) a[i][j] = C[i][j];
        a[i][r] = -C[i][r];
    }
    for (int col = 0; col < r; ++col) {
        int piv = col;
        while (a[piv][col] == 0) ++piv;
        std::swap(a[piv], a[col]);
        Rat p = a[col][col];
        for (auto& x : a[col]) x /= p;
        for (int row = 0; row < r; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rat f = a[row][col];
            for (int c = col; c <= r; ++c) a[row][c] -= f * a[col][c];
        }
    }
    std::vector<long long> d(r);
    for (int i = 0; i < r; ++i) {
        if (denominator(a[i][r]) != 1 || a[i][r] <= 0)
            throw VerificationError("affine kernel is not positive integral");
        d[i] = static_cast<long long>(numerator(a[i][r]));
    }
    return d;
}

long long inertia(DynkinType t) {
    long long s = 1;
    for (long long d : mckay_dims(t)) s += d * d;
    return s;
}

std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> a) {
    int n = static_cast<int>(a.size());
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (a[piv][col] == 0) ++piv;
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat p = a[col][col];
        for (auto& x : a[col]) x /= p;
        for (auto& x : inv[col]) x /= p;
        for (int row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rat f = a[row][col];
            for (int c = 0; c < n; ++c) {
                a[row][c] -= f * a[col][c];
                inv[row][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

struct SiteVector {
    long long e; // exponent contribution
    long long t; // rigid colength
    std::vector<long long> m;
};

// All m with e(m) = s (m.d) + b q(m) <= bound: shifted ellipsoid box plus an
// exact filter. The box comes from m_j + v_j bounded by R sqrt((C^-1)_jj)
// with v = (s/b) C^-1 d and R^2 = 2 bound / b + v^T C v.
std::vector<SiteVector> site_vectors(DynkinType t, long long s, long long b,
                                     long long bound) {
    int r = t.rank;
    auto C = cartan(t);
    auto Cinv = invert(C);
    auto d = mckay_dims(t);
    long long g = inertia(t);
    std::vector<Rat> v(r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) v[i] += Rat(s, b) * Cinv[i][j] * Rat(d[j]);
    Rat R2 = Rat(2 * bound, b);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) R2 += v[i] * C[i][j] * v[j];
    if (R2 < 0) return {};
    std::vector<long long> lo(r), hi(r);
    for (int j = 0; j < r; ++j) {
        Rat bound2 = R2 * Cinv[j][j];
        auto inside = [&](long long x) {
            Rat y = Rat(x) + v[j];
            return y * y <= bound2;
        };
        long long radius =
            1 + static_cast<long long>(std::sqrt(std::max(0.0, static_cast<double>(bound2))));
        long long l = -radius - 2;
        while (!inside(l) && l < radius) ++l;
        long long h = radius + 2;
        while (!inside(h) && h > -radius) --h;
        lo[j] = l;
        hi[j] = h;
        if (l > h) return {};
    }
    std::vector<SiteVector> out;
    std::vector<long long> m(lo);
    while (true) {
        Int twoq = 0;
        long long md = 0;
        for (int i = 0; i < r; ++i) {
            md += m[i] * d[i];
            for (int j = 0; j < r; ++j)
                twoq += Int(m[i]) * static_cast<long long>(numerator(C[i][j])) * m[j];
        }
        Int q = twoq / 2;
        Int e = Int(s) * md + Int(b) * q;
        if (e <= bound)
            out.push_back({static_cast<long long>(e),
                           md + static_cast<long long>(Int(g) * q), m});
        int i = 0;
        while (i < r && m[i] == hi[i]) m[i] = lo[i], ++i;
        if (i == r) break;
        ++m[i];
    }
    std::sort(out.begin(), out.end(),
              [](const SiteVector& a, const SiteVector& b2) { return a.e < b2.e; });
    return out;
}

struct Site {
    std::vector<SiteVector> vectors; // ascending e
    std::vector<int> weight;         // encoded gamma^t per vector (torsion runs)
};

std::vector<Site> build_sites(const GroupAction& action, long long bound,
                              bool torsion) {
    std::vector<Site> sites;
    auto points = action.config.expanded();
    for (size_t i = 0; i < points.size(); ++i) {
        long long g = inertia(points[i]);
        if (action.order % g != 0)
            throw VerificationError("inertia does not divide the group order");
        Site site;
        site.vectors = site_vectors(points[i], action.order / g, action.order, bound);
        if (torsion) {
            const auto& grp = *action.torsion;
            auto elems = grp.elements();
            std::map<FiniteAbelianGroup::Element, int> index;
            for (size_t k = 0; k < elems.size(); ++k) index[elems[k]] = static_cast<int>(k);
            for (const auto& vec : site.vectors)
                site.weight.push_back(index.at(grp.scale(vec.t, action.decorations[i])));
        }
        sites.push_back(std::move(site));
    }
    return sites;
}

// Depth-first tuple walk; tally[e] (or tally[e][gamma]) counts tuples with
// exponent sum e. Counts stay well inside 64 bits at the bounds used here;
// guarded anyway.
struct Tally {
    std::vector<std::vector<unsigned long long>> cells; // [e][gamma]
    unsigned long long total = 0;

    void hit(long long e, int gamma) {
        ++cells[static_cast<size_t>(e)][static_cast<size_t>(gamma)];
        if (++total >> 62)
            throw VerificationError("oracle tally overflow");
    }
};

void dfs(const std::vector<Site>& sites, size_t depth, long long rem, int gamma,
         const std::vector<std::vector<int>>& add, Tally& tally) {
    if (depth == sites.size()) {
        tally.hit(rem, gamma);
        return;
    }
    const Site& site = sites[depth];
    for (size_t i = 0; i < site.vectors.size(); ++i) {
        long long e = site.vectors[i].e;
        if (e > rem) break;
        int g2 = add.empty() ? 0 : add[static_cast<size_t>(gamma)][static_cast<size_t>(site.weight[i])];
        dfs(sites, depth + 1, rem - e, g2, add, tally);
    }
}

// The walk consumes budget downward; re-index so tally slot (bound - rem)
// becomes the exponent sum.
Tally run_tally(const GroupAction& action, long long bound, bool torsion) {
    auto sites = build_sites(action, bound, torsion);
    std::vector<std::vector<int>> add;
    size_t order = 1;
    if (torsion) {
        auto elems = action.torsion->elements();
        order = elems.size();
        add.assign(order, std::vector<int>(order));
        std::map<FiniteAbelianGroup::Element, int> index;
        for (size_t k = 0; k < elems.size(); ++k) index[elems[k]] = static_cast<int>(k);
        for (size_t a = 0; a < order; ++a)
            for (size_t b = 0; b < order; ++b)
                add[a][b] = index.at(action.torsion->add(elems[a], elems[b]));
    }
    Tally tally;
    tally.cells.assign(static_cast<size_t>(bound) + 1,
                       std::vector<unsigned long long>(order, 0));
    dfs(sites, 0, bound, 0, add, tally);
    // slot indexed by leftover budget; flip to exponent sums
    std::reverse(tally.cells.begin(), tally.cells.end());
    return tally;
}

long long target_exponent(const GroupAction& action, long long n, long long k) {
    if (n < 1) throw std::invalid_argument("direct_count: n must be >= 1");
    if (k < 0) throw std::invalid_argument("direct_count: k must be >= 0");
    return n - action.order * k;
}

} // namespace

std::vector<Int> direct_tally(const GroupAction& action, long long bound) {
    auto tally = run_tally(action, bound, false);
    std::vector<Int> out(tally.cells.size());
    for (size_t e = 0; e < tally.cells.size(); ++e) out[e] = tally.cells[e][0];
    return out;
}

std::vector<GroupRingElement> direct_tally_torsion(const GroupAction& action,
                                                   long long bound) {
    if (!action.kummer_enabled)
        throw UnknownKeyError("action '" + action.name + "' is not Kummer-enabled");
    auto tally = run_tally(action, bound, true);
    auto elems = action.torsion->elements();
    std::vector<GroupRingElement> out;
    for (const auto& row : tally.cells) {
        std::map<FiniteAbelianGroup::Element, Int> terms;
        for (size_t g = 0; g < elems.size(); ++g)
            if (row[g]) terms[elems[g]] = row[g];
        out.push_back(GroupRingElement::from_terms(*action.torsion, std::move(terms)));
    }
    return out;
}

Int direct_count(const GroupAction& action, long long n, long long k) {
    long long e = target_exponent(action, n, k);
    if (e < 0) return 0;
    return direct_tally(action, e).back();
}

GroupRingElement direct_count_torsion(const GroupAction& action, long long n,
                                      long long k) {
    long long e = target_exponent(action, n, k);
    if (e < 0) return {};
    return direct_tally_torsion(action, e).back();
}

std::vector<std::vector<std::vector<long long>>>
enumerate_invariants(const GroupAction& action, long long n, long long k) {
    long long target = target_exponent(action, n, k);
    std::vector<std::vector<std::vector<long long>>> out;
    if (target < 0) return out;
    auto sites = build_sites(action, target, false);
    std::vector<const SiteVector*> current(sites.size());
    auto walk = [&](auto&& self, size_t depth, long long rem) -> void {
        if (depth == sites.size()) {
            if (rem == 0) {
                std::vector<std::vector<long long>> tuple;
                for (auto* sv : current) tuple.push_back(sv->m);
                out.push_back(std::move(tuple));
            }
            return;
        }
        for (const auto& vec : sites[depth].vectors) {
            if (vec.e > rem) break;
            current[depth] = &vec;
            self(self, depth + 1, rem - vec.e);
        }
    };
    walk(walk, 0, target);
    return out;
}

PartitionProfile partition_profile(const std::vector<int>& partition, int a) {
    if (a < 2) throw std::invalid_argument("partition_profile: cyclic order must be >= 2");
    for (size_t i = 0; i + 1 < partition.size(); ++i)
        if (partition[i] < partition[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    PartitionProfile p;
    p.partition = partition;
    p.cyclic_order = a;
    p.weight_counts.assign(a, 0);
    for (size_t row = 0; row < partition.size(); ++row)
        for (int col = 0; col < partition[row]; ++col) {
            int w = static_cast<int>((col - static_cast<long long>(row)) % a);
            if (w < 0) w += a;
            ++p.weight_counts[w];
        }
    p.m_hat0 = p.weight_counts[0];
    for (int j = 1; j < a; ++j) p.m_vector.push_back(p.weight_counts[j] - p.weight_counts[0]);
    return p;
}

Int profile_norm(const std::vector<long long>& m, int a) {
    // A_{a-1} Cartan quadratic: sum m_j^2 - sum m_j m_{j+1}
    Int q = 0;
    for (size_t j = 0; j < m.size(); ++j) {
        q += Int(m[j]) * m[j];
        if (j + 1 < m.size()) q -= Int(m[j]) * m[j + 1];
    }
    (void)a;
    return q;
}

std::vector<std::vector<int>> partitions_of(long long l) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, long long rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = static_cast<int>(std::min<long long>(rest, maxpart)); part >= 1; --part) {
            cur.push_back(part);
            self(self, rest - part, part);
            cur.pop_back();
        }
    };
    if (l < 0) return out;
    rec(rec, l, static_cast<int>(l));
    return out;
}

std::vector<long long> local_rigid_counts(int a, long long max_colength) {
    if (a < 2 || max_colength < 0)
        throw std::invalid_argument("local_rigid_counts: bad arguments");
    DynkinType t('A', a - 1);
    // lattice route: t(m) = m.d + a q(m) = e(m) at scale 1, base a
    std::vector<long long> lattice_counts(max_colength + 1, 0);
    for (const auto& v : site_vectors(t, 1, a, max_colength))
        ++lattice_counts[static_cast<size_t>(v.t)];

    // partition route: rigid profiles (m_hat0 = q(m)), each realized once
    std::vector<long long> partition_counts(max_colength + 1, 0);
    for (long long l = 0; l <= max_colength; ++l) {
        std::map<std::vector<long long>, long long> seen;
        for (const auto& lam : partitions_of(l)) {
            auto prof = partition_profile(lam, a);
            if (Int(prof.m_hat0) == profile_norm(prof.m_vector, a))
                ++seen[prof.m_vector];
        }
        for (const auto& [m, count] : seen) {
            if (count != 1)
                throw VerificationError(
                    "rigid invariant realized by more than one partition at colength " +
                    std::to_string(l));
            ++partition_counts[static_cast<size_t>(l)];
        }
    }
    if (lattice_counts != partition_counts)
        throw VerificationError("rigid colength counts disagree between lattice and partition routes (a = " +
                                std::to_string(a) + ")");
    return lattice_counts;
}

namespace {

// number of a-tuples of partitions with total size k, for k <= kmax
std::vector<long long> tuple_partition_counts(int a, long long kmax) {
    std::vector<long long> single(kmax + 1, 0);
    for (long long k = 0; k <= kmax; ++k)
        single[static_cast<size_t>(k)] =
            static_cast<long long>(partitions_of(k).size());
    std::vector<long long> acc(kmax + 1, 0);
    acc[0] = 1;
    for (int copy = 0; copy < a; ++copy) {
        std::vector<long long> next(kmax + 1, 0);
        for (long long i = 0; i <= kmax; ++i)
            for (long long j = 0; i + j <= kmax; ++j)
                next[static_cast<size_t>(i + j)] +=
                    acc[static_cast<size_t>(i)] * single[static_cast<size_t>(j)];
        acc = std::move(next);
    }
    return acc;
}

} // namespace

ColoredCheckReport colored_partition_check(int a, long long l_max) {
    ColoredCheckReport report;
    auto tuples = tuple_partition_counts(a, l_max);
    for (long long l = 0; l <= l_max; ++l) {
        std::map<std::vector<long long>, long long> realized;
        std::map<std::vector<long long>, long long> hat0;
        for (const auto& lam : partitions_of(l)) {
            auto prof = partition_profile(lam, a);
            ++realized[prof.m_vector];
            hat0[prof.m_vector] = prof.m_hat0;
        }
        for (const auto& [m, count] : realized) {
            Int fiber = Int(hat0[m]) - profile_norm(m, a);
            long long expected =
                fiber < 0 ? 0
                          : tuples[static_cast<size_t>(static_cast<long long>(fiber))];
            if (count != expected) {
                report.pass = false;
                std::ostringstream os;
                os << "a=" << a << " l=" << l << " m=(";
                for (size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
                os << "): " << count << " partitions vs " << expected << " tuples";
                report.counterexample = os.str();
                return report;
            }
        }
    }
    return report;
}

} // namespace fixloci::oracle
