#include "fixloci/dynkin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fixloci {

DynkinType::DynkinType(char f, int r) : family(f), rank(r) {
    bool ok = (f == 'A' && r >= 1) || (f == 'D' && r >= 4) ||
              (f == 'E' && r >= 6 && r <= 8);
    if (!ok)
        throw std::invalid_argument("invalid Dynkin type " + std::string(1, f) +
                                    "_" + std::to_string(r));
}

DynkinType DynkinType::parse(std::string_view s) {
    if (s.size() < 3 || s[1] != '_')
        throw std::invalid_argument("bad Dynkin symbol: " + std::string(s));
    char fam = s[0];
    int rank = 0;
    for (size_t i = 2; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("bad Dynkin symbol: " + std::string(s));
        rank = rank * 10 + (s[i] - '0');
        if (rank > 1000)
            throw std::invalid_argument("bad Dynkin symbol: " + std::string(s));
    }
    return DynkinType(fam, rank);
}

std::string DynkinType::str() const {
    return std::string(1, family) + "_" + std::to_string(rank);
}

namespace {

// Node ordering convention: A_n is the path 1-2-...-n; D_n is the path
// 1-...-(n-2) with nodes n-1, n both adjacent to n-2; E_n is the path
// 1-...-(n-1) with node n adjacent to node 3.
std::vector<std::pair<int, int>> edges(DynkinType t) {
    std::vector<std::pair<int, int>> es;
    switch (t.family) {
    case 'A':
        for (int i = 0; i + 1 < t.rank; ++i) es.emplace_back(i, i + 1);
        break;
    case 'D':
        for (int i = 0; i + 1 < t.rank - 2; ++i) es.emplace_back(i, i + 1);
        es.emplace_back(t.rank - 3, t.rank - 2);
        es.emplace_back(t.rank - 3, t.rank - 1);
        break;
    case 'E':
        for (int i = 0; i + 1 < t.rank - 1; ++i) es.emplace_back(i, i + 1);
        es.emplace_back(2, t.rank - 1);
        break;
    }
    return es;
}

std::vector<int> mckay_dims(DynkinType t) {
    switch (t.family) {
    case 'A':
        return std::vector<int>(t.rank, 1);
    case 'D': {
        std::vector<int> d(t.rank, 2);
        d[0] = d[t.rank - 2] = d[t.rank - 1] = 1;
        return d;
    }
    case 'E':
        if (t.rank == 6) return {1, 2, 3, 2, 1, 2};
        if (t.rank == 7) return {2, 3, 4, 3, 2, 1, 2};
        return {2, 4, 6, 5, 4, 3, 2, 3};
    }
    throw std::logic_error("unreachable");
}

long long binary_group_order(DynkinType t) {
    switch (t.family) {
    case 'A': return t.rank + 1;
    case 'D': return 4LL * (t.rank - 2);
    case 'E': return t.rank == 6 ? 24 : t.rank == 7 ? 48 : 120;
    }
    throw std::logic_error("unreachable");
}

// Unit-upper-triangular factorization C = U^T D U of a positive definite
// integer matrix, so x^T C x = sum_i D_i (x_i + sum_{j>i} U_ij x_j)^2.
struct Factorization {
    std::vector<Rat> diag;
    std::vector<std::vector<Rat>> upper; // upper[i][j] defined for j > i
};

Factorization factor(const std::vector<std::vector<int>>& C) {
    int n = static_cast<int>(C.size());
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = C[i][j];
    Factorization f;
    f.diag.resize(n);
    f.upper.assign(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i) {
        f.diag[i] = a[i][i];
        if (f.diag[i] <= 0)
            throw std::logic_error("pairing is not definite");
        for (int j = i + 1; j < n; ++j) f.upper[i][j] = a[i][j] / f.diag[i];
        for (int r = i + 1; r < n; ++r)
            for (int c = r; c < n; ++c) {
                a[r][c] -= f.diag[i] * f.upper[i][r] * f.upper[i][c];
                a[c][r] = a[r][c];
            }
    }
    return f;
}

std::vector<std::vector<Rat>> invert(const std::vector<std::vector<int>>& C) {
    int n = static_cast<int>(C.size());
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = C[i][j];
        a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (a[piv][col] == 0) ++piv;
        std::swap(a[piv], a[col]);
        Rat p = a[col][col];
        for (auto& x : a[col]) x /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat fct = a[r][col];
            for (int c = 0; c < 2 * n; ++c) a[r][c] -= fct * a[col][c];
        }
    }
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

// Largest integer x with x + center <= sqrt(budget/scale), scale > 0,
// budget >= 0. Guess with doubles, then correct with exact comparisons
// (the predicate is monotone and true for all sufficiently negative x).
long long upper_root(const Rat& scale, const Rat& center, const Rat& budget) {
    auto below = [&](long long x) {
        Rat y = Rat(x) + center;
        return y <= 0 || scale * y * y <= budget;
    };
    double guess = std::sqrt(std::max(0.0, static_cast<double>(budget / scale))) -
                   static_cast<double>(center);
    long long x = static_cast<long long>(std::floor(guess));
    while (below(x + 1)) ++x;
    while (!below(x)) --x;
    return x;
}

long long lower_root(const Rat& scale, const Rat& center, const Rat& budget) {
    // smallest integer x with x + center >= -sqrt(budget/scale)
    return -upper_root(scale, -center, budget);
}

void check_pre(const RootLatticeData& L, long long scale, long long base,
               long long bound) {
    (void)L;
    if (scale < 1 || base < 1)
        throw std::invalid_argument("enumerate_vectors: scale and base must be positive");
    if (bound < 0)
        throw std::invalid_argument("enumerate_vectors: bound must be nonnegative");
}

void sort_vectors(std::vector<LatticeVector>& out) {
    std::sort(out.begin(), out.end(), [](const LatticeVector& a, const LatticeVector& b) {
        if (a.e != b.e) return a.e < b.e;
        return a.m < b.m;
    });
}

// Core: all m with scale*(m.d) + base*q(m) <= bound, scale >= 0, base >= 1.
// Completing the square, the set is the ellipsoid
//   ||m + v||_C^2 <= R^2,   v = (scale/base) C^{-1} d,
//   R^2 = 2*bound/base + v^T C v,
// which the factorization walks coordinate by coordinate from the last.
std::vector<LatticeVector> enumerate_core(const RootLatticeData& L,
                                          long long scale, long long base,
                                          long long bound) {
    const int n = L.rank();
    std::vector<std::vector<int>> C(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) C[i][j] = -L.gram[i][j];
    Factorization f = factor(C);
    auto Cinv = invert(C);

    std::vector<Rat> v(n);
    for (int i = 0; i < n; ++i) {
        Rat s = 0;
        for (int j = 0; j < n; ++j) s += Cinv[i][j] * L.dims[j];
        v[i] = s * Rat(scale, base);
    }
    Rat vCv = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) vCv += v[i] * Rat(C[i][j]) * v[j];
    Rat R2 = Rat(2 * bound, base) + vCv;

    std::vector<LatticeVector> out;
    std::vector<int> m(n);
    // rem[i]: budget left for coordinates 0..i
    std::vector<Rat> rem(n + 1);
    rem[n - 1 + 1] = R2;

    auto emit = [&]() {
        long long md = 0;
        Int q2 = 0; // m^T C m
        for (int i = 0; i < n; ++i) {
            md += static_cast<long long>(m[i]) * L.dims[i];
            for (int j = 0; j < n; ++j)
                q2 += Int(m[i]) * C[i][j] * m[j];
        }
        Int q = q2 / 2;
        Int e = Int(scale) * md + Int(base) * q;
        if (e > bound) return; // boundary slack from the rational shift
        LatticeVector lv;
        lv.m = m;
        lv.e = static_cast<long long>(e);
        lv.t = md + static_cast<long long>(Int(L.group_order) * q);
        out.push_back(std::move(lv));
    };

    // recurse from coordinate n-1 down to 0
    auto step = [&](auto&& self, int i) -> void {
        if (i < 0) {
            emit();
            return;
        }
        // center for coordinate i given m[i+1..n-1]
        Rat c = v[i];
        for (int j = i + 1; j < n; ++j) c += f.upper[i][j] * (Rat(m[j]) + v[j]);
        if (rem[i + 1] < 0) return;
        long long lo = lower_root(f.diag[i], c, rem[i + 1]);
        long long hi = upper_root(f.diag[i], c, rem[i + 1]);
        for (long long x = lo; x <= hi; ++x) {
            m[i] = static_cast<int>(x);
            Rat y = Rat(x) + c;
            rem[i] = rem[i + 1] - f.diag[i] * y * y;
            self(self, i - 1);
        }
    };
    step(step, n - 1);
    sort_vectors(out);
    return out;
}

} // namespace

RootLatticeData build_root_lattice(DynkinType t) {
    RootLatticeData L;
    L.dynkin = t;
    L.gram.assign(t.rank, std::vector<int>(t.rank, 0));
    for (int i = 0; i < t.rank; ++i) L.gram[i][i] = -2;
    for (auto [a, b] : edges(t)) L.gram[a][b] = L.gram[b][a] = 1;
    L.dims = mckay_dims(t);
    L.group_order = binary_group_order(t);
    return L;
}

Int norm(const RootLatticeData& L, std::span<const long long> m) {
    if (static_cast<int>(m.size()) != L.rank())
        throw std::invalid_argument("norm: vector length does not match rank");
    Int pairing = 0;
    for (int i = 0; i < L.rank(); ++i)
        for (int j = 0; j < L.rank(); ++j)
            pairing += Int(m[i]) * L.gram[i][j] * m[j];
    return -pairing / 2;
}

std::vector<LatticeVector> enumerate_vectors(const RootLatticeData& L,
                                             long long scale, long long base,
                                             long long bound) {
    check_pre(L, scale, base, bound);
    return enumerate_core(L, scale, base, bound);
}

std::vector<LatticeVector> enumerate_vectors_box(const RootLatticeData& L,
                                                 long long scale, long long base,
                                                 long long bound) {
    check_pre(L, scale, base, bound);
    const int n = L.rank();
    std::vector<std::vector<int>> C(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) C[i][j] = -L.gram[i][j];
    auto Cinv = invert(C);
    Rat dmax = 0;
    for (int i = 0; i < n; ++i) dmax = std::max(dmax, Cinv[i][i]);
    long long dsum = 0;
    for (int d : L.dims) dsum += d;
    // Any m with |m|_inf = B' satisfies
    //   e(m) >= base*B'^2/(2*dmax) - scale*dsum*B',
    // using m_j^2 <= (m^T C m) * (C^{-1})_jj. Take the smallest box radius B
    // whose entire exterior is excluded.
    long long B = 1;
    auto excluded = [&](long long Bp) {
        return Rat(base) * Bp * Bp / (2 * dmax) - Rat(scale) * dsum * Bp > bound;
    };
    while (!(excluded(B + 1) && Rat(B + 1) >= scale * dsum * dmax / base)) ++B;

    std::vector<LatticeVector> out;
    std::vector<int> m(n, static_cast<int>(-B));
    while (true) {
        long long md = 0;
        Int q2 = 0;
        for (int i = 0; i < n; ++i) {
            md += static_cast<long long>(m[i]) * L.dims[i];
            for (int j = 0; j < n; ++j) q2 += Int(m[i]) * C[i][j] * m[j];
        }
        Int q = q2 / 2;
        Int e = Int(scale) * md + Int(base) * q;
        if (e <= bound) {
            LatticeVector lv;
            lv.m = m;
            lv.e = static_cast<long long>(e);
            lv.t = md + static_cast<long long>(Int(L.group_order) * q);
            out.push_back(std::move(lv));
        }
        int i = 0;
        while (i < n && m[i] == B) m[i++] = static_cast<int>(-B);
        if (i == n) break;
        ++m[i];
    }
    sort_vectors(out);
    return out;
}

std::vector<std::vector<int>> enumerate_by_norm(const RootLatticeData& L,
                                                long long max_norm) {
    if (max_norm < 0) throw std::invalid_argument("enumerate_by_norm: negative bound");
    // q(m) <= Q is the scale=0 instance of the core with base 2, bound 2Q.
    RootLatticeData copy = L;
    auto vecs = enumerate_core(copy, 0, 2, 2 * max_norm);
    std::vector<std::vector<int>> out;
    out.reserve(vecs.size());
    for (auto& v : vecs) out.push_back(std::move(v.m));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace fixloci
