#pragma once

// Brute-force reference implementations. These deliberately take different
// routes than the main code paths (coordinate-box enumeration instead of the
// LDL^T recursion, d-subset hyperplane intersection instead of double
// description, facet-subset closure instead of the incidence walk) so they
// can serve as independent cross-checks for derived values.

#include "parvo/lattice.hpp"
#include "parvo/polytope.hpp"

#include <functional>
#include <set>

namespace parvo::oracle {

/// Per-coordinate integer bound for |x - c|^2 <= r2 via Cauchy-Schwarz with
/// the inverse Gram diagonal (Gershgorin-flavored rational estimate).
inline std::vector<long> box_bounds(const Lattice& lat, const Rat& r2) {
    auto inv = inverse(lat.gram());
    if (!inv) throw std::invalid_argument("gram not invertible");
    std::vector<long> out(static_cast<std::size_t>(lat.dim()));
    for (int i = 0; i < lat.dim(); ++i) {
        Rat bound_sq = r2 * (*inv)[i][i];
        Int ceilv = rat_ceil(bound_sq);
        Int root;
        mpz_sqrt(root.get_mpz_t(), ceilv.get_mpz_t());
        out[i] = root.get_si() + 1;
    }
    return out;
}

/// All lattice points in the ball, by scanning the full coordinate box.
inline std::vector<ZVec> points_in_ball(const Lattice& lat, const QVec& center, const Rat& r2) {
    if (r2 < 0) throw std::invalid_argument("negative radius");
    const int d = lat.dim();
    std::vector<long> half = box_bounds(lat, r2);
    std::vector<long> lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
        lo[i] = rat_floor(center[i]).get_si() - half[i];
        hi[i] = rat_ceil(center[i]).get_si() + half[i];
    }
    std::vector<ZVec> out;
    ZVec x(static_cast<std::size_t>(d));
    std::function<void(int)> walk = [&](int i) {
        if (i == d) {
            if (lat.dist2(x, center) <= r2) out.push_back(x);
            return;
        }
        for (long v = lo[i]; v <= hi[i]; ++v) {
            x[i] = v;
            walk(i + 1);
        }
    };
    walk(0);
    std::sort(out.begin(), out.end(), [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });
    return out;
}

/// Nearest lattice points to a rational point (the dual cell of the face
/// whose relative interior contains it).
inline std::vector<ZVec> nearest_points(const Lattice& lat, const QVec& p) {
    const int d = lat.dim();
    ZVec rounded(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) rounded[i] = rat_floor(p[i]).get_si();
    Rat r2 = lat.dist2(rounded, p);
    std::vector<ZVec> ball = oracle::points_in_ball(lat, p, r2);
    Rat best = r2;
    for (const ZVec& x : ball) best = std::min(best, lat.dist2(x, p));
    std::vector<ZVec> out;
    for (const ZVec& x : ball)
        if (lat.dist2(x, p) == best) out.push_back(x);
    return out;
}

/// Relevant vectors by the definition-level predicate: v is relevant iff the
/// only lattice points at minimal distance from v/2 are 0 and v.
inline std::vector<ZVec> relevant_vectors(const Lattice& lat) {
    const int d = lat.dim();
    Rat bound(0);
    for (std::uint32_t m = 1; m < (1u << d); ++m) {
        ZVec r(static_cast<std::size_t>(d), 0);
        for (int i = 0; i < d; ++i) r[i] = (m >> i) & 1u;
        bound = std::max(bound, lat.norm2(r));
    }
    std::vector<ZVec> out;
    const ZVec origin(static_cast<std::size_t>(d), 0);
    for (const ZVec& v : oracle::points_in_ball(lat, qvec_zero(d), bound)) {
        if (v == origin) continue;
        QVec mid(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) mid[i] = rat(v[i], 2);
        std::vector<ZVec> closest = nearest_points(lat, mid);
        std::vector<ZVec> want{origin, v};
        std::sort(want.begin(), want.end(), [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });
        if (closest == want) out.push_back(v);
    }
    std::sort(out.begin(), out.end(), [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });
    return out;
}

/// Vertices of an H-polytope by solving every d-subset of facet equalities.
/// Exponential; intended for d <= 4 cross-checks.
inline std::vector<QVec> vertices(int dim, const std::vector<HalfSpace>& hs) {
    std::vector<QVec> out;
    const int m = static_cast<int>(hs.size());
    std::vector<int> idx(static_cast<std::size_t>(dim));
    std::function<void(int, int)> choose = [&](int start, int k) {
        if (k == dim) {
            QMat a(static_cast<std::size_t>(dim));
            QVec b(static_cast<std::size_t>(dim));
            for (int i = 0; i < dim; ++i) {
                a[i] = hs[idx[i]].normal;
                b[i] = hs[idx[i]].offset;
            }
            if (rank(a) != dim) return;
            auto x = solve(a, b);
            if (!x) return;
            for (const HalfSpace& h : hs)
                if (dot(h.normal, *x) > h.offset) return;
            out.push_back(*x);
            return;
        }
        for (int i = start; i <= m - (dim - k); ++i) {
            idx[k] = i;
            choose(i + 1, k + 1);
        }
    };
    choose(0, 0);
    std::sort(out.begin(), out.end(), [](const QVec& a, const QVec& b) { return lex_less(a, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// f-vector by facet-subset closure: every face is the set of vertices lying
/// on some subset of facets. Exponential in the facet count; 3D scale only.
inline std::vector<long> fvector(const Polytope& p) {
    const int m = p.facet_count();
    if (m > 20) throw std::invalid_argument("fvector oracle: too many facets");
    std::set<std::vector<int>> seen;
    std::vector<long> f(static_cast<std::size_t>(p.dim), 0);
    for (std::uint32_t s = 1; s < (1u << m); ++s) {
        DynBitset verts = DynBitset::zeros(p.vertex_count());
        for (int i = 0; i < p.vertex_count(); ++i) verts.set(i);
        for (int g = 0; g < m; ++g)
            if ((s >> g) & 1u) verts = verts & p.facet_vertices[g];
        if (!verts.any()) continue;
        std::vector<int> ids = verts.indices();
        if (!seen.insert(ids).second) continue;
        std::vector<QVec> pts;
        for (int id : ids) pts.push_back(p.vertices[id]);
        int dim = affine_rank(pts);
        if (dim < p.dim) ++f[static_cast<std::size_t>(dim)];
    }
    return f;
}

}  // namespace parvo::oracle
