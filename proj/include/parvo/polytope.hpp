#pragma once

// Exact convex polytopes: vertex enumeration by double description on the
// homogenization cone, face lattice construction from vertex/facet incidence,
// Minkowski-Venkov checks, codimension-2 projections, and Minkowski sums with
// a segment. Voronoi cells are massively degenerate, so everything is driven
// by incidence sets, never by general-position assumptions.

#include "parvo/linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace parvo {

/// Small dynamic bitset used for vertex sets and facet masks.
struct DynBitset {
    std::vector<std::uint64_t> w;

    static DynBitset zeros(int n) {
        DynBitset b;
        b.w.assign(static_cast<std::size_t>((n + 63) / 64), 0);
        return b;
    }
    void set(int i) { w[static_cast<std::size_t>(i) / 64] |= (1ull << (i % 64)); }
    bool test(int i) const { return (w[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1ull; }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
    DynBitset operator&(const DynBitset& o) const {
        DynBitset r;
        r.w.resize(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
    DynBitset operator|(const DynBitset& o) const {
        DynBitset r;
        r.w.resize(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) r.w[i] = w[i] | o.w[i];
        return r;
    }
    bool is_subset_of(const DynBitset& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    bool operator==(const DynBitset& o) const { return w == o.w; }
    bool operator!=(const DynBitset& o) const { return w != o.w; }
    bool operator<(const DynBitset& o) const { return w < o.w; }
    std::vector<int> indices() const {
        std::vector<int> out;
        for (std::size_t k = 0; k < w.size(); ++k) {
            std::uint64_t x = w[k];
            while (x) {
                int b = __builtin_ctzll(x);
                out.push_back(static_cast<int>(k) * 64 + b);
                x &= x - 1;
            }
        }
        return out;
    }
};

/// Halfspace {x : normal . x <= offset}.
struct HalfSpace {
    QVec normal;
    Rat offset;
};

/// Scale so the first nonzero normal entry is +-1 (positive factor only,
/// inequality direction preserved). Canonical form for dedup.
inline HalfSpace canonical_halfspace(HalfSpace h) {
    for (const Rat& x : h.normal) {
        if (x == 0) continue;
        Rat f = abs(x);
        for (Rat& y : h.normal) y /= f;
        h.offset /= f;
        return h;
    }
    throw std::invalid_argument("halfspace with zero normal");
}

namespace detail {

// Double description on the cone {(x,t) : a_i.x - b_i t <= 0, -t <= 0}.
// Extreme rays with t > 0 are vertices x/t; a ray with t = 0 witnesses an
// unbounded direction. Adjacency of rays is decided combinatorially from
// zero sets, which stays exact under heavy degeneracy.
class ConeDD {
public:
    ConeDD(int dim, const std::vector<HalfSpace>& hs) : d_(dim) {
        for (const HalfSpace& h : hs) {
            QVec r = h.normal;
            r.push_back(-h.offset);
            rows_.push_back(std::move(r));
        }
        QVec guard = qvec_zero(d_ + 1);
        guard[d_] = -1;
        rows_.push_back(std::move(guard));
    }

    std::vector<QVec> vertices() {
        run();
        std::vector<QVec> out;
        for (const Ray& r : rays_) {
            if (r.z[d_] == 0)
                throw std::invalid_argument("polyhedron is unbounded");
            QVec v(static_cast<std::size_t>(d_));
            for (int i = 0; i < d_; ++i) v[i] = r.z[i] / r.z[d_];
            out.push_back(std::move(v));
        }
        std::sort(out.begin(), out.end(), [](const QVec& a, const QVec& b) { return lex_less(a, b); });
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

private:
    struct Ray {
        QVec z;
        DynBitset zero;  // indexed by row id, meaningful for processed rows
    };

    static void canonicalize(QVec& z) {
        for (const Rat& x : z) {
            if (x == 0) continue;
            Rat f = abs(x);
            for (Rat& y : z) y /= f;
            return;
        }
    }

    void run() {
        const int m = static_cast<int>(rows_.size());
        // initial simplicial cone from d+1 independent rows
        EchelonBasis eb(d_ + 1);
        std::vector<int> basis;
        std::vector<bool> in_basis(rows_.size(), false);
        for (int i = 0; i < m && static_cast<int>(basis.size()) < d_ + 1; ++i) {
            if (eb.insert(rows_[i])) {
                basis.push_back(i);
                in_basis[i] = true;
            }
        }
        if (static_cast<int>(basis.size()) < d_ + 1)
            throw std::invalid_argument("degenerate system: constraints do not span");
        QMat rb(basis.size(), QVec(static_cast<std::size_t>(d_ + 1)));
        for (std::size_t i = 0; i < basis.size(); ++i) rb[i] = rows_[basis[i]];
        auto inv = inverse(rb);
        // rays: columns of -rb^{-1}; ray j is zero on every basis row but j
        for (int j = 0; j <= d_; ++j) {
            Ray r;
            r.z.resize(static_cast<std::size_t>(d_ + 1));
            for (int i = 0; i <= d_; ++i) r.z[i] = -(*inv)[i][j];
            canonicalize(r.z);
            r.zero = DynBitset::zeros(m);
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (static_cast<int>(i) != j) r.zero.set(basis[i]);
            rays_.push_back(std::move(r));
        }
        for (int k = 0; k < m; ++k) {
            if (!in_basis[k]) insert_row(k);
        }
    }

    void insert_row(int k) {
        const QVec& r = rows_[k];
        std::vector<Rat> s(rays_.size());
        std::vector<int> pos, neg, zer;
        for (std::size_t i = 0; i < rays_.size(); ++i) {
            s[i] = dot(r, rays_[i].z);
            int sg = sgn(s[i]);
            if (sg > 0)
                pos.push_back(static_cast<int>(i));
            else if (sg < 0)
                neg.push_back(static_cast<int>(i));
            else
                zer.push_back(static_cast<int>(i));
        }
        if (pos.empty()) {  // row redundant so far; just extend zero sets
            for (int i : zer) rays_[i].zero.set(k);
            return;
        }
        // new rays from adjacent (pos, neg) pairs, built before any moves
        std::vector<Ray> fresh;
        for (int ip : pos) {
            for (int in : neg) {
                DynBitset common = rays_[ip].zero & rays_[in].zero;
                if (common.count() < d_ - 1) continue;
                if (!adjacent(ip, in, common)) continue;
                Ray w;
                w.z.resize(static_cast<std::size_t>(d_ + 1));
                for (int c = 0; c <= d_; ++c)
                    w.z[c] = s[ip] * rays_[in].z[c] - s[in] * rays_[ip].z[c];
                canonicalize(w.z);
                w.zero = common;
                w.zero.set(k);
                fresh.push_back(std::move(w));
            }
        }
        std::vector<Ray> next;
        next.reserve(neg.size() + zer.size() + fresh.size());
        for (int i : neg) next.push_back(std::move(rays_[i]));
        for (int i : zer) {
            rays_[i].zero.set(k);
            next.push_back(std::move(rays_[i]));
        }
        for (Ray& w : fresh) next.push_back(std::move(w));
        rays_ = std::move(next);
    }

    bool adjacent(int u, int v, const DynBitset& common) const {
        for (std::size_t i = 0; i < rays_.size(); ++i) {
            if (static_cast<int>(i) == u || static_cast<int>(i) == v) continue;
            if (common.is_subset_of(rays_[i].zero)) return false;
        }
        return true;
    }

    int d_;
    QMat rows_;
    std::vector<Ray> rays_;
};

}  // namespace detail

/// Exact vertex enumeration of a bounded H-polytope; throws when the input
/// is unbounded or does not span.
inline std::vector<QVec> enumerate_vertices(int dim, const std::vector<HalfSpace>& hs) {
    return detail::ConeDD(dim, hs).vertices();
}

enum class ProjectionKind { Parallelogram, CSHexagon, Other };

inline std::string to_string(ProjectionKind k) {
    switch (k) {
        case ProjectionKind::Parallelogram: return "Parallelogram";
        case ProjectionKind::CSHexagon: return "CSHexagon";
        default: return "Other";
    }
}

/// Center of point symmetry of a finite point set, when it exists.
inline std::optional<QVec> symmetry_center(const std::vector<QVec>& pts) {
    if (pts.empty()) return std::nullopt;
    QVec c = qvec_zero(static_cast<int>(pts[0].size()));
    for (const QVec& p : pts) c = qvec_add(c, p);
    Rat inv = Rat(1) / Rat(static_cast<long>(pts.size()));
    for (Rat& x : c) x *= inv;
    std::vector<QVec> sorted = pts;
    auto lex = [](const QVec& a, const QVec& b) { return lex_less(a, b); };
    std::sort(sorted.begin(), sorted.end(), lex);
    std::vector<QVec> mirrored;
    mirrored.reserve(pts.size());
    QVec c2 = qvec_scale(Rat(2), c);
    for (const QVec& p : sorted) mirrored.push_back(qvec_sub(c2, p));
    std::sort(mirrored.begin(), mirrored.end(), lex);
    if (mirrored == sorted) return c;
    return std::nullopt;
}

/// Strictly convex hull of 2D rational points, counterclockwise, collinear
/// points dropped.
inline std::vector<QVec> convex_hull_2d(std::vector<QVec> pts) {
    std::sort(pts.begin(), pts.end(), [](const QVec& a, const QVec& b) { return lex_less(a, b); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    auto cross = [](const QVec& o, const QVec& a, const QVec& b) -> Rat {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<QVec> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

/// Polygon classification used by the codimension-2 condition.
inline ProjectionKind classify_polygon(const std::vector<QVec>& hull) {
    const std::size_t n = hull.size();
    if (n != 4 && n != 6) return ProjectionKind::Other;
    // convex polygon is centrally symmetric iff opposite vertices share a sum
    QVec sum0 = qvec_add(hull[0], hull[n / 2]);
    for (std::size_t i = 1; i < n / 2; ++i)
        if (qvec_add(hull[i], hull[i + n / 2]) != sum0) return ProjectionKind::Other;
    return n == 4 ? ProjectionKind::Parallelogram : ProjectionKind::CSHexagon;
}

class Polytope {
public:
    struct Face {
        std::vector<int> vertex_ids;  // sorted
        DynBitset verts;
        DynBitset facet_mask;  // facets whose vertex set contains this face
        int dim = -1;
    };

    int dim = 0;
    std::vector<HalfSpace> facets;            // canonical, one per geometric facet
    std::vector<QVec> vertices;               // lex sorted
    std::vector<DynBitset> facet_vertices;    // per facet

    static Polytope from_halfspaces(int dim, const std::vector<HalfSpace>& hs) {
        std::vector<QVec> verts = enumerate_vertices(dim, hs);
        return assemble(dim, hs, std::move(verts));
    }

    /// Convex hull: facets via the polar dual, input points filtered down to
    /// the actual vertex set. The hull must be full-dimensional.
    static Polytope from_points(int dim, std::vector<QVec> pts) {
        std::sort(pts.begin(), pts.end(), [](const QVec& a, const QVec& b) { return lex_less(a, b); });
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (affine_rank(pts) < dim)
            throw std::invalid_argument("point set is not full-dimensional");
        QVec c = qvec_zero(dim);
        for (const QVec& p : pts) c = qvec_add(c, p);
        Rat inv = Rat(1) / Rat(static_cast<long>(pts.size()));
        for (Rat& x : c) x *= inv;  // centroid: interior point of the hull
        std::vector<HalfSpace> polar;
        polar.reserve(pts.size());
        for (const QVec& p : pts) polar.push_back({qvec_sub(p, c), Rat(1)});
        std::vector<QVec> polar_verts = enumerate_vertices(dim, polar);
        std::vector<HalfSpace> hs;
        hs.reserve(polar_verts.size());
        for (const QVec& y : polar_verts) hs.push_back({y, Rat(1) + dot(y, c)});
        // keep only the points that are vertices of the hull
        std::vector<QVec> corners;
        for (const QVec& p : pts) {
            QMat active;
            for (const HalfSpace& h : hs)
                if (dot(h.normal, p) == h.offset) active.push_back(h.normal);
            if (rank(active) == dim) corners.push_back(p);
        }
        return assemble(dim, hs, std::move(corners));
    }

    /// Builds from a trusted H+V pair (verifies consistency, throws if bad).
    static Polytope from_hv(int dim, const std::vector<HalfSpace>& hs, std::vector<QVec> verts) {
        std::sort(verts.begin(), verts.end(),
                  [](const QVec& a, const QVec& b) { return lex_less(a, b); });
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        return assemble(dim, hs, std::move(verts));
    }

    int facet_count() const { return static_cast<int>(facets.size()); }
    int vertex_count() const { return static_cast<int>(vertices.size()); }

    std::vector<QVec> face_points(const Face& f) const {
        std::vector<QVec> out;
        out.reserve(f.vertex_ids.size());
        for (int id : f.vertex_ids) out.push_back(vertices[id]);
        return out;
    }

    /// Codimension-2 faces as facet-pair intersections (no full lattice needed).
    struct Ridge {
        std::vector<int> vertex_ids;
        int facet_a, facet_b;
    };
    std::vector<Ridge> ridges() const {
        std::vector<Ridge> out;
        std::map<DynBitset, int> seen;
        for (int i = 0; i < facet_count(); ++i) {
            for (int j = i + 1; j < facet_count(); ++j) {
                DynBitset common = facet_vertices[i] & facet_vertices[j];
                if (!common.any() || seen.count(common)) continue;
                std::vector<int> ids = common.indices();
                std::vector<QVec> pts;
                pts.reserve(ids.size());
                for (int id : ids) pts.push_back(vertices[id]);
                if (affine_rank(pts, dim - 1) == dim - 2) {
                    seen[common] = 1;
                    out.push_back({std::move(ids), i, j});
                }
            }
        }
        return out;
    }

    // ---- face lattice ----

    const std::vector<std::vector<Face>>& face_lattice() const {
        ensure_face_lattice();
        return faces_by_dim_;
    }

    /// f_k for k = 0..dim-1 (proper faces).
    std::vector<long> fvector() const {
        ensure_face_lattice();
        std::vector<long> f;
        for (int k = 0; k < dim; ++k) f.push_back(static_cast<long>(faces_by_dim_[k].size()));
        return f;
    }

    /// Projection of the whole polytope along the span of a codim-2 face.
    /// Returns the classification plus the projected polygon.
    std::pair<ProjectionKind, std::vector<QVec>> project_codim2(
        const std::vector<int>& face_vertex_ids) const {
        std::vector<QVec> fp;
        fp.reserve(face_vertex_ids.size());
        for (int id : face_vertex_ids) fp.push_back(vertices[id]);
        if (affine_rank(fp) != dim - 2)
            throw std::invalid_argument("project_codim2: face has wrong codimension");
        QMat pi;  // two independent functionals vanishing on the face directions
        if (fp.size() == 1) {
            pi = qmat_identity(dim);  // dim == 2, point face
        } else {
            QMat dirs;
            for (std::size_t i = 1; i < fp.size(); ++i) dirs.push_back(qvec_sub(fp[i], fp[0]));
            pi = kernel(dirs);
        }
        if (pi.size() != 2)
            throw std::runtime_error("project_codim2: complement is not two-dimensional");
        std::vector<QVec> proj;
        proj.reserve(vertices.size());
        for (const QVec& v : vertices) proj.push_back(QVec{dot(pi[0], v), dot(pi[1], v)});
        std::vector<QVec> hull = convex_hull_2d(std::move(proj));
        return {classify_polygon(hull), hull};
    }

    bool contains(const QVec& x) const {
        for (const HalfSpace& h : facets)
            if (dot(h.normal, x) > h.offset) return false;
        return true;
    }

private:
    static Polytope assemble(int dim, const std::vector<HalfSpace>& hs_in,
                             std::vector<QVec> verts) {
        Polytope p;
        p.dim = dim;
        p.vertices = std::move(verts);
        if (p.vertices.empty()) throw std::invalid_argument("empty polytope");
        // canonical halfspaces, dedupe
        std::vector<HalfSpace> hs;
        std::map<std::pair<QVec, Rat>, int> seen;
        for (const HalfSpace& h : hs_in) {
            HalfSpace c = canonical_halfspace(h);
            auto key = std::make_pair(c.normal, c.offset);
            if (seen.emplace(key, 1).second) hs.push_back(std::move(c));
        }
        const int nv = p.vertex_count();
        for (const HalfSpace& h : hs) {
            DynBitset active = DynBitset::zeros(nv);
            bool ok = true;
            for (int i = 0; i < nv; ++i) {
                Rat val = dot(h.normal, p.vertices[i]);
                if (val > h.offset) {
                    ok = false;
                    break;
                }
                if (val == h.offset) active.set(i);
            }
            if (!ok) throw std::invalid_argument("vertex violates a halfspace");
            // keep only genuine facets
            std::vector<QVec> pts;
            for (int id : active.indices()) pts.push_back(p.vertices[id]);
            if (!pts.empty() && affine_rank(pts, dim - 1) == dim - 1) {
                p.facets.push_back(h);
                p.facet_vertices.push_back(std::move(active));
            }
        }
        // every vertex must be a true vertex: active facet normals span
        for (int i = 0; i < nv; ++i) {
            QMat normals;
            for (int f = 0; f < p.facet_count(); ++f)
                if (p.facet_vertices[f].test(i)) normals.push_back(p.facets[f].normal);
            if (rank(normals) != dim)
                throw std::invalid_argument("point " + to_string(p.vertices[i]) +
                                            " is not a vertex of the polytope");
        }
        return p;
    }

    void ensure_face_lattice() const {
        if (!faces_by_dim_.empty()) return;
        const int nv = vertex_count();
        std::map<DynBitset, int> seen;
        std::vector<Face> all;
        DynBitset top = DynBitset::zeros(nv);
        for (int i = 0; i < nv; ++i) top.set(i);
        std::vector<DynBitset> queue{top};
        seen[top] = 0;
        all.push_back(Face{});
        all.back().verts = top;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            DynBitset cur = queue[qi];
            for (int f = 0; f < facet_count(); ++f) {
                DynBitset h = cur & facet_vertices[f];
                if (!h.any() || h == cur) continue;
                if (seen.emplace(h, static_cast<int>(all.size())).second) {
                    Face face;
                    face.verts = h;
                    all.push_back(std::move(face));
                    queue.push_back(h);
                }
            }
        }
        for (Face& f : all) {
            f.vertex_ids = f.verts.indices();
            std::vector<QVec> pts;
            pts.reserve(f.vertex_ids.size());
            for (int id : f.vertex_ids) pts.push_back(vertices[id]);
            f.dim = affine_rank(pts);
            f.facet_mask = DynBitset::zeros(facet_count());
            for (int g = 0; g < facet_count(); ++g)
                if (f.verts.is_subset_of(facet_vertices[g])) f.facet_mask.set(g);
        }
        faces_by_dim_.assign(static_cast<std::size_t>(dim) + 1, {});
        for (Face& f : all) faces_by_dim_[static_cast<std::size_t>(f.dim)].push_back(std::move(f));
        for (auto& level : faces_by_dim_)
            std::sort(level.begin(), level.end(),
                      [](const Face& a, const Face& b) { return a.vertex_ids < b.vertex_ids; });
    }

    mutable std::vector<std::vector<Face>> faces_by_dim_;
};

/// Minkowski-Venkov conditions: central symmetry of the body, of every facet,
/// and the parallelogram / centrally-symmetric-hexagon projection condition
/// for every codimension-2 face.
struct MvReport {
    bool pass = true;
    int failed_condition = 0;  // 1, 2 or 3 when failing
    std::string witness;
};

inline MvReport check_minkowski_venkov(const Polytope& p) {
    MvReport r;
    if (!symmetry_center(p.vertices)) {
        r.pass = false;
        r.failed_condition = 1;
        r.witness = "polytope is not centrally symmetric";
        return r;
    }
    for (int f = 0; f < p.facet_count(); ++f) {
        std::vector<QVec> pts;
        for (int id : p.facet_vertices[f].indices()) pts.push_back(p.vertices[id]);
        if (!symmetry_center(pts)) {
            r.pass = false;
            r.failed_condition = 2;
            r.witness = "facet " + std::to_string(f) + " is not centrally symmetric";
            return r;
        }
    }
    for (const Polytope::Ridge& ridge : p.ridges()) {
        auto [kind, hull] = p.project_codim2(ridge.vertex_ids);
        if (kind == ProjectionKind::Other) {
            r.pass = false;
            r.failed_condition = 3;
            r.witness = "projection along face of facets (" + std::to_string(ridge.facet_a) +
                        "," + std::to_string(ridge.facet_b) + ") is a " +
                        std::to_string(hull.size()) + "-gon, not a parallelogram or cs-hexagon";
            return r;
        }
    }
    return r;
}

/// Exact Minkowski sum P + [-w, +w]. Facets of the sum are the shifted facets
/// of P plus, for every codim-2 face whose two facet normals see w with
/// opposite signs, the unique supporting halfspace orthogonal to w through
/// that face. Vertices are v+-w by the sign of the normal cone at v.
inline Polytope minkowski_with_segment(const Polytope& p, const QVec& w) {
    if (is_zero(w)) throw std::invalid_argument("minkowski_with_segment: zero direction");
    std::vector<HalfSpace> hs;
    std::vector<Rat> side(p.facet_count());
    for (int f = 0; f < p.facet_count(); ++f) {
        side[f] = dot(p.facets[f].normal, w);
        hs.push_back({p.facets[f].normal, p.facets[f].offset + abs(side[f])});
    }
    for (const Polytope::Ridge& ridge : p.ridges()) {
        const Rat& si = side[ridge.facet_a];
        const Rat& sj = side[ridge.facet_b];
        if (sgn(si) * sgn(sj) >= 0) continue;
        int a = ridge.facet_a, b = ridge.facet_b;
        Rat sa = si, sb = sj;
        if (sgn(sa) < 0) {
            std::swap(a, b);
            std::swap(sa, sb);
        }
        // n = (-sb) n_a + sa n_b with both coefficients positive, n.w = 0
        QVec n = qvec_add(qvec_scale(-sb, p.facets[a].normal), qvec_scale(sa, p.facets[b].normal));
        Rat off = (-sb) * p.facets[a].offset + sa * p.facets[b].offset;
        hs.push_back({std::move(n), std::move(off)});
    }
    std::vector<QVec> verts;
    for (int i = 0; i < p.vertex_count(); ++i) {
        bool plus = false, minus = false;
        for (int f = 0; f < p.facet_count(); ++f) {
            if (!p.facet_vertices[f].test(i)) continue;
            int sg = sgn(side[f]);
            if (sg > 0) plus = true;
            if (sg < 0) minus = true;
        }
        if (!plus && !minus)
            throw std::invalid_argument("degenerate segment sum: direction in every facet at a vertex");
        if (plus) verts.push_back(qvec_add(p.vertices[i], w));
        if (minus) verts.push_back(qvec_sub(p.vertices[i], w));
    }
    return Polytope::from_hv(p.dim, hs, std::move(verts));
}

/// Image of P under the projection along direction v (exact rational
/// complement, dimension d-1).
inline Polytope project_along(const Polytope& p, const QVec& v) {
    if (is_zero(v)) throw std::invalid_argument("project_along: zero direction");
    QMat pi = kernel(QMat{v});
    if (static_cast<int>(pi.size()) != p.dim - 1)
        throw std::runtime_error("project_along: bad complement dimension");
    std::vector<QVec> pts;
    pts.reserve(p.vertices.size());
    for (const QVec& u : p.vertices) {
        QVec q(pi.size());
        for (std::size_t i = 0; i < pi.size(); ++i) q[i] = dot(pi[i], u);
        pts.push_back(std::move(q));
    }
    return Polytope::from_points(p.dim - 1, std::move(pts));
}

}  // namespace parvo
