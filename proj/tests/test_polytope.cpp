#include <catch2/catch_amalgamated.hpp>

#include "parvo/catalog.hpp"
#include "parvo/oracle.hpp"
#include "parvo/voronoi_cell.hpp"

using namespace parvo;

namespace {
Polytope cell_of(const std::string& name) {
    return build_voronoi_cell(catalog_lookup(name)).poly;
}

/// Regular octahedron |x|+|y|+|z| <= 1 as a raw H-polytope (not a parallelohedron).
Polytope octahedron() {
    std::vector<HalfSpace> hs;
    for (int sx : {-1, 1})
        for (int sy : {-1, 1})
            for (int sz : {-1, 1}) hs.push_back({QVec{rat(sx), rat(sy), rat(sz)}, rat(1)});
    return Polytope::from_halfspaces(3, hs);
}
}  // namespace

TEST_CASE("cube of Z3") {
    Polytope p = cell_of("Z3");
    CHECK(p.facet_count() == 6);
    REQUIRE(p.vertex_count() == 8);
    for (const QVec& v : p.vertices)
        for (const Rat& c : v) CHECK(abs(c) == rat(1, 2));
    CHECK(p.fvector() == std::vector<long>({8, 12, 6}));
}

TEST_CASE("rhombic dodecahedron of D3") {
    Polytope p = cell_of("D3");
    CHECK(p.facet_count() == 12);
    CHECK(p.fvector() == std::vector<long>({14, 24, 12}));
}

TEST_CASE("truncated octahedron of D3*") {
    Polytope p = cell_of("D3*");
    CHECK(p.facet_count() == 14);
    CHECK(p.vertex_count() == 24);
    CHECK(p.fvector() == std::vector<long>({24, 36, 14}));
}

TEST_CASE("hexagon of A2") {
    Polytope p = cell_of("A2");
    CHECK(p.facet_count() == 6);
    CHECK(p.vertex_count() == 6);
}

TEST_CASE("elongated dodecahedron of ED3") {
    Polytope p = cell_of("ED3");
    CHECK(p.facet_count() == 12);
    CHECK(p.fvector() == std::vector<long>({18, 28, 12}));
}

TEST_CASE("vertex enumeration matches the d-subset oracle") {
    for (const char* name : {"Z2", "A2", "Z3", "A3", "D3", "D3*", "A3*", "ED3", "A2+Z"}) {
        CAPTURE(name);
        VoronoiCell cell = build_voronoi_cell(catalog_lookup(name));
        std::vector<HalfSpace> hs;
        for (const ZVec& t : cell.facet_vectors)
            hs.push_back(bisector_halfspace(cell.lattice, t));
        CHECK(cell.poly.vertices == oracle::vertices(cell.dim(), hs));
    }
}

TEST_CASE("face lattice matches the facet-subset oracle") {
    for (const char* name : {"Z3", "D3", "D3*", "ED3", "A2+Z", "A2"}) {
        CAPTURE(name);
        Polytope p = cell_of(name);
        CHECK(p.fvector() == oracle::fvector(p));
    }
}

TEST_CASE("Euler relation holds") {
    for (const Lattice& l : catalog()) {
        if (l.dim() > 4) continue;
        CAPTURE(l.name());
        Polytope p = build_voronoi_cell(l).poly;
        long euler = 0;
        int sign = 1;
        for (long f : p.fvector()) {
            euler += sign * f;
            sign = -sign;
        }
        CHECK(euler == 1 + ((l.dim() % 2 == 0) ? -1 : 1));
    }
}

TEST_CASE("facet vector midpoints lie on their facets") {
    for (const char* name : {"Z3", "A3", "D3*", "ED3", "A4"}) {
        CAPTURE(name);
        VoronoiCell cell = build_voronoi_cell(catalog_lookup(name));
        for (std::size_t i = 0; i < cell.facet_vectors.size(); ++i) {
            QVec mid = to_qvec(cell.facet_vectors[i]);
            for (Rat& c : mid) c /= 2;
            CHECK(cell.poly.contains(mid));
            CHECK(dot(cell.poly.facets[i].normal, mid) == cell.poly.facets[i].offset);
        }
    }
}

TEST_CASE("gradedness: face dimension = d - rank of active normals") {
    Polytope p = cell_of("D3*");
    const auto& lattice = p.face_lattice();
    for (int k = 0; k <= p.dim; ++k) {
        for (const Polytope::Face& f : lattice[static_cast<std::size_t>(k)]) {
            QMat normals;
            for (int g : f.facet_mask.indices()) normals.push_back(p.facets[g].normal);
            CHECK(k == p.dim - rank(normals));
            // closure property: vertices on all active facets are exactly the face
            DynBitset closure = DynBitset::zeros(p.vertex_count());
            for (int i = 0; i < p.vertex_count(); ++i) closure.set(i);
            for (int g : f.facet_mask.indices()) closure = closure & p.facet_vertices[g];
            if (k < p.dim) CHECK(closure == f.verts);
        }
    }
}

TEST_CASE("codimension-2 projections classify correctly") {
    SECTION("any edge of the cube projects to a square") {
        Polytope p = cell_of("Z3");
        for (const auto& ridge : p.ridges())
            CHECK(p.project_codim2(ridge.vertex_ids).first == ProjectionKind::Parallelogram);
    }
    SECTION("every codim-2 face of the truncated octahedron gives a cs-hexagon") {
        Polytope p = cell_of("D3*");
        for (const auto& ridge : p.ridges())
            CHECK(p.project_codim2(ridge.vertex_ids).first == ProjectionKind::CSHexagon);
    }
    SECTION("hexagonal prism mixes both kinds") {
        Polytope p = cell_of("A2+Z");
        int pgram = 0, hex = 0;
        for (const auto& ridge : p.ridges()) {
            auto kind = p.project_codim2(ridge.vertex_ids).first;
            if (kind == ProjectionKind::Parallelogram) ++pgram;
            if (kind == ProjectionKind::CSHexagon) ++hex;
        }
        // 6 vertical edges are hexagonal, 12 cap edges are parallelogram
        CHECK(hex == 6);
        CHECK(pgram == 12);
    }
    SECTION("wrong codimension is rejected") {
        Polytope p = cell_of("Z3");
        std::vector<int> facet_ids = p.facet_vertices[0].indices();
        CHECK_THROWS_AS(p.project_codim2(facet_ids), std::invalid_argument);
    }
}

TEST_CASE("Minkowski-Venkov checks") {
    for (const char* name : {"Z2", "A2", "Z3", "A3", "D3", "D3*", "A3*", "ED3", "A2+Z"}) {
        CAPTURE(name);
        CHECK(check_minkowski_venkov(cell_of(name)).pass);
    }
    MvReport bad = check_minkowski_venkov(octahedron());
    CHECK(!bad.pass);
    CHECK(bad.failed_condition == 2);  // triangular facets
}

TEST_CASE("symmetry centers") {
    Polytope cube = cell_of("Z3");
    auto c = symmetry_center(cube.vertices);
    REQUIRE(c);
    CHECK(is_zero(*c));
    // every facet of a catalog cell has a center
    Polytope to = cell_of("D3*");
    for (int f = 0; f < to.facet_count(); ++f) {
        std::vector<QVec> pts;
        for (int id : to.facet_vertices[f].indices()) pts.push_back(to.vertices[id]);
        CHECK(symmetry_center(pts));
    }
    // a triangle has no center
    std::vector<QVec> tri{{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(0), rat(1)}};
    CHECK(!symmetry_center(tri));
}

TEST_CASE("hull from points round-trips the cube") {
    Polytope p = cell_of("Z3");
    Polytope q = Polytope::from_points(3, p.vertices);
    CHECK(q.vertices == p.vertices);
    CHECK(q.facet_count() == 6);
    // interior points are ignored
    std::vector<QVec> pts = p.vertices;
    pts.push_back(QVec{rat(0), rat(0), rat(0)});
    pts.push_back(QVec{rat(1, 4), rat(1, 4), rat(0)});
    Polytope r = Polytope::from_points(3, pts);
    CHECK(r.vertices == p.vertices);
}

TEST_CASE("minkowski sum with a segment") {
    SECTION("cube plus axis segment is a box") {
        Polytope box = minkowski_with_segment(cell_of("Z3"), QVec{rat(1), rat(0), rat(0)});
        CHECK(box.facet_count() == 6);
        CHECK(box.vertex_count() == 8);
        CHECK(check_minkowski_venkov(box).pass);
        Rat width = box.vertices.back()[0] - box.vertices.front()[0];
        CHECK(width == 3);  // 1 + 2*1
    }
    SECTION("hexagon plus edge-parallel segment stays a hexagon") {
        Polytope hexagon = cell_of("A2");
        // edge directions of the A2 cell are the differences of adjacent vertices
        QVec dir = qvec_sub(hexagon.vertices[1], hexagon.vertices[0]);
        Polytope sum = minkowski_with_segment(hexagon, dir);
        CHECK(sum.facet_count() == 6);
        CHECK(check_minkowski_venkov(sum).pass);
    }
    SECTION("hexagon plus generic segment is an octagon and fails MV") {
        Polytope sum = minkowski_with_segment(cell_of("A2"), QVec{rat(1), rat(5)});
        CHECK(sum.facet_count() == 8);
        MvReport r = check_minkowski_venkov(sum);
        CHECK(!r.pass);
        CHECK(r.failed_condition == 3);
    }
}

TEST_CASE("projection along a direction") {
    // hexagonal prism projected along its axis is the A2 hexagon shape
    Polytope prism = cell_of("A2+Z");
    Polytope shadow = project_along(prism, QVec{rat(0), rat(0), rat(1)});
    CHECK(shadow.dim == 2);
    CHECK(shadow.facet_count() == 6);
    CHECK(check_minkowski_venkov(shadow).pass);
}

TEST_CASE("unbounded and degenerate inputs are rejected") {
    std::vector<HalfSpace> open{{QVec{rat(1), rat(0)}, rat(1)}, {QVec{rat(0), rat(1)}, rat(1)}};
    CHECK_THROWS(Polytope::from_halfspaces(2, open));
    std::vector<QVec> flat{{rat(0), rat(0)}, {rat(1), rat(1)}, {rat(2), rat(2)}};
    CHECK_THROWS_AS(Polytope::from_points(2, flat), std::invalid_argument);
}
