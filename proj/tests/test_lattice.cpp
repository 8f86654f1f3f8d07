#include <catch2/catch_amalgamated.hpp>

#include "parvo/catalog.hpp"
#include "parvo/lattice.hpp"
#include "parvo/oracle.hpp"

#include <random>

using namespace parvo;

namespace {
std::vector<ZVec> sorted(std::vector<ZVec> v) {
    std::sort(v.begin(), v.end(), [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });
    return v;
}
}  // namespace

TEST_CASE("lattice validation") {
    CHECK_THROWS_AS(Lattice::from_gram(QMat{{rat(1), rat(2)}, {rat(2), rat(1)}}),
                    std::invalid_argument);  // det -3
    CHECK_THROWS_AS(Lattice::from_gram(QMat{{rat(1), rat(2)}, {rat(3), rat(1)}}),
                    std::invalid_argument);  // not symmetric
    CHECK_THROWS_AS(Lattice::from_basis(QMat{{rat(1), rat(2)}, {rat(2), rat(4)}}),
                    std::invalid_argument);  // singular
    Lattice a2 = make_A(2);
    CHECK(a2.dim() == 2);
    CHECK(a2.norm2(ZVec{1, 1}) == 2);
}

TEST_CASE("relevant vectors of Z2") {
    auto rel = relevant_vectors(make_Z(2));
    CHECK(rel == sorted({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
}

TEST_CASE("relevant vectors of A2") {
    auto rel = relevant_vectors(make_A(2));
    CHECK(rel.size() == 6);
    CHECK(rel == sorted({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}}));
    CHECK(rel == oracle::relevant_vectors(make_A(2)));
}

TEST_CASE("relevant vector counts across small lattices") {
    CHECK(relevant_vectors(make_Z(3)).size() == 6);
    CHECK(relevant_vectors(make_D(3)).size() == 12);       // rhombic dodecahedron
    CHECK(relevant_vectors(make_D_dual(3)).size() == 14);  // truncated octahedron
    CHECK(relevant_vectors(make_D(5)).size() == 40);       // regression value
    CHECK(relevant_vectors(make_A_dual(3)).size() == 14);
}

TEST_CASE("relevant vectors match the oracle") {
    for (const char* name : {"Z2", "A2", "Z3", "A3", "D3", "D3*", "A3*", "ED3", "A2+Z"}) {
        Lattice l = catalog_lookup(name);
        CAPTURE(name);
        CHECK(relevant_vectors(l) == oracle::relevant_vectors(l));
    }
}

TEST_CASE("relevant vectors are symmetric and nonzero") {
    for (const Lattice& l : catalog()) {
        if (l.dim() > 4) continue;
        auto rel = relevant_vectors(l);
        std::set<ZVec> s(rel.begin(), rel.end());
        CHECK(!s.count(ZVec(static_cast<std::size_t>(l.dim()), 0)));
        for (const ZVec& v : rel) CHECK(s.count(zvec_neg(v)));
    }
}

TEST_CASE("points in ball, Z2 examples") {
    Lattice z2 = make_Z(2);
    auto pts = points_in_ball(z2, QVec{rat(0), rat(0)}, rat(1));
    CHECK(pts == sorted({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
    auto corners = points_in_ball(z2, QVec{rat(1, 2), rat(1, 2)}, rat(1, 2));
    CHECK(corners == sorted({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
}

TEST_CASE("points in ball at the A2 circumcenter") {
    // circumcenter of the Delone triangle {0, (1,0), (1,1)} and its radius
    Lattice a2 = make_A(2);
    QVec center{rat(2, 3), rat(1, 3)};
    auto pts = points_in_ball(a2, center, rat(2, 3));
    CHECK(pts.size() == 3);
    CHECK(pts == sorted({{0, 0}, {1, 0}, {1, 1}}));
    CHECK(pts == oracle::points_in_ball(a2, center, rat(2, 3)));
}

TEST_CASE("points in ball rejects negative radius") {
    CHECK_THROWS_AS(points_in_ball(make_Z(2), QVec{rat(0), rat(0)}, rat(-1)),
                    std::invalid_argument);
}

TEST_CASE("points in ball agrees with the box oracle") {
    std::mt19937 rng(2024);
    for (const char* name : {"Z2", "A2", "D3", "A3*", "ED3"}) {
        Lattice l = catalog_lookup(name);
        for (int t = 0; t < 5; ++t) {
            QVec c(static_cast<std::size_t>(l.dim()));
            for (Rat& x : c) x = rat(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3);
            Rat r2 = rat(1 + rng() % 6, 1 + rng() % 2);
            CAPTURE(name, to_string(c), to_string(r2));
            CHECK(points_in_ball(l, c, r2) == oracle::points_in_ball(l, c, r2));
        }
    }
}
