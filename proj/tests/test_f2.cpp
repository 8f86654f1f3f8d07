#include <catch2/catch_amalgamated.hpp>

#include "parvo/f2.hpp"
#include "parvo/lattice.hpp"

#include <random>

using namespace parvo;

TEST_CASE("parity classes") {
    CHECK(parity_class(ZVec{3, -2, 5, 0, 1}).str() == "[1,0,1,0,1]");
    CHECK(parity_class(ZVec{0, 0, 0, 0, 0}).str() == "[0,0,0,0,0]");
    CHECK(parity_class(ZVec{2, 4}).str() == "[0,0]");
    CHECK_THROWS_AS(parity_class(QVec{rat(1, 2), rat(0)}), std::invalid_argument);
}

TEST_CASE("half classes") {
    CHECK(half_class(QVec{rat(1, 2), rat(1), rat(3, 2), rat(0), rat(0)}).str() ==
          "<1/2,0,1/2,0,0>");
    CHECK(half_class(QVec{rat(4), rat(-3)}).str() == "<0,0>");
    // midpoint of (0,0) and (1,1)
    CHECK(half_of_midpoint(ZVec{0, 0}, ZVec{1, 1}).str() == "<1/2,1/2>");
    CHECK_THROWS_AS(half_class(QVec{rat(1, 3)}), std::invalid_argument);
}

TEST_CASE("parity and half classes are homomorphisms") {
    std::mt19937 rng(99);
    for (int t = 0; t < 200; ++t) {
        int d = 2 + static_cast<int>(rng() % 4);
        ZVec x(d), y(d);
        for (int i = 0; i < d; ++i) {
            x[i] = static_cast<long>(rng() % 21) - 10;
            y[i] = static_cast<long>(rng() % 21) - 10;
        }
        CHECK(parity_of(zvec_add(x, y)) == parity_of(x) + parity_of(y));
        HalfClass hx = half_of_midpoint(x, ZVec(d, 0));
        HalfClass hy = half_of_midpoint(y, ZVec(d, 0));
        CHECK(half_of_midpoint(zvec_add(x, y), ZVec(d, 0)) == hx + hy);
    }
}

TEST_CASE("f2 span") {
    F2Span s(2);
    s.insert(0b01u);
    s.insert(0b10u);
    CHECK(s.dimension() == 2);
    CHECK(s.contains(0b11u));

    F2Span empty(4);
    CHECK(empty.dimension() == 0);
    CHECK(empty.contains(0u));
    CHECK(!empty.contains(0b1u));

    // 8 midpoint classes of a cube dual cell in d = 3 fill the space
    F2Span cube(3);
    for (std::uint32_t a = 0; a < 8; ++a)
        for (std::uint32_t b = 0; b < 8; ++b) cube.insert(a ^ b);  // midpoint class of corners
    CHECK(cube.dimension() == 3);
    CHECK(cube.elements().size() == 8);
}

TEST_CASE("f2 span insert is idempotent on dependents") {
    F2Span s(5);
    CHECK(s.insert(0b10101u));
    CHECK(s.insert(0b00111u));
    CHECK(!s.insert(0b10010u));  // xor of the two
    CHECK(s.dimension() == 2);
    CHECK(s.elements() == std::vector<std::uint32_t>({0u, 0b00111u, 0b10010u, 0b10101u}));
}
