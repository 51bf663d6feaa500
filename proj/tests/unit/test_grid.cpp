#include <doctest.h>

#include <set>

#include "qlps/error.hpp"
#include "qlps/grid.hpp"

using namespace qlps;

TEST_CASE("config_index maps single-particle cells row-major") {
    const GridSpec g{2, 2, 1.0, 1.0};
    CHECK(config_index({{0, 0}}, g, 1) == 0);
    CHECK(config_index({{1, 1}}, g, 1) == 3);
    CHECK(config_index({{0, 1}}, g, 1) == 1);
    CHECK(config_index({{1, 0}}, g, 1) == 2);
}

TEST_CASE("config_index is a bijection for two particles on 2x2") {
    const GridSpec g{2, 2, 1.0, 1.0};
    CHECK(config_index({{0, 0}, {1, 1}}, g, 2) == 3);

    std::set<std::size_t> seen;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    const Configuration cfg{{a, b}, {c, d}};
                    const auto idx = config_index(cfg, g, 2);
                    CHECK(idx < 16);
                    seen.insert(idx);
                    CHECK(config_from_index(idx, g, 2) == cfg);
                }
    CHECK(seen.size() == 16);
}

TEST_CASE("particle 0 varies slowest") {
    const GridSpec g{3, 2, 1.0, 1.0};
    CHECK(particle_stride(g, 3, 0) == 36);
    CHECK(particle_stride(g, 3, 2) == 1);
    CHECK(config_index({{1, 0}, {0, 0}, {0, 0}}, g, 3) == 2 * 36);
    CHECK(config_index({{0, 0}, {0, 0}, {0, 1}}, g, 3) == 1);
}

TEST_CASE("out-of-bounds cells are rejected") {
    const GridSpec g{2, 2, 1.0, 1.0};
    CHECK_THROWS_WITH_AS(config_index({{2, 0}}, g, 1), "cell outside grid", InvalidArgument);
    CHECK_THROWS_AS(config_index({{0, -1}}, g, 1), InvalidArgument);
    CHECK_THROWS_AS(config_index({{0, 0}}, g, 2), InvalidArgument);
}

TEST_CASE("wrap folds indices onto the torus") {
    const GridSpec g{4, 3, 1.0, 1.0};
    CHECK(wrap(-1, -1, g) == Cell{3, 2});
    CHECK(wrap(4, 3, g) == Cell{0, 0});
    CHECK(wrap(9, -4, g) == Cell{1, 2});
}

TEST_CASE("grid validation names the field") {
    CHECK_THROWS_WITH(GridSpec({1, 4, 1.0, 1.0}).validate(), doctest::Contains("grid.m"));
    CHECK_THROWS_WITH(GridSpec({4, 1, 1.0, 1.0}).validate(), doctest::Contains("grid.n"));
    CHECK_THROWS_WITH(GridSpec({4, 4, 0.0, 1.0}).validate(), doctest::Contains("grid.dx"));
    CHECK_THROWS_WITH(GridSpec({4, 4, 1.0, -1.0}).validate(), doctest::Contains("grid.dy"));
    CHECK_NOTHROW(GridSpec({2, 2, 0.5, 0.5}).validate());
}

TEST_CASE("state_size is (m*n)^N") {
    const GridSpec g{8, 8, 1.0, 1.0};
    CHECK(state_size(g, 1) == 64);
    CHECK(state_size(g, 3) == 262144);
    CHECK(state_size(g, 4) == 64 * state_size(g, 3));
}
