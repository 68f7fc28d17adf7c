#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kq/oracle.hpp"
#include "kq/window.hpp"

using namespace kq;
using oracle::Field;

TEST_CASE("normal forms") {
    auto p0 = oracle::representation_of(Indec::preprojective(0));
    CHECK(p0.dim0 == 1);
    CHECK(p0.dim1 == 0);

    auto i0 = oracle::representation_of(Indec::preinjective(0));
    CHECK(i0.dim0 == 0);
    CHECK(i0.dim1 == 1);

    auto r = oracle::representation_of(Indec::regular(TubeLabel{0}, 1));
    CHECK(r.A == std::vector<std::vector<long long>>{{1}});
    CHECK(r.B == std::vector<std::vector<long long>>{{0}});

    auto rinf = oracle::representation_of(Indec::regular(TubeLabel::infinity(), 2));
    CHECK(rinf.B == std::vector<std::vector<long long>>{{1, 0}, {0, 1}});
    CHECK(rinf.A == std::vector<std::vector<long long>>{{0, 1}, {0, 0}});

    auto p2 = oracle::representation_of(Indec::preprojective(2));
    CHECK(p2.dim0 == 3);
    CHECK(p2.dim1 == 2);
    CHECK(p2.A == std::vector<std::vector<long long>>{{1, 0}, {0, 1}, {0, 0}});
    CHECK(p2.B == std::vector<std::vector<long long>>{{0, 0}, {1, 0}, {0, 1}});
}

TEST_CASE("rank") {
    CHECK(oracle::rank({{1, 2}, {2, 4}}) == 1);
    CHECK(oracle::rank({{1, 0}, {0, 1}}) == 2);
    CHECK(oracle::rank({{0, 0}, {0, 0}}) == 0);
    CHECK(oracle::rank({{3, 1, 4}, {1, 5, 9}, {2, 6, 5}}) == 3);
    CHECK(oracle::rank({{3, 1, 4}, {1, 5, 9}, {2, 6, 5}}, Field::PrimeField) == 3);
}

TEST_CASE("intertwiner dimensions") {
    Indec p0 = Indec::preprojective(0), p1 = Indec::preprojective(1);
    Indec r1 = Indec::regular(TubeLabel{0}, 1);
    CHECK(oracle::hom_dim_oracle(p0, p1, 0) == 2);
    CHECK(oracle::hom_dim_oracle(r1, r1, 1) == 1);
    WindowConfig w;
    for (const Indec& x : window_indecs(w))
        CHECK(oracle::hom_dim_oracle(x, x, 0) >= 1);
    // End-dimension of a regular of length d is d
    for (int d = 1; d <= 4; ++d) {
        Indec r = Indec::regular(TubeLabel{1}, d);
        CHECK(oracle::hom_dim_oracle(r, r, 0) == d);
    }
}

TEST_CASE("oracle agrees with the closed-form table") {
    WindowConfig w;
    w.max_pp_index = 4;
    w.max_pi_index = 4;
    w.tube_labels = 2;
    for (const Indec& x : window_indecs(w)) {
        for (const Indec& y : window_indecs(w)) {
            CHECK(oracle::hom_dim_oracle(x, y, 0) == hom_dim0(x, y));
            CHECK(oracle::hom_dim_oracle(x, y, 1) == ext_dim1(x, y));
            CHECK(oracle::hom_dim_oracle(x, y, 0, Field::PrimeField) == hom_dim0(x, y));
        }
    }
}
