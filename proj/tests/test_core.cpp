#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kq/core.hpp"
#include "kq/window.hpp"

using namespace kq;

namespace {
Indec P(int t) { return Indec::preprojective(t); }
Indec I(int s) { return Indec::preinjective(s); }
Indec R(int tube, int d) { return Indec::regular(TubeLabel{tube}, d); }
ShiftedIndec at(Indec x, int k = 0) { return ShiftedIndec{x, k}; }
}  // namespace

TEST_CASE("dimension vectors") {
    CHECK(dim_vector(P(0)) == std::pair{1, 0});
    CHECK(dim_vector(R(0, 3)) == std::pair{3, 3});
    CHECK(dim_vector(I(0)) == std::pair{0, 1});
    CHECK(dim_vector(P(4)) == std::pair{5, 4});
}

TEST_CASE("K0 classes") {
    CHECK(k0_class(DObject::zero()) == K0Class{0, 0});
    DObject x(at(P(0), 1));
    x.add(at(P(1)), 1);
    CHECK(k0_class(x) == K0Class{1, 1});
    CHECK(k0_class(DObject(at(R(0, 1)))) == K0Class{1, 1});
    CHECK(k0_class(at(P(3), 2)) == K0Class{4, 3});
    CHECK(k0_class(at(P(3), -1)) == K0Class{-4, -3});
}

TEST_CASE("Euler form") {
    CHECK(euler_form({1, 0}, {2, 1}) == 2);
    CHECK(euler_form({5, -3}, {0, 0}) == 0);
    CHECK(euler_form({4, 4}, {4, 4}) == 0);
}

TEST_CASE("Euler identity over the window") {
    WindowConfig w;
    for (const Indec& x : window_indecs(w))
        for (const Indec& y : window_indecs(w))
            CHECK(hom_dim0(x, y) - ext_dim1(x, y) ==
                  euler_form(k0_class(at(x)), k0_class(at(y))));
}

TEST_CASE("hom table") {
    CHECK(hom_dim(at(P(0)), at(P(1))) == 2);
    CHECK(hom_dim(at(R(0, 1)), at(R(0, 1), 1)) == 1);  // Hom(R, Sigma R) = K
    CHECK(hom_dim(at(R(0, 2)), at(R(1, 3))) == 0);
    CHECK(hom_dim(at(R(0, 2)), at(R(1, 3), 1)) == 0);
    CHECK(hom_dim(at(R(0, 2)), at(R(0, 3))) == 2);
    CHECK(hom_dim(at(P(2)), at(I(3))) == 5);
    CHECK(hom_dim(at(I(0)), at(P(5))) == 0);
    for (long long i = -2; i <= 3; ++i)
        CHECK(hom_dim(n_object(i), n_object(i - 1).shifted(1)) == 0);
}

TEST_CASE("hereditary vanishing") {
    WindowConfig w;
    for (const Indec& x : window_indecs(w)) {
        CHECK(hom_dim(at(x, 0), at(x, 2)) == 0);
        CHECK(hom_dim(at(x, 0), at(x, -1)) == 0);
    }
}

TEST_CASE("bilinear extension") {
    CHECK(hom_dim_obj(DObject::zero(), DObject(at(P(1)))) == 0);
    DObject two_p0;
    two_p0.add(at(P(0)), 2);
    CHECK(hom_dim_obj(two_p0, DObject(at(P(1)))) == 4);
    DObject mix(at(P(0)));
    mix.add(at(P(0), 1), 1);
    CHECK(hom_dim_obj(DObject(at(P(1))), mix) == 0);
}

TEST_CASE("N objects and N form") {
    CHECK(n_object(1) == at(P(0)));
    CHECK(n_object(0) == at(I(0), -1));
    CHECK(n_object(-2) == at(I(2), -1));
    CHECK(k0_class(n_object(3)) == K0Class{3, 2});
    CHECK(k0_class(n_object(-1)) == K0Class{-1, -2});
    for (long long i = -5; i <= 5; ++i) {
        auto [idx, shift] = n_form(n_object(i).shifted(2));
        CHECK(idx == i);
        CHECK(shift == 2);
    }
    CHECK_THROWS_AS(n_form(at(R(0, 1))), std::invalid_argument);
}

TEST_CASE("AR translate") {
    CHECK(ar_translate(at(P(4))) == at(P(2)));
    CHECK(ar_translate(at(R(0, 2))) == at(R(0, 2)));
    CHECK(ar_translate(at(I(0))) == at(I(2)));
    CHECK(ar_translate(at(P(1), 3)) == at(I(0), 2));
    CHECK(ar_translate(at(P(0), 3)) == at(I(1), 2));
}

TEST_CASE("standard triangles") {
    Triangle r2 = standard_triangle(R(0, 2));
    DObject left;
    left.add(at(P(1)), 2);
    DObject right;
    right.add(at(P(0), 1), 2);
    CHECK(r2.left == left);
    CHECK(r2.right == right);

    Triangle p3 = standard_triangle(P(3));
    CHECK(p3.left.total_summands() == 3);
    CHECK(p3.right.total_summands() == 2);

    Triangle i0 = standard_triangle(I(0));
    CHECK(i0.left == DObject(at(P(1))));
    CHECK(i0.right.total_summands() == 2);

    Triangle p1 = standard_triangle(P(1));
    CHECK(p1.left == DObject(at(P(1))));
    CHECK(p1.right.is_zero());

    WindowConfig w;
    for (const Indec& x : window_indecs(w)) {
        Triangle t = standard_triangle(x);
        CHECK(k0_class(t.mid) == k0_class(t.left) + k0_class(t.right));
    }
}

TEST_CASE("DObject multiset semantics") {
    DObject a(at(P(0)));
    a.add(at(P(0)), 2);
    CHECK(a.total_summands() == 3);
    DObject b;
    b.add(at(P(0)), 3);
    CHECK(a == b);
    CHECK_THROWS_AS(b.add(at(P(0)), -4), std::invalid_argument);
    CHECK(a.shifted(1).summands()[0].first == at(P(0), 1));
}
