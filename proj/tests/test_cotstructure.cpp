#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "kq/cotstructure.hpp"

using namespace kq;

namespace {
ShiftedIndec P(int t, int k = 0) { return ShiftedIndec{Indec::preprojective(t), k}; }
ShiftedIndec R1(int k = 0) { return ShiftedIndec{Indec::regular(TubeLabel{0}, 1), k}; }

WindowConfig small_window() {
    WindowConfig w;
    w.max_pp_index = 4;
    w.max_pi_index = 4;
    w.tube_labels = 1;
    w.max_reg_length = 2;
    return w;
}

CoTStructureSpec bounded(long long n, long long p, Phase cut) {
    return CoTStructureSpec{CotFamily::Bounded, n, p, cut};
}
}  // namespace

TEST_CASE("induction from co-slicings") {
    WindowConfig w = small_window();

    auto b = induce_cotstructure(to_general(build_exceptional(1, 3), w),
                                 Partition::cut_at(Phase::lex(0, 0)));
    CHECK(b.family == CotFamily::Bounded);
    CHECK(b.n == 1);
    CHECK(b.p == 3);

    auto below = induce_cotstructure(to_general(build_exceptional(1, 0, true), w),
                                     Partition::cut_at(Phase::lex(2, 0)));
    CHECK(below.family == CotFamily::BoundedBelow);

    auto above = induce_cotstructure(to_general(build_exceptional(1, 0, true), w),
                                     Partition::cut_at(Phase::lex(2, 1)));
    CHECK(above.family == CotFamily::BoundedAbove);

    auto st = induce_cotstructure(to_general(build_exceptional(1, 0, true), w),
                                  Partition::stable_split());
    CHECK(st.family == CotFamily::Stable);
    CHECK(induce_cotstructure(coarse_stable(1, w), Partition::stable_split()).family ==
          CotFamily::Stable);

    // coarse chain presentations induce bounded / bounded-above structures
    auto two = induce_cotstructure(coarse_two_object(1, 2, w), Partition::cut_at(Phase::tag(0)));
    CHECK(two.family == CotFamily::Bounded);
    CHECK(co_heart_triple(two) == co_heart_triple(bounded(1, 3, Phase::lex(0, 0))));

    auto chain = induce_cotstructure(coarse_chain_inf(1, w), Partition::cut_at(Phase::tag(1)));
    CHECK(chain.family == CotFamily::BoundedAbove);

    CHECK_THROWS_AS(induce_cotstructure(to_general(build_exceptional(1, 3), w),
                                        Partition::stable_split()),
                    std::invalid_argument);
}

TEST_CASE("membership") {
    CoTStructureSpec s = bounded(1, 3, Phase::lex(0, 0));
    // aisle: HN phases <= (0,0)
    CHECK(member_aisle(DObject(P(0)), s));
    CHECK(member_aisle(DObject(R1(-1)), s));
    CHECK_FALSE(member_aisle(DObject(R1()), s));
    CHECK_FALSE(member_aisle(DObject(P(0, 1)), s));
    // co-aisle: HN phases > (0,0)
    CHECK(member_coaisle(DObject(P(0, 1)), s));
    CHECK(member_coaisle(DObject(R1(3)), s));
    CHECK_FALSE(member_coaisle(DObject(P(0)), s));
    // R(x,1) splits across the cut: in neither half
    CHECK_FALSE(member_coaisle(DObject(R1()), s));
    // zero sits in both
    CHECK(member_aisle(DObject::zero(), s));
    CHECK(member_coaisle(DObject::zero(), s));

    CoTStructureSpec st{CotFamily::Stable, 1, 0, {}};
    CHECK(member_aisle(DObject(P(1, 5)), st));
    CHECK(member_coaisle(DObject(P(0, -5)), st));
    CHECK_FALSE(member_aisle(DObject(P(0)), st));
}

TEST_CASE("co-hearts") {
    auto h = co_heart(bounded(1, 3, Phase::lex(0, 0)));
    REQUIRE(h.size() == 2);
    std::set<ShiftedIndec> hs(h.begin(), h.end());
    CHECK(hs.count(P(0)));
    CHECK(hs.count(P(1, 2)));
    auto t = co_heart_triple(bounded(1, 3, Phase::lex(0, 0)));
    REQUIRE(t.has_value());
    CHECK(*t == std::tuple<long long, long long, long long>{0, 1, 2});

    // cutting at (m, 1) in E_p matches cutting at (m - p, 0) shifted data
    auto t2 = co_heart_triple(bounded(1, 3, Phase::lex(2, 1)));
    REQUIRE(t2.has_value());
    CHECK(*t2 == std::tuple<long long, long long, long long>{-1, 1, 3});

    CHECK(co_heart(CoTStructureSpec{CotFamily::BoundedBelow, 1, 0, Phase::lex(0, 0)}).size() == 1);
    CHECK(co_heart(CoTStructureSpec{CotFamily::BoundedAbove, 1, 0, Phase::lex(0, 1)}).size() == 1);
    CHECK(co_heart(CoTStructureSpec{CotFamily::Stable, 1, 0, {}}).empty());
    CHECK_FALSE(co_heart_triple(CoTStructureSpec{CotFamily::Stable, 1, 0, {}}).has_value());
}

TEST_CASE("boundedness") {
    WindowConfig w = small_window();
    CHECK(boundedness_class(bounded(1, 3, Phase::lex(0, 0)), w) == Boundedness::Bounded);
    CHECK(boundedness_class(CoTStructureSpec{CotFamily::BoundedBelow, 1, 0, Phase::lex(0, 0)}, w) ==
          Boundedness::BoundedBelow);
    CHECK(boundedness_class(CoTStructureSpec{CotFamily::BoundedAbove, 1, 0, Phase::lex(0, 1)}, w) ==
          Boundedness::BoundedAbove);
    CHECK(boundedness_class(CoTStructureSpec{CotFamily::Stable, 1, 0, {}}, w) ==
          Boundedness::Stable);
}

TEST_CASE("approximation triangles") {
    CoTStructureSpec s = bounded(1, 3, Phase::lex(0, 0));
    // R(x,1) splits across the cut into its canonical HN pieces
    auto [a, b] = approximation_triangle(DObject(R1()), s);
    CHECK(a == DObject(P(1)));
    CHECK(b == DObject(P(0, 1)));

    // a fully co-aisle object is kept intact
    auto [ar, br] = approximation_triangle(DObject(R1(3)), s);
    CHECK(ar.is_zero());
    CHECK(br == DObject(R1(3)));

    auto [a2, b2] = approximation_triangle(DObject(ShiftedIndec{Indec::preinjective(0), 0}), s);
    CHECK(k0_class(a2) + k0_class(b2) == k0_class(DObject(ShiftedIndec{Indec::preinjective(0), 0})));
    CHECK(member_aisle(a2, s));
    CHECK(member_coaisle(b2, s));

    DObject mixed(P(0));
    mixed.add(P(0, 1), 1);
    auto [a3, b3] = approximation_triangle(mixed, s);
    CHECK(a3 == DObject(P(0)));
    CHECK(b3 == DObject(P(0, 1)));
}

TEST_CASE("partial silting") {
    CHECK(is_partial_silting(SiltingSet{{P(0)}}));
    CHECK(is_partial_silting(SiltingSet{{P(0), P(1)}}));
    CHECK(is_partial_silting(SiltingSet{{P(0), P(1, 2)}}));
    // Hom(P0, Sigma P1) = 0 but Hom(P1, Sigma^... ) irrelevant; a genuine
    // failure: Ext^1(R, R) != 0
    CHECK_FALSE(is_partial_silting(SiltingSet{{R1()}}));
    // Hom(P0, Sigma^{-1} . Sigma P0) = Hom in degree 1? positive-degree map
    CHECK_FALSE(is_partial_silting(SiltingSet{{P(0), P(1, -1)}}));
}

TEST_CASE("silting and completion") {
    WindowConfig w = small_window();
    CHECK(is_silting(SiltingSet{{P(0), P(1)}}, w));
    CHECK(is_silting(SiltingSet{{P(0), P(1, 1)}}, w));
    CHECK_FALSE(is_silting(SiltingSet{{P(0)}}, w));

    auto completions = complete_almost_silting(SiltingSet{{P(0)}}, w);
    CHECK(completions.size() >= 2);
    for (const SiltingSet& c : completions) {
        CHECK(c.objects.size() == 2);
        CHECK(is_silting(c, w));
    }

    CHECK_THROWS_AS(complete_almost_silting(SiltingSet{{R1()}}, w), std::invalid_argument);
}

TEST_CASE("classification is deduplicated") {
    WindowConfig w = small_window();
    auto all = classify_all(w);
    CHECK_FALSE(all.empty());
    std::set<std::string> names;
    std::set<std::tuple<long long, long long, long long>> triples;
    for (const CoTStructureSpec& s : all) {
        CHECK(names.insert(s.str()).second);
        if (s.family == CotFamily::Bounded) {
            auto t = co_heart_triple(s);
            REQUIRE(t.has_value());
            CHECK(triples.insert(*t).second);  // distinct co-hearts
        }
    }
    // equivalent presentations collapse: Bounded{n,g+1,(m,0)} == Bounded{n,g,(m+g,1)}
    auto a = co_heart_triple(bounded(1, 4, Phase::lex(-1, 0)));
    auto b = co_heart_triple(bounded(1, 3, Phase::lex(2, 1)));
    CHECK(a == b);
}

TEST_CASE("axiom verification") {
    WindowConfig w = small_window();
    std::vector<DObject> corpus = default_corpus(w, 25);

    CHECK(verify_cotstructure_axioms(bounded(1, 3, Phase::lex(0, 0)), corpus).pass);
    CHECK(verify_cotstructure_axioms(CoTStructureSpec{CotFamily::Stable, 1, 0, {}}, corpus).pass);

    CotReport vac = verify_cotstructure_axioms(bounded(1, 3, Phase::lex(0, 0)), {});
    CHECK(vac.pass);
    CHECK(vac.warning);

    // a corrupted spec (p = 0 flips the slice order) fails Hom-orthogonality:
    // P0 lands in the aisle, P1 in the co-aisle, and Hom(P0, P1) = 2
    std::vector<DObject> pointed{DObject(P(0)), DObject(P(1)), DObject(R1())};
    CotReport bad = verify_cotstructure_axioms(bounded(1, 0, Phase::lex(0, 0)), pointed);
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.witnesses.empty());
}

TEST_CASE("silting search inventory") {
    WindowConfig w = small_window();
    auto r = silting_search(w);
    CHECK_FALSE(r.singletons.empty());
    CHECK_FALSE(r.pairs.empty());
    CHECK(r.triples.empty());
    // every pair is an adjacent exceptional pair {Sigma^m N_t, Sigma^{m+g} N_{t+1}}
    for (const SiltingSet& s : r.pairs) {
        REQUIRE(s.objects.size() == 2);
        auto [i0, k0] = n_form(s.objects[0]);
        auto [i1, k1] = n_form(s.objects[1]);
        if (i0 > i1) {
            std::swap(i0, i1);
            std::swap(k0, k1);
        }
        CHECK(i1 == i0 + 1);
        CHECK(k1 >= k0);
    }
}

TEST_CASE("combining with split stability data") {
    WindowConfig w = small_window();
    CoTStructureSpec s = bounded(1, 3, Phase::lex(0, 0));
    SplitStabilityData d;
    d.phases = {{Phase::real(0.25), {P(1, 2)}}, {Phase::real(0.75), {P(0)}}};

    GeneralCoslicing g = combine_with_split_data(s, d, w);
    CHECK(g.order.mode == PhaseOrder::Mode::LexPair);
    CHECK(validate_coslicing(g, default_corpus(w, 15)).valid);

    CHECK_THROWS_AS(
        combine_with_split_data(CoTStructureSpec{CotFamily::Stable, 1, 0, {}}, d, w),
        std::invalid_argument);
}
