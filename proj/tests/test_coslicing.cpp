#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kq/coslicing.hpp"

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
}  // namespace

TEST_CASE("admissible orders") {
    auto e3 = build_exceptional(1, 3);
    PhaseOrder o = e3.order();
    CHECK(o.less(Phase::lex(2, 1), Phase::lex(0, 0)));
    CHECK(o.less(Phase::lex(0, 0), Phase::lex(3, 1)));
    CHECK(o.less(Phase::lex(3, 1), Phase::lex(1, 0)));

    PhaseOrder oinf = build_exceptional(1, 0, true).order();
    CHECK(oinf.less(Phase::lex(100, 1), Phase::lex(-100, 0)));

    PhaseOrder o1 = build_exceptional(1, 1).order();
    CHECK(o1.less(Phase::lex(0, 1), Phase::lex(0, 0)));
    CHECK(o1.less(Phase::lex(0, 0), Phase::lex(1, 1)));
    CHECK(o1.less(Phase::lex(1, 1), Phase::lex(1, 0)));

    CHECK_THROWS_AS(build_exceptional(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(o.less(Phase::lex(0, 0), Phase::tag(0)), std::invalid_argument);
}

TEST_CASE("pair-relative pieces") {
    // regulars
    auto rp = pair_pieces(R1(), 1);
    REQUIRE(rp.size() == 2);
    CHECK(rp[0].obj == P(1));
    CHECK(rp[0].phase == Phase::lex(0, 1));
    CHECK(rp[1].obj == P(0, 1));
    CHECK(rp[1].phase == Phase::lex(1, 0));
    // semistables
    CHECK(pair_pieces(P(0), 1).size() == 1);
    CHECK(pair_pieces(P(1), 1).size() == 1);
    // K0 additivity of the rewriting
    for (long long n = -2; n <= 3; ++n) {
        for (long long m = -4; m <= 5; ++m) {
            ShiftedIndec x = n_object(m).shifted(1);
            K0Class sum{};
            for (const PairPiece& p : pair_pieces(x, n)) {
                K0Class cls = k0_class(p.obj);
                sum.a0 += p.mult * cls.a0;
                sum.a1 += p.mult * cls.a1;
            }
            CHECK(sum == k0_class(x));
        }
    }
}

TEST_CASE("HN towers") {
    WindowConfig w = small_window();
    auto e = build_exceptional(1, 3);

    HNTower r_tower = hn_filtration(DObject(R1()), e);
    REQUIRE(r_tower.quotients.size() == 2);
    CHECK(r_tower.quotients[0].first == DObject(P(1)));
    CHECK(r_tower.quotients[1].first == DObject(P(0, 1)));
    CHECK(r_tower.layers.back() == DObject(R1()));

    HNTower p1_tower = hn_filtration(DObject(P(1)), e);
    CHECK(p1_tower.quotients.size() == 1);

    HNTower i0_tower = hn_filtration(DObject(ShiftedIndec{Indec::preinjective(0), 0}), e);
    REQUIRE(i0_tower.quotients.size() == 2);
    CHECK(i0_tower.quotients[0].first == DObject(P(1)));
    DObject two_sp0;
    two_sp0.add(P(0, 1), 2);
    CHECK(i0_tower.quotients[1].first == two_sp0);

    CHECK_THROWS_AS(hn_filtration(DObject::zero(), e), std::invalid_argument);

    GeneralCoslicing g = to_general(e, w);
    CHECK(verify_tower(hn_filtration(DObject(R1()), g), g));

    // equal-phase quotients listed separately are rejected
    HNTower bad = r_tower;
    bad.quotients.push_back(bad.quotients.back());
    bad.layers.push_back(bad.layers.back());
    CHECK_FALSE(verify_tower(bad, g));
}

TEST_CASE("validation of exceptional co-slicings") {
    WindowConfig w = small_window();
    std::vector<DObject> corpus = default_corpus(w, 20);
    for (long long p = 1; p <= 3; ++p) {
        CoslicingReport r = validate_coslicing(to_general(build_exceptional(0, p), w), corpus);
        CHECK(r.valid);
        CHECK_FALSE(r.trivial);
    }
    CoslicingReport rinf =
        validate_coslicing(to_general(build_exceptional(0, 0, true), w), corpus);
    CHECK(rinf.valid);
    CHECK_FALSE(rinf.trivial);

    // inserting a regular into a slice breaks the axioms
    GeneralCoslicing mutated = to_general(build_exceptional(1, 3), w);
    for (Slice& s : mutated.slices)
        if (s.phase == Phase::lex(0, 0)) s.gens.push_back(R1());
    CHECK_FALSE(validate_coslicing(mutated, corpus).valid);

    CHECK_THROWS_AS(validate_coslicing(mutated, {}), std::invalid_argument);
}

TEST_CASE("trivial single-slice co-slicing") {
    WindowConfig w = small_window();
    GeneralCoslicing g;
    g.order = PhaseOrder{PhaseOrder::Mode::StablePair};  // lambda = identity
    g.pair_index = 1;
    g.window = w;
    g.ext_closed_slices = true;
    g.slices.push_back(Slice{Phase::tag(0), {P(0), P(1)}, true});
    CoslicingReport r = validate_coslicing(g, default_corpus(w, 5));
    CHECK(r.valid);
    CHECK(r.trivial);
}

TEST_CASE("coarse co-slicings validate") {
    WindowConfig w = small_window();
    std::vector<DObject> corpus = default_corpus(w, 20);
    CHECK(validate_coslicing(coarse_two_object(1, 2, w), corpus).valid);
    CHECK(validate_coslicing(coarse_stable(1, w), corpus).valid);
    CHECK(validate_coslicing(coarse_chain_inf(1, w), corpus).valid);
}

TEST_CASE("slice dichotomy") {
    WindowConfig w = small_window();
    for (auto& [phase, tag] : check_slice_dichotomy(to_general(build_exceptional(1, 3), w)))
        CHECK(tag == SliceTag::PartialSilting);
    for (auto& [phase, tag] : check_slice_dichotomy(coarse_stable(1, w)))
        CHECK(tag == SliceTag::SuspensionStable);

    GeneralCoslicing mutated = to_general(build_exceptional(1, 3), w);
    mutated.slices[0].gens = {R1()};
    bool found_violation = false;
    for (auto& [phase, tag] : check_slice_dichotomy(mutated))
        if (tag == SliceTag::Violation) found_violation = true;
    CHECK(found_violation);
}

TEST_CASE("saturation and closure") {
    WindowConfig w = small_window();
    // an adjacent pair at gap 0 stays small under plain extension closure
    auto closure = saturate({P(0), P(1, 2)}, 1, w, false);
    CHECK(closure.size() == 2);
    // thick closure of an exceptional pair generates the inner window
    CHECK(covers_inner_window(saturate({P(0), P(1)}, 1, w, true), w));
    CHECK(covers_inner_window(saturate({P(0), P(1, 2)}, 1, w, true), w));
    CHECK_FALSE(covers_inner_window(saturate({P(0)}, 1, w, true), w));
}

TEST_CASE("finer/coarser witnesses") {
    WindowConfig w = small_window();
    GeneralCoslicing e3 = to_general(build_exceptional(1, 3), w);
    // reflexivity via the identity map
    CHECK(coarser_witness_check(e3, e3, [](const Phase& ph) { return ph; }));

    GeneralCoslicing coarse = coarse_two_object(1, 2, w);
    auto r = [](const Phase& ph) { return Phase::tag(ph.i == 0 ? ph.k : ph.k - 2); };
    CHECK(coarser_witness_check(e3, coarse, r));

    GeneralCoslicing einf = to_general(build_exceptional(1, 0, true), w);
    CHECK(coarser_witness_check(einf, coarse_stable(1, w),
                                [](const Phase& ph) { return Phase::tag(ph.i); }));
    CHECK(coarser_witness_check(einf, coarse_chain_inf(1, w), [](const Phase& ph) {
        return ph.i == 0 ? Phase::tag_inf() : Phase::tag(ph.k);
    }));

    // a wrong map is rejected
    auto bad = [](const Phase& ph) { return Phase::tag(ph.k); };
    CHECK_FALSE(coarser_witness_check(e3, coarse, bad));
}

TEST_CASE("split HN decomposition") {
    SplitStabilityData d;
    d.phases = {{Phase::real(0.25), {P(1)}}, {Phase::real(0.75), {P(0)}}};
    DObject x(P(0));
    x.add(P(1), 1);
    auto groups = split_hn_decompose(x, d);
    REQUIRE(groups.size() == 2);
    CHECK(groups[0].first == DObject(P(1)));
    CHECK(groups[1].first == DObject(P(0)));

    DObject three;
    three.add(P(0), 3);
    auto single = split_hn_decompose(three, d);
    REQUIRE(single.size() == 1);
    CHECK(single[0].first.total_summands() == 3);

    CHECK_THROWS_AS(split_hn_decompose(DObject(R1()), d), std::invalid_argument);
}

TEST_CASE("co-slicing metric") {
    CostabSlicing a{0, 0.25, 0.75}, b{0, 0.25, 0.85}, c{1, 0.25, 0.75};
    CHECK(metric_distance(a, a) == 0.0);
    CHECK(metric_distance(a, b) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(std::isinf(metric_distance(a, c)));
}
