#include "kq/selftest.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "kq/coslicing.hpp"
#include "kq/costability.hpp"
#include "kq/cotstructure.hpp"
#include "kq/oracle.hpp"

namespace kq::selftest {

namespace {

struct Check {
    bool pass = true;
    std::string detail;

    void fail(const std::string& witness) {
        if (pass) detail = witness;
        pass = false;
    }
    void note(const std::string& info) {
        if (pass) detail = info;
    }
};

std::vector<long long> pair_range(const WindowConfig& w) {
    std::vector<long long> out;
    for (long long n = w.pair_index_min; n <= w.pair_index_max; ++n) out.push_back(n);
    return out;
}

std::vector<ExceptionalCoslicing> exceptional_library(const WindowConfig& w, long long n) {
    std::vector<ExceptionalCoslicing> out;
    for (long long p = 1; p <= w.max_p; ++p) out.push_back(build_exceptional(n, p));
    out.push_back(build_exceptional(n, 0, true));
    return out;
}

Check criterion_hom_oracle(const WindowConfig& w) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    std::vector<Indec> indecs = window_indecs(w);
    for (const Indec& x : indecs) {
        for (const Indec& y : indecs) {
            int table0 = hom_dim0(x, y);
            int table1 = ext_dim1(x, y);
            int oracle0 = oracle::hom_dim_oracle(x, y, 0);
            int oracle1 = oracle::hom_dim_oracle(x, y, 1);
            if (table0 != oracle0 || table1 != oracle1) {
                c.fail("mismatch at (" + x.str() + ", " + y.str() + "): table (" +
                       std::to_string(table0) + "," + std::to_string(table1) + ") vs oracle (" +
                       std::to_string(oracle0) + "," + std::to_string(oracle1) + ")");
                return c;
            }
            if (oracle0 < 0 || oracle1 < 0) {
                c.fail("negative oracle dimension at (" + x.str() + ", " + y.str() + ")");
                return c;
            }
        }
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    c.note(std::to_string(indecs.size() * indecs.size()) + " pairs x 2 degrees in " +
           std::to_string(ms) + " ms");
    return c;
}

Check criterion_standard_facts(const WindowConfig& w) {
    Check c;
    std::vector<Indec> regs, pps, pis;
    for (const Indec& x : window_indecs(w)) {
        if (x.fam == Fam::Regular) regs.push_back(x);
        if (x.fam == Fam::Preprojective) pps.push_back(x);
        if (x.fam == Fam::Preinjective) pis.push_back(x);
    }
    // (1) Hom(R, Sigma R) != 0 (checked as >= 1)
    for (const Indec& r : regs)
        if (ext_dim1(r, r) < 1) c.fail("fact(1) fails at " + r.str());
    // (2) distinct tubes are Hom-orthogonal in degrees 0 and 1
    for (const Indec& r1 : regs)
        for (const Indec& r2 : regs)
            if (!(r1.tube == r2.tube) && (hom_dim0(r1, r2) != 0 || ext_dim1(r1, r2) != 0))
                c.fail("fact(2) fails at (" + r1.str() + ", " + r2.str() + ")");
    // (3) Hom(N_i, Sigma N_{i-1}) = 0
    for (long long i = -2; i <= 3; ++i)
        if (hom_dim(n_object(i), n_object(i - 1).shifted(1)) != 0)
            c.fail("fact(3) fails at i=" + std::to_string(i));
    // (4)/(5) nonvanishing between components
    for (const Indec& r : regs) {
        for (const Indec& p : pps)
            if (hom_dim(ShiftedIndec{r, -1}, ShiftedIndec{p, 0}) <= 0 || hom_dim0(p, r) <= 0)
                c.fail("fact(4) fails at (" + r.str() + ", " + p.str() + ")");
        for (const Indec& i : pis)
            if (hom_dim0(r, i) <= 0 || hom_dim(ShiftedIndec{i, 0}, ShiftedIndec{r, 1}) <= 0)
                c.fail("fact(5) fails at (" + r.str() + ", " + i.str() + ")");
    }
    return c;
}

Check criterion_triangles(const WindowConfig& w) {
    Check c;
    for (const Indec& x : window_indecs(w)) {
        Triangle t = standard_triangle(x);
        K0Class mid = k0_class(t.mid);
        K0Class sum = k0_class(t.left) + k0_class(t.right);
        if (!(mid == sum)) c.fail("K0 additivity fails at " + x.str());
    }
    return c;
}

Check criterion_coslicings(const WindowConfig& w, const std::vector<DObject>& corpus) {
    Check c;
    for (long long n : pair_range(w)) {
        for (const ExceptionalCoslicing& e : exceptional_library(w, n)) {
            GeneralCoslicing g = to_general(e, w);
            CoslicingReport report = validate_coslicing(g, corpus);
            std::string tag = "E_" + (e.p_infinite ? std::string("inf") : std::to_string(e.p)) +
                              "(n=" + std::to_string(n) + ")";
            if (!report.valid)
                c.fail(tag + " invalid: " + report.violations.front().check + " " +
                       report.violations.front().witness);
            if (report.trivial) c.fail(tag + " reported trivial");
        }
    }

    // a valid but non-canonical tower (coarser steps than the HN output) is accepted
    ShiftedIndec p0{Indec::preprojective(0), 0}, p1{Indec::preprojective(1), 0};
    ShiftedIndec r1{Indec::regular(TubeLabel{0}, 1), 0};
    GeneralCoslicing e3 = to_general(build_exceptional(1, 3), w);
    HNTower noncanonical;
    noncanonical.layers = {DObject::zero(), DObject(p1), DObject{}, DObject(r1)};
    noncanonical.layers[2].add(p0, 1);
    noncanonical.layers[2].add(p1, 1);
    DObject two_sp0;
    two_sp0.add(p0.shifted(1), 2);
    noncanonical.quotients = {{DObject(p1), Phase::lex(0, 1)},
                              {DObject(p0), Phase::lex(0, 0)},
                              {two_sp0, Phase::lex(1, 0)}};
    if (!verify_tower(noncanonical, e3)) c.fail("non-canonical tower rejected");

    // canonical tower of R_{x,1}: quotients exactly [P_1, Sigma P_0]
    HNTower canonical = hn_filtration(DObject(r1), build_exceptional(1, 3));
    bool shape = canonical.quotients.size() == 2 &&
                 canonical.quotients[0].first == DObject(p1) &&
                 canonical.quotients[0].second == Phase::lex(0, 1) &&
                 canonical.quotients[1].first == DObject(p0.shifted(1)) &&
                 canonical.quotients[1].second == Phase::lex(1, 0);
    if (!shape) c.fail("canonical tower of R_{x,1} has unexpected quotients");
    return c;
}

Check criterion_no_regular_semistables(const WindowConfig& w) {
    Check c;
    std::vector<Indec> regs;
    for (const Indec& x : window_indecs(w))
        if (x.fam == Fam::Regular) regs.push_back(x);
    std::vector<DObject> small_corpus;
    small_corpus.push_back(DObject(ShiftedIndec{Indec::preprojective(0), 0}));
    for (long long n : pair_range(w)) {
        for (const ExceptionalCoslicing& e : exceptional_library(w, n)) {
            GeneralCoslicing base = to_general(e, w);
            std::size_t slot = 0;
            for (std::size_t i = 0; i < base.slices.size(); ++i)
                if (base.slices[i].phase == Phase::lex(0, 0)) slot = i;
            for (const Indec& r : regs) {
                GeneralCoslicing mutated = base;
                mutated.slices[slot].gens.push_back(ShiftedIndec{r, 0});
                CoslicingReport report = validate_coslicing(mutated, small_corpus);
                if (report.valid)
                    c.fail("inserting " + r.str() + " into E_" +
                           (e.p_infinite ? std::string("inf") : std::to_string(e.p)) +
                           "(n=" + std::to_string(n) + ") was accepted");
            }
        }
    }
    return c;
}

Check criterion_silting(const WindowConfig& w) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    SiltingSearchResult found = silting_search(w);
    if (!found.triples.empty()) {
        const auto& t = found.triples.front().objects;
        c.fail("partial-silting triple found: " + t[0].str() + ", " + t[1].str() + ", " +
               t[2].str());
        return c;
    }

    auto key = [](const SiltingSet& s) {
        std::set<std::tuple<int, int, int, int, int>> k;
        for (const ShiftedIndec& x : s.objects)
            k.insert(std::tuple_cat(std::make_tuple(x.shift), x.indec.key()));
        return k;
    };
    std::set<std::set<std::tuple<int, int, int, int, int>>> actual, expected;
    for (const SiltingSet& s : found.pairs) actual.insert(key(s));

    // predicted pairs: {Sigma^m N_n, Sigma^{m+g} N_{n+1}}, g >= 0, inside the window
    auto in_window = [&](const ShiftedIndec& x) {
        if (std::abs(x.shift) > w.max_shift) return false;
        if (x.indec.fam == Fam::Preprojective) return x.indec.index <= w.max_pp_index;
        return x.indec.index <= w.max_pi_index;
    };
    for (long long n = -(w.max_pi_index + 1); n <= w.max_pp_index + 1; ++n) {
        for (int m = -2 * w.max_shift - 2; m <= 2 * w.max_shift + 2; ++m) {
            ShiftedIndec a = n_object(n).shifted(m);
            if (!in_window(a)) continue;
            for (int g = 0;; ++g) {
                ShiftedIndec b = n_object(n + 1).shifted(m + g);
                if (b.shift > w.max_shift) break;
                if (!in_window(b)) continue;
                expected.insert(key(SiltingSet{{a, b}}));
            }
        }
    }
    if (actual != expected) {
        c.fail("partial-silting pairs differ from the (m,n,gap) prediction: found " +
               std::to_string(actual.size()) + ", expected " + std::to_string(expected.size()));
        return c;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    c.note(std::to_string(found.pairs.size()) + " pairs, no triples, " + std::to_string(ms) +
           " ms");
    return c;
}

Check criterion_cotstructure_axioms(const WindowConfig& w, const std::vector<DObject>& corpus) {
    Check c;
    std::vector<ShiftedIndec> window = window_shifted(w);
    for (const CoTStructureSpec& s : classify_all(w)) {
        CotReport report = verify_cotstructure_axioms(s, corpus);
        if (!report.pass)
            c.fail(s.str() + ": " + report.witnesses.front().check + " " +
                   report.witnesses.front().witness);

        // co-heart closed form vs membership-derived co-heart (within window)
        std::set<ShiftedIndec> derived;
        for (const ShiftedIndec& x : window)
            if (member_aisle(DObject(x), s) && member_coaisle(DObject(x.shifted(1)), s))
                derived.insert(x);
        std::set<ShiftedIndec> closed;
        for (const ShiftedIndec& x : co_heart(s))
            if (std::abs(x.shift) <= w.max_shift) closed.insert(x);
        if (derived != closed) c.fail(s.str() + ": co-heart mismatch");
        if (s.family == CotFamily::Stable && !co_heart(s).empty())
            c.fail(s.str() + ": stable co-heart not empty");
    }
    return c;
}

Check criterion_boundedness(const WindowConfig& w) {
    Check c;
    auto expected = [](CotFamily f) {
        switch (f) {
            case CotFamily::Bounded: return Boundedness::Bounded;
            case CotFamily::BoundedBelow: return Boundedness::BoundedBelow;
            case CotFamily::BoundedAbove: return Boundedness::BoundedAbove;
            case CotFamily::Stable: return Boundedness::Stable;
        }
        return Boundedness::Stable;
    };
    for (const CoTStructureSpec& s : classify_all(w))
        if (boundedness_class(s, w) != expected(s.family))
            c.fail(s.str() + ": boundedness class mismatch");
    return c;
}

Check criterion_coarser(const WindowConfig& w, const std::vector<DObject>& corpus) {
    Check c;
    for (long long n : pair_range(w)) {
        // E_p finer than the two-object co-slicing via (k,0) -> k, (k,1) -> k-p+1
        for (long long p = 1; p <= w.max_p; ++p) {
            GeneralCoslicing fine = to_general(build_exceptional(n, p), w);
            GeneralCoslicing coarse = coarse_two_object(n, static_cast<int>(p - 1), w);
            auto r = [p](const Phase& ph) {
                return Phase::tag(ph.i == 0 ? ph.k : ph.k - p + 1);
            };
            if (!coarser_witness_check(fine, coarse, r))
                c.fail("two-object refinement fails for n=" + std::to_string(n) +
                       ", p=" + std::to_string(p));
            for (long long m : {-1LL, 0LL, 1LL}) {
                CoTStructureSpec sf =
                    induce_cotstructure(fine, Partition::cut_at(Phase::lex(m, 0)));
                CoTStructureSpec sc = induce_cotstructure(coarse, Partition::cut_at(Phase::tag(m)));
                for (const DObject& x : corpus)
                    if (member_aisle(x, sf) != member_aisle(x, sc) ||
                        member_coaisle(x, sf) != member_coaisle(x, sc))
                        c.fail("aisle mismatch between E_p and two-object cut at m=" +
                               std::to_string(m));
            }
        }
        // E_inf finer than the stable 2-phase co-slicing via (k,i) -> i
        GeneralCoslicing einf = to_general(build_exceptional(n, 0, true), w);
        GeneralCoslicing stable = coarse_stable(n, w);
        if (!coarser_witness_check(einf, stable,
                                   [](const Phase& ph) { return Phase::tag(ph.i); }))
            c.fail("stable refinement fails for n=" + std::to_string(n));
        CoTStructureSpec st1 = induce_cotstructure(einf, Partition::stable_split());
        CoTStructureSpec st2 = induce_cotstructure(stable, Partition::stable_split());
        for (const DObject& x : corpus)
            if (member_aisle(x, st1) != member_aisle(x, st2) ||
                member_coaisle(x, st1) != member_coaisle(x, st2))
                c.fail("aisle mismatch for the stable split at n=" + std::to_string(n));

        // E_inf finer than the Z u {inf} chain via (k,0) -> inf, (k,1) -> k
        GeneralCoslicing chain = coarse_chain_inf(n, w);
        auto r_chain = [](const Phase& ph) {
            return ph.i == 0 ? Phase::tag_inf() : Phase::tag(ph.k);
        };
        if (!coarser_witness_check(einf, chain, r_chain))
            c.fail("chain refinement fails for n=" + std::to_string(n));
        for (long long m : {-1LL, 0LL, 1LL}) {
            CoTStructureSpec sf = induce_cotstructure(einf, Partition::cut_at(Phase::lex(m, 1)));
            CoTStructureSpec sc = induce_cotstructure(chain, Partition::cut_at(Phase::tag(m)));
            for (const DObject& x : corpus)
                if (member_aisle(x, sf) != member_aisle(x, sc) ||
                    member_coaisle(x, sf) != member_coaisle(x, sc))
                    c.fail("aisle mismatch between E_inf and chain cut at m=" + std::to_string(m));
        }
    }
    return c;
}

std::vector<Quintuple> seeded_quintuples(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> npick(-5, 5);
    std::uniform_real_distribution<double> phase(-3.0, 3.0);
    std::uniform_real_distribution<double> gap(0.01, 3.0);
    std::uniform_real_distribution<double> mass(0.1, 10.0);
    std::vector<Quintuple> out;
    for (int i = 0; i < count; ++i) {
        double phi1 = phase(rng);
        out.push_back(Quintuple{npick(rng), phi1, phi1 + gap(rng), mass(rng), mass(rng)});
    }
    return out;
}

Check criterion_costab_roundtrip(const WindowConfig& w) {
    Check c;
    for (const Quintuple& q : seeded_quintuples(w.seed + 1, 1000)) {
        CostabCondition cond = from_quintuple(q);
        Quintuple back = to_quintuple(cond);
        double err = std::max({std::abs(back.phi1 - q.phi1), std::abs(back.phi0 - q.phi0),
                               std::abs(back.m1 - q.m1), std::abs(back.m0 - q.m0)});
        if (back.n != q.n || err > 1e-12) c.fail("round trip error " + std::to_string(err));
        CostabReport report = validate_condition(cond);
        if (!report.pass)
            c.fail("validation failed: " + report.violations.front().check + " " +
                   report.violations.front().witness);
    }
    // the forced inequality phi1 < phi0 is enforced
    bool rejected = false;
    try {
        from_quintuple(Quintuple{0, 0.75, 0.25, 1, 1});
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    if (!rejected) c.fail("phi1 >= phi0 was not rejected");
    CostabCondition bad = from_quintuple(Quintuple{0, 0.25, 0.75, 1, 1});
    std::swap(bad.slicing.phi0, bad.slicing.phi1);
    std::swap(bad.charge.phi0, bad.charge.phi1);
    if (validate_condition(bad).pass) c.fail("phi(N_{n+1}) > phi(N_n) was not rejected");
    return c;
}

double walk_constant(const Quintuple& a, const Quintuple& b) {
    constexpr double pi = 3.14159265358979323846;
    double d1 = std::abs(a.phi1 - b.phi1), d0 = std::abs(a.phi0 - b.phi0);
    return std::max({d1, d0, std::abs(a.m1 - b.m1) + pi * std::max(a.m1, b.m1) * d1,
                     std::abs(a.m0 - b.m0) + pi * std::max(a.m0, b.m0) * d0});
}

Check criterion_components(const WindowConfig& w) {
    Check c;
    std::vector<Quintuple> qs = seeded_quintuples(w.seed + 2, 400);
    for (int i = 0; i + 1 < 400; i += 2) {
        CostabCondition c1 = from_quintuple(qs[i]), c2 = from_quintuple(qs[i + 1]);
        bool same = qs[i].n == qs[i + 1].n;
        if (same_component(c1, c2) != same) c.fail("same_component disagrees with pair index");
        double d = costab_distance(c1, c2);
        if (std::isfinite(d) != same) c.fail("distance finiteness disagrees with component");
        if (!same) {
            bool threw = false;
            try {
                component_walk(c1, c2, 10);
            } catch (const std::invalid_argument&) {
                threw = true;
            }
            if (!threw) c.fail("cross-component walk did not error");
            continue;
        }
        double bound_base = walk_constant(qs[i], qs[i + 1]);
        for (int steps : {10, 100}) {
            std::vector<CostabCondition> path = component_walk(c1, c2, steps);
            if (static_cast<int>(path.size()) != steps + 1) c.fail("walk length wrong");
            for (std::size_t j = 0; j + 1 < path.size(); ++j) {
                if (!validate_condition(path[j]).pass) c.fail("walk point invalid");
                double step = costab_distance(path[j], path[j + 1]);
                if (step > 2.0 * bound_base / steps + 1e-12)
                    c.fail("step distance " + std::to_string(step) + " exceeds bound");
            }
        }
    }
    return c;
}

Check criterion_metric_axioms(const WindowConfig& w) {
    Check c;
    std::vector<Quintuple> qs = seeded_quintuples(w.seed + 3, 300);
    for (int i = 0; i + 2 < 300; i += 3) {
        CostabCondition a = from_quintuple(qs[i]);
        CostabCondition b = from_quintuple(qs[i + 1]);
        CostabCondition d = from_quintuple(qs[i + 2]);
        // symmetry
        if (std::abs(metric_distance(a.slicing, b.slicing) -
                     metric_distance(b.slicing, a.slicing)) > 1e-12 &&
            std::isfinite(metric_distance(a.slicing, b.slicing)))
            c.fail("slicing metric not symmetric");
        if (std::isfinite(costab_distance(a, b)) &&
            std::abs(costab_distance(a, b) - costab_distance(b, a)) > 1e-12)
            c.fail("costab metric not symmetric");
        if (metric_distance(a.slicing, b.slicing) !=
                metric_distance(b.slicing, a.slicing) &&
            std::isinf(metric_distance(a.slicing, b.slicing)) !=
                std::isinf(metric_distance(b.slicing, a.slicing)))
            c.fail("slicing metric symmetry fails at infinity");
        // triangle inequality (holds with the extended-real convention)
        if (metric_distance(a.slicing, d.slicing) >
            metric_distance(a.slicing, b.slicing) + metric_distance(b.slicing, d.slicing) + 1e-12)
            c.fail("slicing metric triangle inequality fails");
        if (costab_distance(a, d) > costab_distance(a, b) + costab_distance(b, d) + 1e-12)
            c.fail("costab metric triangle inequality fails");
        // identity direction
        if (metric_distance(a.slicing, a.slicing) != 0 || costab_distance(a, a) != 0)
            c.fail("self-distance nonzero");
    }
    return c;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const WindowConfig& w) {
    std::vector<DObject> corpus = default_corpus(w);
    std::vector<std::pair<std::string, Check>> checks;
    checks.push_back({"hom table equals matrix oracle", criterion_hom_oracle(w)});
    checks.push_back({"standard Hom facts reproduced", criterion_standard_facts(w)});
    checks.push_back({"standard triangles K0-additive", criterion_triangles(w)});
    checks.push_back({"exceptional co-slicings validate; towers verified",
                      criterion_coslicings(w, corpus)});
    checks.push_back({"no regular object is semistable", criterion_no_regular_semistables(w)});
    checks.push_back({"silting classification by exhaustive search", criterion_silting(w)});
    checks.push_back({"co-t-structure axioms and co-hearts", criterion_cotstructure_axioms(w, corpus)});
    checks.push_back({"boundedness classes match families", criterion_boundedness(w)});
    checks.push_back({"coarser co-slicings induce the same co-t-structures",
                      criterion_coarser(w, corpus)});
    checks.push_back({"co-stability quintuple round trip", criterion_costab_roundtrip(w)});
    checks.push_back({"component structure of the co-stability space", criterion_components(w)});
    checks.push_back({"metric axioms", criterion_metric_axioms(w)});

    std::vector<CriterionResult> results;
    for (std::size_t i = 0; i < checks.size(); ++i)
        results.push_back(CriterionResult{static_cast<int>(i + 1), checks[i].first,
                                          checks[i].second.pass, checks[i].second.detail});
    return results;
}

}  // namespace kq::selftest
