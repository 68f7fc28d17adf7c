#include "kq/cotstructure.hpp"

#include <algorithm>
#include <map>

namespace kq {

std::string CoTStructureSpec::str() const {
    switch (family) {
        case CotFamily::Bounded:
            return "Bounded{n=" + std::to_string(n) + ",p=" + std::to_string(p) +
                   ",cut=" + cut.str() + "}";
        case CotFamily::BoundedBelow:
            return "BoundedBelow{n=" + std::to_string(n) + ",cut=" + cut.str() + "}";
        case CotFamily::BoundedAbove:
            return "BoundedAbove{n=" + std::to_string(n) + ",cut=" + cut.str() + "}";
        case CotFamily::Stable:
            return "Stable{n=" + std::to_string(n) + "}";
    }
    return "?";
}

namespace {

/// Closed-form aisle predicate on the Lex phases of the underlying E_p.
bool aisle_phase(const CoTStructureSpec& s, const Phase& phase) {
    switch (s.family) {
        case CotFamily::Bounded: {
            PhaseOrder order{PhaseOrder::Mode::EpFinite, s.p};
            return order.leq(phase, s.cut);
        }
        case CotFamily::BoundedBelow:
        case CotFamily::BoundedAbove: {
            PhaseOrder order{PhaseOrder::Mode::EInf};
            return order.leq(phase, s.cut);
        }
        case CotFamily::Stable:
            return phase.i == 1;
    }
    return false;
}

bool all_pieces(const DObject& x, const CoTStructureSpec& s, bool want_aisle) {
    for (const auto& [summand, mult] : x.summands())
        for (const PairPiece& p : pair_pieces(summand, s.n))
            if (aisle_phase(s, p.phase) != want_aisle) return false;
    return true;
}

}  // namespace

bool member_aisle(const DObject& x, const CoTStructureSpec& s) {
    return all_pieces(x, s, true);
}

bool member_coaisle(const DObject& x, const CoTStructureSpec& s) {
    return all_pieces(x, s, false);
}

std::optional<std::tuple<long long, long long, long long>> co_heart_triple(
    const CoTStructureSpec& s) {
    if (s.family != CotFamily::Bounded) return std::nullopt;
    if (s.cut.i == 0) return std::make_tuple(s.cut.k, s.n, s.p - 1);
    return std::make_tuple(s.cut.k - s.p, s.n, s.p);
}

std::vector<ShiftedIndec> co_heart(const CoTStructureSpec& s) {
    switch (s.family) {
        case CotFamily::Bounded: {
            auto [m, n, gap] = *co_heart_triple(s);
            return {n_object(n).shifted(static_cast<int>(m)),
                    n_object(n + 1).shifted(static_cast<int>(m + gap))};
        }
        case CotFamily::BoundedBelow:
            return {n_object(s.n).shifted(static_cast<int>(s.cut.k))};
        case CotFamily::BoundedAbove:
            return {n_object(s.n + 1).shifted(static_cast<int>(s.cut.k))};
        case CotFamily::Stable:
            return {};
    }
    return {};
}

CoTStructureSpec induce_cotstructure(const GeneralCoslicing& c, const Partition& part) {
    if (!c.pair_index)
        throw std::invalid_argument("co-slicing outside the classified library");
    long long n = *c.pair_index;

    switch (c.order.mode) {
        case PhaseOrder::Mode::EpFinite:
            if (part.kind != Partition::Kind::CutAt || part.cut.kind != Phase::Kind::Lex)
                throw std::invalid_argument("partition not order-compatible with E_p");
            return CoTStructureSpec{CotFamily::Bounded, n, c.order.p, part.cut};
        case PhaseOrder::Mode::EInf:
            if (part.kind == Partition::Kind::StableSplit)
                return CoTStructureSpec{CotFamily::Stable, n};
            if (part.cut.kind != Phase::Kind::Lex)
                throw std::invalid_argument("partition not order-compatible with E_inf");
            return CoTStructureSpec{part.cut.i == 0 ? CotFamily::BoundedBelow
                                                    : CotFamily::BoundedAbove,
                                    n, 1, part.cut};
        case PhaseOrder::Mode::StablePair:
            if (part.kind == Partition::Kind::StableSplit ||
                (part.kind == Partition::Kind::CutAt && part.cut == Phase::tag(1)))
                return CoTStructureSpec{CotFamily::Stable, n};
            throw std::invalid_argument("partition not order-compatible with the stable split");
        case PhaseOrder::Mode::Chain: {
            if (part.kind != Partition::Kind::CutAt || part.cut.kind != Phase::Kind::Tag)
                throw std::invalid_argument("partition not order-compatible with the chain");
            bool has_inf = false;
            for (const Slice& s : c.slices)
                if (s.phase.kind == Phase::Kind::TagInf) has_inf = true;
            if (has_inf)
                return CoTStructureSpec{CotFamily::BoundedAbove, n, 1,
                                        Phase::lex(part.cut.k, 1)};
            // two-object slices {Sigma^m N_n, Sigma^{m+gap} N_{n+1}}:
            // cut at m corresponds to the E_{gap+1} cut (m,0)
            const Slice* base = c.slice_at(Phase::tag(0));
            if (!base || base->gens.size() != 2)
                throw std::invalid_argument("co-slicing outside the classified library");
            long long shift_n = 0, shift_n1 = 0;
            for (const ShiftedIndec& g : base->gens) {
                auto [idx, sh] = n_form(g);
                (idx == n ? shift_n : shift_n1) = sh;
            }
            long long gap = shift_n1 - shift_n;
            return CoTStructureSpec{CotFamily::Bounded, n, gap + 1, Phase::lex(part.cut.k, 0)};
        }
        default:
            throw std::invalid_argument("co-slicing outside the classified library");
    }
}

Boundedness boundedness_class(const CoTStructureSpec& s, const WindowConfig& w) {
    long long K = w.max_shift + w.max_p + 2;

    // Lemma-style phase criterion: do the lambda-iterates of Phi- (resp.
    // lambda-inverse iterates of Phi+) exhaust the phase set?
    bool below = true, above = true;
    for (long long k = -K; k <= K; ++k) {
        for (int i : {0, 1}) {
            bool reached_down = false, reached_up = false;
            for (long long j = 0; j <= 4 * K && !(reached_down && reached_up); ++j) {
                if (aisle_phase(s, Phase::lex(k - j, i))) reached_down = true;
                if (!aisle_phase(s, Phase::lex(k + j, i))) reached_up = true;
            }
            below = below && reached_down;
            above = above && reached_up;
        }
    }

    // corpus witnesses: every window object lands in some Sigma^i A / Sigma^i B
    for (const ShiftedIndec& x : window_shifted(w)) {
        DObject obj(x);
        bool wit_down = false, wit_up = false;
        for (long long j = 0; j <= 4 * K && !(wit_down && wit_up); ++j) {
            if (member_aisle(obj.shifted(static_cast<int>(-j)), s)) wit_down = true;
            if (member_coaisle(obj.shifted(static_cast<int>(j)), s)) wit_up = true;
        }
        below = below && wit_down;
        above = above && wit_up;
    }

    if (below && above) return Boundedness::Bounded;
    if (below) return Boundedness::BoundedBelow;
    if (above) return Boundedness::BoundedAbove;
    return Boundedness::Stable;
}

std::pair<DObject, DObject> approximation_triangle(const DObject& x, const CoTStructureSpec& s) {
    DObject a, b;
    for (const auto& [summand, mult] : x.summands()) {
        auto pieces = pair_pieces(summand, s.n);
        bool all_in = true, all_out = true;
        for (const PairPiece& p : pieces)
            (aisle_phase(s, p.phase) ? all_out : all_in) = false;
        if (all_in) {
            a.add(summand, mult);  // keep summands intact when possible
        } else if (all_out) {
            b.add(summand, mult);
        } else {
            for (const PairPiece& p : pieces)
                (aisle_phase(s, p.phase) ? a : b).add(p.obj, p.mult * mult);
        }
    }
    return {a, b};
}

bool is_partial_silting(const SiltingSet& s) {
    for (const ShiftedIndec& x : s.objects) {
        for (const ShiftedIndec& y : s.objects) {
            // hom(x, Sigma^i y) can only be nonzero at relative degree 0 or 1
            for (int i : {x.shift - y.shift, x.shift - y.shift + 1})
                if (i > 0 && hom_dim(x, y.shifted(i)) != 0) return false;
        }
    }
    return true;
}

bool is_silting(const SiltingSet& s, const WindowConfig& w) {
    if (s.objects.empty()) return false;
    long long n = 0;
    bool first = true;
    for (const ShiftedIndec& x : s.objects) {
        if (x.indec.fam == Fam::Regular) return false;
        auto [idx, sh] = n_form(x);
        if (first || idx < n) n = idx;
        first = false;
    }
    return covers_inner_window(saturate(s.objects, n, w, true), w);
}

std::vector<SiltingSet> complete_almost_silting(const SiltingSet& s, const WindowConfig& w) {
    if (s.objects.size() != 1 || s.objects[0].indec.fam == Fam::Regular)
        throw std::invalid_argument("almost-silting completion needs a non-regular singleton");
    const ShiftedIndec& x = s.objects[0];
    auto [t, m] = n_form(x);
    std::vector<SiltingSet> out;
    for (int i = 0;; ++i) {
        ShiftedIndec partner = n_object(t + 1).shifted(m + i);
        if (std::abs(partner.shift) > w.max_shift) break;
        out.push_back(SiltingSet{{x, partner}});
    }
    for (int j = 0;; --j) {
        ShiftedIndec partner = n_object(t - 1).shifted(m + j);
        if (std::abs(partner.shift) > w.max_shift) break;
        out.push_back(SiltingSet{{partner, x}});
    }
    return out;
}

std::vector<CoTStructureSpec> classify_all(const WindowConfig& w) {
    std::vector<CoTStructureSpec> out;
    std::set<std::tuple<long long, long long, long long>> seen_triples;
    for (long long n = w.pair_index_min; n <= w.pair_index_max; ++n) {
        for (long long p = 1; p <= w.max_p; ++p)
            for (long long m = -w.max_shift; m <= w.max_shift; ++m) {
                CoTStructureSpec spec{CotFamily::Bounded, n, p, Phase::lex(m, 0)};
                if (seen_triples.insert(*co_heart_triple(spec)).second) out.push_back(spec);
            }
        for (long long k = -w.max_shift; k <= w.max_shift; ++k)
            out.push_back({CotFamily::BoundedBelow, n, 1, Phase::lex(k, 0)});
        for (long long k = -w.max_shift; k <= w.max_shift; ++k)
            out.push_back({CotFamily::BoundedAbove, n, 1, Phase::lex(k, 1)});
        out.push_back({CotFamily::Stable, n});
    }
    return out;
}

CotReport verify_cotstructure_axioms(const CoTStructureSpec& s, const std::vector<DObject>& corpus) {
    CotReport report;
    if (corpus.empty()) {
        report.pass = true;
        report.warning = true;
        return report;
    }

    std::vector<const DObject*> aisle, coaisle;
    for (const DObject& x : corpus) {
        if (x.is_zero()) continue;
        if (member_aisle(x, s)) aisle.push_back(&x);
        if (member_coaisle(x, s)) coaisle.push_back(&x);
    }

    // (1) Sigma^{-1} A in A and Sigma B in B
    for (const DObject* a : aisle)
        if (!member_aisle(a->shifted(-1), s))
            report.witnesses.push_back({"shift-aisle", a->str()});
    for (const DObject* b : coaisle)
        if (!member_coaisle(b->shifted(1), s))
            report.witnesses.push_back({"shift-coaisle", b->str()});

    // (2) Hom(A, B) = 0, sampled
    int checked = 0;
    for (const DObject* a : aisle) {
        for (const DObject* b : coaisle) {
            if (checked++ >= 500) break;
            if (long long d = hom_dim_obj(*a, *b); d != 0)
                report.witnesses.push_back(
                    {"orthogonality", "hom(" + a->str() + ", " + b->str() + ") = " + std::to_string(d)});
        }
        if (checked >= 500) break;
    }

    // (3) approximation triangles
    for (const DObject& x : corpus) {
        auto [a, b] = approximation_triangle(x, s);
        K0Class lhs = k0_class(x);
        K0Class rhs = k0_class(a) + k0_class(b);
        if (!member_aisle(a, s) || !member_coaisle(b, s) || !(lhs == rhs))
            report.witnesses.push_back({"approximation", x.str()});
    }

    report.pass = report.witnesses.empty();
    return report;
}

SiltingSearchResult silting_search(const WindowConfig& w) {
    SiltingSearchResult result;
    std::vector<ShiftedIndec> all = window_shifted(w);
    std::size_t n = all.size();

    std::vector<bool> self_ok(n);
    for (std::size_t i = 0; i < n; ++i)
        self_ok[i] = is_partial_silting(SiltingSet{{all[i]}});

    // cross-compatibility: no positive-degree homs in either direction
    auto cross_ok = [&](std::size_t i, std::size_t j) {
        const ShiftedIndec &x = all[i], &y = all[j];
        for (int d : {x.shift - y.shift, x.shift - y.shift + 1})
            if (d > 0 && hom_dim(x, y.shifted(d)) != 0) return false;
        for (int d : {y.shift - x.shift, y.shift - x.shift + 1})
            if (d > 0 && hom_dim(y, x.shifted(d)) != 0) return false;
        return true;
    };
    std::vector<std::vector<bool>> compat(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) compat[i][j] = compat[j][i] = cross_ok(i, j);

    for (std::size_t i = 0; i < n; ++i)
        if (self_ok[i]) result.singletons.push_back(SiltingSet{{all[i]}});
    for (std::size_t i = 0; i < n; ++i) {
        if (!self_ok[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j)
            if (self_ok[j] && compat[i][j]) result.pairs.push_back(SiltingSet{{all[i], all[j]}});
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!self_ok[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!self_ok[j] || !compat[i][j]) continue;
            for (std::size_t k = j + 1; k < n; ++k)
                if (self_ok[k] && compat[i][k] && compat[j][k])
                    result.triples.push_back(SiltingSet{{all[i], all[j], all[k]}});
        }
    }
    return result;
}

GeneralCoslicing combine_with_split_data(const CoTStructureSpec& bounded_spec,
                                         const SplitStabilityData& d, const WindowConfig& w) {
    if (bounded_spec.family != CotFamily::Bounded)
        throw std::invalid_argument("split-stability combination needs a bounded co-t-structure");
    std::vector<ShiftedIndec> heart = co_heart(bounded_spec);

    // each co-heart object in exactly one phase; lower phases Hom-orthogonal
    // into higher ones
    for (const ShiftedIndec& x : heart) {
        int hits = 0;
        for (const auto& [phase, gens] : d.phases)
            hits += std::count(gens.begin(), gens.end(), x);
        if (hits != 1)
            throw std::invalid_argument("split data does not partition the co-heart");
    }
    for (std::size_t a = 0; a < d.phases.size(); ++a)
        for (std::size_t b = a + 1; b < d.phases.size(); ++b)
            for (const ShiftedIndec& x : d.phases[a].second)
                for (const ShiftedIndec& y : d.phases[b].second)
                    if (hom_dim(x, y) != 0)
                        throw std::invalid_argument("split data violates Hom-orthogonality");

    GeneralCoslicing g;
    g.order = PhaseOrder{PhaseOrder::Mode::LexPair};
    g.pair_index = bounded_spec.n;
    g.window = w;
    int K = w.max_shift + static_cast<int>(w.max_p) + 2;
    for (long long j = -K; j <= K; ++j) {
        for (std::size_t r = 0; r < d.phases.size(); ++r) {
            Slice slice;
            slice.phase = Phase::lex(j, static_cast<int>(r));
            for (const ShiftedIndec& x : d.phases[r].second)
                slice.gens.push_back(x.shifted(static_cast<int>(j)));
            g.slices.push_back(slice);
        }
    }
    return g;
}

}  // namespace kq
