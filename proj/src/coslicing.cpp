#include "kq/coslicing.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace kq {

std::string Phase::str() const {
    switch (kind) {
        case Kind::Lex: return "(" + std::to_string(k) + "," + std::to_string(i) + ")";
        case Kind::Tag: return std::to_string(k);
        case Kind::TagInf: return "inf";
        case Kind::Real: return std::to_string(phi);
    }
    return "?";
}

namespace {

[[noreturn]] void cross_kind() {
    throw std::invalid_argument("cross-kind phase comparison");
}

bool same_kind_tagish(const Phase& x) {
    return x.kind == Phase::Kind::Tag || x.kind == Phase::Kind::TagInf;
}

}  // namespace

bool PhaseOrder::less(const Phase& a, const Phase& b) const {
    switch (mode) {
        case Mode::EpFinite: {
            if (a.kind != Phase::Kind::Lex || b.kind != Phase::Kind::Lex) cross_kind();
            // admissible order for finite p: (k,0) |-> 2k, (k,1) |-> 2(k-p)+1
            auto key = [this](const Phase& x) { return x.i == 0 ? 2 * x.k : 2 * (x.k - p) + 1; };
            return key(a) < key(b);
        }
        case Mode::EInf:
            if (a.kind != Phase::Kind::Lex || b.kind != Phase::Kind::Lex) cross_kind();
            if (a.i != b.i) return a.i == 1;  // every (.,1) below every (.,0)
            return a.k < b.k;
        case Mode::LexPair:
            if (a.kind != Phase::Kind::Lex || b.kind != Phase::Kind::Lex) cross_kind();
            return std::make_pair(a.k, a.i) < std::make_pair(b.k, b.i);
        case Mode::StablePair: {
            if (a.kind != Phase::Kind::Tag || b.kind != Phase::Kind::Tag) cross_kind();
            auto rank = [](const Phase& x) { return x.k == 1 ? 0 : 1; };
            return rank(a) < rank(b);
        }
        case Mode::Chain:
            if (!same_kind_tagish(a) || !same_kind_tagish(b)) cross_kind();
            if (a.kind == Phase::Kind::TagInf) return false;
            if (b.kind == Phase::Kind::TagInf) return true;
            return a.k < b.k;
        case Mode::RealLine:
            if (a.kind != Phase::Kind::Real || b.kind != Phase::Kind::Real) cross_kind();
            return a.phi < b.phi - 1e-12;
    }
    cross_kind();
}

Phase PhaseOrder::lambda(const Phase& x) const {
    switch (mode) {
        case Mode::EpFinite:
        case Mode::EInf:
        case Mode::LexPair:
            return Phase::lex(x.k + 1, x.i);
        case Mode::StablePair:
            return x;  // slices are shift-stable
        case Mode::Chain:
            return x.kind == Phase::Kind::TagInf ? x : Phase::tag(x.k + 1);
        case Mode::RealLine:
            return Phase::real(x.phi + 1);
    }
    return x;
}

std::vector<ShiftedIndec> Slice::materialize(int min_shift, int max_shift) const {
    if (!shift_stable) return gens;
    std::vector<ShiftedIndec> out;
    for (const ShiftedIndec& g : gens)
        for (int s = min_shift; s <= max_shift; ++s) out.push_back(ShiftedIndec{g.indec, s});
    return out;
}

bool Slice::contains(const ShiftedIndec& x) const {
    for (const ShiftedIndec& g : gens) {
        if (shift_stable ? g.indec == x.indec : g == x) return true;
    }
    return false;
}

ExceptionalCoslicing build_exceptional(long long n, long long p, bool p_infinite) {
    if (!p_infinite && p < 1)
        throw std::invalid_argument("order parameter p must be >= 1 or infinite");
    return ExceptionalCoslicing{n, p_infinite ? 0 : p, p_infinite};
}

const Slice* GeneralCoslicing::slice_at(const Phase& phase) const {
    for (const Slice& s : slices)
        if (s.phase == phase) return &s;
    return nullptr;
}

std::optional<Phase> GeneralCoslicing::phase_of(const ShiftedIndec& x) const {
    for (const Slice& s : slices)
        if (s.contains(x)) return s.phase;
    return std::nullopt;
}

namespace {

int instantiation_radius(const WindowConfig& w) { return w.max_shift + w.max_p + 2; }

void sort_slices(GeneralCoslicing& c) {
    std::stable_sort(c.slices.begin(), c.slices.end(),
                     [&](const Slice& a, const Slice& b) { return c.order.less(a.phase, b.phase); });
}

}  // namespace

GeneralCoslicing to_general(const ExceptionalCoslicing& c, const WindowConfig& w) {
    GeneralCoslicing g;
    g.order = c.order();
    g.pair_index = c.n;
    g.window = w;
    int K = instantiation_radius(w);
    for (long long k = -K; k <= K; ++k) {
        g.slices.push_back(Slice{Phase::lex(k, 0), {n_object(c.n).shifted(static_cast<int>(k))}, false});
        g.slices.push_back(Slice{Phase::lex(k, 1), {n_object(c.n + 1).shifted(static_cast<int>(k))}, false});
    }
    sort_slices(g);
    return g;
}

GeneralCoslicing coarse_two_object(long long n, int gap, const WindowConfig& w) {
    if (gap < 0) throw std::invalid_argument("gap must be >= 0");
    GeneralCoslicing g;
    g.order = PhaseOrder{PhaseOrder::Mode::Chain};
    g.pair_index = n;
    g.window = w;
    int K = instantiation_radius(w);
    for (long long m = -K; m <= K; ++m)
        g.slices.push_back(Slice{Phase::tag(m),
                                 {n_object(n).shifted(static_cast<int>(m)),
                                  n_object(n + 1).shifted(static_cast<int>(m) + gap)},
                                 false});
    sort_slices(g);
    return g;
}

GeneralCoslicing coarse_stable(long long n, const WindowConfig& w) {
    GeneralCoslicing g;
    g.order = PhaseOrder{PhaseOrder::Mode::StablePair};
    g.pair_index = n;
    g.window = w;
    g.slices.push_back(Slice{Phase::tag(1), {n_object(n + 1)}, true});
    g.slices.push_back(Slice{Phase::tag(0), {n_object(n)}, true});
    return g;
}

GeneralCoslicing coarse_chain_inf(long long n, const WindowConfig& w) {
    GeneralCoslicing g;
    g.order = PhaseOrder{PhaseOrder::Mode::Chain};
    g.pair_index = n;
    g.window = w;
    int K = instantiation_radius(w);
    for (long long m = -K; m <= K; ++m)
        g.slices.push_back(Slice{Phase::tag(m), {n_object(n + 1).shifted(static_cast<int>(m))}, false});
    g.slices.push_back(Slice{Phase::tag_inf(), {n_object(n)}, true});
    return g;
}

std::vector<PairPiece> pair_pieces(const ShiftedIndec& x, long long n) {
    std::vector<PairPiece> out;
    if (x.indec.fam == Fam::Regular) {
        long long k = x.shift;
        int d = x.indec.len;
        out.push_back({n_object(n + 1).shifted(static_cast<int>(k)), d, Phase::lex(k, 1)});
        out.push_back({n_object(n).shifted(static_cast<int>(k) + 1), d, Phase::lex(k + 1, 0)});
        return out;
    }
    auto [m, k] = n_form(x);
    if (m == n) {
        out.push_back({x, 1, Phase::lex(k, 0)});
    } else if (m == n + 1) {
        out.push_back({x, 1, Phase::lex(k, 1)});
    } else if (m >= n + 2) {
        out.push_back({n_object(n + 1).shifted(k), static_cast<int>(m - n), Phase::lex(k, 1)});
        out.push_back({n_object(n).shifted(k + 1), static_cast<int>(m - n - 1), Phase::lex(k + 1, 0)});
    } else {  // m <= n - 1
        out.push_back({n_object(n + 1).shifted(k - 1), static_cast<int>(n - m), Phase::lex(k - 1, 1)});
        out.push_back({n_object(n).shifted(k), static_cast<int>(n - m + 1), Phase::lex(k, 0)});
    }
    return out;
}

namespace {

/// Shared tower assembly: pieces per summand, already mapped to the target
/// phase set. Quotients merge equal phases; layers are per-summand partial
/// completions so that K0 coherence holds step by step.
HNTower assemble_tower(const DObject& t, const PhaseOrder& order,
                       const std::vector<std::vector<std::pair<DObject, Phase>>>& summand_pieces) {
    // distinct phases, ascending
    std::vector<Phase> phases;
    for (const auto& pieces : summand_pieces)
        for (const auto& [obj, ph] : pieces)
            if (std::find(phases.begin(), phases.end(), ph) == phases.end()) phases.push_back(ph);
    std::stable_sort(phases.begin(), phases.end(),
                     [&](const Phase& a, const Phase& b) { return order.less(a, b); });

    auto stage_of = [&](const Phase& ph) {
        return static_cast<std::size_t>(
            std::find(phases.begin(), phases.end(), ph) - phases.begin());
    };

    HNTower tower;
    tower.layers.push_back(DObject::zero());
    for (std::size_t s = 0; s < phases.size(); ++s) {
        DObject quotient;
        DObject layer;
        for (std::size_t j = 0; j < summand_pieces.size(); ++j) {
            const auto& pieces = summand_pieces[j];
            std::size_t last_stage = 0;
            for (const auto& [obj, ph] : pieces) last_stage = std::max(last_stage, stage_of(ph));
            for (const auto& [obj, ph] : pieces)
                if (stage_of(ph) == s) quotient.add(obj);
            if (last_stage <= s) {
                layer.add(t.summands()[j].first, t.summands()[j].second);
            } else {
                for (const auto& [obj, ph] : pieces)
                    if (stage_of(ph) <= s) layer.add(obj);
            }
        }
        tower.quotients.push_back({quotient, phases[s]});
        tower.layers.push_back(layer);
    }
    return tower;
}

}  // namespace

HNTower hn_filtration(const DObject& t, const ExceptionalCoslicing& c) {
    if (t.is_zero()) throw std::invalid_argument("zero object has no HN tower");
    std::vector<std::vector<std::pair<DObject, Phase>>> per_summand;
    for (const auto& [x, mult] : t.summands()) {
        std::vector<std::pair<DObject, Phase>> pieces;
        for (const PairPiece& p : pair_pieces(x, c.n)) {
            DObject obj;
            obj.add(p.obj, p.mult * mult);
            pieces.push_back({obj, p.phase});
        }
        per_summand.push_back(std::move(pieces));
    }
    return assemble_tower(t, c.order(), per_summand);
}

HNTower hn_filtration(const DObject& t, const GeneralCoslicing& c) {
    if (t.is_zero()) throw std::invalid_argument("zero object has no HN tower");
    if (!c.pair_index)
        throw std::runtime_error("co-slicing has no exceptional-pair presentation");
    std::vector<std::vector<std::pair<DObject, Phase>>> per_summand;
    for (const auto& [x, mult] : t.summands()) {
        std::vector<std::pair<DObject, Phase>> pieces;
        std::map<std::decay_t<decltype(Phase{}.key())>, std::pair<DObject, Phase>> merged;
        for (const PairPiece& p : pair_pieces(x, *c.pair_index)) {
            auto ph = c.phase_of(p.obj);
            if (!ph) throw std::runtime_error("no slice contains " + p.obj.str());
            auto [it, fresh] = merged.try_emplace(ph->key(), DObject{}, *ph);
            it->second.first.add(p.obj, p.mult * mult);
        }
        for (auto& [key, pair] : merged) pieces.push_back(pair);
        per_summand.push_back(std::move(pieces));
    }
    return assemble_tower(t, c.order, per_summand);
}

bool verify_tower(const HNTower& tower, const GeneralCoslicing& c) {
    if (tower.layers.size() != tower.quotients.size() + 1) return false;
    if (!tower.layers.front().is_zero()) return false;
    for (std::size_t k = 0; k < tower.quotients.size(); ++k) {
        const auto& [q, ph] = tower.quotients[k];
        if (q.is_zero()) return false;
        if (k > 0 && !c.order.less(tower.quotients[k - 1].second, ph)) return false;
        const Slice* slice = c.slice_at(ph);
        if (!slice) return false;
        for (const auto& [x, mult] : q.summands())
            if (!slice->contains(x)) return false;
        // K0 coherence of the step
        K0Class lhs = k0_class(tower.layers[k + 1]);
        K0Class rhs = k0_class(tower.layers[k]) + k0_class(q);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

std::set<ShiftedIndec> saturate(const std::vector<ShiftedIndec>& gens, long long pair_n,
                                const WindowConfig& w, bool thick) {
    std::set<ShiftedIndec> S(gens.begin(), gens.end());
    std::vector<ShiftedIndec> all = window_shifted(w);
    std::size_t before = 0;
    do {
        before = S.size();
        if (thick) {
            std::vector<ShiftedIndec> cur(S.begin(), S.end());
            for (const ShiftedIndec& x : cur) {
                if (x.shift + 1 <= w.max_shift + 1) S.insert(x.shifted(1));
                if (x.shift - 1 >= -(w.max_shift + 1)) S.insert(x.shifted(-1));
            }
        }
        for (const ShiftedIndec& y : all) {
            auto pieces = pair_pieces(y, pair_n);
            if (pieces.size() < 2) continue;
            bool has_left = S.count(pieces[0].obj) > 0;
            bool has_right = S.count(pieces[1].obj) > 0;
            if (has_left && has_right) S.insert(y);
            if (thick && S.count(y)) {
                if (has_left) S.insert(pieces[1].obj);
                if (has_right) S.insert(pieces[0].obj);
            }
        }
    } while (S.size() != before);
    return S;
}

bool covers_inner_window(const std::set<ShiftedIndec>& closure, const WindowConfig& w) {
    for (const Indec& x : window_indecs(w))
        for (int s = -(w.max_shift - 1); s <= w.max_shift - 1; ++s)
            if (!closure.count(ShiftedIndec{x, s})) return false;
    return true;
}

namespace {

std::string hom_witness(const ShiftedIndec& x, const ShiftedIndec& y, int dim) {
    return "hom(" + x.str() + ", " + y.str() + ") = " + std::to_string(dim);
}

}  // namespace

CoslicingReport validate_coslicing(const GeneralCoslicing& c, const std::vector<DObject>& corpus) {
    if (corpus.empty()) throw std::invalid_argument("corpus must be nonempty");
    CoslicingReport report;
    const WindowConfig& w = c.window;
    int lo = -(w.max_shift + 1), hi = w.max_shift + 1;

    // (1) lambda is an order automorphism with lambda(phi) >= phi and
    //     Sigma . slice(phi) = slice(lambda phi)
    for (const Slice& s : c.slices) {
        Phase lphi = c.order.lambda(s.phase);
        if (c.order.less(lphi, s.phase))
            report.violations.push_back({"lambda-monotone", s.phase.str()});
        const Slice* target = c.slice_at(lphi);
        if (!target) continue;  // boundary of the instantiation
        if (s.shift_stable && target->shift_stable) {
            std::set<Indec> a, b;
            for (const auto& g : s.gens) a.insert(g.indec);
            for (const auto& g : target->gens) b.insert(g.indec);
            if (a != b) report.violations.push_back({"lambda-compat", s.phase.str()});
        } else {
            std::set<ShiftedIndec> shifted_gens, target_gens;
            for (const auto& g : s.materialize(lo, hi - 1)) shifted_gens.insert(g.shifted(1));
            for (const auto& g : target->materialize(lo + 1, hi)) target_gens.insert(g);
            if (shifted_gens != target_gens)
                report.violations.push_back({"lambda-compat", s.phase.str()});
        }
    }

    // (2) orthogonality: Hom(Q(phi1), Q(phi2)) = 0 for phi1 < phi2
    std::vector<std::vector<ShiftedIndec>> mats;
    for (const Slice& s : c.slices) mats.push_back(s.materialize(lo, hi));
    for (std::size_t a = 0; a < c.slices.size(); ++a) {
        for (std::size_t b = 0; b < c.slices.size(); ++b) {
            if (!c.order.less(c.slices[a].phase, c.slices[b].phase)) continue;
            for (const ShiftedIndec& x : mats[a])
                for (const ShiftedIndec& y : mats[b])
                    if (int d = hom_dim(x, y); d != 0)
                        report.violations.push_back({"orthogonality", hom_witness(x, y, d)});
        }
    }

    // (3) HN towers exist for every corpus object
    for (const DObject& t : corpus) {
        if (t.is_zero()) continue;
        try {
            HNTower tower = hn_filtration(t, c);
            if (!verify_tower(tower, c) || !(tower.layers.back() == t))
                report.violations.push_back({"hn-tower", t.str()});
        } catch (const std::runtime_error& e) {
            report.violations.push_back({"hn-tower", std::string(e.what())});
        }
    }

    // triviality: some slice's closure is the whole (inner-window) category
    if (c.pair_index) {
        for (std::size_t a = 0; a < c.slices.size() && !report.trivial; ++a) {
            std::set<ShiftedIndec> closure = saturate(mats[a], *c.pair_index, w, false);
            if (covers_inner_window(closure, w)) report.trivial = true;
        }
    } else {
        report.violations.push_back({"presentation", "no exceptional-pair presentation"});
    }

    report.valid = report.violations.empty();
    return report;
}

std::vector<std::pair<Phase, SliceTag>> check_slice_dichotomy(const GeneralCoslicing& c) {
    std::vector<std::pair<Phase, SliceTag>> out;
    for (const Slice& s : c.slices) {
        if (s.shift_stable) {
            out.push_back({s.phase, SliceTag::SuspensionStable});
            continue;
        }
        bool silting = true;
        for (const ShiftedIndec& x : s.gens) {
            for (const ShiftedIndec& y : s.gens) {
                // hom(x, Sigma^i y) can only be nonzero when the relative
                // degree (y.shift + i) - x.shift lies in {0,1}
                for (int i : {x.shift - y.shift, x.shift - y.shift + 1})
                    if (i > 0 && hom_dim(x, y.shifted(i)) != 0) silting = false;
            }
        }
        out.push_back({s.phase, silting ? SliceTag::PartialSilting : SliceTag::Violation});
    }
    return out;
}

bool coarser_witness_check(const GeneralCoslicing& fine, const GeneralCoslicing& coarse,
                           const std::function<Phase(const Phase&)>& r) {
    const WindowConfig& w = fine.window;
    int lo = -(w.max_shift + 1), hi = w.max_shift + 1;
    if (!fine.pair_index) return false;

    // r intertwines the lambdas and is order-non-decreasing
    for (const Slice& s : fine.slices) {
        Phase lphi = fine.order.lambda(s.phase);
        if (fine.slice_at(lphi) && !(r(lphi) == coarse.order.lambda(r(s.phase)))) return false;
    }
    for (const Slice& a : fine.slices)
        for (const Slice& b : fine.slices)
            if (fine.order.less(a.phase, b.phase) && coarse.order.less(r(b.phase), r(a.phase)))
                return false;

    // every coarse slice is hit, and equals the closure of its fiber
    auto restrict_inner = [&](const std::set<ShiftedIndec>& s) {
        std::set<ShiftedIndec> out;
        for (const ShiftedIndec& x : s)
            if (std::abs(x.shift) <= w.max_shift - 1) out.insert(x);
        return out;
    };
    for (const Slice& cs : coarse.slices) {
        std::vector<ShiftedIndec> fiber;
        bool hit = false;
        for (const Slice& fs : fine.slices) {
            if (!(r(fs.phase) == cs.phase)) continue;
            hit = true;
            for (const ShiftedIndec& x : fs.materialize(lo, hi)) fiber.push_back(x);
        }
        if (!hit) {
            // the instantiation boundary may leave extreme coarse phases
            // unhit; only phases with inner-window content must be covered
            auto mat = cs.materialize(lo, hi);
            std::set<ShiftedIndec> mset(mat.begin(), mat.end());
            if (!restrict_inner(mset).empty()) return false;
            continue;
        }
        std::set<ShiftedIndec> closure = saturate(fiber, *fine.pair_index, w, false);
        auto mat = cs.materialize(lo, hi);
        std::set<ShiftedIndec> coarse_set(mat.begin(), mat.end());
        if (restrict_inner(closure) != restrict_inner(coarse_set)) return false;
    }
    return true;
}

std::vector<std::pair<DObject, Phase>> split_hn_decompose(const DObject& x,
                                                          const SplitStabilityData& d) {
    std::vector<std::pair<DObject, Phase>> out;
    for (const auto& [phase, gens] : d.phases) {
        DObject group;
        for (const auto& [s, mult] : x.summands())
            if (std::find(gens.begin(), gens.end(), s) != gens.end()) group.add(s, mult);
        if (!group.is_zero()) out.push_back({group, phase});
    }
    int covered = 0;
    for (const auto& [g, phase] : out) covered += g.total_summands();
    if (covered != x.total_summands())
        throw std::invalid_argument("summand belongs to no phase of the split data");
    return out;
}

double metric_distance(const CostabSlicing& q, const CostabSlicing& r) {
    if (q.pair_index != r.pair_index) return std::numeric_limits<double>::infinity();
    return std::max(std::abs(q.phi0 - r.phi0), std::abs(q.phi1 - r.phi1));
}

}  // namespace kq
