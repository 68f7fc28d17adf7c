// Generalised co-slicings of D^b(KQ): the exceptional co-slicings E_p, the
// coarse presentations with one/two/countably many indecomposables per slice,
// axiom validation, Harder-Narasimhan towers, split-stability data, the
// finer/coarser comparison and the metric on real-phase co-slicings.

#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kq/core.hpp"
#include "kq/window.hpp"

namespace kq {

/// A point of a linearly ordered phase set. Three kinds are used:
///   Lex(k, i)  — Z x {0,1} phases of the exceptional co-slicings;
///   Tag(k) / TagInf — integer (or Z u {inf}) phases of the coarse forms;
///   Real(phi)  — real phases of co-stability co-slicings.
/// Cross-kind comparison is an error; the actual order lives in PhaseOrder.
struct Phase {
    enum class Kind : std::uint8_t { Lex, Tag, TagInf, Real };
    Kind kind = Kind::Lex;
    long long k = 0;
    int i = 0;
    double phi = 0.0;

    static Phase lex(long long k, int i) { return Phase{Kind::Lex, k, i, 0.0}; }
    static Phase tag(long long k) { return Phase{Kind::Tag, k, 0, 0.0}; }
    static Phase tag_inf() { return Phase{Kind::TagInf, 0, 0, 0.0}; }
    static Phase real(double phi) { return Phase{Kind::Real, 0, 0, phi}; }

    // structural key for containers; NOT the semantic phase order
    auto key() const { return std::make_tuple(static_cast<int>(kind), k, i, phi); }
    bool operator==(const Phase& o) const { return key() == o.key(); }

    std::string str() const;
};

/// Total order + shift automorphism lambda on one kind of phase set.
struct PhaseOrder {
    enum class Mode {
        EpFinite,    // Lex, E_p order for finite p >= 1
        EInf,        // Lex, all (.,1) below all (.,0)
        LexPair,     // Lex, plain lexicographic (k, then i)
        StablePair,  // Tag in {0,1}, with 1 < 0
        Chain,       // Tag ascending, TagInf greatest
        RealLine,    // Real phases
    };
    Mode mode = Mode::EpFinite;
    long long p = 1;  // order parameter for EpFinite

    bool less(const Phase& a, const Phase& b) const;  // throws on cross-kind
    bool leq(const Phase& a, const Phase& b) const { return a == b || less(a, b); }
    Phase lambda(const Phase& x) const;  // the automorphism induced by Sigma
};

/// One slice: additive closure of gens (all shifts of gens when shift_stable).
struct Slice {
    Phase phase{};
    std::vector<ShiftedIndec> gens;
    bool shift_stable = false;

    std::vector<ShiftedIndec> materialize(int min_shift, int max_shift) const;
    bool contains(const ShiftedIndec& x) const;
};

/// E_p for an exceptional pair {N_n, N_{n+1}}: slice((k,0)) = add Sigma^k N_n,
/// slice((k,1)) = add Sigma^k N_{n+1}, order per the admissible linear orders.
struct ExceptionalCoslicing {
    long long n = 1;
    long long p = 1;       // >= 1 when finite
    bool p_infinite = false;

    PhaseOrder order() const {
        if (p_infinite) return PhaseOrder{PhaseOrder::Mode::EInf, 0};
        return PhaseOrder{PhaseOrder::Mode::EpFinite, p};
    }
};

/// Rejects p = 0 (the order axioms force (n,1) < (n,0)).
ExceptionalCoslicing build_exceptional(long long n, long long p, bool p_infinite = false);

/// Finitely presented co-slicing instantiated over a window: slices listed in
/// ascending phase order, plus the exceptional pair the HN rewriting uses.
struct GeneralCoslicing {
    PhaseOrder order{};
    std::vector<Slice> slices;
    std::optional<long long> pair_index;
    bool ext_closed_slices = false;  // slices are extension closures of gens
    WindowConfig window{};

    const Slice* slice_at(const Phase& phase) const;
    /// Phase of the slice whose (materialized/saturated) members include x.
    std::optional<Phase> phase_of(const ShiftedIndec& x) const;
};

/// Instantiations of the library co-slicings over a window.
GeneralCoslicing to_general(const ExceptionalCoslicing& c, const WindowConfig& w);
/// Two-object slices R(m) = add{Sigma^m N_n, Sigma^{m+gap} N_{n+1}}, Phi = Z.
GeneralCoslicing coarse_two_object(long long n, int gap, const WindowConfig& w);
/// Two shift-stable slices, phases 1 < 0: R(1) = shifts of N_{n+1}, R(0) = shifts of N_n.
GeneralCoslicing coarse_stable(long long n, const WindowConfig& w);
/// Phi = Z u {inf}: R(m) = add Sigma^m N_{n+1}, R(inf) = all shifts of N_n.
GeneralCoslicing coarse_chain_inf(long long n, const WindowConfig& w);

/// Canonical rewriting of one shifted indecomposable into pieces lying in the
/// slices of the exceptional pair n, tagged with Lex phases. Semistable
/// objects yield a single piece; everything else exactly two.
struct PairPiece {
    ShiftedIndec obj{};
    int mult = 1;
    Phase phase{};  // Lex
};
std::vector<PairPiece> pair_pieces(const ShiftedIndec& x, long long n);

/// HN tower: layers t_0 = 0, ..., t_last = t with phase-tagged quotients.
struct HNTower {
    std::vector<DObject> layers;
    std::vector<std::pair<DObject, Phase>> quotients;
};

HNTower hn_filtration(const DObject& t, const ExceptionalCoslicing& c);
HNTower hn_filtration(const DObject& t, const GeneralCoslicing& c);

/// Checks the tower invariants (strict phase increase, nonzero quotients in
/// their slices, K0 coherence, zero bottom layer) without requiring
/// canonicity. The filtered object is the final layer.
bool verify_tower(const HNTower& tower, const GeneralCoslicing& c);

struct Violation {
    std::string check;
    std::string witness;
};
struct CoslicingReport {
    bool valid = false;
    bool trivial = false;
    std::vector<Violation> violations;
};

/// Axioms (1)-(3) of a generalised co-slicing on a corpus, plus triviality
/// (some slice's closure covers the whole inner window).
CoslicingReport validate_coslicing(const GeneralCoslicing& c, const std::vector<DObject>& corpus);

enum class SliceTag { SuspensionStable, PartialSilting, Violation };
std::vector<std::pair<Phase, SliceTag>> check_slice_dichotomy(const GeneralCoslicing& c);

/// Extension-and-summand closure of gens within the window, computed by
/// saturation over the pair-relative standard triangles. With thick = true
/// also closes under shifts and two-out-of-three (thick subcategory).
std::set<ShiftedIndec> saturate(const std::vector<ShiftedIndec>& gens, long long pair_n,
                                const WindowConfig& w, bool thick = false);

/// True when the set contains every window indecomposable at every shift of
/// magnitude <= max_shift - 1 (the inner window, away from clipping effects).
bool covers_inner_window(const std::set<ShiftedIndec>& closure, const WindowConfig& w);

/// Witness check for "fine is finer than coarse via r": r intertwines the
/// lambdas, is order-non-decreasing, and each coarse slice is the closure of
/// the union of fine slices over its fiber (within the window).
bool coarser_witness_check(const GeneralCoslicing& fine, const GeneralCoslicing& coarse,
                           const std::function<Phase(const Phase&)>& r);

/// Split-stability data on a co-heart: phases ascending, generators per phase.
struct SplitStabilityData {
    std::vector<std::pair<Phase, std::vector<ShiftedIndec>>> phases;  // ascending
    PhaseOrder order{PhaseOrder::Mode::RealLine};
};

std::vector<std::pair<DObject, Phase>> split_hn_decompose(const DObject& x,
                                                          const SplitStabilityData& d);

/// Real-phase condition-(S) co-slicing of a co-stability condition:
/// Q(phi0 + k) = add Sigma^k N_n, Q(phi1 + k) = add Sigma^k N_{n+1}.
struct CostabSlicing {
    long long pair_index = 0;
    double phi1 = 0.0;
    double phi0 = 0.0;  // phi1 < phi0
};

/// inf{eps : Q(phi) included in R([phi-eps, phi+eps])}; infinity when the pair
/// indices differ, else max(|dphi0|, |dphi1|).
double metric_distance(const CostabSlicing& q, const CostabSlicing& r);

}  // namespace kq
