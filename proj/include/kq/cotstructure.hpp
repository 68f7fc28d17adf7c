// The four classified families of co-t-structures on D^b(KQ): membership,
// co-hearts, induction from co-slicings, boundedness, approximation
// triangles, and the silting-theoretic analysis backing the classification.

#pragma once

#include <optional>
#include <vector>

#include "kq/coslicing.hpp"
#include "kq/core.hpp"
#include "kq/window.hpp"

namespace kq {

enum class CotFamily { Bounded, BoundedBelow, BoundedAbove, Stable };

/// Classified co-t-structure. All four families live over an exceptional
/// pair {N_n, N_{n+1}}:
///   Bounded       — induced from E_p (p >= 1 finite) by a cut delta = (k,i);
///   BoundedBelow  — induced from E_inf by a cut (k,0);
///   BoundedAbove  — induced from E_inf by a cut (k,1);
///   Stable        — the split into all (.,1) phases vs all (.,0) phases.
struct CoTStructureSpec {
    CotFamily family = CotFamily::Bounded;
    long long n = 1;
    long long p = 1;              // Bounded only
    Phase cut = Phase::lex(0, 0); // unused for Stable

    std::string str() const;
};

struct SiltingSet {
    std::vector<ShiftedIndec> objects;
};

/// How to split the phase set of a co-slicing into (Phi-, Phi+).
struct Partition {
    enum class Kind { CutAt, StableSplit };
    Kind kind = Kind::CutAt;
    Phase cut = Phase::lex(0, 0);  // Phi- = { phi <= cut } for CutAt

    static Partition cut_at(Phase c) { return Partition{Kind::CutAt, c}; }
    static Partition stable_split() { return Partition{Kind::StableSplit, {}}; }
};

/// Classifies the co-t-structure induced by one of the library co-slicings
/// and an order-compatible partition. Throws on partitions or co-slicings
/// outside the classified families.
CoTStructureSpec induce_cotstructure(const GeneralCoslicing& c, const Partition& part);

/// Membership via canonical HN-quotient phases. The zero object is in both.
bool member_aisle(const DObject& x, const CoTStructureSpec& s);
bool member_coaisle(const DObject& x, const CoTStructureSpec& s);

/// Indecomposables of A intersect Sigma^{-1} B: two objects for Bounded, one
/// for the half-bounded families, none for Stable.
std::vector<ShiftedIndec> co_heart(const CoTStructureSpec& s);

/// Bounded co-hearts in normal form: (m, n, gap) with indecomposables
/// Sigma^m N_n and Sigma^{m+gap} N_{n+1}. Empty for other families.
std::optional<std::tuple<long long, long long, long long>> co_heart_triple(const CoTStructureSpec& s);

enum class Boundedness { Bounded, BoundedBelow, BoundedAbove, Stable };

/// Phase-set reachability criterion (does the union of lambda-iterates of
/// Phi- / Phi+ exhaust the phases?) plus corpus witnesses.
Boundedness boundedness_class(const CoTStructureSpec& s, const WindowConfig& w);

/// Splits the canonical HN pieces of x at the cut: a in the aisle, b in the
/// co-aisle, [x] = [a] + [b].
std::pair<DObject, DObject> approximation_triangle(const DObject& x, const CoTStructureSpec& s);

/// Hom(s, Sigma^i s') = 0 for all members and all i > 0, checked at the
/// exactly-relevant degrees of the hom table.
bool is_partial_silting(const SiltingSet& s);

/// Partial silting and thickly generating: saturation (extensions, shifts,
/// two-out-of-three, summands) from s reaches the whole inner window.
bool is_silting(const SiltingSet& s, const WindowConfig& w);

/// Completions of a singleton {Sigma^m N_t} to silting pairs, clipped to the
/// window: {Sigma^m N_t, Sigma^{m+i} N_{t+1}} for i >= 0 and
/// {Sigma^{m+j} N_{t-1}, Sigma^m N_t} for j <= 0.
std::vector<SiltingSet> complete_almost_silting(const SiltingSet& s, const WindowConfig& w);

/// Every spec of the four families within the window, deduplicated (Bounded
/// specs by their (m, n, gap) co-heart triple), deterministically ordered.
std::vector<CoTStructureSpec> classify_all(const WindowConfig& w);

struct CotReport {
    bool pass = false;
    bool warning = false;  // vacuous pass (empty corpus)
    std::vector<Violation> witnesses;
};

/// Shift-compatibility, Hom-orthogonality and approximation triangles over
/// the corpus.
CotReport verify_cotstructure_axioms(const CoTStructureSpec& s, const std::vector<DObject>& corpus);

/// Exhaustive partial-silting search over subsets of window indecomposables.
struct SiltingSearchResult {
    std::vector<SiltingSet> singletons;
    std::vector<SiltingSet> pairs;
    std::vector<SiltingSet> triples;
};
SiltingSearchResult silting_search(const WindowConfig& w);

/// Lexicographic-product co-slicing of a bounded co-t-structure with
/// split-stability data on its co-heart: slices Sigma^j (phase subcategories).
GeneralCoslicing combine_with_split_data(const CoTStructureSpec& bounded_spec,
                                         const SplitStabilityData& d, const WindowConfig& w);

}  // namespace kq
