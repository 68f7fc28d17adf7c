// Finite test window: which indecomposables, shifts, tubes and exceptional
// pairs the validators and enumeration checks range over, plus deterministic
// corpus generation.

#pragma once

#include <cstdint>
#include <vector>

#include "kq/core.hpp"

namespace kq {

struct WindowConfig {
    int max_shift = 3;        // shifts in [-max_shift, max_shift]
    int max_pp_index = 6;     // P_t with t <= max_pp_index
    int max_pi_index = 6;     // I_s with s <= max_pi_index
    int max_reg_length = 4;   // regular lengths 1..max_reg_length
    int tube_labels = 3;      // finite tube labels 0..tube_labels-1, plus infinity
    int pair_index_min = -2;  // exceptional pair indices n in [min, max]
    int pair_index_max = 3;
    int max_p = 4;            // finite order parameters 1..max_p (plus infinity)
    std::uint64_t seed = 20260823;

    std::vector<TubeLabel> tubes() const;
};

/// Degree-0 indecomposables within the window.
std::vector<Indec> window_indecs(const WindowConfig& w);

/// All shifted indecomposables: window_indecs across the shift range.
std::vector<ShiftedIndec> window_shifted(const WindowConfig& w);

/// Default validation corpus: every shifted window indecomposable as a
/// singleton object, plus `random_sums` seeded random direct sums
/// (1..4 summands each).
std::vector<DObject> default_corpus(const WindowConfig& w, int random_sums = 100);

}  // namespace kq
