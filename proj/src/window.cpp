#include "kq/window.hpp"

#include <random>

namespace kq {

std::vector<TubeLabel> WindowConfig::tubes() const {
    std::vector<TubeLabel> out;
    for (int i = 0; i < tube_labels; ++i) out.push_back(TubeLabel{i});
    out.push_back(TubeLabel::infinity());
    return out;
}

std::vector<Indec> window_indecs(const WindowConfig& w) {
    std::vector<Indec> out;
    for (int t = 0; t <= w.max_pp_index; ++t) out.push_back(Indec::preprojective(t));
    for (int s = 0; s <= w.max_pi_index; ++s) out.push_back(Indec::preinjective(s));
    for (const auto& tube : w.tubes())
        for (int d = 1; d <= w.max_reg_length; ++d) out.push_back(Indec::regular(tube, d));
    return out;
}

std::vector<ShiftedIndec> window_shifted(const WindowConfig& w) {
    std::vector<ShiftedIndec> out;
    for (int k = -w.max_shift; k <= w.max_shift; ++k)
        for (const Indec& x : window_indecs(w)) out.push_back(ShiftedIndec{x, k});
    return out;
}

std::vector<DObject> default_corpus(const WindowConfig& w, int random_sums) {
    std::vector<DObject> corpus;
    std::vector<ShiftedIndec> all = window_shifted(w);
    for (const ShiftedIndec& x : all) corpus.push_back(DObject(x));

    std::mt19937_64 rng(w.seed);
    std::uniform_int_distribution<int> nsum(1, 4);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int i = 0; i < random_sums; ++i) {
        DObject obj;
        int n = nsum(rng);
        for (int j = 0; j < n; ++j) obj.add(all[pick(rng)], 1);
        corpus.push_back(obj);
    }
    return corpus;
}

}  // namespace kq
