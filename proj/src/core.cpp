#include "kq/core.hpp"

#include <algorithm>

namespace kq {

std::string Indec::str() const {
    switch (fam) {
        case Fam::Preprojective: return "P" + std::to_string(index);
        case Fam::Preinjective: return "I" + std::to_string(index);
        case Fam::Regular: return "R(" + tube.str() + "," + std::to_string(len) + ")";
    }
    return "?";
}

std::string ShiftedIndec::str() const {
    if (shift == 0) return indec.str();
    return "S^" + std::to_string(shift) + " " + indec.str();
}

void DObject::add(ShiftedIndec x, int mult) {
    if (mult == 0) return;
    auto it = std::lower_bound(summands_.begin(), summands_.end(), x,
                               [](const auto& p, const ShiftedIndec& v) { return p.first < v; });
    if (it != summands_.end() && it->first == x) {
        it->second += mult;
        if (it->second == 0) summands_.erase(it);
        else if (it->second < 0) throw std::invalid_argument("negative multiplicity");
    } else {
        if (mult < 0) throw std::invalid_argument("negative multiplicity");
        summands_.insert(it, {x, mult});
    }
}

void DObject::add(const DObject& other) {
    for (const auto& [x, m] : other.summands_) add(x, m);
}

int DObject::total_summands() const {
    int n = 0;
    for (const auto& [x, m] : summands_) n += m;
    return n;
}

DObject DObject::shifted(int by) const {
    DObject r;
    for (const auto& [x, m] : summands_) r.add(x.shifted(by), m);
    return r;
}

std::string DObject::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& [x, m] : summands_) {
        if (!s.empty()) s += " + ";
        s += x.str();
        if (m > 1) s += "^" + std::to_string(m);
    }
    return s;
}

std::pair<int, int> dim_vector(const Indec& x) {
    switch (x.fam) {
        case Fam::Preprojective: return {x.index + 1, x.index};
        case Fam::Preinjective: return {x.index, x.index + 1};
        case Fam::Regular: return {x.len, x.len};
    }
    return {0, 0};
}

K0Class k0_class(const ShiftedIndec& x) {
    auto [d0, d1] = dim_vector(x.indec);
    long long sign = (x.shift % 2 == 0) ? 1 : -1;
    return {sign * d0, sign * d1};
}

K0Class k0_class(const DObject& x) {
    K0Class c{};
    for (const auto& [s, m] : x.summands()) {
        K0Class k = k0_class(s);
        c.a0 += m * k.a0;
        c.a1 += m * k.a1;
    }
    return c;
}

long long euler_form(const K0Class& a, const K0Class& b) {
    return a.a0 * b.a0 + a.a1 * b.a1 - 2 * a.a1 * b.a0;
}

int hom_dim0(const Indec& x, const Indec& y) {
    if (x.fam == Fam::Preprojective) {
        if (y.fam == Fam::Preprojective) return std::max(0, y.index - x.index + 1);
        if (y.fam == Fam::Preinjective) return x.index + y.index;
        return y.len;
    }
    if (x.fam == Fam::Regular) {
        if (y.fam == Fam::Preinjective) return x.len;
        if (y.fam == Fam::Regular)
            return (x.tube == y.tube) ? std::min(x.len, y.len) : 0;
        return 0;  // Hom(R, P) = 0
    }
    // preinjective source
    if (y.fam == Fam::Preinjective) return std::max(0, x.index - y.index + 1);
    return 0;  // Hom(I, P) = Hom(I, R) = 0
}

int ext_dim1(const Indec& x, const Indec& y) {
    long long e = hom_dim0(x, y) - euler_form(k0_class(ShiftedIndec{x, 0}), k0_class(ShiftedIndec{y, 0}));
    return static_cast<int>(e);
}

int hom_dim(const ShiftedIndec& x, const ShiftedIndec& y) {
    int d = y.shift - x.shift;
    if (d == 0) return hom_dim0(x.indec, y.indec);
    if (d == 1) return ext_dim1(x.indec, y.indec);
    return 0;
}

long long hom_dim_obj(const DObject& x, const DObject& y) {
    long long total = 0;
    for (const auto& [sx, mx] : x.summands())
        for (const auto& [sy, my] : y.summands())
            total += static_cast<long long>(mx) * my * hom_dim(sx, sy);
    return total;
}

ShiftedIndec n_object(long long i) {
    if (i > 0) return ShiftedIndec{Indec::preprojective(static_cast<int>(i - 1)), 0};
    return ShiftedIndec{Indec::preinjective(static_cast<int>(-i)), -1};
}

std::pair<long long, int> n_form(const ShiftedIndec& x) {
    switch (x.indec.fam) {
        case Fam::Preprojective: return {x.indec.index + 1, x.shift};
        case Fam::Preinjective: return {-static_cast<long long>(x.indec.index), x.shift + 1};
        case Fam::Regular: throw std::invalid_argument("regular objects have no N-form");
    }
    throw std::invalid_argument("bad indec");
}

ShiftedIndec ar_translate(const ShiftedIndec& x) {
    const Indec& m = x.indec;
    switch (m.fam) {
        case Fam::Regular: return x;  // homogeneous tubes are tau-stable
        case Fam::Preinjective: return ShiftedIndec{Indec::preinjective(m.index + 2), x.shift};
        case Fam::Preprojective:
            if (m.index >= 2) return ShiftedIndec{Indec::preprojective(m.index - 2), x.shift};
            return ShiftedIndec{Indec::preinjective(1 - m.index), x.shift - 1};
    }
    throw std::invalid_argument("bad indec");
}

Triangle standard_triangle(const Indec& x) {
    const ShiftedIndec p1{Indec::preprojective(1), 0};
    const ShiftedIndec sp0{Indec::preprojective(0), 1};
    DObject mid(ShiftedIndec{x, 0});
    if (x.fam == Fam::Preprojective && x.index <= 1)
        return Triangle{mid, mid, DObject::zero()};

    int a = 0, b = 0;
    switch (x.fam) {
        case Fam::Regular: a = x.len; b = x.len; break;
        case Fam::Preprojective: a = x.index; b = x.index - 1; break;
        case Fam::Preinjective: a = x.index + 1; b = x.index + 2; break;
    }
    DObject left, right;
    left.add(p1, a);
    right.add(sp0, b);
    return Triangle{left, mid, right};
}

}  // namespace kq
