// Combinatorial model of the bounded derived category of the Kronecker
// algebra: indecomposable objects, shifts, Grothendieck group classes,
// closed-form Hom dimensions and the standard triangles.
//
// Conventions (frozen for bit-exact test vectors):
//   quiver 0 <== 1 (two arrows), left modules, dimension vectors at (0,1);
//   P_t -> (t+1, t),  I_s -> (s, s+1),  R_{x,d} -> (d, d).

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace kq {

/// Point of the (finite, configurable) tube index set. id >= 0 is a finite
/// point, kInfinity is the point at infinity. Labels are opaque: only
/// equality matters for Hom rules.
struct TubeLabel {
    static constexpr int kInfinity = -1;
    int id = 0;

    bool is_infinity() const { return id == kInfinity; }
    auto operator<=>(const TubeLabel&) const = default;

    static TubeLabel infinity() { return TubeLabel{kInfinity}; }
    std::string str() const { return is_infinity() ? "inf" : std::to_string(id); }
};

enum class Fam : std::uint8_t { Preprojective, Preinjective, Regular };

/// Indecomposable module of mod KQ, viewed as a degree-0 stalk complex.
struct Indec {
    Fam fam = Fam::Preprojective;
    int index = 0;        // t for P_t, s for I_s; unused for regulars
    TubeLabel tube{};     // regulars only
    int len = 0;          // regular length d >= 1

    static Indec preprojective(int t) {
        if (t < 0) throw std::invalid_argument("P_t needs t >= 0");
        return Indec{Fam::Preprojective, t, {}, 0};
    }
    static Indec preinjective(int s) {
        if (s < 0) throw std::invalid_argument("I_s needs s >= 0");
        return Indec{Fam::Preinjective, s, {}, 0};
    }
    static Indec regular(TubeLabel x, int d) {
        if (d < 1) throw std::invalid_argument("R_{x,d} needs d >= 1");
        return Indec{Fam::Regular, 0, x, d};
    }

    auto key() const { return std::make_tuple(static_cast<int>(fam), index, tube.id, len); }
    bool operator==(const Indec& o) const { return key() == o.key(); }
    auto operator<=>(const Indec& o) const { return key() <=> o.key(); }

    std::string str() const;
};

/// Sigma^shift applied to a stalk complex. Pairs are canonical: isomorphism
/// is componentwise equality.
struct ShiftedIndec {
    Indec indec{};
    int shift = 0;

    auto key() const { return std::make_tuple(shift, indec.key()); }
    bool operator==(const ShiftedIndec& o) const { return key() == o.key(); }
    auto operator<=>(const ShiftedIndec& o) const { return key() <=> o.key(); }

    ShiftedIndec shifted(int by) const { return ShiftedIndec{indec, shift + by}; }
    std::string str() const;
};

/// Formal finite direct sum of shifted indecomposables; the empty sum is the
/// zero object. Multiset equality is isomorphism (Krull-Schmidt).
class DObject {
public:
    DObject() = default;
    explicit DObject(ShiftedIndec x) { add(x, 1); }

    static DObject zero() { return DObject{}; }

    void add(ShiftedIndec x, int mult);
    void add(const DObject& other);

    bool is_zero() const { return summands_.empty(); }
    int total_summands() const;
    const std::vector<std::pair<ShiftedIndec, int>>& summands() const { return summands_; }

    DObject shifted(int by) const;

    bool operator==(const DObject& o) const { return summands_ == o.summands_; }
    std::string str() const;

private:
    // sorted by ShiftedIndec key, multiplicities > 0
    std::vector<std::pair<ShiftedIndec, int>> summands_;
};

/// Class in K_0 = Z^2, basis the simples at vertices (0,1).
struct K0Class {
    long long a0 = 0;
    long long a1 = 0;
    bool operator==(const K0Class&) const = default;
    K0Class operator+(const K0Class& o) const { return {a0 + o.a0, a1 + o.a1}; }
    K0Class operator-() const { return {-a0, -a1}; }
};

std::pair<int, int> dim_vector(const Indec& x);
K0Class k0_class(const DObject& x);
K0Class k0_class(const ShiftedIndec& x);

/// <a,b> = a0*b0 + a1*b1 - 2*a1*b0. Satisfies
/// <[X],[Y]> = hom(X,Y) - hom(X,SY) for degree-0 modules.
long long euler_form(const K0Class& a, const K0Class& b);

/// dim Hom(S^a X, S^b Y); zero unless b-a in {0,1} (hereditary).
int hom_dim(const ShiftedIndec& x, const ShiftedIndec& y);
int hom_dim0(const Indec& x, const Indec& y);  // degree-0 table
int ext_dim1(const Indec& x, const Indec& y);  // hom0 - euler form

/// Bilinear extension over summands.
long long hom_dim_obj(const DObject& x, const DObject& y);

/// N_i = P_{i-1} for i > 0, S^{-1} I_{-i} for i <= 0. [N_i] = (i, i-1).
ShiftedIndec n_object(long long i);

/// Inverse of n_object on non-regular objects: returns (i, extra shift k)
/// with x = S^k N_i. Throws on regulars.
std::pair<long long, int> n_form(const ShiftedIndec& x);

/// AR translate; fixes regulars, commutes with shift.
ShiftedIndec ar_translate(const ShiftedIndec& x);

/// Standard triangle P_1^a -> x -> (S P_0)^b for x a degree-0 indecomposable;
/// degenerate (x, x, 0) for x in {P_0, P_1}.
struct Triangle {
    DObject left, mid, right;
};
Triangle standard_triangle(const Indec& x);

}  // namespace kq
