// Brute-force Hom-space oracle, independent of the closed-form Hom table.
// Builds the matrix normal form of each indecomposable Kronecker
// representation and computes Hom dimensions by solving the intertwiner
// system exactly. No floating point anywhere.

#pragma once

#include <vector>

#include "kq/core.hpp"

namespace kq::oracle {

/// Representation of the Kronecker quiver: two dim0 x dim1 integer
/// matrices (maps from the vertex-1 space to the vertex-0 space).
struct QuiverRep {
    int dim0 = 0;
    int dim1 = 0;
    std::vector<std::vector<long long>> A, B;
};

enum class Field {
    Rationals,   // exact rank over Q (fraction-free elimination over Z)
    PrimeField,  // rank mod a fixed large prime, faster
};

QuiverRep representation_of(const Indec& x);

/// degree 0: dimension of {(f0,f1) : f0 A_x = A_y f1, f0 B_x = B_y f1}.
/// degree 1: degree-0 dimension minus the Euler form.
int hom_dim_oracle(const Indec& x, const Indec& y, int degree,
                   Field field = Field::Rationals);

/// Exact rank of an integer matrix (Bareiss fraction-free elimination
/// over arbitrary-precision integers, or modular if field is PrimeField).
int rank(std::vector<std::vector<long long>> m, Field field = Field::Rationals);

}  // namespace kq::oracle
