#include "kq/oracle.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace kq::oracle {

using bigint = boost::multiprecision::cpp_int;

QuiverRep representation_of(const Indec& x) {
    QuiverRep r;
    auto [d0, d1] = dim_vector(x);
    r.dim0 = d0;
    r.dim1 = d1;
    r.A.assign(d0, std::vector<long long>(d1, 0));
    r.B.assign(d0, std::vector<long long>(d1, 0));
    switch (x.fam) {
        case Fam::Preprojective:  // (t+1) x t: A = [I;0], B = [0;I]
            for (int j = 0; j < d1; ++j) {
                r.A[j][j] = 1;
                r.B[j + 1][j] = 1;
            }
            break;
        case Fam::Preinjective:  // s x (s+1): A = [I|0], B = [0|I]
            for (int i = 0; i < d0; ++i) {
                r.A[i][i] = 1;
                r.B[i][i + 1] = 1;
            }
            break;
        case Fam::Regular: {
            // finite label x: (Id, J_d(x)); label infinity: (J_d(0), Id)
            int d = x.len;
            bool inf = x.tube.is_infinity();
            long long eig = inf ? 0 : x.tube.id;
            auto& ident = inf ? r.B : r.A;
            auto& jordan = inf ? r.A : r.B;
            for (int i = 0; i < d; ++i) {
                ident[i][i] = 1;
                jordan[i][i] = eig;
                if (i + 1 < d) jordan[i][i + 1] = 1;
            }
            break;
        }
    }
    return r;
}

namespace {

int rank_bareiss(std::vector<std::vector<bigint>>& m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rk = 0;
    bigint prev = 1;
    for (int col = 0; col < cols && rk < rows; ++col) {
        int pivot = -1;
        for (int i = rk; i < rows; ++i)
            if (m[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(m[rk], m[pivot]);
        for (int i = rk + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                m[i][j] = (m[rk][col] * m[i][j] - m[i][col] * m[rk][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[rk][col];
        ++rk;
    }
    return rk;
}

constexpr long long kPrime = 1000003;

long long mod_inv(long long a, long long p) {
    long long r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

int rank_mod_p(std::vector<std::vector<long long>>& m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (auto& row : m)
        for (auto& v : row) v = ((v % kPrime) + kPrime) % kPrime;
    int rk = 0;
    for (int col = 0; col < cols && rk < rows; ++col) {
        int pivot = -1;
        for (int i = rk; i < rows; ++i)
            if (m[i][col]) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(m[rk], m[pivot]);
        long long inv = mod_inv(m[rk][col], kPrime);
        for (int i = rk + 1; i < rows; ++i) {
            if (!m[i][col]) continue;
            long long f = m[i][col] * inv % kPrime;
            for (int j = col; j < cols; ++j)
                m[i][j] = (m[i][j] - f * m[rk][j]) % kPrime;
        }
        ++rk;
    }
    return rk;
}

}  // namespace

int rank(std::vector<std::vector<long long>> m, Field field) {
    if (m.empty() || m[0].empty()) return 0;
    if (field == Field::PrimeField) return rank_mod_p(m);
    std::vector<std::vector<bigint>> big(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        big[i].assign(m[i].begin(), m[i].end());
    return rank_bareiss(big);
}

int hom_dim_oracle(const Indec& x, const Indec& y, int degree, Field field) {
    if (degree != 0 && degree != 1) throw std::invalid_argument("degree must be 0 or 1");
    if (degree == 1) {
        long long e = euler_form(k0_class(ShiftedIndec{x, 0}), k0_class(ShiftedIndec{y, 0}));
        return static_cast<int>(hom_dim_oracle(x, y, 0, field) - e);
    }

    QuiverRep rx = representation_of(x);
    QuiverRep ry = representation_of(y);
    // unknowns: f0 (dim0_y x dim0_x) then f1 (dim1_y x dim1_x)
    int n0 = ry.dim0 * rx.dim0;
    int n1 = ry.dim1 * rx.dim1;
    int unknowns = n0 + n1;
    if (unknowns == 0) return 0;

    // equations f0 M_x - M_y f1 = 0 for M in {A, B}, entries indexed by
    // (row in dim0_y) x (col in dim1_x)
    std::vector<std::vector<long long>> sys;
    sys.reserve(2 * static_cast<size_t>(ry.dim0) * rx.dim1);
    auto add_equations = [&](const auto& mx, const auto& my) {
        for (int r = 0; r < ry.dim0; ++r) {
            for (int c = 0; c < rx.dim1; ++c) {
                std::vector<long long> eq(unknowns, 0);
                for (int k = 0; k < rx.dim0; ++k)
                    eq[r * rx.dim0 + k] += mx[k][c];  // coeff of f0[r][k]
                for (int k = 0; k < ry.dim1; ++k)
                    eq[n0 + k * rx.dim1 + c] -= my[r][k];  // coeff of f1[k][c]
                sys.push_back(std::move(eq));
            }
        }
    };
    add_equations(rx.A, ry.A);
    add_equations(rx.B, ry.B);
    return unknowns - rank(std::move(sys), field);
}

}  // namespace kq::oracle
