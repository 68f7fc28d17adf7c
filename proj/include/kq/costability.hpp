// Co-stability conditions on D^b(KQ): central charges on K0 = Z^2, real-phase
// condition-(S) co-slicings, the quintuple parametrization, distances and the
// path-component structure (Z disjoint copies of C^2, checked at desk scale).

#pragma once

#include <complex>
#include <vector>

#include "kq/coslicing.hpp"
#include "kq/core.hpp"

namespace kq {

/// Central charge given by its values on the basis {[N_n], [N_{n+1}]},
/// stored in polar form m * exp(i pi phi) with masses > 0.
struct CentralCharge {
    long long pair_index = 0;
    double m0 = 1.0, phi0 = 0.0;  // Z(N_n)
    double m1 = 1.0, phi1 = 0.0;  // Z(N_{n+1})

    std::complex<double> value_n0() const;
    std::complex<double> value_n1() const;
    /// Extension to K0: evaluates on the class of x in the {[N_n],[N_{n+1}]} basis.
    std::complex<double> operator()(const K0Class& cls) const;
};

struct CostabCondition {
    CentralCharge charge;
    CostabSlicing slicing;
};

/// (n, phi1, phi0, m1, m0) with phi1 < phi0 and positive masses.
struct Quintuple {
    long long n = 0;
    double phi1 = 0.0, phi0 = 0.0;
    double m1 = 1.0, m0 = 1.0;
};

CostabCondition from_quintuple(const Quintuple& q);
Quintuple to_quintuple(const CostabCondition& c);

struct CostabReport {
    bool pass = false;
    std::vector<Violation> violations;
};

/// Charge/phase compatibility on every slice generator plus the split HN
/// property on the induced co-heart.
CostabReport validate_condition(const CostabCondition& c);

/// The semistable indecomposables are all shifts of N_n and N_{n+1};
/// returned symbolically as the pair index.
long long semistable_set(const CostabCondition& c);

/// Path components are separated exactly by the semistable sets.
bool same_component(const CostabCondition& c1, const CostabCondition& c2);

/// max of the co-slicing metric and the sup-over-basis charge distance;
/// infinite iff the pair indices differ.
double costab_distance(const CostabCondition& c1, const CostabCondition& c2);

/// Linear interpolation of quintuples: steps+1 valid conditions from c1 to
/// c2. Throws across components.
std::vector<CostabCondition> component_walk(const CostabCondition& c1, const CostabCondition& c2,
                                            int steps);

}  // namespace kq
