#include "kq/costability.hpp"

#include <cmath>

namespace kq {

namespace {
constexpr double kPi = 3.14159265358979323846;

std::complex<double> polar_pi(double mass, double phase) {
    return std::polar(mass, kPi * phase);
}
}  // namespace

std::complex<double> CentralCharge::value_n0() const { return polar_pi(m0, phi0); }
std::complex<double> CentralCharge::value_n1() const { return polar_pi(m1, phi1); }

std::complex<double> CentralCharge::operator()(const K0Class& cls) const {
    // [N_n] = (n, n-1), [N_{n+1}] = (n+1, n); the basis matrix is unimodular
    long long n = pair_index;
    double alpha = static_cast<double>(n * cls.a0 - (n + 1) * cls.a1);
    double beta = static_cast<double>(-(n - 1) * cls.a0 + n * cls.a1);
    return alpha * value_n0() + beta * value_n1();
}

CostabCondition from_quintuple(const Quintuple& q) {
    if (!(q.phi1 < q.phi0)) throw std::invalid_argument("quintuple needs phi1 < phi0");
    if (!(q.m1 > 0) || !(q.m0 > 0)) throw std::invalid_argument("masses must be positive");
    CostabCondition c;
    c.charge = CentralCharge{q.n, q.m0, q.phi0, q.m1, q.phi1};
    c.slicing = CostabSlicing{q.n, q.phi1, q.phi0};
    return c;
}

Quintuple to_quintuple(const CostabCondition& c) {
    return Quintuple{c.slicing.pair_index, c.slicing.phi1, c.slicing.phi0,
                     std::abs(c.charge.value_n1()), std::abs(c.charge.value_n0())};
}

CostabReport validate_condition(const CostabCondition& c) {
    CostabReport report;
    constexpr double tol = 1e-9;

    if (c.charge.pair_index != c.slicing.pair_index)
        report.violations.push_back({"compatibility", "charge and slicing pair indices differ"});
    if (!(c.charge.m0 > 0) || !(c.charge.m1 > 0))
        report.violations.push_back({"compatibility", "non-positive mass"});
    if (!(c.slicing.phi1 < c.slicing.phi0))
        report.violations.push_back({"phases", "phi1 >= phi0"});
    if (std::abs(c.charge.phi0 - c.slicing.phi0) > tol ||
        std::abs(c.charge.phi1 - c.slicing.phi1) > tol)
        report.violations.push_back({"compatibility", "charge phase differs from slicing phase"});

    // Z(q) = m(q) exp(i pi phi) on slice generators Sigma^k N_n, Sigma^k N_{n+1}
    long long n = c.slicing.pair_index;
    for (int k = -2; k <= 2; ++k) {
        auto z_n0 = c.charge(k0_class(n_object(n).shifted(k)));
        auto z_n1 = c.charge(k0_class(n_object(n + 1).shifted(k)));
        if (std::abs(z_n0 - polar_pi(c.charge.m0, c.slicing.phi0 + k)) > tol)
            report.violations.push_back({"charge", "Z mismatch on slice at phi0 + " + std::to_string(k)});
        if (std::abs(z_n1 - polar_pi(c.charge.m1, c.slicing.phi1 + k)) > tol)
            report.violations.push_back({"charge", "Z mismatch on slice at phi1 + " + std::to_string(k)});
    }

    // split HN property on the induced co-heart: normalize the generator
    // phases into (0,1] via phi0' = phi0 + m, phi1' = phi1 + m + p with
    // m = 1 - ceil(phi0) and p = ceil(phi0) - ceil(phi1)
    long long m = 1 - static_cast<long long>(std::ceil(c.slicing.phi0));
    long long p = static_cast<long long>(std::ceil(c.slicing.phi0)) -
                  static_cast<long long>(std::ceil(c.slicing.phi1));
    double nphi0 = c.slicing.phi0 + m;
    double nphi1 = c.slicing.phi1 + m + p;
    ShiftedIndec gen0 = n_object(n).shifted(static_cast<int>(m));
    ShiftedIndec gen1 = n_object(n + 1).shifted(static_cast<int>(m + p));
    if (nphi0 < nphi1 && hom_dim(gen0, gen1) != 0)
        report.violations.push_back(
            {"split-hn", "hom(" + gen0.str() + ", " + gen1.str() + ") != 0 at lower phase"});
    if (nphi1 < nphi0 && hom_dim(gen1, gen0) != 0)
        report.violations.push_back(
            {"split-hn", "hom(" + gen1.str() + ", " + gen0.str() + ") != 0 at lower phase"});

    report.pass = report.violations.empty();
    return report;
}

long long semistable_set(const CostabCondition& c) { return c.slicing.pair_index; }

bool same_component(const CostabCondition& c1, const CostabCondition& c2) {
    return semistable_set(c1) == semistable_set(c2);
}

double costab_distance(const CostabCondition& c1, const CostabCondition& c2) {
    double slicing_part = metric_distance(c1.slicing, c2.slicing);
    if (std::isinf(slicing_part)) return slicing_part;
    double charge_part = std::max(std::abs(c1.charge.value_n0() - c2.charge.value_n0()),
                                  std::abs(c1.charge.value_n1() - c2.charge.value_n1()));
    return std::max(slicing_part, charge_part);
}

std::vector<CostabCondition> component_walk(const CostabCondition& c1, const CostabCondition& c2,
                                            int steps) {
    if (!same_component(c1, c2))
        throw std::invalid_argument("no path exists between different components");
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    Quintuple a = to_quintuple(c1), b = to_quintuple(c2);
    std::vector<CostabCondition> path;
    for (int i = 0; i <= steps; ++i) {
        double t = static_cast<double>(i) / steps;
        Quintuple q{a.n, a.phi1 + t * (b.phi1 - a.phi1), a.phi0 + t * (b.phi0 - a.phi0),
                    a.m1 + t * (b.m1 - a.m1), a.m0 + t * (b.m0 - a.m0)};
        path.push_back(from_quintuple(q));
    }
    return path;
}

}  // namespace kq
