#include "hurwitz/matrix_integral.hpp"

#include <cmath>
#include <cstdlib>

#include "hurwitz/characters.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/partition.hpp"

namespace hurwitz {

namespace {

void require_pair(const SpectralPair& p) {
    if (p.n < 1)
        throw DomainError("spectral pair needs n >= 1");
    if (static_cast<int>(p.a.size()) != p.n || static_cast<int>(p.b.size()) != p.n)
        throw DimensionError("eigenvalue lists must both have length n");
}

void require_distinct(const std::vector<double>& x) {
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
            if (x[i] == x[j])
                throw SingularityError("coincident eigenvalues in a Vandermonde denominator");
}

double vandermonde(const std::vector<double>& x) {
    double v = 1;
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
            v *= x[j] - x[i];
    return v;
}

double det(std::vector<std::vector<double>> m) {
    const size_t n = m.size();
    double d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t pivot = c;
        for (size_t r = c + 1; r < n; ++r)
            if (std::abs(m[r][c]) > std::abs(m[pivot][c]))
                pivot = r;
        if (m[pivot][c] == 0)
            return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            const double f = m[r][c] / m[c][c];
            for (size_t k = c; k < n; ++k)
                m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

double factorial_d(int k) {
    double f = 1;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return f;
}

double pochhammer(double x, int k) {
    double v = 1;
    for (int i = 0; i < k; ++i)
        v *= x + i;
    return v;
}

// p_mu evaluated on eigenvalues: prod_i (sum_k x_k^{mu_i}), from precomputed
// power sums pk[e] = sum_k x_k^e.
double p_mu(const Partition& mu, const std::vector<double>& pk) {
    double v = 1;
    for (int part : mu)
        v *= pk[part];
    return v;
}

std::vector<double> power_sums(const std::vector<double>& x, int eMax) {
    std::vector<double> pk(eMax + 1, 0.0);
    pk[0] = static_cast<double>(x.size());
    for (int e = 1; e <= eMax; ++e)
        for (double xi : x)
            pk[e] += std::pow(xi, e);
    return pk;
}

// Schur value via the character expansion s_lambda = sum_mu chi(mu) p_mu / z_mu.
double schur_value(const CharTable& table, int lambdaIdx, const std::vector<double>& pk,
                   const std::vector<double>& zInv) {
    const auto& parts = table.parts();
    double s = 0;
    for (size_t m = 0; m < parts.size(); ++m) {
        const long long chi = table.value(lambdaIdx, static_cast<int>(m));
        if (chi == 0)
            continue;
        s += static_cast<double>(chi) * p_mu(parts[m], pk) * zInv[m];
    }
    return s;
}

// Common series driver: rWeight(lambda) supplies the content product.
template <typename RFn>
double trace_series(const SpectralPair& p, double gamma, int NMax, RFn&& rWeight) {
    require_pair(p);
    if (NMax < 0)
        throw DomainError("series truncation must be nonnegative");
    const auto pkA = power_sums(p.a, NMax);
    const auto pkB = power_sums(p.b, NMax);
    double total = 1; // N = 0 term
    double gammaPow = 1;
    for (int N = 1; N <= NMax; ++N) {
        gammaPow *= gamma;
        const CharTable& table = char_table(N);
        const auto& parts = table.parts();
        std::vector<double> zInv(parts.size());
        for (size_t m = 0; m < parts.size(); ++m)
            zInv[m] = 1.0 / z_mu(parts[m]).get_d();
        double blockSum = 0;
        for (size_t l = 0; l < parts.size(); ++l) {
            if (part_count(parts[l]) > p.n)
                continue; // Schur polynomial in n variables vanishes
            const double sA = schur_value(table, static_cast<int>(l), pkA, zInv);
            const double sB = schur_value(table, static_cast<int>(l), pkB, zInv);
            if (sA == 0 || sB == 0)
                continue;
            blockSum += rWeight(parts[l]) * sA * sB;
        }
        total += gammaPow * blockSum;
    }
    return total;
}

} // namespace

std::pair<std::vector<double>, std::vector<double>> trace_power_sums(
    const SpectralPair& p, int iMax) {
    require_pair(p);
    if (iMax < 1)
        throw DomainError("trace invariants need iMax >= 1");
    std::vector<double> t(iMax + 1, 0.0), s(iMax + 1, 0.0);
    for (int i = 1; i <= iMax; ++i) {
        for (double x : p.a)
            t[i] += std::pow(x, i);
        for (double x : p.b)
            s[i] += std::pow(x, i);
        t[i] /= i;
        s[i] /= i;
    }
    return {t, s};
}

double hciz_closed(const SpectralPair& p, double gamma) {
    require_pair(p);
    require_distinct(p.a);
    require_distinct(p.b);
    const int n = p.n;
    if (gamma == 0 && n > 1)
        throw SingularityError("gamma = 0 makes the normalizing power vanish");

    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = std::exp(gamma * n * p.a[i] * p.b[j]);
    double pre = 1;
    for (int k = 1; k < n; ++k)
        pre *= factorial_d(k);
    const double norm = std::pow(n * gamma, n * (n - 1) / 2);
    return pre * det(std::move(m)) / (norm * vandermonde(p.a) * vandermonde(p.b));
}

double ho_closed(const SpectralPair& p, double c1, double d1, double gamma) {
    require_pair(p);
    require_distinct(p.a);
    require_distinct(p.b);
    if (c1 == 0 || d1 == 0)
        throw DomainError("c1 and d1 must be nonzero");
    const int n = p.n;
    const double z = -gamma * c1 / d1;
    if (z == 0 && n > 1)
        throw SingularityError("z = 0 makes the normalizing power vanish");
    const double expo = n * (1 + d1 / c1) - 1;

    double pre = 1;
    for (int k = 1; k < n; ++k) {
        const double den = pochhammer(1 - n * (1 + d1 / c1), k);
        if (den == 0)
            throw SingularityError("vanishing Pochhammer factor in the prefactor");
        pre *= factorial_d(k) / den;
    }
    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double base = 1 - z * p.a[i] * p.b[j];
            if (base <= 0)
                throw DomainError("determinant entries need |z a_i b_j| < 1");
            m[i][j] = std::pow(base, expo);
        }
    const double norm = std::pow(z, n * (n - 1) / 2);
    return pre * det(std::move(m)) / (norm * vandermonde(p.a) * vandermonde(p.b));
}

double tau_specialize(const PQSeries& tau, const SpectralPair& p,
                      const std::vector<Rat>& cVals, const std::vector<Rat>& dVals,
                      const Rat& betaVal, double gammaVal) {
    require_pair(p);
    const auto pkA = power_sums(p.a, tau.Nmax());
    const auto pkB = power_sums(p.b, tau.Nmax());
    double total = 0;
    for (const auto& [key, series] : tau.entries()) {
        const double coeff = series.eval(cVals, dVals, betaVal).get_d();
        total += std::pow(gammaVal, key.N) * coeff * p_mu(key.mu, pkA) *
                 p_mu(key.nu, pkB);
    }
    return total;
}

double hciz_series(const SpectralPair& p, double gamma, int NMax) {
    const int n = p.n;
    return trace_series(p, gamma, NMax, [n](const Partition& lambda) {
        double r = 1;
        for (int c : contents(lambda))
            r *= static_cast<double>(n) / (n + c);
        return r;
    });
}

double ho_series(const SpectralPair& p, double c1, double d1, double gamma, int NMax) {
    if (c1 == 0 || d1 == 0)
        throw DomainError("c1 and d1 must be nonzero");
    const int n = p.n;
    return trace_series(p, gamma, NMax, [n, c1, d1](const Partition& lambda) {
        double r = 1;
        for (int c : contents(lambda))
            r *= (n * d1 - c1 * c) / (d1 * (n + c));
        return r;
    });
}

namespace {

HcizReport make_report(int n, double gamma, double lhs, double rhs, int NMax) {
    const double scale = std::max(std::abs(rhs), 1e-300);
    return HcizReport{n, gamma, lhs, rhs, std::abs(lhs - rhs) / scale, NMax};
}

} // namespace

HcizReport hciz_vs_series(const SpectralPair& p, double gamma, int NMax) {
    return make_report(p.n, gamma, hciz_closed(p, gamma), hciz_series(p, gamma, NMax),
                       NMax);
}

HcizReport ho_vs_series(const SpectralPair& p, double c1, double d1, double gamma,
                        int NMax) {
    return make_report(p.n, gamma, ho_closed(p, c1, d1, gamma),
                       ho_series(p, c1, d1, gamma, NMax), NMax);
}

} // namespace hurwitz
