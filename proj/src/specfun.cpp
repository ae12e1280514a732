#include "oscint/specfun.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "oscint/errors.hpp"

namespace oscint::specfun {

namespace {

__extension__ typedef __int128 wide;

Rational reduce(wide num, wide den)
{
    if (den < 0) {
        num = -num;
        den = -den;
    }
    wide a = num < 0 ? -num : num;
    wide b = den;
    while (b != 0) {
        const wide t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return {static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

Rational operator+(Rational x, Rational y)
{
    return reduce(static_cast<wide>(x.num) * y.den + static_cast<wide>(y.num) * x.den,
                  static_cast<wide>(x.den) * y.den);
}

Rational operator*(Rational x, std::int64_t k) { return reduce(static_cast<wide>(x.num) * k, x.den); }

Rational operator/(Rational x, std::int64_t k) { return reduce(x.num, static_cast<wide>(x.den) * k); }

std::int64_t binomial(int n, int k)
{
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

BernoulliTable::BernoulliTable(int max_degree) : max_degree_(max_degree)
{
    if (max_degree < 0 || max_degree > 24) throw DomainError("Bernoulli table degree out of range");

    // Bernoulli numbers from sum_{k=0}^{m} C(m+1, k) B_k = 0, which follows
    // from the generating function t/(e^t - 1).
    std::vector<Rational> b(static_cast<std::size_t>(max_degree + 1));
    b[0] = {1, 1};
    for (int m = 1; m <= max_degree; ++m) {
        Rational acc{0, 1};
        for (int k = 0; k < m; ++k) acc = acc + b[static_cast<std::size_t>(k)] * binomial(m + 1, k);
        b[static_cast<std::size_t>(m)] = acc * -1 / (m + 1);
    }

    // B_m(x) = sum_k C(m, k) B_{m-k} x^k
    rows_.resize(static_cast<std::size_t>(max_degree + 1));
    for (int m = 0; m <= max_degree; ++m) {
        auto& row = rows_[static_cast<std::size_t>(m)];
        row.resize(static_cast<std::size_t>(m + 1));
        for (int k = 0; k <= m; ++k) row[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(m - k)] * binomial(m, k);
    }
}

double BernoulliTable::evaluate(int m, double x) const
{
    if (m < 0 || m > max_degree_)
        throw DomainError("Bernoulli degree " + std::to_string(m) + " exceeds table maximum " +
                          std::to_string(max_degree_));
    const auto& row = rows_[static_cast<std::size_t>(m)];
    double acc = 0.0;
    for (auto it = row.rbegin(); it != row.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

const BernoulliTable& bernoulli_table()
{
    static const BernoulliTable table(bernoulli_max_degree);
    return table;
}

double bernoulli_polynomial(int m, double x) { return bernoulli_table().evaluate(m, x); }

double fractional_part(double x) noexcept
{
    const double f = x - std::floor(x);
    return f >= 1.0 ? 0.0 : f;
}

double periodized_bernoulli(int m, double x)
{
    if (m < 1) throw DomainError("periodized Bernoulli requires m >= 1");
    return bernoulli_polynomial(m, fractional_part(x / (2.0 * std::numbers::pi)));
}

double periodized_bernoulli_unit(int m, double x)
{
    if (m < 1) throw DomainError("periodized Bernoulli requires m >= 1");
    return bernoulli_polynomial(m, fractional_part(x));
}

double polylog(int k, double x)
{
    if (k < 1) throw DomainError("polylog order must be >= 1");
    if (!(x >= 0.0) || x >= 1.0) throw DomainError("polylog argument must lie in [0, 1)");
    if (x == 0.0) return 0.0;
    // Closed form where the series would need more than ~3e4 terms.
    if (k == 1 && x > 0.999) return -std::log1p(-x);

    const double stop = 1e-16 * (1.0 - x);
    double power = 1.0;
    double sum = 0.0;
    for (std::int64_t n = 1; n < 100'000'000; ++n) {
        power *= x;
        const double term = power / std::pow(static_cast<double>(n), k);
        sum += term;
        if (term < stop * sum) return sum;
    }
    return sum;
}

double bessel_j(int n, double z)
{
    if (n < 0 || n > 40) throw DomainError("bessel_j order must lie in [0, 40]");
    if (!(std::abs(z) <= 20.0)) throw DomainError("bessel_j argument must satisfy |z| <= 20");

    const long double half = static_cast<long double>(z) / 2.0L;
    long double term = 1.0L;
    for (int k = 1; k <= n; ++k) term *= half / k;  // (z/2)^n / n!
    long double sum = term;
    const long double q = half * half;
    for (int m = 1; m < 500; ++m) {
        term *= -q / (static_cast<long double>(m) * (n + m));
        sum += term;
        if (std::abs(term) < 1e-17L && m > q) break;
    }
    return static_cast<double>(sum);
}

}  // namespace oscint::specfun
