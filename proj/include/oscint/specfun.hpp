#pragma once

// Special functions needed by the worked examples: Bernoulli polynomials
// (exact rational coefficients), their periodizations, real polylogarithms
// on [0, 1), and Bessel functions of the first kind for real argument.

#include <cstdint>
#include <vector>

namespace oscint::specfun {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

inline constexpr int bernoulli_max_degree = 16;

// rows[m][k] is the coefficient of x^k in B_m(x), stored exactly.
class BernoulliTable {
public:
    explicit BernoulliTable(int max_degree = bernoulli_max_degree);

    int max_degree() const noexcept { return max_degree_; }
    const std::vector<Rational>& row(int m) const { return rows_.at(static_cast<std::size_t>(m)); }

    // Bernoulli number B_m = B_m(0).
    Rational number(int m) const { return row(m).front(); }

    double evaluate(int m, double x) const;

private:
    int max_degree_;
    std::vector<std::vector<Rational>> rows_;
};

// Shared immutable table of degree bernoulli_max_degree.
const BernoulliTable& bernoulli_table();

double bernoulli_polynomial(int m, double x);

// x - floor(x), always in [0, 1).
double fractional_part(double x) noexcept;

// B_m({x / 2pi}): the 2pi-periodic Bernoulli function.
double periodized_bernoulli(int m, double x);

// B_m({x}): the 1-periodic variant.
double periodized_bernoulli_unit(int m, double x);

// Li_k(x) = sum_{n>=1} x^n / n^k for k >= 1 and 0 <= x < 1.
double polylog(int k, double x);

// J_n(z) by its ascending series, for 0 <= n <= 40 and |z| <= 20.
double bessel_j(int n, double z);

}  // namespace oscint::specfun
