#include "bufcol/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace bufcol {

namespace {

Rational inverse_power_of_two(int exponent) {
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 2, static_cast<unsigned long>(exponent));
    return Rational(mpz_class(1), denom);
}

}  // namespace

std::map<int, Rational> crown_b2_pmf(int n) {
    if (n < 2) throw std::invalid_argument("crown pmf requires n >= 2");
    std::map<int, Rational> pmf;
    for (int k = 2; k < n; ++k) pmf[k] = inverse_power_of_two(k - 1);
    pmf[n] = inverse_power_of_two(n - 2);
    return pmf;
}

Rational crown_b2_mean(int n) {
    Rational mean = 0;
    for (const auto& [k, p] : crown_b2_pmf(n)) mean += Rational(k) * p;
    return mean;
}

Rational crown_b2_tail(int n, int m) {
    if (n < 2) throw std::invalid_argument("crown tail requires n >= 2");
    if (m < 2 || m > n) throw std::invalid_argument("crown tail requires 2 <= m <= n");
    return inverse_power_of_two(m - 2);
}

int kneser_chromatic(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("kneser chromatic requires n >= 1 and k >= 1");
    if (k > n) throw std::invalid_argument("kneser chromatic requires k <= n");
    if (2 * k > n) return 1;  // edgeless, non-empty
    return n - 2 * k + 2;
}

Rational performance_ratio(int alg_colours, int chi) {
    if (chi < 1) throw std::invalid_argument("performance ratio requires a positive chromatic number");
    if (alg_colours < chi)
        throw std::invalid_argument("an online algorithm cannot use fewer colours than the chromatic number");
    Rational ratio(alg_colours, chi);
    ratio.canonicalize();
    return ratio;
}

int iterated_log2(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("iterated log requires n >= 1");
    int applications = 0;
    double x = static_cast<double>(n);
    while (x > 1.0) {
        x = std::log2(x);
        ++applications;
    }
    return applications;
}

}  // namespace bufcol
