#include "multidb/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace multidb {

static void require_positive(long long n) {
    if (n < 1) throw std::invalid_argument("argument must be positive");
}

std::vector<long long> divisors(long long n) {
    require_positive(n);
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Trial-division factorization: (prime, exponent) pairs.
static std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> f;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

int mobius(long long n) {
    require_positive(n);
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

long long totient(long long n) {
    require_positive(n);
    long long phi = n;
    for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

Count factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative");
    Count r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

Count multinomial_equal(long long m, long long q) {
    require_positive(m);
    require_positive(q);
    return exact_div(factorial(m * q), pow_count(factorial(m), q));
}

Count pow_count(const Count& base, long long e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Count r = 1, b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Count exact_div(const Count& num, const Count& den) {
    Count quo, rem;
    boost::multiprecision::divide_qr(num, den, quo, rem);
    if (rem != 0) throw std::logic_error("inexact division in counting formula");
    return quo;
}

std::string to_decimal(const Count& c) { return c.str(); }

}  // namespace multidb
