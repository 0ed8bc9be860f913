#include "gfh/homlin.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <random>

namespace gfh {
namespace {

bool probably_prime(const BigInt& n) {
    static std::mt19937 gen(20240607u);
    return boost::multiprecision::miller_rabin_test(n, 32, gen);
}

BigInt pollard_rho(const BigInt& n) {
    if (n % 2 == 0) return 2;
    for (BigInt c = 1;; ++c) {
        BigInt x = 2, y = 2, d = 1;
        auto step = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = boost::multiprecision::gcd(BigInt(x > y ? BigInt(x - y) : BigInt(y - x)), n);
        }
        if (d != n) return d;
    }
}

void factor_into(BigInt n, std::map<BigInt, unsigned>& primes) {
    for (unsigned p = 2; p < 10000 && BigInt(p) * p <= n; ++p)
        while (n % p == 0) {
            ++primes[BigInt(p)];
            n /= p;
        }
    if (n == 1) return;
    if (probably_prime(n)) {
        ++primes[n];
        return;
    }
    BigInt d = pollard_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace

std::vector<BigInt> prime_power_decomposition(const std::vector<BigInt>& factors) {
    std::vector<BigInt> out;
    for (const auto& f : factors) {
        if (f <= 1) continue;
        std::map<BigInt, unsigned> primes;
        factor_into(f, primes);
        for (const auto& [p, e] : primes) out.push_back(boost::multiprecision::pow(p, e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gfh
