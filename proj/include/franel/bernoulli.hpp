#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "franel/polynomial.hpp"
#include "franel/rational.hpp"

namespace franel {

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

/// Memoized Bernoulli numbers B_n and polynomials B_n(x). The cache is
/// append-only and guarded by a mutex; all lookups return copies.
class BernoulliTable {
public:
    static BernoulliTable& global() {
        static BernoulliTable table;
        return table;
    }

    /// B_0..B_N via the recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0.
    std::vector<Rational> numbers(unsigned n) {
        std::lock_guard<std::mutex> lock(mu_);
        ensure_numbers(n);
        return {numbers_.begin(), numbers_.begin() + n + 1};
    }

    Rational number(unsigned n) {
        std::lock_guard<std::mutex> lock(mu_);
        ensure_numbers(n);
        return numbers_[n];
    }

    /// B_n(x) = sum_j C(n, j) B_j x^(n-j); degree exactly n.
    RationalPolynomial polynomial(unsigned n) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = polynomials_.find(n);
        if (it != polynomials_.end()) {
            return it->second;
        }
        ensure_numbers(n);
        std::vector<Rational> coeffs(n + 1);
        for (unsigned j = 0; j <= n; ++j) {
            coeffs[n - j] = Rational(binomial(n, j)) * numbers_[j];
        }
        RationalPolynomial p(std::move(coeffs));
        polynomials_.emplace(n, p);
        return p;
    }

private:
    BernoulliTable() { numbers_.push_back(Rational(1)); }

    void ensure_numbers(unsigned n) {
        while (numbers_.size() <= n) {
            unsigned m = static_cast<unsigned>(numbers_.size());
            Rational acc;
            for (unsigned j = 0; j < m; ++j) {
                acc += Rational(binomial(m + 1, j)) * numbers_[j];
            }
            numbers_.push_back(-acc / Rational(static_cast<long long>(m) + 1));
        }
    }

    std::mutex mu_;
    std::vector<Rational> numbers_;
    std::map<unsigned, RationalPolynomial> polynomials_;
};

inline std::vector<Rational> bernoulli_numbers(unsigned n) {
    return BernoulliTable::global().numbers(n);
}

inline Rational bernoulli_number(unsigned n) {
    return BernoulliTable::global().number(n);
}

inline RationalPolynomial bernoulli_polynomial(unsigned n) {
    return BernoulliTable::global().polynomial(n);
}

/// Periodic Bernoulli function. For n >= 2 this is B_n({x}); for n = 1 it is
/// the sawtooth ((x)): {x} - 1/2 off integers and exactly 0 at integers.
inline Rational periodic_bernoulli_eval(unsigned n, const Rational& x) {
    if (n < 1) {
        throw std::invalid_argument("periodic_bernoulli_eval: index must be >= 1");
    }
    Rational frac = x - Rational(x.floor());
    if (n == 1) {
        if (frac.is_zero()) {
            return Rational();
        }
        return frac - Rational(1, 2);
    }
    return bernoulli_polynomial(n).eval(frac);
}

/// Faulhaber power sum 1^n + 2^n + ... + (a-1)^n as (B_{n+1}(a) - B_{n+1})/(n+1).
inline Rational power_sum(unsigned n, long long a) {
    if (n < 1 || a < 1) {
        throw std::invalid_argument("power_sum: n and a must be positive");
    }
    RationalPolynomial b = bernoulli_polynomial(n + 1);
    Rational value = (b.eval(Rational(a)) - bernoulli_number(n + 1)) /
                     Rational(static_cast<long long>(n) + 1);
    return value;
}

/// Denominator B of B_{n+1}(x) for even n, the constant of the even-index
/// integrality theorem.
inline Int general_constant_B(unsigned n) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("general_constant_B: n must be even and >= 2");
    }
    return bernoulli_polynomial(n + 1).denominator();
}

struct HigherConstants {
    Int beta;
    Int big_b;
};

/// Constants beta and B of the higher-index theorem: beta is the lcm of the
/// denominators of B_{2k+1}(x) and B_{P+a+1}(x) - B_{P+a+1} for 1 <= a <= 2k+1
/// with P = (2k+1)(2n-1); B is the lcm of
/// [(2k+1)2n+1]!/[P+1]! * beta^{2n} and (2n+1)beta^{2n}, ..., (P+1)beta^{2n}.
inline HigherConstants higher_constants(unsigned k, unsigned n) {
    if (k < 1 || n < 1) {
        throw std::invalid_argument("higher_constants: k and n must be >= 1");
    }
    const unsigned index = 2 * k + 1;
    const unsigned p = index * (2 * n - 1);

    std::vector<Int> beta_args;
    beta_args.push_back(bernoulli_polynomial(index).denominator());
    for (unsigned alpha = 1; alpha <= index; ++alpha) {
        unsigned m = p + alpha + 1;
        RationalPolynomial shifted =
            bernoulli_polynomial(m) - RationalPolynomial::constant(bernoulli_number(m));
        beta_args.push_back(shifted.denominator());
    }
    Int beta = lcm_list(beta_args);

    // [(2k+1)2n+1]! / [P+1]! as a product of consecutive integers.
    Int ratio = 1;
    for (unsigned i = p + 2; i <= index * 2 * n + 1; ++i) {
        ratio *= i;
    }
    Int beta_pow = int_pow(beta, 2 * n);

    std::vector<Int> big_args;
    big_args.push_back(ratio * beta_pow);
    for (unsigned j = 2 * n + 1; j <= p + 1; ++j) {
        big_args.push_back(Int(j) * beta_pow);
    }
    return {beta, lcm_list(big_args)};
}

/// Classical Dedekind sum s(h, k) = sum_{j=1}^{k-1} ((h j / k)) ((j / k)).
inline Rational dedekind_sum(long long h, long long k) {
    if (k < 1) {
        throw std::invalid_argument("dedekind_sum: k must be positive");
    }
    Int g = boost::multiprecision::gcd(Int(h < 0 ? -h : h), Int(k));
    if (g != 1) {
        throw std::domain_error("dedekind_sum: h and k must be coprime");
    }
    Rational sum;
    for (long long j = 1; j < k; ++j) {
        sum += periodic_bernoulli_eval(1, Rational(Int(h) * j, Int(k))) *
               periodic_bernoulli_eval(1, Rational(j, k));
    }
    return sum;
}

}  // namespace franel
