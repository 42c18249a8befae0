#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "franel/bernoulli.hpp"
#include "franel/integrator.hpp"
#include "franel/rational.hpp"

namespace franel {

/// The three integrality theorems: the 4-factor sawtooth conjecture, the
/// even-length sawtooth generalization for 2k factors, and the higher-index
/// theorem for 2n factors of odd Bernoulli index 2k+1.
struct TheoremKind {
    enum class Family { mcintosh4, general_even, higher };

    Family family;
    unsigned k = 0;
    unsigned n = 0;

    static TheoremKind mcintosh4() { return {Family::mcintosh4, 0, 0}; }
    static TheoremKind general_even(unsigned k) {
        if (k < 1) {
            throw std::invalid_argument("general_even: k must be >= 1");
        }
        return {Family::general_even, k, 0};
    }
    static TheoremKind higher(unsigned k, unsigned n) {
        if (k < 1 || n < 1) {
            throw std::invalid_argument("higher: k and n must be >= 1");
        }
        return {Family::higher, k, n};
    }

    unsigned tuple_length() const {
        switch (family) {
            case Family::mcintosh4:
                return 4;
            case Family::general_even:
                return 2 * k;
            case Family::higher:
                return 2 * n;
        }
        return 0;
    }

    /// Bernoulli index of the integrand factors.
    unsigned bernoulli_index() const {
        return family == Family::higher ? 2 * k + 1 : 1;
    }
};

/// X_m: product of gcds over all m-element index subsets of the tuple.
inline Int gcd_product(unsigned m, const std::vector<long long>& tuple) {
    if (m < 1 || m > tuple.size()) {
        throw std::invalid_argument("gcd_product: subset size out of range");
    }
    const unsigned n = static_cast<unsigned>(tuple.size());
    Int product = 1;
    std::vector<unsigned> idx(m);
    for (unsigned i = 0; i < m; ++i) {
        idx[i] = i;
    }
    while (true) {
        Int g = 0;
        for (unsigned i : idx) {
            g = boost::multiprecision::gcd(g, Int(tuple[i]));
        }
        product *= g;
        // advance to the next index combination in lexicographic order
        int i = static_cast<int>(m) - 1;
        while (i >= 0 && idx[i] == n - m + i) {
            --i;
        }
        if (i < 0) {
            return product;
        }
        ++idx[i];
        for (unsigned j = i + 1; j < m; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Theorem multiplier split into the lcm constant and the X-product quotient;
/// multiplier = constant * quotient.
struct MultiplierParts {
    Int constant;
    Rational quotient;

    Rational value() const { return Rational(constant) * quotient; }
};

namespace detail {

/// X_1^{L-1} X_3^{L-3} ... X_{L-1} / (X_2^2 X_4^4 ... X_L^L) for even tuple
/// length L.
inline Rational x_quotient(const std::vector<long long>& tuple) {
    const unsigned len = static_cast<unsigned>(tuple.size());
    Int num = 1;
    Int den = 1;
    for (unsigned m = 1; m <= len; ++m) {
        if (m % 2 == 1) {
            num *= int_pow(gcd_product(m, tuple), len - m);
        } else {
            den *= int_pow(gcd_product(m, tuple), m);
        }
    }
    return Rational(num, den);
}

}  // namespace detail

inline MultiplierParts multiplier_parts(const TheoremKind& kind,
                                        const std::vector<long long>& tuple) {
    if (tuple.size() != kind.tuple_length()) {
        throw std::invalid_argument("multiplier: tuple length does not match theorem");
    }
    for (long long a : tuple) {
        if (a < 1) {
            throw std::invalid_argument("multiplier: tuple entries must be >= 1");
        }
    }
    switch (kind.family) {
        case TheoremKind::Family::mcintosh4: {
            // 240 a^3 b^3 c^3 e^3 (a,b,c)(a,b,e)(a,c,e)(b,c,e)
            //   / [(a,b)^2 (a,c)^2 (a,e)^2 (b,c)^2 (b,e)^2 (c,e)^2 (a,b,c,e)^4]
            Int num = 1;
            for (long long a : tuple) {
                num *= int_pow(Int(a), 3);
            }
            num *= gcd_product(3, tuple);
            Int den = int_pow(gcd_product(2, tuple), 2) * int_pow(gcd_product(4, tuple), 4);
            return {Int(240), Rational(num, den)};
        }
        case TheoremKind::Family::general_even: {
            const unsigned k = kind.k;
            Int pow2_odd = int_pow(Int(2), 2 * k);
            for (unsigned j = 1; j <= k; ++j) {
                pow2_odd *= 2 * j + 1;
            }
            Int constant = lcm_list(
                std::vector<Int>{pow2_odd, Int(2 * k) * general_constant_B(2 * k)});
            return {constant, detail::x_quotient(tuple)};
        }
        case TheoremKind::Family::higher: {
            HigherConstants c = higher_constants(kind.k, kind.n);
            return {c.big_b, detail::x_quotient(tuple).pow(2 * kind.k + 1)};
        }
    }
    throw std::logic_error("multiplier: unknown theorem kind");
}

inline Rational multiplier(const TheoremKind& kind, const std::vector<long long>& tuple) {
    return multiplier_parts(kind, tuple).value();
}

/// One theorem instance: the exact integral, the multiplier, their product f,
/// and the integrality verdict.
struct CertificateReport {
    IntegralSpec spec;
    Rational multiplier;
    Rational integral;
    Rational product;
    bool is_integer;
    Int constant_part;
    Int gcd_part_num;
    Int gcd_part_den;
};

inline CertificateReport certificate(const TheoremKind& kind,
                                     const std::vector<long long>& tuple) {
    MultiplierParts parts = multiplier_parts(kind, tuple);
    IntegralSpec spec(kind.bernoulli_index(), tuple);
    Rational integral = franel_integral(spec);
    Rational mult = parts.value();
    Rational product = mult * integral;
    return {std::move(spec), mult,
            integral,        product,
            product.is_integer(), parts.constant,
            parts.quotient.num(), parts.quotient.den()};
}

/// True iff the reduced denominator of the integral equals the claimed value.
inline bool sharpness_check(const Rational& integral, const Int& claimed_denominator) {
    return integral.den() == claimed_denominator;
}

}  // namespace franel
