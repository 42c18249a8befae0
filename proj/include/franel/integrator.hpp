#pragma once

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "franel/bernoulli.hpp"
#include "franel/polynomial.hpp"
#include "franel/rational.hpp"

namespace franel {

/// One product integral: Bernoulli index k applied to every factor, plus the
/// positive frequency multipliers (a_1, ..., a_m).
struct IntegralSpec {
    unsigned index;
    std::vector<long long> multipliers;

    IntegralSpec(unsigned k, std::vector<long long> tuple)
        : index(k), multipliers(std::move(tuple)) {
        if (index < 1) {
            throw std::invalid_argument("IntegralSpec: index must be >= 1");
        }
        if (multipliers.empty()) {
            throw std::invalid_argument("IntegralSpec: multiplier tuple is empty");
        }
        for (long long a : multipliers) {
            if (a < 1) {
                throw std::invalid_argument("IntegralSpec: multipliers must be >= 1");
            }
        }
    }
};

/// Strictly increasing rationals from 0 to 1, the union of {j/a_i}.
using Partition = std::vector<Rational>;

/// Discontinuity partition of [0,1]: every j/a_i deduplicated, endpoints included.
inline Partition breakpoints(const IntegralSpec& spec) {
    std::set<Rational> points;
    for (long long a : spec.multipliers) {
        for (long long j = 0; j <= a; ++j) {
            points.emplace(j, a);
        }
    }
    return {points.begin(), points.end()};
}

/// Integrand restricted to one partition cell: prod_i B_k(a_i x - n_i) with
/// n_i = floor(a_i * midpoint). Offsets come from the cell midpoint because
/// at a breakpoint a_i x is an integer and the floor is ambiguous between
/// adjacent cells.
inline RationalPolynomial piece_polynomial(const IntegralSpec& spec,
                                           const Rational& left,
                                           const Rational& right) {
    if (!(left < right)) {
        throw std::invalid_argument("piece_polynomial: cell requires left < right");
    }
    Rational midpoint = (left + right) / Rational(2);
    RationalPolynomial base = bernoulli_polynomial(spec.index);
    RationalPolynomial product = RationalPolynomial::constant(Rational(1));
    for (long long a : spec.multipliers) {
        Rational ax = Rational(a) * midpoint;
        product = product * base.substitute_linear(Rational(a), Rational(ax.floor()));
    }
    return product;
}

/// Exact value of I_k(a_1,...,a_m) = int_0^1 prod_i ~B_k(a_i x) dx, summed
/// cell by cell from the antiderivatives of the piece polynomials.
inline Rational franel_integral(const IntegralSpec& spec) {
    Partition points = breakpoints(spec);
    Rational total;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        RationalPolynomial piece = piece_polynomial(spec, points[i], points[i + 1]);
        RationalPolynomial anti = piece.antiderivative();
        total += anti.eval(points[i + 1]) - anti.eval(points[i]);
    }
    return total;
}

}  // namespace franel
