#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "franel/rational.hpp"

namespace franel {

/// Dense univariate polynomial with Rational coefficients, index = degree of
/// the monomial. Canonical zero polynomial is the empty coefficient list;
/// otherwise the leading coefficient is nonzero.
class RationalPolynomial {
public:
    RationalPolynomial() = default;

    explicit RationalPolynomial(std::vector<Rational> coefficients)
        : coeffs_(std::move(coefficients)) {
        trim();
    }

    static RationalPolynomial constant(Rational c) {
        return RationalPolynomial(std::vector<Rational>{std::move(c)});
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree; -1 for the zero polynomial.
    std::ptrdiff_t degree() const {
        return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
    }

    /// Coefficient of x^i (zero beyond the stored range).
    Rational coefficient(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational();
    }

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const RationalPolynomial& a, const RationalPolynomial& b) {
        return !(a == b);
    }

    friend RationalPolynomial operator+(const RationalPolynomial& a,
                                        const RationalPolynomial& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = a.coefficient(i) + b.coefficient(i);
        }
        return RationalPolynomial(std::move(c));
    }

    friend RationalPolynomial operator-(const RationalPolynomial& a,
                                        const RationalPolynomial& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = a.coefficient(i) - b.coefficient(i);
        }
        return RationalPolynomial(std::move(c));
    }

    friend RationalPolynomial operator*(const RationalPolynomial& a,
                                        const RationalPolynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return RationalPolynomial();
        }
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return RationalPolynomial(std::move(c));
    }

    friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p) {
        std::vector<Rational> c(p.coeffs_.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = s * p.coeffs_[i];
        }
        return RationalPolynomial(std::move(c));
    }

    /// Composition with a linear argument: returns q with q(x) = p(c*x - d).
    RationalPolynomial substitute_linear(const Rational& c, const Rational& d) const {
        RationalPolynomial lin(std::vector<Rational>{-d, c});
        RationalPolynomial result;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            result = result * lin + constant(coeffs_[i]);
        }
        return result;
    }

    /// Antiderivative F with F' = *this and F(0) = 0.
    RationalPolynomial antiderivative() const {
        if (is_zero()) {
            return RationalPolynomial();
        }
        std::vector<Rational> c(coeffs_.size() + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            c[i + 1] = coeffs_[i] / Rational(static_cast<long long>(i) + 1);
        }
        return RationalPolynomial(std::move(c));
    }

    /// Horner evaluation over rationals.
    Rational eval(const Rational& x) const {
        Rational acc;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * x + coeffs_[i];
        }
        return acc;
    }

    /// Smallest N >= 1 such that N * p has integer coefficients.
    Int denominator() const {
        Int l = 1;
        for (const Rational& c : coeffs_) {
            l = boost::multiprecision::lcm(l, c.den());
        }
        return l;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) {
            coeffs_.pop_back();
        }
    }

    std::vector<Rational> coeffs_;
};

}  // namespace franel
