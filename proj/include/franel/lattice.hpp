#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "franel/integrator.hpp"
#include "franel/rational.hpp"

namespace franel {

namespace detail {

/// Fraction accumulator that postpones gcd reduction: additions multiply the
/// denominators out and a single reduction happens on extraction (or when the
/// denominator grows past a size guard).
class RawSum {
public:
    void add(const Rational& r) {
        num_ = num_ * r.den() + r.num() * den_;
        den_ *= r.den();
        if (msb(den_) > (1u << 18)) {
            reduce();
        }
    }

    void add(const RawSum& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        if (msb(den_) > (1u << 18)) {
            reduce();
        }
    }

    Rational value() const { return Rational(num_, den_); }

private:
    void reduce() {
        Rational r(num_, den_);
        num_ = r.num();
        den_ = r.den();
    }

    Int num_ = 0;
    Int den_ = 1;
};

/// 1 / (u * w)^e with exact sign handling.
inline Rational reciprocal_power_term(long long u, long long w, unsigned e) {
    return Rational(Int(1), int_pow(Int(u) * w, e));
}

/// Sum over (u, w) with 0 < |u|,|w| <= bound and au * u + aw * w = target of
/// 1/(u w)^e. The last coordinate is solved from the constraint.
inline Rational constrained_pair_sum(long long au, long long aw, long long target,
                                     unsigned exponent, long long bound) {
    RawSum sum;
    for (long long u = -bound; u <= bound; ++u) {
        if (u == 0) {
            continue;
        }
        long long rest = target - au * u;
        if (rest % aw != 0) {
            continue;
        }
        long long w = rest / aw;
        if (w == 0 || w < -bound || w > bound) {
            continue;
        }
        sum.add(reciprocal_power_term(u, w, exponent));
    }
    return sum.value();
}

/// Integer determinant by fraction-free (Bareiss) elimination.
inline Int integer_determinant(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) {
                ++pivot;
            }
            if (pivot == n) {
                return 0;
            }
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace detail

/// Exact sum of 1/(u_1 ... u_m)^exponent over all integer vectors with
/// 0 < |u_i| <= bound and sum_i a_i u_i = 0 (max-norm box truncation).
///
/// The first m-2 coordinates are enumerated directly and bucketed by their
/// partial weighted sum; the final two coordinates are folded in as
/// constraint-solved pair sums, which keeps the cost at O(bound^{m-2} + bound^2)
/// while producing exactly the box-truncated value.
inline Rational truncated_reciprocal_sum(unsigned exponent,
                                         const std::vector<long long>& tuple,
                                         long long bound) {
    if (exponent < 1 || exponent % 2 == 0) {
        throw std::invalid_argument("truncated_reciprocal_sum: exponent must be odd");
    }
    if (tuple.size() < 2) {
        throw std::invalid_argument("truncated_reciprocal_sum: need at least two factors");
    }
    for (long long a : tuple) {
        if (a < 1) {
            throw std::invalid_argument("truncated_reciprocal_sum: entries must be >= 1");
        }
    }
    if (bound < 1) {
        throw std::invalid_argument("truncated_reciprocal_sum: bound must be >= 1");
    }

    const std::size_t m = tuple.size();

    // Partial sums of the first m-2 coordinates, bucketed by weighted sum.
    std::map<long long, detail::RawSum> front;
    if (m == 2) {
        front[0].add(Rational(1));
    } else {
        const std::size_t front_len = m - 2;
        auto walk = [&](auto&& self, std::size_t pos, long long weighted,
                        const Rational& partial) -> void {
            if (pos == front_len) {
                front[weighted].add(partial);
                return;
            }
            for (long long v = -bound; v <= bound; ++v) {
                if (v == 0) {
                    continue;
                }
                self(self, pos + 1, weighted + tuple[pos] * v,
                     partial * Rational(Int(1), int_pow(Int(v), exponent)));
            }
        };
        walk(walk, 0, 0, Rational(1));
    }

    // Fold in the last two coordinates via memoized constraint-solved pair sums.
    std::map<long long, Rational> pair_cache;
    detail::RawSum total;
    for (const auto& [s, bucket] : front) {
        long long target = -s;
        auto it = pair_cache.find(target);
        if (it == pair_cache.end()) {
            it = pair_cache
                     .emplace(target, detail::constrained_pair_sum(
                                          tuple[m - 2], tuple[m - 1], target,
                                          exponent, bound))
                     .first;
        }
        if (it->second.is_zero()) {
            continue;
        }
        total.add(bucket.value() * it->second);
    }
    return total.value();
}

struct PiCoefficient {
    Rational coefficient;
    unsigned power;
};

/// Exact coefficient r and power p with lim L = r * pi^p for the reciprocal
/// lattice sum attached to an integral: r = (-1)^{m/2} [2^k / k!]^m I and
/// p = k * m, valid for odd index k and even factor count m (the k = 1
/// sawtooth case gives r = (-1)^{m/2} 2^m I and p = m).
inline PiCoefficient pi_coefficient(const IntegralSpec& spec) {
    const std::size_t m = spec.multipliers.size();
    if (m % 2 != 0) {
        throw std::domain_error("pi_coefficient: factor count must be even");
    }
    if (spec.index % 2 == 0) {
        throw std::domain_error("pi_coefficient: index must be odd");
    }
    Rational integral = franel_integral(spec);
    Int factorial = 1;
    for (unsigned i = 2; i <= spec.index; ++i) {
        factorial *= i;
    }
    Rational scale = Rational(int_pow(Int(2), spec.index), factorial)
                         .pow(static_cast<unsigned>(m));
    Rational r = scale * integral;
    if ((m / 2) % 2 == 1) {
        r = -r;
    }
    return {r, spec.index * static_cast<unsigned>(m)};
}

/// One truncation level: the exact box-truncated sum, the predicted pi-power
/// coefficient, and the double-precision residual against r * pi^p.
struct LatticeSumResult {
    long long bound;
    Rational truncated;
    Rational predicted_coefficient;
    unsigned pi_power;
    double float_discrepancy;
};

inline std::vector<LatticeSumResult> convergence_report(
    const IntegralSpec& spec, const std::vector<long long>& bounds) {
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        if (bounds[i] >= bounds[i + 1]) {
            throw std::invalid_argument("convergence_report: bounds must be strictly increasing");
        }
    }
    PiCoefficient pc = pi_coefficient(spec);
    double reference = to_double(pc.coefficient) *
                       std::pow(std::numbers::pi, static_cast<double>(pc.power));
    std::vector<LatticeSumResult> results;
    results.reserve(bounds.size());
    for (long long bound : bounds) {
        Rational truncated = truncated_reciprocal_sum(spec.index, spec.multipliers, bound);
        double discrepancy = std::fabs(to_double(truncated) - reference);
        results.push_back({bound, truncated, pc.coefficient, pc.power, discrepancy});
    }
    return results;
}

/// Exact sum of 1/(L_1 ... L_m)^exponent over integer box points satisfying
/// the rational constraint sum_i c_i u_i = 0, where the L_i are the linear
/// forms given by the rows of a unimodular integer matrix and every form must
/// be nonzero. Brute-force box enumeration with one coordinate solved from
/// the constraint when possible.
inline Rational linear_form_truncated_sum(const std::vector<std::vector<long long>>& matrix,
                                          const std::vector<Rational>& constraint,
                                          unsigned exponent, long long bound) {
    const std::size_t m = matrix.size();
    if (m == 0 || constraint.size() != m) {
        throw std::invalid_argument("linear_form_truncated_sum: size mismatch");
    }
    for (const auto& row : matrix) {
        if (row.size() != m) {
            throw std::invalid_argument("linear_form_truncated_sum: matrix must be square");
        }
    }
    if (exponent < 1 || exponent % 2 == 0) {
        throw std::invalid_argument("linear_form_truncated_sum: exponent must be odd");
    }
    std::vector<std::vector<Int>> im(m, std::vector<Int>(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            im[i][j] = matrix[i][j];
        }
    }
    Int det = detail::integer_determinant(im);
    if (det != 1 && det != -1) {
        throw std::domain_error("linear_form_truncated_sum: matrix must be unimodular");
    }

    // Scale the constraint to integers.
    std::vector<Int> dens;
    dens.reserve(m);
    for (const Rational& c : constraint) {
        dens.push_back(c.den());
    }
    Int scale = lcm_list(dens);
    std::vector<Int> c_int(m);
    for (std::size_t i = 0; i < m; ++i) {
        c_int[i] = constraint[i].num() * (scale / constraint[i].den());
    }

    // Solve for the last coordinate with a nonzero constraint coefficient;
    // if the constraint is identically zero, enumerate the full box.
    std::ptrdiff_t pivot = -1;
    for (std::size_t i = m; i-- > 0;) {
        if (c_int[i] != 0) {
            pivot = static_cast<std::ptrdiff_t>(i);
            break;
        }
    }

    std::vector<long long> u(m, 0);
    detail::RawSum total;

    auto emit = [&]() {
        Int prod = 1;
        for (std::size_t i = 0; i < m; ++i) {
            Int form = 0;
            for (std::size_t j = 0; j < m; ++j) {
                form += Int(matrix[i][j]) * u[j];
            }
            if (form == 0) {
                return;
            }
            prod *= form;
        }
        total.add(Rational(Int(1), int_pow(prod, exponent)));
    };

    std::vector<std::size_t> free_idx;
    for (std::size_t i = 0; i < m; ++i) {
        if (static_cast<std::ptrdiff_t>(i) != pivot) {
            free_idx.push_back(i);
        }
    }

    // Recursive box walk over the free coordinates.
    auto walk = [&](auto&& self, std::size_t pos) -> void {
        if (pos == free_idx.size()) {
            if (pivot < 0) {
                Int acc = 0;
                for (std::size_t i = 0; i < m; ++i) {
                    acc += c_int[i] * u[i];
                }
                if (acc == 0) {
                    emit();
                }
                return;
            }
            Int rest = 0;
            for (std::size_t i = 0; i < m; ++i) {
                if (static_cast<std::ptrdiff_t>(i) != pivot) {
                    rest += c_int[i] * u[i];
                }
            }
            rest = -rest;
            if (rest % c_int[pivot] != 0) {
                return;
            }
            Int v = rest / c_int[pivot];
            if (v == 0 || v < -bound || v > bound) {
                return;
            }
            u[pivot] = v.convert_to<long long>();
            emit();
            return;
        }
        std::size_t i = free_idx[pos];
        for (long long v = -bound; v <= bound; ++v) {
            if (v == 0) {
                continue;
            }
            u[i] = v;
            self(self, pos + 1);
        }
    };
    walk(walk, 0);
    return total.value();
}

}  // namespace franel
