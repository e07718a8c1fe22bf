#pragma once

#include "arrpoin/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace arrpoin {

/// Integer polynomial in t, ascending coefficients, trailing zeros trimmed.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Integer> coefficients);

    const std::vector<Integer>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Integer coefficient(std::size_t k) const;

    UniPoly operator+(const UniPoly& other) const;
    UniPoly operator*(const UniPoly& other) const;

    /// "1 + 3 t + 2 t^2"
    std::string to_string() const;

    bool operator==(const UniPoly&) const = default;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// Truncated power series in (s, t): coefficients of s^p t^q for
/// 0 <= p <= max_p and 0 <= q <= max_q (bounds inclusive).
class BivariateSeries {
public:
    BivariateSeries() : BivariateSeries(0, 0) {}
    BivariateSeries(std::size_t max_p, std::size_t max_q)
        : max_p_(max_p), max_q_(max_q), coeffs_((max_p + 1) * (max_q + 1)) {}

    std::size_t max_p() const { return max_p_; }
    std::size_t max_q() const { return max_q_; }

    Integer& at(std::size_t p, std::size_t q) { return coeffs_[p * (max_q_ + 1) + q]; }
    const Integer& at(std::size_t p, std::size_t q) const
    {
        return coeffs_[p * (max_q_ + 1) + q];
    }

    BivariateSeries& operator+=(const BivariateSeries& other);
    /// Truncated product; both operands must have the same bounds.
    BivariateSeries operator*(const BivariateSeries& other) const;

    /// Outer product of a series in s and a series in t, truncated.
    static BivariateSeries outer(const std::vector<Integer>& in_s, const std::vector<Integer>& in_t,
                                 std::size_t max_p, std::size_t max_q);

    /// Entry (p,q) becomes the sum of entries (a,b) with a <= p and b <= q.
    BivariateSeries partial_sums() const;

    bool operator==(const BivariateSeries&) const = default;

private:
    std::size_t max_p_;
    std::size_t max_q_;
    std::vector<Integer> coeffs_;
};

enum class PowerSign { Positive, Negative };

/// Coefficients of u^0..u^order in (1-u)^c (Positive) or (1-u)^(-c) (Negative).
/// For the negative power, coefficient k is C(k+c-1, c-1); c = 0 gives 1.
std::vector<Integer> binomial_series_coeffs(long c, PowerSign sign, std::size_t order);

} // namespace arrpoin
