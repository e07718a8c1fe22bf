#pragma once

#include "arrpoin/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrpoin {

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exponent vector of a monomial in x1..x_ell.
struct Monomial {
    std::vector<unsigned> exponents;

    Monomial() = default;
    explicit Monomial(std::size_t ell) : exponents(ell, 0) {}
    explicit Monomial(std::vector<unsigned> e) : exponents(std::move(e)) {}

    std::size_t ell() const { return exponents.size(); }
    unsigned degree() const;

    Monomial operator*(const Monomial& other) const;
    /// True when `other` divides this monomial.
    bool divisible_by(const Monomial& other) const;
    Monomial operator/(const Monomial& other) const;

    bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic enumeration order: lower total degree first, then
/// within a degree x1 > x2 > ... (so x1 comes before x2). This order fixes the
/// column order of every coefficient matrix.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of exactly degree d in ell variables, in grlex order.
std::vector<Monomial> monomials_of_degree(std::size_t ell, unsigned d);
/// All monomials of degree <= d, in grlex order.
std::vector<Monomial> monomials_up_to(std::size_t ell, unsigned d);

/// Sparse polynomial with rational coefficients. Zero coefficients are never
/// stored.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    explicit MultiPoly(std::size_t ell = 0) : ell_(ell) {}

    static MultiPoly constant(std::size_t ell, const Rational& c);
    static MultiPoly variable(std::size_t ell, std::size_t index);
    static MultiPoly monomial(const Monomial& m, const Rational& c = 1);
    static MultiPoly linear(const std::vector<Rational>& coefficients);

    std::size_t ell() const { return ell_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    std::optional<Rational> constant_value() const;
    Rational coefficient(const Monomial& m) const;

    MultiPoly operator+(const MultiPoly& other) const;
    MultiPoly operator-(const MultiPoly& other) const;
    MultiPoly operator*(const MultiPoly& other) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(unsigned n) const;

    /// Quotient when `divisor` divides this polynomial exactly, nullopt otherwise.
    std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

    /// Human-readable form using variables x1..x_ell, highest degree first.
    std::string to_string() const;

    bool operator==(const MultiPoly&) const = default;

private:
    void check_same(const MultiPoly& other) const;
    void add_term(const Monomial& m, const Rational& c);

    std::size_t ell_;
    TermMap terms_;
};

} // namespace arrpoin
