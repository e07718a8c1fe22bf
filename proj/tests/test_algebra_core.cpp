#include "arrpoin/expression.hpp"
#include "arrpoin/matrix.hpp"
#include "arrpoin/polynomial.hpp"
#include "arrpoin/rational.hpp"
#include "arrpoin/series.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace arrpoin;

namespace {

MultiPoly x(std::size_t i) { return MultiPoly::variable(3, i - 1); }

Rational evaluate(const MultiPoly& p, const std::vector<Rational>& point)
{
    Rational acc = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < point.size(); ++i)
            for (unsigned e = 0; e < m.exponents[i]; ++e)
                term *= point[i];
        acc += term;
    }
    return acc;
}

RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols)
{
    std::uniform_int_distribution<int> v(-3, 3);
    std::uniform_int_distribution<int> d(1, 4);
    std::bernoulli_distribution sparse(0.4);
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = sparse(rng) ? Rational(0) : make_rational(v(rng), d(rng));
    return m;
}

} // namespace

TEST_CASE("rational literals parse exactly and reject floats")
{
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-6/4") == make_rational(-3, 2));
    CHECK(parse_rational(" 1/2 ").get_den() == 2);
    CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("rational sums stay canonical")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> v(-50, 50), d(1, 60);
    for (int i = 0; i < 200; ++i) {
        const Rational a = make_rational(v(rng), d(rng));
        const Rational b = make_rational(v(rng), d(rng));
        const Rational s = a + b;
        Integer g;
        mpz_gcd(g.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
        CHECK(s.get_den() > 0);
        CHECK(g == 1);
        if (s == 0)
            CHECK(s.get_den() == 1);
    }
}

TEST_CASE("polynomial arithmetic")
{
    const MultiPoly prod = (x(1) - x(2)) * (x(2) - x(3));
    const MultiPoly expected = x(1) * x(2) - x(1) * x(3) - x(2) * x(2) + x(2) * x(3);
    CHECK(prod == expected);
    CHECK(prod.terms().size() == 4);

    const MultiPoly one = MultiPoly::constant(3, 1);
    CHECK(prod * one == prod);

    SUBCASE("vandermonde-type product")
    {
        const MultiPoly v = (x(1) - x(2)) * (x(2) - x(3)) * (x(1) - x(3));
        CHECK(v.terms().size() == 6);
        CHECK(v.degree() == 3);
        CHECK(v.is_homogeneous());
        // Independent check: evaluation at sample points.
        std::mt19937 rng(3);
        std::uniform_int_distribution<int> d(-9, 9);
        for (int i = 0; i < 20; ++i) {
            std::vector<Rational> pt{d(rng), d(rng), d(rng)};
            CHECK(evaluate(v, pt) == (pt[0] - pt[1]) * (pt[1] - pt[2]) * (pt[0] - pt[2]));
        }
    }

    CHECK_THROWS_AS(x(1) + MultiPoly::variable(2, 0), DimensionMismatch);
    CHECK((x(1) - x(1)).is_zero());
    CHECK((x(1) - x(1)).degree() == -1);
}

TEST_CASE("exact division")
{
    const MultiPoly a = x(1) - x(2);
    const MultiPoly b = x(2) + x(3).scaled(make_rational(1, 2));
    const MultiPoly f = a * a * b;
    auto q = f.divide_exact(a);
    REQUIRE(q);
    CHECK(*q == a * b);
    CHECK_FALSE(f.divide_exact(x(1) - x(3)));
    CHECK_FALSE((x(1) + MultiPoly::constant(3, 1)).divide_exact(x(1)));
}

TEST_CASE("grlex monomial enumeration")
{
    const auto deg1 = monomials_of_degree(3, 1);
    REQUIRE(deg1.size() == 3);
    CHECK(deg1[0].exponents == std::vector<unsigned>{1, 0, 0});
    CHECK(deg1[2].exponents == std::vector<unsigned>{0, 0, 1});
    CHECK(monomials_up_to(3, 2).size() == 10);
    const auto all = monomials_up_to(2, 4);
    for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(GrlexLess{}(all[i - 1], all[i]));
}

TEST_CASE("polynomial expressions")
{
    const MultiPoly p = parse_polynomial("x1 + 2*x2 - x3 + 3", 3);
    CHECK(p == x(1) + x(2).scaled(2) - x(3) + MultiPoly::constant(3, 3));
    CHECK(parse_polynomial("(x1-x2)^2", 3) == (x(1) - x(2)) * (x(1) - x(2)));
    CHECK(parse_polynomial("x1/2", 3) == x(1).scaled(make_rational(1, 2)));
    CHECK(parse_polynomial("-(x1)*-x2", 3) == x(1) * x(2));
    CHECK_THROWS_AS(parse_polynomial("x4", 3), ExpressionError);
    CHECK_THROWS_AS(parse_polynomial("x1/x2", 3), ExpressionError);
    CHECK_THROWS_AS(parse_polynomial("x1 +", 3), ExpressionError);
    CHECK_THROWS_AS(parse_polynomial("1.5", 3), ExpressionError);
    CHECK(p.to_string() == "x1 + 2*x2 - x3 + 3");
}

TEST_CASE("rank")
{
    RationalMatrix id(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        id(i, i) = 1;
    CHECK(rank(id) == 3);
    CHECK(rank(RationalMatrix(4, 5)) == 0);
    CHECK(rank(RationalMatrix(0, 0)) == 0);
    const auto m = RationalMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, -1}}, 3);
    CHECK(rank(m) == 2);

    const EchelonForm ef = rref(m);
    CHECK(ef.pivots == std::vector<std::size_t>{0, 1});
    CHECK(ef.reduced == RationalMatrix::from_rows({{1, 0, -1}, {0, 1, 1}}, 3));
}

TEST_CASE("rank properties on random matrices")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    for (int i = 0; i < 150; ++i) {
        const RationalMatrix m = random_matrix(rng, dim(rng), dim(rng));
        const std::size_t r = rank(m);
        CHECK(r == rank(m.transposed()));
        std::vector<std::vector<Rational>> rows;
        for (std::size_t k = 0; k < m.rows(); ++k)
            rows.emplace_back(m.row(k).begin(), m.row(k).end());
        CHECK(r == testing::naive_rank(rows));
        CHECK(r == rref(m).pivots.size());
    }
}

TEST_CASE("rank of {p, q, p+q} is at most 2")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-4, 4);
    const auto monos = monomials_up_to(3, 2);
    for (int i = 0; i < 30; ++i) {
        MultiPoly p(3), q(3);
        for (const auto& m : monos) {
            p = p + MultiPoly::monomial(m, c(rng));
            q = q + MultiPoly::monomial(m, c(rng));
        }
        RationalMatrix mat(3, monos.size());
        const MultiPoly s = p + q;
        for (std::size_t j = 0; j < monos.size(); ++j) {
            mat(0, j) = p.coefficient(monos[j]);
            mat(1, j) = q.coefficient(monos[j]);
            mat(2, j) = s.coefficient(monos[j]);
        }
        CHECK(rank(mat) <= 2);
    }
}

TEST_CASE("solve_in_span")
{
    const auto basis = RationalMatrix::from_rows({{1, 2, 0}, {0, 1, 1}}, 3);
    auto first = solve_in_span(basis.row(0), basis);
    REQUIRE(first);
    CHECK(*first == std::vector<Rational>{1, 0});

    const std::vector<Rational> zero(3);
    auto z = solve_in_span(zero, basis);
    REQUIRE(z);
    CHECK(*z == std::vector<Rational>{0, 0});

    const auto rank_one = RationalMatrix::from_rows({{1, 1, 1}, {2, 2, 2}}, 3);
    const std::vector<Rational> outside{1, 0, 0};
    CHECK_FALSE(solve_in_span(outside, rank_one));
    CHECK_THROWS_AS(solve_in_span(std::vector<Rational>{1, 2}, basis), std::invalid_argument);
}

TEST_CASE("solve_in_span round trip")
{
    std::mt19937 rng(19);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    std::uniform_int_distribution<int> v(-5, 5);
    for (int i = 0; i < 100; ++i) {
        const RationalMatrix b = random_matrix(rng, dim(rng), dim(rng));
        std::vector<Rational> c(b.rows());
        for (auto& x : c)
            x = v(rng);
        std::vector<Rational> target(b.cols());
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t k = 0; k < b.cols(); ++k)
                target[k] += c[r] * b(r, k);
        auto sol = solve_in_span(target, b);
        REQUIRE(sol);
        std::vector<Rational> back(b.cols());
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t k = 0; k < b.cols(); ++k)
                back[k] += (*sol)[r] * b(r, k);
        CHECK(back == target);
    }
}

TEST_CASE("span builder agrees with rank")
{
    std::mt19937 rng(23);
    for (int i = 0; i < 60; ++i) {
        const RationalMatrix m = random_matrix(rng, 6, 5);
        SpanBuilder span;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            SparseVector v;
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (m(r, c) != 0)
                    v.emplace(c, m(r, c));
            span.insert(v);
            CHECK(span.contains(v));
        }
        CHECK(span.rank() == rank(m));
    }
}

TEST_CASE("binomial series coefficients")
{
    CHECK(binomial_series_coeffs(3, PowerSign::Negative, 2)[2] == 6);
    for (long c = 0; c < 5; ++c)
        CHECK(binomial_series_coeffs(c, PowerSign::Negative, 3)[0] == 1);
    CHECK(binomial_series_coeffs(2, PowerSign::Positive, 3) ==
          std::vector<Integer>{1, -2, 1, 0});
    CHECK(binomial_series_coeffs(0, PowerSign::Negative, 2) == std::vector<Integer>{1, 0, 0});
}

TEST_CASE("bivariate series helpers")
{
    BivariateSeries a(2, 2);
    a.at(0, 0) = 1;
    a.at(1, 1) = 2;
    BivariateSeries one(2, 2);
    one.at(0, 0) = 1;
    CHECK(a * one == a);
    const auto sums = a.partial_sums();
    CHECK(sums.at(0, 0) == 1);
    CHECK(sums.at(2, 2) == 3);
    CHECK(sums.at(1, 0) == 1);
}

TEST_CASE("univariate polynomial formatting")
{
    CHECK(UniPoly({1, 2, 1}).to_string() == "1 + 2 t + 1 t^2");
    CHECK(UniPoly({1, 0, -3}).to_string() == "1 - 3 t^2");
    CHECK(UniPoly({0, 0}).is_zero());
    CHECK(UniPoly({1, 1}) * UniPoly({1, 2}) == UniPoly({1, 3, 2}));
}
