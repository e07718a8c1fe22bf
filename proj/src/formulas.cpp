#include "arrpoin/formulas.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace arrpoin {

UniPoly poincare_polynomial(const IntersectionLattice& lattice)
{
    std::vector<Integer> coeffs(lattice.ell() + 1);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        const std::size_t c = lattice.flat(i).codim;
        coeffs[c] += (c % 2 == 0) ? lattice.moebius(i) : Integer(-lattice.moebius(i));
    }
    return UniPoly(std::move(coeffs));
}

namespace {

Integer signed_moebius(std::size_t codim, const Integer& mu)
{
    return codim % 2 == 0 ? mu : Integer(-mu);
}

// (-1)^c mu t^c (1-s)^(c - s_shift) (1-t)^(-c - t_extra)
BivariateSeries flat_term(std::size_t codim, const Integer& mu, std::size_t s_power,
                          std::size_t t_extra, std::size_t max_p, std::size_t max_q)
{
    const auto in_s = binomial_series_coeffs(static_cast<long>(s_power), PowerSign::Negative, max_p);
    std::vector<Integer> in_t(max_q + 1);
    if (codim <= max_q) {
        const auto tail = binomial_series_coeffs(static_cast<long>(codim + t_extra),
                                                 PowerSign::Negative, max_q - codim);
        const Integer scale = signed_moebius(codim, mu);
        for (std::size_t k = 0; k < tail.size(); ++k)
            in_t[codim + k] = scale * tail[k];
    }
    return BivariateSeries::outer(in_s, in_t, max_p, max_q);
}

} // namespace

BivariateSeries rbar_series(const IntersectionLattice& lattice, std::size_t max_p,
                            std::size_t max_q, unsigned threads)
{
    const std::size_t ell = lattice.ell();
    const std::size_t n = lattice.size();
    std::vector<BivariateSeries> terms(n);
    auto build = [&](std::size_t i) {
        const std::size_t c = lattice.flat(i).codim;
        terms[i] = flat_term(c, lattice.moebius(i), ell - c, 0, max_p, max_q);
    };

    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            build(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < threads; ++w)
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++)
                    build(i);
            });
    }

    BivariateSeries total(max_p, max_q);
    for (const auto& t : terms)
        total += t;
    return total;
}

BivariateSeries cumulative_series(const IntersectionLattice& lattice, std::size_t max_p,
                                  std::size_t max_q)
{
    const std::size_t ell = lattice.ell();
    BivariateSeries total(max_p, max_q);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        const std::size_t c = lattice.flat(i).codim;
        total += flat_term(c, lattice.moebius(i), ell - c + 1, 1, max_p, max_q);
    }
    return total;
}

BivariateSeries series_from_exponents(const ExponentsProfile& exps, std::size_t max_p,
                                      std::size_t max_q)
{
    const long ell = static_cast<long>(exps.ell());
    BivariateSeries result = BivariateSeries::outer(
        binomial_series_coeffs(ell, PowerSign::Negative, max_p),
        binomial_series_coeffs(ell, PowerSign::Negative, max_q), max_p, max_q);
    for (unsigned long d : exps.exponents) {
        BivariateSeries factor(max_p, max_q);
        factor.at(0, 0) = 1;
        if (max_q >= 1) {
            factor.at(0, 1) = Integer(d) - 1;
            if (max_p >= 1)
                factor.at(1, 1) = -Integer(d);
        }
        result = result * factor;
    }
    return result;
}

UniPoly poincare_from_exponents(const ExponentsProfile& exps)
{
    UniPoly result({Integer(1)});
    for (unsigned long d : exps.exponents)
        result = result * UniPoly({Integer(1), Integer(d)});
    return result;
}

namespace {

// Quotient of poly by (1 + d t) if the division is exact.
std::optional<std::vector<Integer>> divide_linear(const std::vector<Integer>& poly, const Integer& d)
{
    const std::size_t n = poly.size() - 1;
    std::vector<Integer> quotient(n);
    quotient[0] = poly[0];
    for (std::size_t k = 1; k < n; ++k)
        quotient[k] = poly[k] - d * quotient[k - 1];
    if (poly[n] != d * quotient[n - 1])
        return std::nullopt;
    return quotient;
}

std::vector<Integer> positive_divisors(const Integer& value)
{
    std::vector<Integer> small, large;
    for (Integer k = 1; k * k <= value; ++k) {
        if (value % k != 0)
            continue;
        small.push_back(k);
        if (k * k != value)
            large.push_back(value / k);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

std::optional<ExponentsProfile> try_factor_exponents(const UniPoly& poly, std::size_t ell)
{
    if (poly.coefficient(0) != 1 || poly.degree() > static_cast<int>(ell))
        return std::nullopt;
    std::vector<Integer> rest = poly.coefficients();
    std::vector<unsigned long> found;
    while (rest.size() > 1) {
        const Integer lead = rest.back();
        if (lead <= 0)
            return std::nullopt;
        bool divided = false;
        for (const Integer& d : positive_divisors(lead)) {
            if (auto q = divide_linear(rest, d)) {
                if (!d.fits_ulong_p())
                    return std::nullopt;
                found.push_back(d.get_ui());
                rest = std::move(*q);
                divided = true;
                break;
            }
        }
        if (!divided)
            return std::nullopt;
    }
    found.resize(ell, 0);
    std::sort(found.begin(), found.end());
    return ExponentsProfile{std::move(found)};
}

Integer c_dimension_formula(std::size_t codim, const Integer& mu, std::size_t q)
{
    if (codim == 0)
        return q == 0 ? Integer(1) : Integer(0);
    if (q < codim)
        return 0;
    return signed_moebius(codim, mu) *
           binomial(static_cast<long>(q) - 1, static_cast<long>(codim) - 1);
}

std::vector<FlatSeriesRow> c_series_per_flat(const IntersectionLattice& lattice,
                                             std::size_t max_q)
{
    std::vector<FlatSeriesRow> rows;
    rows.reserve(lattice.size());
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        FlatSeriesRow row{i, lattice.flat(i).codim, lattice.moebius(i), {}};
        row.dims.reserve(max_q + 1);
        for (std::size_t q = 0; q <= max_q; ++q)
            row.dims.push_back(c_dimension_formula(row.codim, row.moebius, q));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Integer> c_series_total(const IntersectionLattice& lattice, std::size_t max_q)
{
    // Poin(A, u) at u = t/(1-t): sum_k a_k t^k (1-t)^-k.
    const UniPoly poin = poincare_polynomial(lattice);
    std::vector<Integer> total(max_q + 1);
    for (std::size_t k = 0; k < poin.coefficients().size() && k <= max_q; ++k) {
        const auto tail = binomial_series_coeffs(static_cast<long>(k), PowerSign::Negative, max_q - k);
        for (std::size_t j = 0; j < tail.size(); ++j)
            total[k + j] += poin.coefficient(k) * tail[j];
    }
    return total;
}

} // namespace arrpoin
