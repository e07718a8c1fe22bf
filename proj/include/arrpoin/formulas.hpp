#pragma once

#include "arrpoin/lattice.hpp"
#include "arrpoin/series.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace arrpoin {

/// Exponents d_1..d_ell of a free arrangement (ascending when produced by
/// try_factor_exponents).
struct ExponentsProfile {
    std::vector<unsigned long> exponents;

    std::size_t ell() const { return exponents.size(); }
    bool operator==(const ExponentsProfile&) const = default;
};

/// sum over flats of mu(X) (-t)^codim(X).
UniPoly poincare_polynomial(const IntersectionLattice& lattice);

/// Coefficients dim Rbar^p_q of (1-s)^-ell Poin(A, t(1-s)/(1-t)), expanded as
/// sum_X (-1)^c mu(X) t^c (1-s)^(c-ell) (1-t)^-c. Per-flat grids may be built
/// on `threads` workers; the reduction runs in flat order.
BivariateSeries rbar_series(const IntersectionLattice& lattice, std::size_t max_p,
                            std::size_t max_q, unsigned threads = 1);

/// Coefficients dim R^p_q from the closed product
/// (1-s)^(-ell-1) (1-t)^-1 Poin(A, t(1-s)/(1-t)).
BivariateSeries cumulative_series(const IntersectionLattice& lattice, std::size_t max_p,
                                  std::size_t max_q);

/// (1-s)^-ell (1-t)^-ell prod_i (1 + (d_i - 1) t - d_i s t).
BivariateSeries series_from_exponents(const ExponentsProfile& exps, std::size_t max_p,
                                      std::size_t max_q);

/// prod_i (1 + d_i t).
UniPoly poincare_from_exponents(const ExponentsProfile& exps);

/// Nonnegative integers d_1 <= ... <= d_ell with prod (1 + d_i t) == poly,
/// zero-padded to ell entries; nullopt if none exist.
std::optional<ExponentsProfile> try_factor_exponents(const UniPoly& poly, std::size_t ell);

struct FlatSeriesRow {
    std::size_t flat = 0;
    std::size_t codim = 0;
    Integer moebius;
    std::vector<Integer> dims; ///< dim C_{q,X} for q = 0..max_q
};

/// dim C_{q,X} = (-1)^c mu(X) C(q-1, c-1) for q >= c >= 1; V has (1, 0, 0, ...).
std::vector<FlatSeriesRow> c_series_per_flat(const IntersectionLattice& lattice,
                                             std::size_t max_q);

/// dim C(Delta)_q, expanded from Poin(A, t/(1-t)).
std::vector<Integer> c_series_total(const IntersectionLattice& lattice, std::size_t max_q);

/// Closed form for dim C_{q,X} of a flat of codimension c with Moebius value mu.
Integer c_dimension_formula(std::size_t codim, const Integer& mu, std::size_t q);

} // namespace arrpoin
