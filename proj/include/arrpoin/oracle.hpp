#pragma once

#include "arrpoin/arrangement.hpp"
#include "arrpoin/lattice.hpp"
#include "arrpoin/matrix.hpp"
#include "arrpoin/polynomial.hpp"

#include <cstddef>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arrpoin {

class OracleError : public std::runtime_error {
public:
    enum class Code { NotInCell, BasisNotIndependent, FactorOverDelta, InvalidFraction };

    OracleError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Code code() const { return code_; }
    const char* code_name() const;

private:
    Code code_;
};

/// numerator / prod(forms[i] for i in denominator). The denominator is a
/// sorted multiset of form indices; order inside a tuple never matters.
struct FractionGenerator {
    MultiPoly numerator;
    std::vector<std::size_t> denominator;

    std::string to_string(const Arrangement& a) const;
    bool operator==(const FractionGenerator&) const = default;
};

using FractionCombination = std::vector<std::pair<Rational, FractionGenerator>>;

/// Sorted multisets of size k over {0..n-1}, in lexicographic order.
std::vector<std::vector<std::size_t>> multisets(std::size_t n, std::size_t k);

/// Splits `denominator` into forms of the arrangement by trial exact division
/// in form order. Returns the leftover nonzero constant and the multiset.
/// Throws OracleError::FactorOverDelta if anything non-constant remains.
std::pair<Rational, std::vector<std::size_t>> factor_over_arrangement(const Arrangement& a,
                                                                      const MultiPoly& denominator);

/// Builds numerator/denominator as a FractionGenerator, folding the constant
/// left over by factor_over_arrangement into the numerator.
FractionGenerator make_fraction(const Arrangement& a, const MultiPoly& numerator,
                                const MultiPoly& denominator);

struct DimCell {
    long long dim_R = 0;
    long long dim_Rbar = 0;
};

/// Oracle dimensions over the grid 0..max_p x 0..max_q.
struct DimTable {
    std::size_t max_p = 0;
    std::size_t max_q = 0;
    std::vector<DimCell> cells;

    const DimCell& at(std::size_t p, std::size_t q) const { return cells[p * (max_q + 1) + q]; }
};

struct FlatDimRow {
    std::size_t flat = 0;
    Integer dim_S;   ///< dim S^p_X = C(p + dim X - 1, dim X - 1)
    std::size_t dim_C = 0; ///< dim C_{q,X}, by rank
    Integer contribution;
};

/// Brute-force dimensions of the filtration cells R^p_q. Every fraction is
/// multiplied by a shared power of the defining polynomial so that spans
/// become row spaces of polynomial coefficient matrices.
class FiltrationOracle {
public:
    explicit FiltrationOracle(Arrangement a);
    FiltrationOracle(Arrangement a, IntersectionLattice lattice);

    const Arrangement& arrangement() const { return arrangement_; }
    const IntersectionLattice& lattice() const { return lattice_; }

    /// Monomial numerators of degree <= p over denominator multisets of size
    /// <= q, ordered by (size, multiset lex, monomial grlex).
    std::vector<FractionGenerator> enumerate_generators(long p, long q) const;

    /// numerator * prod_alpha alpha^(clear_power - multiplicity).
    MultiPoly cleared(const FractionGenerator& g, std::size_t clear_power) const;

    /// dim R^p_q; zero when p or q is negative. Memoized; safe to call from
    /// several threads.
    std::size_t dim_R(long p, long q) const;
    long long dim_Rbar(long p, long q) const;
    std::size_t dim_C_flat(std::size_t q, std::size_t flat) const;
    std::vector<FlatDimRow> dims_by_flat(std::size_t p, std::size_t q) const;

    /// Greedy section: degree-(p,q) generators independent modulo
    /// R^{p-1}_q + R^p_{q-1}, first-come in generator order.
    std::vector<FractionGenerator> basis_Rbar(std::size_t p, std::size_t q) const;

    /// Coordinates c with phi - sum c_i basis_i in R^{p-1}_q + R^p_{q-1}.
    std::vector<Rational> decompose_class(const FractionGenerator& phi, std::size_t p,
                                          std::size_t q,
                                          const std::vector<FractionGenerator>& basis) const;

    /// Same, for phi = sum of coefficient * fraction.
    std::vector<Rational> decompose_class(const FractionCombination& phi, std::size_t p,
                                          std::size_t q,
                                          const std::vector<FractionGenerator>& basis) const;

    /// True if the fraction lies in R^p_q (p, q may be negative).
    bool in_cell(const FractionGenerator& f, long p, long q) const;

    DimTable table(std::size_t max_p, std::size_t max_q, unsigned threads = 1) const;

private:
    std::size_t compute_dim_R(std::size_t p, std::size_t q) const;
    MultiPoly cleared_denominator(const std::vector<std::size_t>& multiset,
                                  std::size_t clear_power) const;
    /// Span of the cleared generators of every listed cell.
    SpanBuilder cell_span(const std::vector<std::pair<long, long>>& cells, std::size_t clear_power,
                          std::map<Monomial, std::size_t, GrlexLess>& columns) const;

    Arrangement arrangement_;
    IntersectionLattice lattice_;
    mutable std::mutex memo_mutex_;
    mutable std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo_;
};

/// Maps a polynomial to a sparse row, assigning new columns on first sight.
SparseVector to_sparse(const MultiPoly& poly, std::map<Monomial, std::size_t, GrlexLess>& columns);

} // namespace arrpoin
