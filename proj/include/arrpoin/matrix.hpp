#pragma once

#include "arrpoin/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace arrpoin {

/// Dense row-major matrix of rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows,
                                    std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const
    {
        return entries_[r * cols_ + c];
    }

    std::span<const Rational> row(std::size_t r) const
    {
        return {entries_.data() + r * cols_, cols_};
    }

    void append_row(std::span<const Rational> values);
    RationalMatrix transposed() const;

    /// Row-major flattening; used as a total-order key for canonical forms.
    const std::vector<Rational>& entries() const { return entries_; }

    bool operator==(const RationalMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Exact rank. Rows are scaled to integers and reduced by fraction-free
/// (Bareiss) elimination, so no rational normalization happens in the inner
/// loop.
std::size_t rank(const RationalMatrix& m);

struct EchelonForm {
    RationalMatrix reduced; ///< nonzero rows of the RREF only
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. The nonzero rows form the unique canonical basis
/// of the row space.
EchelonForm rref(const RationalMatrix& m);

/// Finds c with c * basis_rows == target. Free variables of the echelon form
/// are set to zero. Returns nullopt when target is outside the row space.
std::optional<std::vector<Rational>> solve_in_span(std::span<const Rational> target,
                                                   const RationalMatrix& basis_rows);

/// Sparse vector: column index -> nonzero value.
using SparseVector = std::map<std::size_t, Rational>;

/// Incrementally maintained echelon basis of a row space, for greedy basis
/// extension and membership tests. Rows are kept with a unit pivot.
class SpanBuilder {
public:
    /// Adds v if it is independent of the current span; returns true if added.
    bool insert(const SparseVector& v);
    bool contains(const SparseVector& v) const;
    std::size_t rank() const { return rows_.size(); }

private:
    SparseVector reduce(SparseVector v) const;

    std::vector<SparseVector> rows_;
    std::map<std::size_t, std::size_t> pivot_row_;
};

} // namespace arrpoin
