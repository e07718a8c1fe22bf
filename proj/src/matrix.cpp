#include "arrpoin/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace arrpoin {

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows,
                                         std::size_t cols)
{
    RationalMatrix m(0, cols);
    for (const auto& r : rows)
        m.append_row(r);
    return m;
}

void RationalMatrix::append_row(std::span<const Rational> values)
{
    if (values.size() != cols_)
        throw std::invalid_argument("row length does not match column count");
    entries_.insert(entries_.end(), values.begin(), values.end());
    ++rows_;
}

RationalMatrix RationalMatrix::transposed() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

std::size_t rank(const RationalMatrix& m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows == 0 || cols == 0)
        return 0;

    std::vector<Integer> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        Integer scale = 1;
        for (std::size_t c = 0; c < cols; ++c)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c)
            a[r * cols + c] = m(r, c).get_num() * (scale / m(r, c).get_den());
    }
    auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * cols + c]; };

    Integer prev = 1;
    Integer tmp;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t pivot = rk;
        while (pivot < rows && at(pivot, c) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rk)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(at(pivot, j), at(rk, j));
        const Integer& p = at(rk, c);
        for (std::size_t r = rk + 1; r < rows; ++r) {
            const Integer f = at(r, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer& x = at(r, j);
                x *= p;
                tmp = f * at(rk, j);
                x -= tmp;
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
            at(r, c) = 0;
        }
        prev = p;
        ++rk;
    }
    return rk;
}

EchelonForm rref(const RationalMatrix& m)
{
    RationalMatrix w(m);
    const std::size_t rows = w.rows();
    const std::size_t cols = w.cols();
    std::vector<std::size_t> pivots;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t pivot = rk;
        while (pivot < rows && w(pivot, c) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rk)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(w(pivot, j), w(rk, j));
        const Rational inv = 1 / w(rk, c);
        for (std::size_t j = c; j < cols; ++j)
            w(rk, j) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rk || w(r, c) == 0)
                continue;
            const Rational f = w(r, c);
            for (std::size_t j = c; j < cols; ++j)
                w(r, j) -= f * w(rk, j);
        }
        pivots.push_back(c);
        ++rk;
    }
    RationalMatrix reduced(0, cols);
    for (std::size_t r = 0; r < rk; ++r)
        reduced.append_row(w.row(r));
    return {std::move(reduced), std::move(pivots)};
}

std::optional<std::vector<Rational>> solve_in_span(std::span<const Rational> target,
                                                   const RationalMatrix& basis_rows)
{
    if (target.size() != basis_rows.cols())
        throw std::invalid_argument("target length does not match basis width");
    const std::size_t n = basis_rows.rows();
    // Columns of the augmented system are the basis rows, plus the target.
    RationalMatrix system(basis_rows.cols(), n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < basis_rows.cols(); ++j)
            system(j, i) = basis_rows(i, j);
    for (std::size_t j = 0; j < target.size(); ++j)
        system(j, n) = target[j];

    const EchelonForm ef = rref(system);
    std::vector<Rational> coeffs(n);
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) {
        if (ef.pivots[r] == n)
            return std::nullopt;
        coeffs[ef.pivots[r]] = ef.reduced(r, n);
    }
    return coeffs;
}

SparseVector SpanBuilder::reduce(SparseVector v) const
{
    auto it = v.begin();
    while (it != v.end()) {
        auto p = pivot_row_.find(it->first);
        if (p == pivot_row_.end()) {
            ++it;
            continue;
        }
        const std::size_t col = it->first;
        const Rational f = it->second;
        for (const auto& [c, x] : rows_[p->second]) {
            auto [slot, inserted] = v.try_emplace(c, -f * x);
            if (!inserted) {
                slot->second -= f * x;
                if (slot->second == 0)
                    v.erase(slot);
            }
        }
        it = v.lower_bound(col);
    }
    return v;
}

bool SpanBuilder::insert(const SparseVector& v)
{
    SparseVector r = reduce(v);
    if (r.empty())
        return false;
    const Rational inv = 1 / r.begin()->second;
    for (auto& [c, x] : r)
        x *= inv;
    pivot_row_.emplace(r.begin()->first, rows_.size());
    rows_.push_back(std::move(r));
    return true;
}

bool SpanBuilder::contains(const SparseVector& v) const { return reduce(v).empty(); }

} // namespace arrpoin
