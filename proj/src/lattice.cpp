#include "arrpoin/lattice.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace arrpoin {

FlatKey flat_key(const RationalMatrix& rref_rows)
{
    return {rref_rows.rows(), rref_rows.entries()};
}

namespace {

RationalMatrix rows_of(const Arrangement& a, const std::vector<std::size_t>& indices)
{
    RationalMatrix m(0, a.ell());
    for (std::size_t i : indices)
        m.append_row(a.form(i).coefficients);
    return m;
}

RationalMatrix stacked(const RationalMatrix& top, const RationalMatrix& bottom)
{
    RationalMatrix m(top);
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        m.append_row(bottom.row(r));
    return m;
}

} // namespace

Flat flat_of_forms(const Arrangement& a, const std::vector<std::size_t>& indices)
{
    Flat f;
    f.defining_rref = rref(rows_of(a, indices)).reduced;
    f.codim = f.defining_rref.rows();
    f.dim = a.ell() - f.codim;
    return f;
}

bool flat_leq(const Flat& x, const Flat& y)
{
    if (x.defining_rref.cols() != y.defining_rref.cols())
        throw std::invalid_argument("flats live in different ambient dimensions");
    if (x.codim > y.codim)
        return false;
    return rank(stacked(x.defining_rref, y.defining_rref)) == y.codim;
}

std::vector<Integer> compute_moebius(const std::vector<std::vector<bool>>& leq)
{
    std::vector<Integer> mu(leq.size());
    for (std::size_t x = 0; x < leq.size(); ++x) {
        if (x == 0) {
            mu[x] = 1;
            continue;
        }
        Integer sum = 0;
        for (std::size_t y = 0; y < x; ++y)
            if (leq[y][x])
                sum += mu[y];
        mu[x] = -sum;
    }
    return mu;
}

std::optional<std::size_t> IntersectionLattice::find(const FlatKey& key) const
{
    auto it = index_.find(key);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t IntersectionLattice::flat_index_of(const Arrangement& a,
                                               const std::vector<std::size_t>& indices) const
{
    auto idx = find(flat_key(flat_of_forms(a, indices).defining_rref));
    if (!idx)
        throw std::logic_error("form subset does not cut out a lattice flat");
    return *idx;
}

IntersectionLattice compute_lattice(const Arrangement& a)
{
    const std::size_t ell = a.ell();
    std::map<FlatKey, Flat> found;

    Flat top;
    top.defining_rref = RationalMatrix(0, ell);
    top.dim = ell;
    std::deque<FlatKey> queue;
    queue.push_back(flat_key(top.defining_rref));
    found.emplace(queue.back(), std::move(top));

    while (!queue.empty()) {
        const FlatKey key = queue.front();
        queue.pop_front();
        const Flat current = found.at(key);
        for (std::size_t i = 0; i < a.size(); ++i) {
            RationalMatrix rows = current.defining_rref;
            rows.append_row(a.form(i).coefficients);
            EchelonForm ef = rref(rows);
            if (ef.reduced.rows() == current.codim)
                continue;
            FlatKey next = flat_key(ef.reduced);
            if (found.contains(next))
                continue;
            Flat f;
            f.defining_rref = std::move(ef.reduced);
            f.codim = f.defining_rref.rows();
            f.dim = ell - f.codim;
            f.witness = current.witness;
            f.witness.push_back(i);
            found.emplace(next, std::move(f));
            queue.push_back(std::move(next));
        }
    }

    IntersectionLattice lattice;
    lattice.ell_ = ell;
    // std::map over FlatKey already iterates in (codim, entries) order.
    for (auto& [key, flat] : found) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            RationalMatrix rows = flat.defining_rref;
            rows.append_row(a.form(i).coefficients);
            if (rank(rows) == flat.codim)
                flat.forms_on.push_back(i);
        }
        lattice.index_.emplace(key, lattice.flats_.size());
        lattice.flats_.push_back(std::move(flat));
    }

    const std::size_t n = lattice.flats_.size();
    lattice.leq_.assign(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x; y < n; ++y)
            lattice.leq_[x][y] = x == y || flat_leq(lattice.flats_[x], lattice.flats_[y]);

    lattice.moebius_ = compute_moebius(lattice.leq_);
    return lattice;
}

} // namespace arrpoin
