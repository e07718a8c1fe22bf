#pragma once

#include "arrpoin/arrangement.hpp"
#include "arrpoin/matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace arrpoin {

/// A flat X of the intersection lattice, identified by the canonical RREF of
/// the linear forms vanishing on it.
struct Flat {
    RationalMatrix defining_rref; ///< codim x ell, rows span I(X) in degree 1
    std::size_t codim = 0;
    std::size_t dim = 0;
    /// Form indices whose span is this flat's row space (recorded by closure).
    std::vector<std::size_t> witness;
    /// All form indices vanishing on X, ascending.
    std::vector<std::size_t> forms_on;
};

/// Total order key of a canonical row space: (codim, row-major RREF entries).
using FlatKey = std::pair<std::size_t, std::vector<Rational>>;

FlatKey flat_key(const RationalMatrix& rref_rows);

/// Canonical flat (without witness/forms_on) cut out by the given forms.
Flat flat_of_forms(const Arrangement& a, const std::vector<std::size_t>& indices);

/// X <= Y in reverse inclusion, i.e. rowspace(X) is contained in rowspace(Y).
bool flat_leq(const Flat& x, const Flat& y);

/// mu(flat 0) = 1 and mu(X) = -sum_{Y < X} mu(Y). `leq[i][j]` is flat i <= flat j;
/// flats must be sorted so that i < j whenever flat i < flat j.
std::vector<Integer> compute_moebius(const std::vector<std::vector<bool>>& leq);

class IntersectionLattice {
public:
    std::size_t ell() const { return ell_; }
    std::size_t size() const { return flats_.size(); }
    const std::vector<Flat>& flats() const { return flats_; }
    const Flat& flat(std::size_t i) const { return flats_[i]; }
    const Integer& moebius(std::size_t i) const { return moebius_[i]; }
    const std::vector<Integer>& moebius() const { return moebius_; }
    bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
    const std::vector<std::vector<bool>>& order() const { return leq_; }

    std::optional<std::size_t> find(const FlatKey& key) const;
    /// Index of V(eps) for the given form indices (duplicates allowed).
    std::size_t flat_index_of(const Arrangement& a, const std::vector<std::size_t>& indices) const;

    friend IntersectionLattice compute_lattice(const Arrangement& a);

private:
    std::size_t ell_ = 0;
    std::vector<Flat> flats_;
    std::vector<std::vector<bool>> leq_;
    std::vector<Integer> moebius_;
    std::map<FlatKey, std::size_t> index_;
};

/// Closure from {V}: adjoin every form to every flat until no new row space
/// appears. Flats are sorted by (codim, RREF entries), so flat 0 is V.
IntersectionLattice compute_lattice(const Arrangement& a);

} // namespace arrpoin
