#include "arrpoin/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace arrpoin {

const char* OracleError::code_name() const
{
    switch (code_) {
    case Code::NotInCell:
        return "NotInCell";
    case Code::BasisNotIndependent:
        return "BasisNotIndependent";
    case Code::FactorOverDelta:
        return "FactorOverDelta";
    case Code::InvalidFraction:
        return "InvalidFraction";
    }
    return "OracleError";
}

std::string FractionGenerator::to_string(const Arrangement& a) const
{
    std::ostringstream out;
    const std::string num = numerator.to_string();
    const bool compound = numerator.terms().size() > 1;
    if (denominator.empty())
        return num;
    out << (compound ? "(" + num + ")" : num) << "/";
    std::vector<std::pair<std::size_t, unsigned>> runs;
    for (std::size_t i : denominator) {
        if (!runs.empty() && runs.back().first == i)
            ++runs.back().second;
        else
            runs.emplace_back(i, 1);
    }
    const bool wrap = runs.size() > 1;
    if (wrap)
        out << "(";
    for (std::size_t k = 0; k < runs.size(); ++k) {
        if (k > 0)
            out << "*";
        const MultiPoly form = a.form_polynomial(runs[k].first);
        const bool single = form.terms().size() == 1 && form.terms().begin()->second == 1;
        if (single && runs[k].second == 1 && !wrap)
            out << form.to_string();
        else
            out << "(" << form.to_string() << ")";
        if (runs[k].second > 1)
            out << "^" << runs[k].second;
    }
    if (wrap)
        out << ")";
    return out.str();
}

std::vector<std::vector<std::size_t>> multisets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    if (n == 0)
        return out;
    std::vector<std::size_t> cur(k, 0);
    for (;;) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - 1)
            --i;
        if (i == 0)
            break;
        ++cur[i - 1];
        std::fill(cur.begin() + static_cast<std::ptrdiff_t>(i), cur.end(), cur[i - 1]);
    }
    return out;
}

std::pair<Rational, std::vector<std::size_t>> factor_over_arrangement(const Arrangement& a,
                                                                      const MultiPoly& denominator)
{
    if (denominator.ell() != a.ell())
        throw DimensionMismatch("denominator lives in a different ambient dimension");
    if (denominator.is_zero())
        throw OracleError(OracleError::Code::FactorOverDelta, "denominator is zero");
    MultiPoly rest = denominator;
    std::vector<std::size_t> factors;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const MultiPoly form = a.form_polynomial(i);
        while (rest.degree() > 0) {
            auto q = rest.divide_exact(form);
            if (!q)
                break;
            rest = std::move(*q);
            factors.push_back(i);
        }
    }
    auto c = rest.constant_value();
    if (!c)
        throw OracleError(OracleError::Code::FactorOverDelta,
                          "denominator leaves non-constant factor " + rest.to_string() +
                              " after dividing out the arrangement forms");
    return {*c, factors};
}

FractionGenerator make_fraction(const Arrangement& a, const MultiPoly& numerator,
                                const MultiPoly& denominator)
{
    if (numerator.ell() != a.ell())
        throw DimensionMismatch("numerator lives in a different ambient dimension");
    auto [c, factors] = factor_over_arrangement(a, denominator);
    return {numerator.scaled(1 / c), std::move(factors)};
}

SparseVector to_sparse(const MultiPoly& poly, std::map<Monomial, std::size_t, GrlexLess>& columns)
{
    SparseVector v;
    for (const auto& [m, c] : poly.terms()) {
        auto [it, inserted] = columns.try_emplace(m, columns.size());
        v.emplace(it->second, c);
    }
    return v;
}

FiltrationOracle::FiltrationOracle(Arrangement a)
    : arrangement_(std::move(a)), lattice_(compute_lattice(arrangement_))
{
}

FiltrationOracle::FiltrationOracle(Arrangement a, IntersectionLattice lattice)
    : arrangement_(std::move(a)), lattice_(std::move(lattice))
{
}

std::vector<FractionGenerator> FiltrationOracle::enumerate_generators(long p, long q) const
{
    std::vector<FractionGenerator> out;
    if (p < 0 || q < 0)
        return out;
    const std::size_t ell = arrangement_.ell();
    const auto numerators = monomials_up_to(ell, static_cast<unsigned>(p));
    for (std::size_t b = 0; b <= static_cast<std::size_t>(q); ++b)
        for (const auto& ms : multisets(arrangement_.size(), b))
            for (const auto& m : numerators)
                out.push_back({MultiPoly::monomial(m), ms});
    return out;
}

MultiPoly FiltrationOracle::cleared_denominator(const std::vector<std::size_t>& multiset,
                                                std::size_t clear_power) const
{
    std::vector<std::size_t> mult(arrangement_.size(), 0);
    for (std::size_t i : multiset)
        ++mult[i];
    MultiPoly result = MultiPoly::constant(arrangement_.ell(), 1);
    for (std::size_t i = 0; i < arrangement_.size(); ++i) {
        if (mult[i] > clear_power)
            throw std::logic_error("clearing power below a denominator multiplicity");
        const std::size_t e = clear_power - mult[i];
        if (e > 0)
            result = result * arrangement_.form_polynomial(i).pow(static_cast<unsigned>(e));
    }
    return result;
}

MultiPoly FiltrationOracle::cleared(const FractionGenerator& g, std::size_t clear_power) const
{
    return g.numerator * cleared_denominator(g.denominator, clear_power);
}

std::size_t FiltrationOracle::compute_dim_R(std::size_t p, std::size_t q) const
{
    const std::size_t ell = arrangement_.ell();
    const std::size_t n = arrangement_.size();
    const auto numerators = monomials_up_to(ell, static_cast<unsigned>(p));

    // Every generator is homogeneous, so the span splits by degree and the
    // rank is the sum of the per-degree block ranks.
    std::map<std::size_t, std::vector<MultiPoly>> blocks;
    for (std::size_t b = 0; b <= q; ++b)
        for (const auto& ms : multisets(n, b)) {
            const MultiPoly den = cleared_denominator(ms, q);
            for (const auto& m : numerators) {
                const std::size_t degree = m.degree() + q * n - b;
                blocks[degree].push_back(MultiPoly::monomial(m) * den);
            }
        }

    std::size_t total = 0;
    for (const auto& [degree, rows] : blocks) {
        const auto basis = monomials_of_degree(ell, static_cast<unsigned>(degree));
        std::map<Monomial, std::size_t, GrlexLess> column;
        for (std::size_t c = 0; c < basis.size(); ++c)
            column.emplace(basis[c], c);
        RationalMatrix m(rows.size(), basis.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& [mono, coeff] : rows[r].terms())
                m(r, column.at(mono)) = coeff;
        total += rank(m);
    }
    return total;
}

std::size_t FiltrationOracle::dim_R(long p, long q) const
{
    if (p < 0 || q < 0)
        return 0;
    const auto key = std::make_pair(static_cast<std::size_t>(p), static_cast<std::size_t>(q));
    {
        std::lock_guard lock(memo_mutex_);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
    }
    const std::size_t value = compute_dim_R(key.first, key.second);
    std::lock_guard lock(memo_mutex_);
    memo_.emplace(key, value);
    return value;
}

long long FiltrationOracle::dim_Rbar(long p, long q) const
{
    if (p < 0 || q < 0)
        return 0;
    auto d = [this](long a, long b) { return static_cast<long long>(dim_R(a, b)); };
    return d(p, q) - d(p - 1, q) - d(p, q - 1) + d(p - 1, q - 1);
}

std::size_t FiltrationOracle::dim_C_flat(std::size_t q, std::size_t flat) const
{
    if (q == 0)
        return flat == 0 ? 1 : 0;
    const auto& on = lattice_.flat(flat).forms_on;
    std::map<std::vector<std::size_t>, std::size_t> flat_of_support;
    std::vector<MultiPoly> rows;
    for (const auto& local : multisets(on.size(), q)) {
        std::vector<std::size_t> ms;
        for (std::size_t i : local)
            ms.push_back(on[i]);
        std::vector<std::size_t> support = ms;
        support.erase(std::unique(support.begin(), support.end()), support.end());
        auto it = flat_of_support.find(support);
        if (it == flat_of_support.end())
            it = flat_of_support.emplace(support, lattice_.flat_index_of(arrangement_, support)).first;
        if (it->second != flat)
            continue;
        rows.push_back(cleared_denominator(ms, q));
    }
    if (rows.empty())
        return 0;
    std::map<Monomial, std::size_t, GrlexLess> columns;
    std::vector<SparseVector> sparse;
    for (const auto& r : rows)
        sparse.push_back(to_sparse(r, columns));
    RationalMatrix m(rows.size(), columns.size());
    for (std::size_t r = 0; r < sparse.size(); ++r)
        for (const auto& [c, x] : sparse[r])
            m(r, c) = x;
    return rank(m);
}

std::vector<FlatDimRow> FiltrationOracle::dims_by_flat(std::size_t p, std::size_t q) const
{
    std::vector<FlatDimRow> rows;
    for (std::size_t i = 0; i < lattice_.size(); ++i) {
        FlatDimRow row;
        row.flat = i;
        const std::size_t dim = lattice_.flat(i).dim;
        row.dim_S = dim == 0 ? Integer(p == 0 ? 1 : 0)
                             : binomial(static_cast<long>(p + dim) - 1, static_cast<long>(dim) - 1);
        row.dim_C = dim_C_flat(q, i);
        row.contribution = row.dim_S * Integer(row.dim_C);
        rows.push_back(std::move(row));
    }
    return rows;
}

SpanBuilder FiltrationOracle::cell_span(const std::vector<std::pair<long, long>>& cells,
                                        std::size_t clear_power,
                                        std::map<Monomial, std::size_t, GrlexLess>& columns) const
{
    SpanBuilder span;
    for (const auto& [p, q] : cells)
        for (const auto& g : enumerate_generators(p, q))
            span.insert(to_sparse(cleared(g, clear_power), columns));
    return span;
}

std::vector<FractionGenerator> FiltrationOracle::basis_Rbar(std::size_t p, std::size_t q) const
{
    const long lp = static_cast<long>(p);
    const long lq = static_cast<long>(q);
    std::map<Monomial, std::size_t, GrlexLess> columns;
    SpanBuilder span = cell_span({{lp - 1, lq}, {lp, lq - 1}}, q, columns);

    std::vector<FractionGenerator> basis;
    const auto numerators = monomials_of_degree(arrangement_.ell(), static_cast<unsigned>(p));
    for (const auto& ms : multisets(arrangement_.size(), q))
        for (const auto& m : numerators) {
            FractionGenerator g{MultiPoly::monomial(m), ms};
            if (span.insert(to_sparse(cleared(g, q), columns)))
                basis.push_back(std::move(g));
        }
    return basis;
}

namespace {

bool fits_cell(const FractionGenerator& f, std::size_t p, std::size_t q)
{
    return f.numerator.degree() <= static_cast<int>(p) && f.denominator.size() <= q;
}

} // namespace

std::vector<Rational> FiltrationOracle::decompose_class(
    const FractionGenerator& phi, std::size_t p, std::size_t q,
    const std::vector<FractionGenerator>& basis) const
{
    return decompose_class(FractionCombination{{Rational(1), phi}}, p, q, basis);
}

std::vector<Rational> FiltrationOracle::decompose_class(
    const FractionCombination& phi, std::size_t p, std::size_t q,
    const std::vector<FractionGenerator>& basis) const
{
    std::string shown;
    for (const auto& [c, f] : phi) {
        if (!fits_cell(f, p, q))
            throw OracleError(OracleError::Code::InvalidFraction,
                              "fraction " + f.to_string(arrangement_) + " does not fit cell (" +
                                  std::to_string(p) + "," + std::to_string(q) + ")");
        if (!shown.empty())
            shown += " + ";
        shown += (c == 1 ? "" : "(" + to_string(c) + ")*") + f.to_string(arrangement_);
    }
    for (const auto& b : basis)
        if (!fits_cell(b, p, q))
            throw OracleError(OracleError::Code::InvalidFraction,
                              "basis element " + b.to_string(arrangement_) +
                                  " does not fit the cell");

    const long lp = static_cast<long>(p);
    const long lq = static_cast<long>(q);
    std::map<Monomial, std::size_t, GrlexLess> columns;

    SpanBuilder span;
    std::vector<SparseVector> lower;
    for (const auto& [a, b] : std::vector<std::pair<long, long>>{{lp - 1, lq}, {lp, lq - 1}})
        for (const auto& g : enumerate_generators(a, b)) {
            SparseVector v = to_sparse(cleared(g, q), columns);
            if (span.insert(v))
                lower.push_back(std::move(v));
        }

    std::vector<SparseVector> rows;
    for (const auto& b : basis) {
        SparseVector v = to_sparse(cleared(b, q), columns);
        if (!span.insert(v))
            throw OracleError(OracleError::Code::BasisNotIndependent,
                              "basis element " + b.to_string(arrangement_) +
                                  " is dependent modulo the lower filtration");
        rows.push_back(std::move(v));
    }
    rows.insert(rows.end(), lower.begin(), lower.end());
    MultiPoly combined(arrangement_.ell());
    for (const auto& [c, f] : phi)
        combined = combined + cleared(f, q).scaled(c);
    const SparseVector target = to_sparse(combined, columns);

    RationalMatrix system(rows.size(), columns.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, x] : rows[r])
            system(r, c) = x;
    std::vector<Rational> dense_target(columns.size());
    for (const auto& [c, x] : target)
        dense_target[c] = x;

    auto solution = solve_in_span(dense_target, system);
    if (!solution)
        throw OracleError(OracleError::Code::NotInCell,
                          "fraction " + shown + " is not spanned by the basis and the lower filtration");
    solution->resize(basis.size());
    return *solution;
}

bool FiltrationOracle::in_cell(const FractionGenerator& f, long p, long q) const
{
    if (p < 0 || q < 0)
        return f.numerator.is_zero();
    const std::size_t power = std::max<std::size_t>(static_cast<std::size_t>(q), f.denominator.size());
    std::map<Monomial, std::size_t, GrlexLess> columns;
    const SpanBuilder span = cell_span({{p, q}}, power, columns);
    return span.contains(to_sparse(cleared(f, power), columns));
}

DimTable FiltrationOracle::table(std::size_t max_p, std::size_t max_q, unsigned threads) const
{
    const std::size_t count = (max_p + 1) * (max_q + 1);
    auto fill = [&](std::size_t cell) {
        dim_R(static_cast<long>(cell / (max_q + 1)), static_cast<long>(cell % (max_q + 1)));
    };
    if (threads <= 1) {
        for (std::size_t c = 0; c < count; ++c)
            fill(c);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < threads; ++w)
            workers.emplace_back([&] {
                for (std::size_t c = next++; c < count; c = next++)
                    fill(c);
            });
    }

    DimTable t{max_p, max_q, std::vector<DimCell>(count)};
    for (std::size_t p = 0; p <= max_p; ++p)
        for (std::size_t q = 0; q <= max_q; ++q) {
            auto& cell = t.cells[p * (max_q + 1) + q];
            cell.dim_R = static_cast<long long>(dim_R(static_cast<long>(p), static_cast<long>(q)));
            cell.dim_Rbar = dim_Rbar(static_cast<long>(p), static_cast<long>(q));
        }
    return t;
}

} // namespace arrpoin
