#include "arrpoin/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace arrpoin {

unsigned Monomial::degree() const
{
    return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial r(*this);
    for (std::size_t i = 0; i < r.exponents.size(); ++i)
        r.exponents[i] += other.exponents[i];
    return r;
}

bool Monomial::divisible_by(const Monomial& other) const
{
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] < other.exponents[i])
            return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& other) const
{
    Monomial r(*this);
    for (std::size_t i = 0; i < r.exponents.size(); ++i)
        r.exponents[i] -= other.exponents[i];
    return r;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const
{
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db)
        return da < db;
    return std::lexicographical_compare(b.exponents.begin(), b.exponents.end(),
                                        a.exponents.begin(), a.exponents.end());
}

namespace {

void fill_degree(std::size_t ell, std::size_t pos, unsigned remaining,
                 std::vector<unsigned>& current, std::vector<Monomial>& out)
{
    if (pos + 1 == ell) {
        current[pos] = remaining;
        out.emplace_back(current);
        return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
        current[pos] = e;
        fill_degree(ell, pos + 1, remaining - e, current, out);
    }
    current[pos] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::size_t ell, unsigned d)
{
    std::vector<Monomial> out;
    if (ell == 0) {
        if (d == 0)
            out.emplace_back(0);
        return out;
    }
    std::vector<unsigned> current(ell, 0);
    fill_degree(ell, 0, d, current, out);
    return out;
}

std::vector<Monomial> monomials_up_to(std::size_t ell, unsigned d)
{
    std::vector<Monomial> out;
    for (unsigned k = 0; k <= d; ++k) {
        auto part = monomials_of_degree(ell, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

MultiPoly MultiPoly::constant(std::size_t ell, const Rational& c)
{
    MultiPoly p(ell);
    p.add_term(Monomial(ell), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t ell, std::size_t index)
{
    if (index >= ell)
        throw DimensionMismatch("variable index out of range");
    Monomial m(ell);
    m.exponents[index] = 1;
    return monomial(m);
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c)
{
    MultiPoly p(m.ell());
    p.add_term(m, c);
    return p;
}

MultiPoly MultiPoly::linear(const std::vector<Rational>& coefficients)
{
    const std::size_t ell = coefficients.size();
    MultiPoly p(ell);
    for (std::size_t i = 0; i < ell; ++i) {
        Monomial m(ell);
        m.exponents[i] = 1;
        p.add_term(m, coefficients[i]);
    }
    return p;
}

int MultiPoly::degree() const
{
    if (terms_.empty())
        return -1;
    return static_cast<int>(terms_.rbegin()->first.degree());
}

bool MultiPoly::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

std::optional<Rational> MultiPoly::constant_value() const
{
    if (terms_.empty())
        return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first.degree() == 0)
        return terms_.begin()->second;
    return std::nullopt;
}

Rational MultiPoly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::check_same(const MultiPoly& other) const
{
    if (ell_ != other.ell_)
        throw DimensionMismatch("polynomials live in different ambient dimensions");
}

void MultiPoly::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const
{
    check_same(other);
    MultiPoly r(*this);
    for (const auto& [m, c] : other.terms_)
        r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const
{
    check_same(other);
    MultiPoly r(*this);
    for (const auto& [m, c] : other.terms_)
        r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const
{
    check_same(other);
    MultiPoly r(ell_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

MultiPoly MultiPoly::operator-() const { return scaled(-1); }

MultiPoly MultiPoly::scaled(const Rational& c) const
{
    MultiPoly r(ell_);
    if (c == 0)
        return r;
    for (const auto& [m, v] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), m, v * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned n) const
{
    MultiPoly result = constant(ell_, 1);
    MultiPoly base(*this);
    while (n > 0) {
        if (n & 1u)
            result = result * base;
        n >>= 1;
        if (n > 0)
            base = base * base;
    }
    return result;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const
{
    check_same(divisor);
    if (divisor.is_zero())
        throw std::domain_error("division by the zero polynomial");
    // If divisor | f then lt(divisor) | lt(f) in any monomial order, and the
    // remainder after cancelling the leading term is still divisible.
    const auto& [lead_m, lead_c] = *divisor.terms_.rbegin();
    MultiPoly rest(*this);
    MultiPoly quotient(ell_);
    while (!rest.is_zero()) {
        const auto& [m, c] = *rest.terms_.rbegin();
        if (!m.divisible_by(lead_m))
            return std::nullopt;
        const MultiPoly step = monomial(m / lead_m, c / lead_c);
        quotient = quotient + step;
        rest = rest - step * divisor;
    }
    return quotient;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    // Highest degree first; inside a degree, enumeration order (x1 before x2).
    std::vector<const TermMap::value_type*> order;
    for (const auto& term : terms_)
        order.push_back(&term);
    std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
        return a->first.degree() > b->first.degree();
    });
    bool first = true;
    for (const auto* term : order) {
        const auto& [m, c] = *term;
        Rational mag = abs(c);
        if (first) {
            if (c < 0)
                out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (!unit || m.degree() == 0) {
            out << mag.get_str();
            if (m.degree() > 0)
                out << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (m.exponents[i] == 0)
                continue;
            if (!first_var)
                out << "*";
            first_var = false;
            out << "x" << (i + 1);
            if (m.exponents[i] > 1)
                out << "^" << m.exponents[i];
        }
    }
    return out.str();
}

} // namespace arrpoin
