#include "arrpoin/series.hpp"

#include <sstream>
#include <stdexcept>

namespace arrpoin {

UniPoly::UniPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void UniPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Integer UniPoly::coefficient(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

UniPoly UniPoly::operator+(const UniPoly& other) const
{
    std::vector<Integer> r(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = coefficient(i) + other.coefficient(i);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& other) const
{
    if (is_zero() || other.is_zero())
        return {};
    std::vector<Integer> r(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            r[i + j] += coeffs_[i] * other.coeffs_[j];
    return UniPoly(std::move(r));
}

std::string UniPoly::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Integer& c = coeffs_[k];
        if (c == 0)
            continue;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        out << Integer(abs(c)).get_str();
        if (k >= 1)
            out << " t";
        if (k >= 2)
            out << "^" << k;
    }
    return out.str();
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& other)
{
    if (max_p_ != other.max_p_ || max_q_ != other.max_q_)
        throw std::invalid_argument("series truncation bounds differ");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    return *this;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& other) const
{
    if (max_p_ != other.max_p_ || max_q_ != other.max_q_)
        throw std::invalid_argument("series truncation bounds differ");
    BivariateSeries r(max_p_, max_q_);
    for (std::size_t a = 0; a <= max_p_; ++a)
        for (std::size_t b = 0; b <= max_q_; ++b) {
            const Integer& x = at(a, b);
            if (x == 0)
                continue;
            for (std::size_t c = 0; a + c <= max_p_; ++c)
                for (std::size_t d = 0; b + d <= max_q_; ++d)
                    r.at(a + c, b + d) += x * other.at(c, d);
        }
    return r;
}

BivariateSeries BivariateSeries::outer(const std::vector<Integer>& in_s,
                                       const std::vector<Integer>& in_t, std::size_t max_p,
                                       std::size_t max_q)
{
    BivariateSeries r(max_p, max_q);
    for (std::size_t p = 0; p <= max_p && p < in_s.size(); ++p)
        for (std::size_t q = 0; q <= max_q && q < in_t.size(); ++q)
            r.at(p, q) = in_s[p] * in_t[q];
    return r;
}

BivariateSeries BivariateSeries::partial_sums() const
{
    BivariateSeries r(*this);
    for (std::size_t p = 0; p <= max_p_; ++p)
        for (std::size_t q = 1; q <= max_q_; ++q)
            r.at(p, q) += r.at(p, q - 1);
    for (std::size_t p = 1; p <= max_p_; ++p)
        for (std::size_t q = 0; q <= max_q_; ++q)
            r.at(p, q) += r.at(p - 1, q);
    return r;
}

std::vector<Integer> binomial_series_coeffs(long c, PowerSign sign, std::size_t order)
{
    if (c < 0)
        throw std::invalid_argument("binomial_series_coeffs expects c >= 0");
    std::vector<Integer> out(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        const long kk = static_cast<long>(k);
        if (sign == PowerSign::Positive) {
            out[k] = binomial(c, kk);
            if (k % 2 == 1)
                out[k] = -out[k];
        } else {
            out[k] = c == 0 ? Integer(k == 0 ? 1 : 0) : binomial(kk + c - 1, c - 1);
        }
    }
    return out;
}

} // namespace arrpoin
