#include "arrpoin/arrangement.hpp"

namespace arrpoin {

const char* ArrangementError::code_name() const
{
    switch (code_) {
    case Code::ZeroForm:
        return "ZeroForm";
    case Code::ProportionalPair:
        return "ProportionalPair";
    case Code::DimensionMismatch:
        return "DimensionMismatch";
    }
    return "ArrangementError";
}

std::optional<LinearForm> canonical_scaling(const std::vector<Rational>& raw)
{
    for (const auto& c : raw) {
        if (c == 0)
            continue;
        const Rational inv = 1 / c;
        LinearForm f;
        f.coefficients.reserve(raw.size());
        for (const auto& x : raw)
            f.coefficients.push_back(x * inv);
        return f;
    }
    return std::nullopt;
}

Arrangement Arrangement::build(const std::vector<std::vector<Rational>>& raw_forms,
                               std::size_t ell)
{
    Arrangement a;
    a.ell_ = ell;
    a.forms_.reserve(raw_forms.size());
    for (std::size_t i = 0; i < raw_forms.size(); ++i) {
        if (raw_forms[i].size() != ell)
            throw ArrangementError(ArrangementError::Code::DimensionMismatch, {i},
                                   "form " + std::to_string(i + 1) + " has " +
                                       std::to_string(raw_forms[i].size()) +
                                       " coefficients, expected " + std::to_string(ell));
        auto f = canonical_scaling(raw_forms[i]);
        if (!f)
            throw ArrangementError(ArrangementError::Code::ZeroForm, {i},
                                   "form " + std::to_string(i + 1) + " is zero");
        for (std::size_t j = 0; j < a.forms_.size(); ++j)
            if (a.forms_[j] == *f)
                throw ArrangementError(ArrangementError::Code::ProportionalPair, {j, i},
                                       "forms " + std::to_string(j + 1) + " and " +
                                           std::to_string(i + 1) + " are proportional");
        a.forms_.push_back(std::move(*f));
    }
    return a;
}

MultiPoly Arrangement::defining_polynomial() const
{
    MultiPoly p = MultiPoly::constant(ell_, 1);
    for (const auto& f : forms_)
        p = p * f.polynomial();
    return p;
}

} // namespace arrpoin
