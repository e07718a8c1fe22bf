#pragma once

#include "arrpoin/polynomial.hpp"
#include "arrpoin/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrpoin {

/// A nonzero linear form, scaled so its first nonzero coefficient is 1.
struct LinearForm {
    std::vector<Rational> coefficients;

    std::size_t ell() const { return coefficients.size(); }
    MultiPoly polynomial() const { return MultiPoly::linear(coefficients); }
    bool operator==(const LinearForm&) const = default;
};

class ArrangementError : public std::invalid_argument {
public:
    enum class Code { ZeroForm, ProportionalPair, DimensionMismatch };

    ArrangementError(Code code, std::vector<std::size_t> indices, const std::string& what)
        : std::invalid_argument(what), code_(code), indices_(std::move(indices)) {}

    Code code() const { return code_; }
    /// 0-based indices of the offending input vectors.
    const std::vector<std::size_t>& indices() const { return indices_; }
    const char* code_name() const;

private:
    Code code_;
    std::vector<std::size_t> indices_;
};

/// Returns nullopt for the zero vector.
std::optional<LinearForm> canonical_scaling(const std::vector<Rational>& raw);

/// Central arrangement: ambient dimension plus an ordered list of pairwise
/// non-proportional forms. The list index is the form's identity everywhere.
class Arrangement {
public:
    Arrangement() = default;

    /// Canonically scales each vector and preserves input order. Zero vectors
    /// and proportional pairs are rejected, never silently dropped.
    static Arrangement build(const std::vector<std::vector<Rational>>& raw_forms, std::size_t ell);

    std::size_t ell() const { return ell_; }
    std::size_t size() const { return forms_.size(); }
    const std::vector<LinearForm>& forms() const { return forms_; }
    const LinearForm& form(std::size_t i) const { return forms_[i]; }
    MultiPoly form_polynomial(std::size_t i) const { return forms_[i].polynomial(); }
    /// Product of all forms.
    MultiPoly defining_polynomial() const;

private:
    std::size_t ell_ = 0;
    std::vector<LinearForm> forms_;
};

} // namespace arrpoin
