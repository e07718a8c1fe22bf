#pragma once

#include "arrpoin/arrangement.hpp"
#include "arrpoin/formulas.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arrpoin {

/// Input validation failure. `code` is the short machine-readable tag printed
/// after "error: " by the CLI.
class InputError : public std::invalid_argument {
public:
    InputError(std::string code, const std::string& what)
        : std::invalid_argument(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct ArrangementInput {
    std::string name;
    Arrangement arrangement;
    std::optional<ExponentsProfile> exponents;
};

/// Parses the JSON arrangement document:
///   {"ell": 3, "forms": [[1,-1,0], ["1/2",0,1]], "name": "...", "exponents": [0,1,2]}
/// Coefficients are integers or exact "a/b" strings; floats are rejected.
ArrangementInput parse_spec(std::string_view json_text);
ArrangementInput parse_spec_file(const std::string& path);

/// Built-in families: "braid" (x_i - x_j, i < j, exponents 0..ell-1) and
/// "boolean" (coordinate hyperplanes).
ArrangementInput family(const std::string& name, long ell);
std::vector<std::string> family_names();

/// "0,1,2" -> {0, 1, 2}
ExponentsProfile parse_exponents(std::string_view text);

} // namespace arrpoin
