#include "arrpoin/spec_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace arrpoin {
namespace {

using nlohmann::json;

Rational coefficient_from(const json& v, std::size_t form, std::size_t slot)
{
    const std::string where =
        "form " + std::to_string(form + 1) + " coefficient " + std::to_string(slot + 1);
    if (v.is_number_integer())
        return v.is_number_unsigned() ? Rational(Integer(v.get<unsigned long>()))
                                      : Rational(Integer(v.get<long>()));
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw InputError("MalformedSpec", where + ": " + e.what());
        }
    }
    if (v.is_number_float())
        throw InputError("MalformedSpec", where + ": floating-point values are not accepted; use an integer or \"a/b\"");
    throw InputError("MalformedSpec", where + ": expected an integer or \"a/b\" string");
}

Arrangement checked_build(const std::vector<std::vector<Rational>>& raw, std::size_t ell)
{
    try {
        return Arrangement::build(raw, ell);
    } catch (const ArrangementError& e) {
        throw InputError(e.code_name(), e.what());
    }
}

} // namespace

ArrangementInput parse_spec(std::string_view json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InputError("MalformedSpec", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw InputError("MalformedSpec", "top level must be an object");
    if (!doc.contains("ell") || !doc["ell"].is_number_integer() || doc["ell"].get<long>() < 0)
        throw InputError("MalformedSpec", "\"ell\" must be a nonnegative integer");
    const auto ell = static_cast<std::size_t>(doc["ell"].get<long>());
    if (!doc.contains("forms") || !doc["forms"].is_array())
        throw InputError("MalformedSpec", "\"forms\" must be an array of coefficient vectors");

    std::vector<std::vector<Rational>> raw;
    const auto& forms = doc["forms"];
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (!forms[i].is_array())
            throw InputError("MalformedSpec", "form " + std::to_string(i + 1) + " is not an array");
        std::vector<Rational> row;
        for (std::size_t j = 0; j < forms[i].size(); ++j)
            row.push_back(coefficient_from(forms[i][j], i, j));
        raw.push_back(std::move(row));
    }

    ArrangementInput input;
    input.arrangement = checked_build(raw, ell);
    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            throw InputError("MalformedSpec", "\"name\" must be a string");
        input.name = doc["name"].get<std::string>();
    }
    if (doc.contains("exponents")) {
        const auto& e = doc["exponents"];
        if (!e.is_array())
            throw InputError("MalformedSpec", "\"exponents\" must be an array");
        ExponentsProfile exps;
        for (const auto& d : e) {
            if (!d.is_number_integer() || d.get<long>() < 0)
                throw InputError("MalformedSpec", "exponents must be nonnegative integers");
            exps.exponents.push_back(d.get<unsigned long>());
        }
        if (exps.ell() != ell)
            throw InputError("ExponentsLength", "expected " + std::to_string(ell) +
                                                    " exponents, got " +
                                                    std::to_string(exps.ell()));
        input.exponents = std::move(exps);
    }
    return input;
}

ArrangementInput parse_spec_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("FileNotFound", "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    ArrangementInput input = parse_spec(buffer.str());
    if (input.name.empty())
        input.name = path;
    return input;
}

std::vector<std::string> family_names() { return {"braid", "boolean"}; }

ArrangementInput family(const std::string& name, long ell)
{
    if (name != "braid" && name != "boolean")
        throw InputError("UnknownFamily", "unknown family '" + name + "' (known: braid, boolean)");
    if (ell < 1)
        throw InputError("InvalidEll", "family size must be at least 1");
    const auto n = static_cast<std::size_t>(ell);

    std::vector<std::vector<Rational>> raw;
    ArrangementInput input;
    input.name = name + " " + std::to_string(ell);
    if (name == "braid") {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                std::vector<Rational> f(n);
                f[i] = 1;
                f[j] = -1;
                raw.push_back(std::move(f));
            }
        ExponentsProfile exps;
        for (std::size_t i = 0; i < n; ++i)
            exps.exponents.push_back(i);
        input.exponents = std::move(exps);
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rational> f(n);
            f[i] = 1;
            raw.push_back(std::move(f));
        }
    }
    input.arrangement = checked_build(raw, n);
    return input;
}

ExponentsProfile parse_exponents(std::string_view text)
{
    ExponentsProfile exps;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw InputError("MalformedExponents", "empty entry in exponent list");
        item = item.substr(b, e - b + 1);
        if (item.find_first_not_of("0123456789") != std::string::npos || item.size() > 18)
            throw InputError("MalformedExponents", "exponent '" + item + "' is not a nonnegative integer");
        exps.exponents.push_back(std::stoul(item));
    }
    return exps;
}

} // namespace arrpoin
