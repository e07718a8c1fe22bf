#include "arrpoin/cli.hpp"

#include "arrpoin/expression.hpp"
#include "arrpoin/formulas.hpp"
#include "arrpoin/lattice.hpp"
#include "arrpoin/oracle.hpp"
#include "arrpoin/spec_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace arrpoin::cli {
namespace {

using nlohmann::json;

struct Options {
    std::string file;
    std::string family_name;
    long ell = 0;
    bool json_output = false;
    std::size_t max_p = 8;
    std::size_t max_q = 8;
    std::string exponents;
    bool cumulative = false;
    bool by_flat = false;
    unsigned threads = 1;
    std::string numerator;
    std::string denominator;
    long cell_p = -1;
    long cell_q = -1;
    std::string basis_file;
};

// Thrown for violated internal invariants (exit code 3).
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

ArrangementInput load_arrangement(const Options& o)
{
    if (!o.file.empty() && !o.family_name.empty())
        throw InputError("ConflictingInput", "use either --file or --family, not both");
    if (!o.file.empty()) {
        if (o.file == "-") {
            std::string text(std::istreambuf_iterator<char>(std::cin), {});
            auto input = parse_spec(text);
            if (input.name.empty())
                input.name = "stdin";
            return input;
        }
        return parse_spec_file(o.file);
    }
    if (!o.family_name.empty())
        return family(o.family_name, o.ell);
    throw InputError("MissingArrangement", "give --file <path> or --family <name> --ell <n>");
}

std::optional<ExponentsProfile> requested_exponents(const Options& o, const ArrangementInput& in)
{
    if (!o.exponents.empty()) {
        auto e = parse_exponents(o.exponents);
        if (e.ell() != in.arrangement.ell())
            throw InputError("ExponentsLength",
                             "expected " + std::to_string(in.arrangement.ell()) +
                                 " exponents, got " + std::to_string(e.ell()));
        return e;
    }
    return in.exponents;
}

std::string join_exponents(const ExponentsProfile& e)
{
    std::string s;
    for (std::size_t i = 0; i < e.exponents.size(); ++i)
        s += (i ? "," : "") + std::to_string(e.exponents[i]);
    return s;
}

json meta_json(const std::string& command, const ArrangementInput& in)
{
    json forms = json::array();
    for (const auto& f : in.arrangement.forms()) {
        json row = json::array();
        for (const auto& c : f.coefficients)
            row.push_back(to_string(c));
        forms.push_back(std::move(row));
    }
    json meta;
    meta["tool"] = "arrpoin";
    meta["command"] = command;
    meta["arrangement"] = {{"name", in.name}, {"ell", in.arrangement.ell()}, {"forms", forms}};
    return meta;
}

json grid_json(const BivariateSeries& g)
{
    json rows = json::array();
    for (std::size_t p = 0; p <= g.max_p(); ++p) {
        json row = json::array();
        for (std::size_t q = 0; q <= g.max_q(); ++q)
            row.push_back(to_string(g.at(p, q)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string pad(const std::string& s, std::size_t width)
{
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

// Right-aligned table; the first row is the header.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width;
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (width.size() <= c)
                width.push_back(0);
            width[c] = std::max(width[c], r[c].size());
        }
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c)
            line += (c ? "  " : "") + pad(r[c], width[c]);
        out << line << "\n";
    }
}

template <typename Cell>
void print_grid(std::ostream& out, const std::string& title, std::size_t max_p, std::size_t max_q,
                Cell cell)
{
    out << title << "\n";
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"p\\q"};
    for (std::size_t q = 0; q <= max_q; ++q)
        header.push_back(std::to_string(q));
    rows.push_back(std::move(header));
    for (std::size_t p = 0; p <= max_p; ++p) {
        std::vector<std::string> row{std::to_string(p)};
        for (std::size_t q = 0; q <= max_q; ++q)
            row.push_back(cell(p, q));
        rows.push_back(std::move(row));
    }
    print_table(out, rows);
}

std::string rref_text(const RationalMatrix& m)
{
    std::string s = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        s += (r ? ", [" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c)
            s += (c ? ", " : "") + to_string(m(r, c));
        s += "]";
    }
    return s + "]";
}

std::string index_set_text(const std::vector<std::size_t>& idx)
{
    std::string s = "{";
    for (std::size_t i = 0; i < idx.size(); ++i)
        s += (i ? "," : "") + std::to_string(idx[i] + 1);
    return s + "}";
}

void check_nonnegative(const BivariateSeries& g)
{
    for (std::size_t p = 0; p <= g.max_p(); ++p)
        for (std::size_t q = 0; q <= g.max_q(); ++q)
            if (g.at(p, q) < 0)
                throw InvariantViolation("negative series coefficient at (" + std::to_string(p) +
                                         "," + std::to_string(q) + ")");
}

int cmd_lattice(const Options& o, std::ostream& out)
{
    const auto in = load_arrangement(o);
    const auto lattice = compute_lattice(in.arrangement);
    if (o.json_output) {
        json flats = json::array();
        for (std::size_t i = 0; i < lattice.size(); ++i) {
            const Flat& f = lattice.flat(i);
            json rref = json::array();
            for (std::size_t r = 0; r < f.defining_rref.rows(); ++r) {
                json row = json::array();
                for (std::size_t c = 0; c < f.defining_rref.cols(); ++c)
                    row.push_back(to_string(f.defining_rref(r, c)));
                rref.push_back(std::move(row));
            }
            json forms = json::array();
            for (std::size_t k : f.forms_on)
                forms.push_back(k + 1);
            flats.push_back({{"index", i},
                             {"codim", f.codim},
                             {"dim", f.dim},
                             {"moebius", to_string(lattice.moebius(i))},
                             {"forms", forms},
                             {"rref", rref}});
        }
        out << json{{"meta", meta_json("lattice", in)}, {"flats", flats}}.dump(2) << "\n";
        return Success;
    }
    out << "lattice: " << in.name << " (ell = " << in.arrangement.ell() << ", "
        << in.arrangement.size() << " forms, " << lattice.size() << " flats)\n";
    std::vector<std::vector<std::string>> rows{{"flat", "codim", "dim", "mu", "forms", "rref"}};
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        const Flat& f = lattice.flat(i);
        rows.push_back({std::to_string(i), std::to_string(f.codim), std::to_string(f.dim),
                        to_string(lattice.moebius(i)), index_set_text(f.forms_on),
                        rref_text(f.defining_rref)});
    }
    print_table(out, rows);
    return Success;
}

int cmd_poincare(const Options& o, std::ostream& out)
{
    const auto in = load_arrangement(o);
    const auto lattice = compute_lattice(in.arrangement);
    const UniPoly poin = poincare_polynomial(lattice);
    const auto factored = try_factor_exponents(poin, in.arrangement.ell());
    if (o.json_output) {
        json coeffs = json::array();
        for (const auto& c : poin.coefficients())
            coeffs.push_back(to_string(c));
        json poly{{"coefficients", coeffs}, {"text", poin.to_string()}};
        poly["exponents"] = factored ? json(factored->exponents) : json(nullptr);
        out << json{{"meta", meta_json("poincare", in)}, {"polynomial", poly}}.dump(2) << "\n";
        return Success;
    }
    out << poin.to_string() << "\n";
    return Success;
}

int cmd_series(const Options& o, std::ostream& out)
{
    const auto in = load_arrangement(o);
    const auto exps = requested_exponents(o, in);
    const auto lattice = compute_lattice(in.arrangement);
    const auto rbar = rbar_series(lattice, o.max_p, o.max_q, o.threads);
    check_nonnegative(rbar);

    std::optional<BivariateSeries> cumulative;
    if (o.cumulative) {
        cumulative = cumulative_series(lattice, o.max_p, o.max_q);
        if (*cumulative != rbar.partial_sums())
            throw InvariantViolation("cumulative series disagrees with partial sums of the bigraded series");
    }
    std::optional<bool> exponent_match;
    if (exps)
        exponent_match = series_from_exponents(*exps, o.max_p, o.max_q) == rbar;

    if (o.json_output) {
        json grid{{"max_p", o.max_p}, {"max_q", o.max_q}, {"rbar", grid_json(rbar)}};
        if (cumulative)
            grid["cumulative"] = grid_json(*cumulative);
        if (exps)
            grid["exponent_check"] = {{"exponents", exps->exponents}, {"match", *exponent_match}};
        out << json{{"meta", meta_json("series", in)}, {"grid", grid}}.dump(2) << "\n";
    } else {
        out << "series: " << in.name << "\n";
        print_grid(out, "dim Rbar^p_q (rows p, columns q)", o.max_p, o.max_q,
                   [&](std::size_t p, std::size_t q) { return to_string(rbar.at(p, q)); });
        if (cumulative)
            print_grid(out, "dim R^p_q (rows p, columns q)", o.max_p, o.max_q,
                       [&](std::size_t p, std::size_t q) { return to_string(cumulative->at(p, q)); });
        if (exps)
            out << "exponents (" << join_exponents(*exps) << "): "
                << (*exponent_match ? "match" : "mismatch") << "\n";
    }
    return exponent_match.value_or(true) ? Success : VerificationMismatch;
}

int cmd_cseries(const Options& o, std::ostream& out)
{
    const auto in = load_arrangement(o);
    const auto lattice = compute_lattice(in.arrangement);
    const auto per_flat = c_series_per_flat(lattice, o.max_q);
    const auto total = c_series_total(lattice, o.max_q);

    std::vector<Integer> summed(o.max_q + 1);
    for (const auto& row : per_flat)
        for (std::size_t q = 0; q <= o.max_q; ++q)
            summed[q] += row.dims[q];
    if (summed != total)
        throw InvariantViolation("per-flat C dimensions do not sum to the total series");

    if (o.json_output) {
        json flats = json::array();
        for (const auto& row : per_flat) {
            json dims = json::array();
            for (const auto& d : row.dims)
                dims.push_back(to_string(d));
            flats.push_back({{"index", row.flat},
                             {"codim", row.codim},
                             {"moebius", to_string(row.moebius)},
                             {"dims", dims}});
        }
        json totals = json::array();
        for (const auto& d : total)
            totals.push_back(to_string(d));
        out << json{{"meta", meta_json("cseries", in)},
                    {"flats", flats},
                    {"total", totals}}
                   .dump(2)
            << "\n";
        return Success;
    }
    out << "cseries: " << in.name << " (dim C_{q,X}, q = 0.." << o.max_q << ")\n";
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"flat", "codim", "mu"};
    for (std::size_t q = 0; q <= o.max_q; ++q)
        header.push_back("q=" + std::to_string(q));
    rows.push_back(std::move(header));
    for (const auto& row : per_flat) {
        std::vector<std::string> r{std::to_string(row.flat), std::to_string(row.codim),
                                   to_string(row.moebius)};
        for (const auto& d : row.dims)
            r.push_back(to_string(d));
        rows.push_back(std::move(r));
    }
    std::vector<std::string> r{"total", "", ""};
    for (const auto& d : total)
        r.push_back(to_string(d));
    rows.push_back(std::move(r));
    print_table(out, rows);
    return Success;
}

int cmd_dims(const Options& o, std::ostream& out)
{
    const auto in = load_arrangement(o);
    FiltrationOracle oracle(in.arrangement);
    const DimTable table = oracle.table(o.max_p, o.max_q, o.threads);
    for (const auto& cell : table.cells)
        if (cell.dim_Rbar < 0)
            throw InvariantViolation("oracle produced a negative dim Rbar");

    std::vector<std::vector<FlatDimRow>> split;
    if (o.by_flat)
        for (std::size_t p = 0; p <= o.max_p; ++p)
            for (std::size_t q = 0; q <= o.max_q; ++q)
                split.push_back(oracle.dims_by_flat(p, q));

    if (o.json_output) {
        json dim_r = json::array(), dim_rbar = json::array();
        for (std::size_t p = 0; p <= o.max_p; ++p) {
            json a = json::array(), b = json::array();
            for (std::size_t q = 0; q <= o.max_q; ++q) {
                a.push_back(std::to_string(table.at(p, q).dim_R));
                b.push_back(std::to_string(table.at(p, q).dim_Rbar));
            }
            dim_r.push_back(std::move(a));
            dim_rbar.push_back(std::move(b));
        }
        json grid{{"max_p", o.max_p}, {"max_q", o.max_q}, {"dim_R", dim_r}, {"dim_Rbar", dim_rbar}};
        if (o.by_flat) {
            json cells = json::array();
            std::size_t k = 0;
            for (std::size_t p = 0; p <= o.max_p; ++p)
                for (std::size_t q = 0; q <= o.max_q; ++q, ++k) {
                    json flats = json::array();
                    for (const auto& row : split[k])
                        flats.push_back({{"flat", row.flat},
                                         {"dim_S", to_string(row.dim_S)},
                                         {"dim_C", std::to_string(row.dim_C)},
                                         {"contribution", to_string(row.contribution)}});
                    cells.push_back({{"p", p}, {"q", q}, {"flats", flats}});
                }
            grid["by_flat"] = cells;
        }
        out << json{{"meta", meta_json("dims", in)}, {"grid", grid}}.dump(2) << "\n";
        return Success;
    }
    out << "dims: " << in.name << " (rank oracle)\n";
    print_grid(out, "dim R^p_q (rows p, columns q)", o.max_p, o.max_q,
               [&](std::size_t p, std::size_t q) { return std::to_string(table.at(p, q).dim_R); });
    print_grid(out, "dim Rbar^p_q (rows p, columns q)", o.max_p, o.max_q,
               [&](std::size_t p, std::size_t q) { return std::to_string(table.at(p, q).dim_Rbar); });
    if (o.by_flat) {
        std::vector<std::vector<std::string>> rows{{"p", "q", "flat", "dim S^p_X", "dim C_q,X", "product"}};
        std::size_t k = 0;
        for (std::size_t p = 0; p <= o.max_p; ++p)
            for (std::size_t q = 0; q <= o.max_q; ++q, ++k)
                for (const auto& row : split[k])
                    if (row.contribution != 0)
                        rows.push_back({std::to_string(p), std::to_string(q), std::to_string(row.flat),
                                        to_string(row.dim_S), std::to_string(row.dim_C),
                                        to_string(row.contribution)});
        out << "nonzero per-flat contributions\n";
        print_table(out, rows);
    }
    return Success;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const auto in = load_arrangement(o);
    const auto exps = requested_exponents(o, in);
    const auto lattice = compute_lattice(in.arrangement);
    const auto formula = rbar_series(lattice, o.max_p, o.max_q);
    check_nonnegative(formula);
    FiltrationOracle oracle(in.arrangement, lattice);
    const DimTable table = oracle.table(o.max_p, o.max_q, o.threads);

    struct CellCheck {
        std::size_t p, q;
        std::string formula, oracle;
        bool match;
    };
    struct FlatCheck {
        std::size_t flat, q;
        std::string formula, oracle;
        bool match;
    };
    std::vector<CellCheck> cells;
    bool cells_ok = true;
    for (std::size_t p = 0; p <= o.max_p; ++p)
        for (std::size_t q = 0; q <= o.max_q; ++q) {
            const Integer oracle_value(static_cast<long>(table.at(p, q).dim_Rbar));
            const bool match = formula.at(p, q) == oracle_value;
            cells_ok = cells_ok && match;
            cells.push_back({p, q, to_string(formula.at(p, q)), to_string(oracle_value), match});
        }
    std::vector<FlatCheck> flats;
    bool flats_ok = true;
    for (std::size_t i = 0; i < lattice.size(); ++i)
        for (std::size_t q = 0; q <= o.max_q; ++q) {
            const Integer expected = c_dimension_formula(lattice.flat(i).codim, lattice.moebius(i), q);
            const Integer got(static_cast<unsigned long>(oracle.dim_C_flat(q, i)));
            const bool match = expected == got;
            flats_ok = flats_ok && match;
            flats.push_back({i, q, to_string(expected), to_string(got), match});
        }
    std::optional<bool> exps_ok;
    if (exps)
        exps_ok = series_from_exponents(*exps, o.max_p, o.max_q) == formula;
    const bool pass = cells_ok && flats_ok && exps_ok.value_or(true);

    if (o.json_output) {
        json jcells = json::array();
        for (const auto& c : cells)
            jcells.push_back({{"p", c.p}, {"q", c.q}, {"formula", c.formula}, {"oracle", c.oracle}, {"match", c.match}});
        json jflats = json::array();
        for (const auto& f : flats)
            jflats.push_back({{"flat", f.flat}, {"q", f.q}, {"formula", f.formula}, {"oracle", f.oracle}, {"match", f.match}});
        json report{{"max_p", o.max_p},
                    {"max_q", o.max_q},
                    {"cells", jcells},
                    {"flats", jflats},
                    {"verdict", pass ? "pass" : "fail"}};
        if (exps)
            report["exponent_check"] = {{"exponents", exps->exponents}, {"match", *exps_ok}};
        out << json{{"meta", meta_json("verify", in)}, {"report", report}}.dump(2) << "\n";
    } else {
        out << "verify: " << in.name << ", grid 0.." << o.max_p << " x 0.." << o.max_q << "\n";
        std::vector<std::vector<std::string>> rows{{"cell", "formula", "oracle", "match"}};
        for (const auto& c : cells)
            rows.push_back({"(" + std::to_string(c.p) + "," + std::to_string(c.q) + ")", c.formula,
                            c.oracle, c.match ? "yes" : "NO"});
        print_table(out, rows);
        std::size_t flat_mismatches = 0;
        for (const auto& f : flats)
            flat_mismatches += f.match ? 0 : 1;
        out << "flat C-dimensions: " << flats.size() << " checks (" << lattice.size()
            << " flats, q = 0.." << o.max_q << "), " << flat_mismatches << " mismatches\n";
        if (exps)
            out << "exponents (" << join_exponents(*exps) << "): " << (*exps_ok ? "match" : "mismatch")
                << "\n";
        if (!cells_ok || flat_mismatches > 0) {
            out << "mismatches\n";
            std::vector<std::vector<std::string>> diff{{"check", "formula", "oracle"}};
            for (const auto& c : cells)
                if (!c.match)
                    diff.push_back({"cell (" + std::to_string(c.p) + "," + std::to_string(c.q) + ")",
                                    c.formula, c.oracle});
            for (const auto& f : flats)
                if (!f.match)
                    diff.push_back({"flat " + std::to_string(f.flat) + " q=" + std::to_string(f.q),
                                    f.formula, f.oracle});
            print_table(out, diff);
        }
        out << "verdict: " << (pass ? "pass" : "fail") << "\n";
    }
    return pass ? Success : VerificationMismatch;
}

std::vector<FractionGenerator> load_basis(const std::string& path, const Arrangement& a)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("FileNotFound", "cannot open '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("MalformedBasis", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array())
        throw InputError("MalformedBasis", "basis file must hold an array of fractions");
    std::vector<FractionGenerator> basis;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& item = doc[i];
        if (!item.is_object() || !item.contains("numerator") || !item["numerator"].is_string() ||
            !item.contains("denominator") || !item["denominator"].is_string())
            throw InputError("MalformedBasis", "entry " + std::to_string(i + 1) +
                                                   " needs string fields \"numerator\" and \"denominator\"");
        basis.push_back(make_fraction(a, parse_polynomial(item["numerator"].get<std::string>(), a.ell()),
                                      parse_polynomial(item["denominator"].get<std::string>(), a.ell())));
    }
    return basis;
}

int cmd_decompose(const Options& o, std::ostream& out)
{
    const auto in = load_arrangement(o);
    const Arrangement& a = in.arrangement;
    if (o.numerator.empty())
        throw InputError("MissingFraction", "--numerator is required");
    const MultiPoly num = parse_polynomial(o.numerator, a.ell());
    const MultiPoly den = parse_polynomial(o.denominator.empty() ? "1" : o.denominator, a.ell());
    const FractionGenerator phi = make_fraction(a, num, den);

    const std::size_t p = o.cell_p >= 0 ? static_cast<std::size_t>(o.cell_p)
                                        : static_cast<std::size_t>(std::max(0, phi.numerator.degree()));
    const std::size_t q = o.cell_q >= 0 ? static_cast<std::size_t>(o.cell_q) : phi.denominator.size();

    FiltrationOracle oracle(a);
    const bool greedy = o.basis_file.empty();
    const auto basis = greedy ? oracle.basis_Rbar(p, q) : load_basis(o.basis_file, a);
    const auto coords = oracle.decompose_class(phi, p, q, basis);

    if (o.json_output) {
        json items = json::array();
        for (std::size_t i = 0; i < basis.size(); ++i)
            items.push_back({{"basis", basis[i].to_string(a)}, {"coefficient", to_string(coords[i])}});
        json report{{"p", p},
                    {"q", q},
                    {"fraction", phi.to_string(a)},
                    {"basis_source", greedy ? "greedy" : "file"},
                    {"coordinates", items}};
        out << json{{"meta", meta_json("decompose", in)}, {"report", report}}.dump(2) << "\n";
        return Success;
    }
    out << "decompose: " << phi.to_string(a) << " in cell (" << p << "," << q << ")\n";
    out << "basis: " << basis.size() << " elements (" << (greedy ? "greedy" : o.basis_file)
        << "), class modulo R^" << (static_cast<long>(p) - 1) << "_" << q << " + R^" << p << "_"
        << (static_cast<long>(q) - 1) << "\n";
    std::vector<std::vector<std::string>> rows{{"coefficient", "basis element"}};
    for (std::size_t i = 0; i < basis.size(); ++i)
        rows.push_back({to_string(coords[i]), basis[i].to_string(a)});
    print_table(out, rows);
    return Success;
}

int cmd_family_list(const Options& o, std::ostream& out)
{
    if (o.json_output) {
        out << json{{"meta", {{"tool", "arrpoin"}, {"command", "family-list"}}},
                    {"families",
                     {{{"name", "braid"}, {"forms", "x_i - x_j for i < j"}, {"exponents", "0,1,...,ell-1"}},
                      {{"name", "boolean"}, {"forms", "x_i"}, {"exponents", nullptr}}}}}
                   .dump(2)
            << "\n";
        return Success;
    }
    out << "braid    x_i - x_j (1 <= i < j <= ell), exponents 0,1,...,ell-1\n";
    out << "boolean  x_i (1 <= i <= ell)\n";
    return Success;
}

void add_arrangement_options(CLI::App* sub, Options& o)
{
    sub->add_option("--file", o.file, "JSON arrangement file ('-' for stdin)");
    sub->add_option("--family", o.family_name, "built-in family (braid, boolean)");
    sub->add_option("--ell", o.ell, "family dimension");
    sub->add_flag("--json", o.json_output, "emit JSON");
}

void add_grid_options(CLI::App* sub, Options& o)
{
    sub->add_option("--max-p", o.max_p, "largest numerator degree p (inclusive)");
    sub->add_option("--max-q", o.max_q, "largest denominator degree q (inclusive)");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Bigraded Poincare series of rational functions regular off a hyperplane arrangement"};
    app.name("arrpoin");
    app.require_subcommand(1);
    Options o;

    auto* lattice = app.add_subcommand("lattice", "intersection lattice and Moebius function");
    add_arrangement_options(lattice, o);
    auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of the arrangement");
    add_arrangement_options(poincare, o);
    auto* series = app.add_subcommand("series", "closed-form bigraded series dim Rbar^p_q");
    add_arrangement_options(series, o);
    add_grid_options(series, o);
    series->add_flag("--cumulative", o.cumulative, "also print dim R^p_q");
    series->add_option("--exponents", o.exponents, "exponents \"d1,d2,...\" for the product-formula cross-check");
    series->add_option("--threads", o.threads, "worker threads");
    auto* cseries = app.add_subcommand("cseries", "per-flat dimensions of the pure-reciprocal spaces C_{q,X}");
    add_arrangement_options(cseries, o);
    cseries->add_option("--max-q", o.max_q, "largest q (inclusive)");
    auto* dims = app.add_subcommand("dims", "brute-force rank oracle for dim R^p_q and dim Rbar^p_q");
    add_arrangement_options(dims, o);
    add_grid_options(dims, o);
    dims->add_flag("--by-flat", o.by_flat, "split each cell over the flats");
    dims->add_option("--threads", o.threads, "worker threads");
    auto* verify = app.add_subcommand("verify", "compare the closed form with the rank oracle");
    add_arrangement_options(verify, o);
    add_grid_options(verify, o);
    verify->add_option("--exponents", o.exponents, "exponents \"d1,d2,...\" for the product-formula cross-check");
    verify->add_option("--threads", o.threads, "worker threads");
    auto* decompose = app.add_subcommand("decompose", "coordinates of a fraction's class in Rbar^p_q");
    add_arrangement_options(decompose, o);
    decompose->add_option("--numerator", o.numerator, "numerator polynomial in x1..x_ell");
    decompose->add_option("--denominator", o.denominator, "product of arrangement forms");
    decompose->add_option("--p", o.cell_p, "cell p (default: numerator degree)");
    decompose->add_option("--q", o.cell_q, "cell q (default: number of denominator forms)");
    decompose->add_option("--basis-file", o.basis_file,
                          "JSON array of {\"numerator\",\"denominator\"} (default: greedy basis)");
    auto* family_list = app.add_subcommand("family-list", "list built-in families");
    family_list->add_flag("--json", o.json_output, "emit JSON");

    std::vector<std::string> argv_store;
    argv_store.push_back("arrpoin");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store)
        argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: Usage: " << e.what() << "\n";
        return InputFailure;
    }

    // verify and dims default to a 3x3 grid unless the bounds are given.
    const auto given = [](CLI::App* sub, const char* name) { return sub->count(name) > 0; };
    if (verify->parsed()) {
        if (!given(verify, "--max-p"))
            o.max_p = 3;
        if (!given(verify, "--max-q"))
            o.max_q = 3;
    }
    if (dims->parsed()) {
        if (!given(dims, "--max-p"))
            o.max_p = 3;
        if (!given(dims, "--max-q"))
            o.max_q = 3;
    }
    if (o.threads == 0)
        o.threads = 1;

    try {
        if (lattice->parsed())
            return cmd_lattice(o, out);
        if (poincare->parsed())
            return cmd_poincare(o, out);
        if (series->parsed())
            return cmd_series(o, out);
        if (cseries->parsed())
            return cmd_cseries(o, out);
        if (dims->parsed())
            return cmd_dims(o, out);
        if (verify->parsed())
            return cmd_verify(o, out);
        if (decompose->parsed())
            return cmd_decompose(o, out);
        if (family_list->parsed())
            return cmd_family_list(o, out);
    } catch (const InputError& e) {
        err << "error: " << e.code() << ": " << e.what() << "\n";
        return InputFailure;
    } catch (const ArrangementError& e) {
        err << "error: " << e.code_name() << ": " << e.what() << "\n";
        return InputFailure;
    } catch (const ExpressionError& e) {
        err << "error: ExpressionError: " << e.what() << "\n";
        return InputFailure;
    } catch (const OracleError& e) {
        err << "error: " << e.code_name() << ": " << e.what() << "\n";
        return e.code() == OracleError::Code::NotInCell ? InternalFailure : InputFailure;
    } catch (const DimensionMismatch& e) {
        err << "error: DimensionMismatch: " << e.what() << "\n";
        return InputFailure;
    } catch (const InvariantViolation& e) {
        err << "error: InvariantViolation: " << e.what() << "\n";
        return InternalFailure;
    } catch (const std::exception& e) {
        err << "error: InternalError: " << e.what() << "\n";
        return InternalFailure;
    }
    err << "error: Usage: no subcommand given\n";
    return InputFailure;
}

} // namespace arrpoin::cli
