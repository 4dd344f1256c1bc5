#pragma once

// Text surface: expression parser and printer, JSON reports, the command
// runner behind the CLI and the reproduction suite.

#include "wcalc/models.hpp"
#include "wcalc/vfield.hpp"

#include "json.hpp"

#include <functional>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wcalc {

class ParseError : public std::invalid_argument {
public:
    ParseError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

struct ExprAst {
    enum class Kind { Constant, Variable, Negate, Sum, Product, Quotient, Power, Re, Im, Conj };

    Kind kind = Kind::Constant;
    GaussQ value;               // Constant
    Monomial variable;          // Variable: a single unit monomial
    unsigned exponent = 0;      // Power
    std::vector<std::unique_ptr<ExprAst>> args;
    int line = 1;
    int column = 1;
};

/// Grammar: sums of products of factors; factors are literals ("3/4", "i",
/// "2i", "1/3i"), variables (w, wb, u, zK, zbK), parenthesized expressions,
/// Re(...), Im(...), conj(...), each optionally raised to a nonnegative
/// integer literal with ^. Division only by constants.
std::unique_ptr<ExprAst> parse_expr(std::string_view text);
MixedPoly lower(const ExprAst& ast);
MixedPoly parse_poly(std::string_view text);

/// "(poly) d/dw + (poly) d/dz1 - ..." with holomorphic coefficients. The
/// result has n = max(n_min, largest index seen).
HoloVectorField parse_field(std::string_view text, int n_min = 0);

/// Canonical form, reparseable by parse_poly.
std::string print_poly(const MixedPoly& p);
std::string print_field(const HoloVectorField& h);

/// "4,3" -> WeightSystem({4, 3}).
WeightSystem parse_weights(std::string_view text);
std::string print_weights(const WeightSystem& ws);

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const GaussQ& c);
Json to_json(const Real& x);

struct Report {
    std::string command;
    Json inputs = Json::object();
    Json result = Json::object();
    std::string paper_ref;
    std::string status;  // "verified", "refuted", "inconclusive", "computed", "error"
    int exit_code = 0;

    Json to_json() const;
};

struct SuiteRow {
    std::string id;
    std::string paper_ref;
    bool passed = false;
    std::string detail;
};

struct Fixture {
    std::string id;
    std::string paper_ref;
    /// True on success; `detail` gets a one-line summary either way.
    std::function<bool(std::string& detail)> run;
};

/// The built-in reproduction fixtures.
std::vector<Fixture> builtin_fixtures();

/// Runs every fixture whose id or paper_ref contains `filter`, concurrently.
/// Rows keep fixture order; an exception fails only its own row.
std::vector<SuiteRow> run_suite(const std::vector<Fixture>& fixtures, std::string_view filter = {});

/// Executes one CLI invocation (args excludes the program name). Writes the
/// JSON report to `out` and diagnostics to `err`; returns the exit code
/// (0 verified, 1 refuted or inconclusive, 2 usage or parse error).
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace wcalc
