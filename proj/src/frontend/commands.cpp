#include "wcalc/frontend.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <iterator>
#include <sstream>

namespace wcalc {

Json to_json(const Rational& r) { return to_fraction_string(r); }

Json to_json(const GaussQ& c) {
    Json j = Json::object();
    j["re"] = to_fraction_string(c.re());
    j["im"] = to_fraction_string(c.im());
    return j;
}

Json to_json(const Real& x) { return x.str(17, std::ios_base::scientific); }

Json Report::to_json() const {
    Json j = Json::object();
    j["command"] = command;
    j["inputs"] = inputs;
    j["result"] = result;
    j["paper_ref"] = paper_ref;
    j["status"] = status;
    return j;
}

namespace {

constexpr double kCayleyTolerance = 1e-12;

struct Options {
    std::string p;
    std::string field;
    std::string m;
    std::string mu;
    std::string bound = "1";
    std::string filter;
    int n = 0;
    int samples = 0;
    std::uint64_t seed = kDefaultSeed;
};

class Inputs {
public:
    explicit Inputs(std::istream& in) : in_(in) {}

    std::string text(const std::string& value) {
        if (value != "-") return value;
        if (stdin_used_) throw std::invalid_argument("stdin ('-') can feed only one input");
        stdin_used_ = true;
        return std::string(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
    }

private:
    std::istream& in_;
    bool stdin_used_ = false;
};

Json field_list(const std::vector<HoloVectorField>& basis) {
    Json a = Json::array();
    for (const auto& h : basis) a.push_back(print_field(h));
    return a;
}

std::string monomial_string(const Monomial& m) { return print_poly(MixedPoly::term(m)); }

Json weight_report_json(const WeightAssignmentReport& r) {
    Json j = Json::object();
    j["verdict"] = to_string(r.verdict);
    j["admissible"] = r.admissible();
    j["axis_orders"] = r.axis_orders;
    if (r.ws) {
        j["m"] = print_weights(*r.ws);
        Json d = Json::array();
        for (int k = 1; k <= r.ws->size(); ++k) d.push_back(to_json(r.ws->delta(k)));
        j["deltas"] = d;
    } else {
        j["m"] = nullptr;
        j["deltas"] = nullptr;
    }
    j["p"] = print_poly(r.p);
    j["violating"] = r.violating ? Json(monomial_string(*r.violating)) : Json(nullptr);
    j["violating_weight"] = r.violating_weight ? to_json(*r.violating_weight) : Json(nullptr);
    j["infinite_axis"] = r.infinite_axis ? Json(*r.infinite_axis) : Json(nullptr);
    j["warnings"] = r.warnings;
    return j;
}

void set_verdict(Report& r, bool ok, const char* pass = "verified", const char* fail = "refuted") {
    r.status = ok ? pass : fail;
    r.exit_code = ok ? 0 : 1;
}

Report check_tangent(const Options& o, Inputs& in) {
    Report r;
    r.command = "check-tangent";
    const WeightSystem ws = parse_weights(o.m);
    const MixedPoly p = parse_poly(in.text(o.p));
    const HoloVectorField h = parse_field(in.text(o.field), ws.size());
    if (h.n() > ws.size()) throw std::invalid_argument("field uses more variables than the weight system");
    r.inputs["p"] = print_poly(p);
    r.inputs["field"] = print_field(h);
    r.inputs["m"] = print_weights(ws);
    const auto rep = tangency_residual(p, h);
    const auto wt = field_weight(h, ws);
    r.result["field_weight"] = wt ? to_json(*wt) : Json(nullptr);
    r.result["homogeneous"] = !wt || is_homogeneous(h, ws, *wt);
    r.result["residual"] = print_poly(rep.residual);
    r.result["tangent"] = rep.is_tangent;
    r.result["witness"] = rep.witness ? Json(monomial_string(*rep.witness)) : Json(nullptr);
    r.paper_ref = "(2.3)";
    set_verdict(r, rep.is_tangent);
    return r;
}

Report tangent_space(const Options& o, Inputs& in) {
    Report r;
    r.command = "tangent-space";
    const WeightSystem ws = parse_weights(o.m);
    const MixedPoly p = parse_poly(in.text(o.p));
    const Rational mu = parse_rational(o.mu);
    r.inputs["p"] = print_poly(p);
    r.inputs["m"] = print_weights(ws);
    r.inputs["mu"] = to_json(mu);
    const auto fb = tangent_field_space(p, ws, mu);
    r.result["weight"] = to_json(fb.weight);
    r.result["real_dimension"] = fb.real_dimension();
    r.result["basis"] = field_list(fb.basis);
    r.paper_ref = "(2.3)";
    r.status = "computed";
    return r;
}

Report signature(const Options& o, Inputs& in) {
    Report r;
    r.command = "signature";
    const WeightSystem ws = parse_weights(o.m);
    const MixedPoly p = parse_poly(in.text(o.p));
    r.inputs["p"] = print_poly(p);
    r.inputs["m"] = print_weights(ws);
    const auto d = signature_decompose(p, ws);
    Json parts = Json::array();
    for (const auto& [nu, part] : d.parts()) {
        Json e = Json::object();
        e["signature"] = to_json(nu);
        e["weights"] = Json::array();
        for (const auto& [wt, g] : weight_graded_parts(part, ws)) e["weights"].push_back(to_json(wt));
        e["part"] = print_poly(part);
        parts.push_back(e);
    }
    r.result["balanced"] = is_balanced(p, ws);
    r.result["parts"] = parts;
    r.paper_ref = "(2.1)";
    r.status = "computed";
    return r;
}

Report balanced(const Options& o, Inputs& in) {
    Report r;
    r.command = "balanced-part";
    const WeightSystem ws = parse_weights(o.m);
    const MixedPoly p = parse_poly(in.text(o.p));
    r.inputs["p"] = print_poly(p);
    r.inputs["m"] = print_weights(ws);
    r.result["balanced_part"] = print_poly(balanced_part(p, ws));
    r.result["is_balanced"] = is_balanced(p, ws);
    r.paper_ref = "(2.2)";
    r.status = "computed";
    return r;
}

Report annihilator(const Options& o, Inputs& in) {
    Report r;
    r.command = "annihilator";
    const WeightSystem ws = parse_weights(o.m);
    const MixedPoly phi = parse_poly(in.text(o.p));
    const Rational bound = parse_rational(o.bound);
    r.inputs["p"] = print_poly(phi);
    r.inputs["m"] = print_weights(ws);
    r.inputs["bound"] = to_json(bound);
    const auto spaces = annihilator_space(phi, ws, bound);
    Json a = Json::array();
    for (const auto& fb : spaces) {
        Json e = Json::object();
        e["weight"] = to_json(fb.weight);
        e["real_dimension"] = fb.real_dimension();
        e["basis"] = field_list(fb.basis);
        a.push_back(e);
    }
    r.result["weight_bound"] = to_json(bound);
    r.result["holds_up_to_bound"] = spaces.empty();
    r.result["spaces"] = a;
    r.paper_ref = "(3.2)";
    set_verdict(r, spaces.empty());
    return r;
}

Report weights(const Options& o, Inputs& in) {
    Report r;
    r.command = "weights";
    const MixedPoly f = parse_poly(in.text(o.p));
    r.inputs["p"] = print_poly(f);
    r.inputs["n"] = o.n;
    const auto rep = assign_weights_adapted(f, o.n);
    r.inputs["m"] = rep.ws ? Json(print_weights(*rep.ws)) : Json(nullptr);
    r.result = weight_report_json(rep);
    r.paper_ref = "sec. 4";
    set_verdict(r, rep.admissible());
    return r;
}

Report model_extract(const Options& o, Inputs& in) {
    Report r;
    r.command = "model-extract";
    const WeightSystem ws = parse_weights(o.m);
    const MixedPoly f = parse_poly(in.text(o.p));
    r.inputs["p"] = print_poly(f);
    r.inputs["m"] = print_weights(ws);
    const auto rep = homogeneous_model_extract(f, ws);
    r.result = weight_report_json(rep);
    r.paper_ref = "sec. 4";
    set_verdict(r, rep.admissible());
    return r;
}

Report straighten(const Options& o, Inputs& in) {
    Report r;
    r.command = "straighten";
    const WeightSystem ws = parse_weights(o.m);
    const MixedPoly p = parse_poly(in.text(o.p));
    const HoloVectorField h = parse_field(in.text(o.field), ws.size());
    if (h.n() > ws.size()) throw std::invalid_argument("field uses more variables than the weight system");
    r.inputs["p"] = print_poly(p);
    r.inputs["field"] = print_field(h);
    r.inputs["m"] = print_weights(ws);
    const auto s = straighten_negative_field(p, h, ws);
    r.result["weight"] = to_json(s.weight);
    r.result["axis"] = s.axis;
    r.result["exponent"] = s.exponent;
    Json change = Json::array();
    for (const auto& c : s.change) change.push_back(print_poly(c));
    r.result["change"] = change;
    r.result["s0"] = print_poly(s.s0);
    r.result["s"] = print_poly(s.s);
    r.result["p_tilde"] = print_poly(s.p_tilde);
    r.result["p_hat"] = print_poly(s.p_hat);
    r.result["field"] = print_field(s.field);
    r.result["c"] = to_json(s.c);
    Json cp = Json::array();
    for (const auto& c : s.couplings) {
        cp.push_back(Json{{"index", c.index}, {"exponent", c.exponent}, {"alpha", to_json(c.alpha)}});
    }
    r.result["couplings"] = cp;
    Json el = Json::array();
    for (const auto& [k, beta] : s.eliminations) el.push_back(Json{{"index", k}, {"beta", to_json(beta)}});
    r.result["eliminations"] = el;
    r.result["p_final"] = print_poly(s.p_final);
    r.result["checks"] = Json{{"independent_of_re_axis", s.independent_of_re_axis},
                              {"axis_profile", s.axis_profile_ok},
                              {"coupling_profile", s.coupling_profile_ok},
                              {"exponent_bounds", s.exponent_bounds_ok},
                              {"s0_profile", s.s0_profile_ok}};
    r.paper_ref = "lemma 2.7";
    set_verdict(r, s.all_checks_pass());
    return r;
}

Report cayley_check(const Options& o, Inputs& in) {
    Report r;
    r.command = "cayley-check";
    const WeightSystem ws = parse_weights(o.m);
    const MixedPoly p = parse_poly(in.text(o.p));
    const int samples = o.samples > 0 ? o.samples : 1000;
    r.inputs["p"] = print_poly(p);
    r.inputs["m"] = print_weights(ws);
    r.inputs["samples"] = samples;
    r.inputs["seed"] = o.seed;
    const auto sw = cayley_sweep(p, ws, samples, o.seed);
    r.result["points"] = sw.points;
    r.result["max_residual"] = to_json(sw.max_residual);
    r.result["max_round_trip"] = to_json(sw.max_round_trip);
    r.result["tolerance"] = "1e-12";
    r.result["unbounded_bound_derived"] = "0";
    r.result["unbounded_bound_printed"] = "1";
    r.paper_ref = "(1.4)";
    set_verdict(r, sw.max_residual < Real(kCayleyTolerance) && sw.max_round_trip < Real(kCayleyTolerance));
    return r;
}

Report zero_set_check(const Options& o, Inputs& in) {
    Report r;
    r.command = "zero-set-check";
    const WeightSystem ws = parse_weights(o.m);
    const MixedPoly p = parse_poly(in.text(o.p));
    const int samples = o.samples > 0 ? o.samples : 2000;
    r.inputs["p"] = print_poly(p);
    r.inputs["m"] = print_weights(ws);
    r.inputs["samples"] = samples;
    r.inputs["seed"] = o.seed;
    const auto z = zero_set_checks(p, ws, samples, o.seed);
    r.result["positivity"] = to_string(z.positivity);
    r.result["min_sampled"] = to_json(z.min_sampled);
    r.result["tolerance"] = "1e-8";
    r.result["coordinate_lines"] = to_string(z.coordinate_lines);
    r.result["vanishing_axes"] = z.vanishing_axes;
    r.result["no_complex_curve"] = to_string(z.no_complex_curve);
    r.paper_ref = "(2.6)";
    r.status = to_string(z.no_complex_curve);
    r.exit_code = z.no_complex_curve == Verdict3::Supported ? 0 : 1;
    return r;
}

Report suite(const Options& o) {
    Report r;
    r.command = "suite";
    r.inputs["filter"] = o.filter;
    const auto rows = run_suite(builtin_fixtures(), o.filter);
    Json a = Json::array();
    int passed = 0;
    for (const auto& row : rows) {
        a.push_back(Json{{"id", row.id}, {"paper_ref", row.paper_ref}, {"passed", row.passed}, {"detail", row.detail}});
        passed += row.passed ? 1 : 0;
    }
    r.result["rows"] = a;
    r.result["passed"] = passed;
    r.result["total"] = rows.size();
    r.paper_ref = "all";
    set_verdict(r, passed == static_cast<int>(rows.size()), "verified", "failed");
    return r;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact calculus for weighted homogeneous model domains", "wcalc"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_p = [&](CLI::App* s, const char* what) {
        s->add_option("--p", o.p, what)->required();
    };
    auto add_m = [&](CLI::App* s) { s->add_option("--m", o.m, "integers m_j, e.g. 4,3")->required(); };
    auto add_field = [&](CLI::App* s) {
        s->add_option("--field", o.field, "field, e.g. \"(w) d/dw + (z1) d/dz1\", or - for stdin")->required();
    };
    auto add_sampling = [&](CLI::App* s) {
        s->add_option("--samples", o.samples, "number of sample points");
        s->add_option("--seed", o.seed, "random seed");
    };

    auto* ct = app.add_subcommand("check-tangent", "tangency residual of a field against {v + p = 0}");
    add_p(ct, "defining polynomial, or - for stdin");
    add_field(ct);
    add_m(ct);
    auto* ts = app.add_subcommand("tangent-space", "basis of tangent fields of one weight");
    add_p(ts, "defining polynomial, or - for stdin");
    add_m(ts);
    ts->add_option("--mu", o.mu, "field weight, e.g. -1/2")->required();
    auto* sg = app.add_subcommand("signature", "signature decomposition");
    add_p(sg, "real polynomial in z, zb, or - for stdin");
    add_m(sg);
    auto* bp = app.add_subcommand("balanced-part", "signature-zero part");
    add_p(bp, "real polynomial in z, zb, or - for stdin");
    add_m(bp);
    auto* an = app.add_subcommand("annihilator", "holomorphic fields R with R(phi) = 0 up to a weight bound");
    add_p(an, "holomorphic polynomial phi, or - for stdin");
    add_m(an);
    an->add_option("--bound", o.bound, "largest field weight searched")->capture_default_str();
    auto* wg = app.add_subcommand("weights", "weights from axis orders and the homogeneous model");
    add_p(wg, "defining function, or - for stdin");
    wg->add_option("--n", o.n, "number of z variables (default: as used by p)");
    auto* me = app.add_subcommand("model-extract", "weight-1 part and admissibility for given weights");
    add_p(me, "defining function, or - for stdin");
    add_m(me);
    auto* st = app.add_subcommand("straighten", "normalize a tangent field of weight -delta_j");
    add_p(st, "defining polynomial, or - for stdin");
    add_field(st);
    add_m(st);
    auto* cc = app.add_subcommand("cayley-check", "numeric check of the transform between the two models");
    add_p(cc, "balanced polynomial of weight 1, or - for stdin");
    add_m(cc);
    add_sampling(cc);
    auto* zs = app.add_subcommand("zero-set-check", "sufficient checks on the zero set of p");
    add_p(zs, "polynomial of weight 1, or - for stdin");
    add_m(zs);
    add_sampling(zs);
    auto* su = app.add_subcommand("suite", "run the built-in reproduction fixtures");
    su->add_option("--filter", o.filter, "substring of fixture id or reference");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Inputs inputs(in);
    Report r;
    try {
        if (ct->parsed()) r = check_tangent(o, inputs);
        else if (ts->parsed()) r = tangent_space(o, inputs);
        else if (sg->parsed()) r = signature(o, inputs);
        else if (bp->parsed()) r = balanced(o, inputs);
        else if (an->parsed()) r = annihilator(o, inputs);
        else if (wg->parsed()) r = weights(o, inputs);
        else if (me->parsed()) r = model_extract(o, inputs);
        else if (st->parsed()) r = straighten(o, inputs);
        else if (cc->parsed()) r = cayley_check(o, inputs);
        else if (zs->parsed()) r = zero_set_check(o, inputs);
        else r = suite(o);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    out << r.to_json().dump(2) << '\n';
    return r.exit_code;
}

}  // namespace wcalc
