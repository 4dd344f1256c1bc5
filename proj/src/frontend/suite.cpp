#include "wcalc/corpus.hpp"
#include "wcalc/frontend.hpp"

#include <boost/math/constants/constants.hpp>

#include <future>
#include <sstream>

namespace wcalc {

namespace {

const char* kExampleP = "2*Re((z1^3*z2^2)*conj(z1*z2))";
const char* kExampleQ = "(2*i*z1^3*z2) d/dz1 + (-3*i*z1^2*z2^2) d/dz2";

std::string dims_text(const std::vector<int>& dims) {
    std::string s;
    for (int d : dims) s += (s.empty() ? "" : ",") + std::to_string(d);
    return "(" + s + ")";
}

bool example_apply(std::string& detail) {
    const MixedPoly p = parse_poly(kExampleP);
    const HoloVectorField q = parse_field(kExampleQ, 2);
    const MixedPoly f = parse_poly("z1^3*z2^2");
    const MixedPoly expected = GaussQ(Rational(0), Rational(-1)) * f * f.conj();
    const MixedPoly qp = apply(q, p);
    detail = "Qp = " + print_poly(qp);
    return qp == expected;
}

bool example_tangent(std::string& detail) {
    const auto rep = tangency_residual(parse_poly(kExampleP), parse_field(kExampleQ, 2));
    detail = "residual " + print_poly(rep.residual);
    return rep.is_tangent;
}

bool example_signatures(std::string& detail) {
    const WeightSystem ws({4, 3});
    const auto d = signature_decompose(parse_poly(kExampleP), ws);
    const auto sig = d.signatures();
    detail = "signatures";
    for (const auto& s : sig) detail += " " + to_string(s);
    const DomainModel g(DomainModel::Kind::BoundedG, parse_poly(kExampleP), ws);
    return sig == std::vector<Rational>{Rational(-5, 12), Rational(5, 12)} && !t2_invariance_check(g);
}

// True when h lies in the real span of basis.
bool in_real_span(const std::vector<HoloVectorField>& basis, const HoloVectorField& h) {
    std::vector<HoloVectorField> all = basis;
    all.push_back(h);
    std::map<std::pair<int, Monomial>, Eigen::Index> rows;
    for (const auto& f : all) {
        for (int k = 0; k <= f.n(); ++k) {
            for (const auto& [m, c] : f[k].terms()) rows.try_emplace({k, m}, 0);
        }
    }
    Eigen::Index r = 0;
    for (auto& [key, idx] : rows) idx = r++;
    RealMatrix mat = RealMatrix::Zero(2 * r, static_cast<Eigen::Index>(all.size()));
    for (std::size_t c = 0; c < all.size(); ++c) {
        for (int k = 0; k <= all[c].n(); ++k) {
            for (const auto& [m, v] : all[c][k].terms()) {
                const Eigen::Index row = rows.at({k, m});
                mat(2 * row, static_cast<Eigen::Index>(c)) = v.re();
                mat(2 * row + 1, static_cast<Eigen::Index>(c)) = v.im();
            }
        }
    }
    const RealMatrix base = mat.leftCols(mat.cols() - 1);
    return rank(base) == rank(mat);
}

bool example_annihilator(std::string& detail) {
    const WeightSystem ws({4, 3});
    const HoloVectorField q = parse_field(kExampleQ, 2);
    for (const auto& fb : annihilator_space(parse_poly("z1^3*z2^2"), ws, Rational(1, 2))) {
        if (fb.weight != Rational(5, 12)) continue;
        detail = "weight 5/12 space of real dimension " + std::to_string(fb.real_dimension());
        return in_real_span(fb.basis, q);
    }
    detail = "no solutions at weight 5/12";
    return false;
}

bool grading_identities(std::string& detail) {
    Corpus corpus(kDefaultSeed);
    const std::vector<WeightSystem> systems{WeightSystem({1}), WeightSystem({2, 1}), WeightSystem({4, 3})};
    int checked = 0;
    for (int s = 0; s < 100; ++s) {
        const WeightSystem& ws = systems[static_cast<std::size_t>(s % 3)];
        const HoloVectorField dil = dilation_field(ws);
        const Rational mu = corpus.weight_on_grid(ws, Rational(-1, 2), Rational(3, 2));
        const HoloVectorField q = corpus.homogeneous_field(ws, mu, 3, true);
        if (commutator(dil, q) != GaussQ(mu) * q) {
            detail = "[D,Q] != mu Q at sample " + std::to_string(s);
            return false;
        }
        const Rational wt = corpus.weight_on_grid(ws, Rational(1, ws.period().convert_to<int>()), Rational(2));
        const MixedPoly p = corpus.homogeneous_real_poly(ws, wt, 3);
        const MixedPoly dp = apply(dil, p);
        if (dp + dp.conj() != GaussQ(wt) * p) {
            detail = "2 Re D p != mu p at sample " + std::to_string(s);
            return false;
        }
        const auto decomposition = signature_decompose(p, ws);
        for (const auto& [nu, part] : decomposition.parts()) {
            if (apply(dil, part) != GaussQ((wt + nu) / 2) * part) {
                detail = "D p^(nu) mismatch at sample " + std::to_string(s);
                return false;
            }
        }
        if (((GaussQ(2) * dp) == GaussQ(wt) * p) != is_balanced(p, ws)) {
            detail = "2 D p = mu p does not match balance at sample " + std::to_string(s);
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " samples";
    return true;
}

bool ball_dimensions(std::string& detail) {
    const WeightSystem ws({1});
    const MixedPoly p = parse_poly("z1*zb1");
    std::vector<int> dims;
    for (const Rational& mu : {Rational(-2), Rational(-3, 2), Rational(-1), Rational(-1, 2), Rational(0),
                              Rational(1, 2), Rational(1)}) {
        dims.push_back(tangent_field_space(p, ws, mu).real_dimension());
    }
    detail = "dims for mu = -2..1 step 1/2: " + dims_text(dims);
    return dims == std::vector<int>{0, 0, 1, 2, 2, 2, 1};
}

bool field_one(std::string& detail) {
    const WeightSystem ws1({1});
    const WeightSystem ws11({1, 1});
    const WeightSystem ws12({1, 2});
    const bool a = tangency_residual(parse_poly("z1*zb1"), model_field_one(ws1, 1)).is_tangent;
    const bool b = tangency_residual(parse_poly("z1*zb1 + z2*zb2"), model_field_one(ws11, 1)).is_tangent;
    const bool c = tangency_residual(parse_poly("z1*zb1 + z2^2*zb2^2"), model_field_one(ws12, 1)).is_tangent;
    detail = std::string("ball ") + (a ? "ok" : "fail") + ", n=2 ball " + (b ? "ok" : "fail") + ", |z1|^2+|z2|^4 " +
             (c ? "ok" : "fail");
    return a && b && c;
}

bool field_half(std::string& detail) {
    const WeightSystem ws1({1});
    const WeightSystem ws11({1, 1});
    const bool a = tangency_residual(parse_poly("z1*zb1"), model_field_half(ws1, 1)).is_tangent;
    const bool b = tangency_residual(parse_poly("z1*zb1 + z2*zb2"), model_field_half(ws11, 1)).is_tangent;
    detail = std::string("4 delta_j form: ball ") + (a ? "ok" : "fail") + ", n=2 ball " + (b ? "ok" : "fail");
    return a && b;
}

bool field_half_printed(std::string& detail) {
    const WeightSystem ws1({1});
    const auto rep =
        tangency_residual(parse_poly("z1*zb1"), model_field_half(ws1, 1, 1, HalfFieldForm::Printed));
    detail = "2 delta_j form residual " + print_poly(rep.residual);
    return !rep.is_tangent;
}

bool unbalanced_empty(std::string& detail) {
    const WeightSystem ws({2});
    const MixedPoly p = parse_poly("z1^2*zb1^2 + 1/2*(z1^3*zb1 + z1*zb1^3)");
    std::vector<int> dims;
    for (const Rational& mu : {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
        dims.push_back(tangent_field_space(p, ws, mu).real_dimension());
    }
    detail = "dims for mu = 1/4,1/2,3/4,1: " + dims_text(dims);
    return dims == std::vector<int>{0, 0, 0, 0};
}

bool straighten_ball(std::string& detail) {
    const WeightSystem ws({1});
    const MixedPoly p = parse_poly("z1*zb1");
    const auto r = straighten_negative_field(p, parse_field("(2*i*z1) d/dw + (-1) d/dz1", 1), ws);
    const MixedPoly y = parse_poly("(z1 - zb1)/(2*i)");
    detail = "p_hat = " + print_poly(r.p_hat) + ", c = " + to_string(r.c) + ", s0 = " + print_poly(r.s0);
    return r.all_checks_pass() && r.p_hat == GaussQ(2) * y * y && r.c == 2 && r.exponent == 2 &&
           r.s0 == parse_poly("-2*i*z1");
}

bool cayley(std::string& detail) {
    const auto a = cayley_sweep(parse_poly("z1*zb1"), WeightSystem({1}), 1000, kDefaultSeed);
    const auto b = cayley_sweep(parse_poly("z1*zb1 + z2^2*zb2^2"), WeightSystem({1, 2}), 1000, kDefaultSeed + 1);
    const Real worst = std::max({a.max_residual, a.max_round_trip, b.max_residual, b.max_round_trip});
    detail = "max deviation " + worst.str(3, std::ios_base::scientific);
    return worst < Real(1e-12);
}

bool weights_fixture(std::string& detail) {
    const auto a = assign_weights_adapted(parse_poly("z1*zb1 + z2^2*zb2^2 + z2^3*zb2^3"));
    const auto b = homogeneous_model_extract(parse_poly("z1^2*zb1^2"), WeightSystem({1}));
    detail = "m = " + (a.ws ? print_weights(*a.ws) : std::string("?")) + ", p = " + print_poly(a.p) +
             "; |z1|^4: " + to_string(b.verdict);
    return a.admissible() && a.ws && *a.ws == WeightSystem({1, 2}) &&
           a.p == parse_poly("z1*zb1 + z2^2*zb2^2") &&
           b.verdict == WeightAssignmentReport::Verdict::NoWeightOnePart;
}

bool balanced_average(std::string& detail) {
    Corpus corpus(kDefaultSeed + 7);
    const Real two_pi = 2 * boost::math::constants::pi<Real>();
    Real worst(0);
    for (const auto& ws : {WeightSystem({1}), WeightSystem({2, 1}), WeightSystem({4, 3})}) {
        const int n = ws.size();
        const Integer big_m = ws.period() / 2;
        for (int s = 0; s < 5; ++s) {
            const unsigned d = 5;
            const MixedPoly p = corpus.real_poly(n, d, 5);
            const MixedPoly bal = balanced_part(p, ws);
            const int count = 4 * big_m.convert_to<int>() * static_cast<int>(d + 1);
            for (int pt = 0; pt < 4; ++pt) {
                std::vector<Complex> z;
                for (int j = 0; j < n; ++j) {
                    z.emplace_back(Real(corpus.small_real()) / 3, Real(corpus.small_real()) / 3);
                }
                Complex avg(0);
                for (int k = 0; k < count; ++k) {
                    const Real theta = two_pi * 2 * Real(big_m.convert_to<int>()) * k / count;
                    std::vector<Complex> zr = z;
                    for (int j = 1; j <= n; ++j) {
                        const Real a = Real(ws.delta(j)) * theta;
                        zr[static_cast<std::size_t>(j - 1)] *= Complex(cos(a), sin(a));
                    }
                    avg += evaluate(p, zr);
                }
                avg /= count;
                const Complex sym = evaluate(bal, z);
                const Real rel = abs(avg - sym) / std::max(Real(1), Real(abs(sym)));
                worst = std::max(worst, rel);
            }
        }
    }
    detail = "max relative deviation " + worst.str(3, std::ios_base::scientific);
    return worst < Real(1e-10);
}

bool zero_sets(std::string& detail) {
    const auto a = zero_set_checks(parse_poly("z1*zb1 + z2^2*zb2^2"), WeightSystem({1, 2}), 500);
    const auto b = zero_set_checks(parse_poly(kExampleP), WeightSystem({4, 3}), 500);
    const auto c = zero_set_checks(parse_poly("-z1*zb1"), WeightSystem({1}), 100);
    detail = "|z1|^2+|z2|^4 " + to_string(a.no_complex_curve) + ", example p " + to_string(b.no_complex_curve) +
             ", -|z1|^2 positivity " + to_string(c.positivity);
    return a.no_complex_curve == Verdict3::Supported && b.no_complex_curve == Verdict3::Refuted &&
           c.positivity == Verdict3::Refuted;
}

}  // namespace

std::vector<Fixture> builtin_fixtures() {
    return {
        {"example-apply", "(2.3) example", example_apply},
        {"example-tangent", "(2.3) example", example_tangent},
        {"example-signatures", "(2.1) (1.3)", example_signatures},
        {"example-annihilator", "(3.2)", example_annihilator},
        {"grading-identities", "(3.1)", grading_identities},
        {"ball-dimensions", "ball algebra", ball_dimensions},
        {"field-one", "(3.7)", field_one},
        {"field-half", "(3.3) corrected", field_half},
        {"field-half-printed", "(3.3) printed", field_half_printed},
        {"unbalanced-empty", "theorem 3.7", unbalanced_empty},
        {"straighten-ball", "lemma 2.7", straighten_ball},
        {"cayley", "(1.4)", cayley},
        {"weights", "sec. 4 weights", weights_fixture},
        {"balanced-average", "sec. 4 averaging", balanced_average},
        {"zero-sets", "(2.6)", zero_sets},
    };
}

std::vector<SuiteRow> run_suite(const std::vector<Fixture>& fixtures, std::string_view filter) {
    std::vector<const Fixture*> chosen;
    for (const auto& f : fixtures) {
        if (filter.empty() || f.id.find(filter) != std::string::npos ||
            f.paper_ref.find(filter) != std::string::npos) {
            chosen.push_back(&f);
        }
    }
    std::vector<std::future<SuiteRow>> jobs;
    jobs.reserve(chosen.size());
    for (const Fixture* f : chosen) {
        jobs.push_back(std::async(std::launch::async, [f] {
            SuiteRow row{f->id, f->paper_ref, false, {}};
            try {
                row.passed = f->run(row.detail);
            } catch (const std::exception& e) {
                row.passed = false;
                row.detail = std::string("exception: ") + e.what();
            }
            return row;
        }));
    }
    std::vector<SuiteRow> rows;
    rows.reserve(jobs.size());
    for (auto& j : jobs) rows.push_back(j.get());
    return rows;
}

}  // namespace wcalc
