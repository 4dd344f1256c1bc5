// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "support.hpp"

#include <boost/math/constants/constants.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace wcalc;
using wcalc::testing::Model;

namespace {

constexpr std::uint64_t kSeed = kDefaultSeed;

MixedPoly z(int k) { return MixedPoly::z(k); }
MixedPoly zb(int k) { return MixedPoly::zb(k); }
MixedPoly abs2(int k) { return z(k) * zb(k); }
const GaussQ I = GaussQ::i();

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Accumulates named checks; the first failure is kept as the detail.
struct Checker {
    Outcome out;
    int count = 0;

    void operator()(bool ok, const std::string& what) {
        ++count;
        if (!ok && out.pass) {
            out.pass = false;
            out.detail = "failed: " + what;
        }
    }
    Outcome done(const std::string& summary) {
        if (out.pass) out.detail = summary + " (" + std::to_string(count) + " checks)";
        return out;
    }
};

std::string sci(const Real& x) { return x.str(3, std::ios_base::scientific); }

// Plain evaluation of a z/zb polynomial, kept separate from the library's.
Complex eval(const MixedPoly& p, const std::vector<Complex>& zs) {
    Complex sum(0);
    for (const auto& [m, c] : p.terms()) {
        Complex t(Real(c.re()), Real(c.im()));
        for (int k = 1; k <= m.num_z(); ++k) {
            const Complex& v = zs[static_cast<std::size_t>(k - 1)];
            for (unsigned e = 0; e < m.z_exp(k); ++e) t *= v;
            for (unsigned e = 0; e < m.zb_exp(k); ++e) t *= conj(v);
        }
        sum += t;
    }
    return sum;
}

// ---------------------------------------------------------------------------

Outcome worked_example() {
    const WeightSystem ws({4, 3});
    const MixedPoly f = pow(z(1), 3) * pow(z(2), 2);
    const MixedPoly g = z(1) * z(2);
    const MixedPoly p = GaussQ(2) * real_part(f * g.conj());
    const MixedPoly common = I * pow(z(1), 2) * z(2);
    const HoloVectorField q({MixedPoly(), GaussQ(2) * common * z(1), GaussQ(-3) * common * z(2)});
    Checker check;
    check(apply(q, p) == -I * f * f.conj(), "Qp = -i f conj(f)");
    check(tangency_residual(p, q).residual.is_zero(), "residual is exactly 0");
    check(field_weight(q, ws) == Rational(5, 12), "field weight 5/12");
    return check.done("Qp = -i f conj(f), residual 0");
}

Outcome grading_identities() {
    Corpus corpus(kSeed);
    const std::vector<WeightSystem> systems = {WeightSystem({1}), WeightSystem({4, 3}), WeightSystem({1, 2, 2})};
    Checker check;
    int balanced = 0;
    for (int s = 0; s < 100; ++s) {
        const WeightSystem& ws = systems[static_cast<std::size_t>(s) % systems.size()];
        const HoloVectorField d = dilation_field(ws);
        const Rational mu = corpus.weight_on_grid(ws, Rational(-1), Rational(3, 2));
        const HoloVectorField q = corpus.homogeneous_field(ws, mu, 3, true);
        check(commutator(d, q) == GaussQ(mu) * q, "[D, Q] = mu Q");

        const Rational lam = corpus.weight_on_grid(ws, Rational(1, 2), Rational(2));
        MixedPoly p = corpus.homogeneous_real_poly(ws, lam, 3);
        if (s % 3 == 0) p = balanced_part(p, ws);
        for (const auto& [nu, part] : signature_decompose(p, ws).parts()) {
            check(apply(d, part) == GaussQ((lam + nu) / 2) * part, "D p_nu = ((mu + nu)/2) p_nu");
        }
        check(GaussQ(2) * real_part(apply(d, p)) == GaussQ(lam) * p, "2 Re D p = mu p");
        const bool eq = GaussQ(2) * apply(d, p) == GaussQ(lam) * p;
        check(eq == is_balanced(p, ws), "2 D p = mu p iff balanced");
        if (!p.is_zero() && is_balanced(p, ws)) ++balanced;
    }
    check(balanced > 0, "some samples are balanced");
    return check.done("100 samples over m = (1), (4,3), (1,2,2); " + std::to_string(balanced) + " balanced");
}

Outcome ball_dimensions() {
    const WeightSystem ws({1});
    const MixedPoly p = abs2(1);
    Checker check;
    std::string dims;
    int total = 0;
    const std::vector<std::pair<Rational, int>> expected = {
        {Rational(-1), 1}, {Rational(-1, 2), 2}, {Rational(0), 2}, {Rational(1, 2), 2}, {Rational(1), 1}};
    for (const auto& [mu, dim] : expected) {
        const int got = tangent_field_space(p, ws, mu).real_dimension();
        check(got == dim, "dim at mu = " + to_string(mu));
        dims += (dims.empty() ? "" : ",") + std::to_string(got);
        total += got;
    }
    check(total == 8, "total 8");
    check(tangent_field_space(p, ws, Rational(-2)).basis.empty(), "mu = -2 empty");
    check(tangent_field_space(p, ws, Rational(-3, 2)).basis.empty(), "mu = -3/2 empty");
    return check.done("dims (" + dims + "), total " + std::to_string(total));
}

Outcome canonical_fields() {
    Checker check;
    const std::vector<Model> models = {{abs2(1), WeightSystem({1})},
                                       {abs2(1) + abs2(2), WeightSystem({1, 1})},
                                       {abs2(1) + pow(abs2(2), 2), WeightSystem({1, 2})}};
    for (std::size_t k = 0; k < models.size(); ++k) {
        const auto& m = models[k];
        check(tangency_residual(m.p, model_field_one(m.ws, Rational(1))).is_tangent, "weight-1 field, model " +
                                                                                         std::to_string(k + 1));
        if (k < 2) {
            check(tangency_residual(m.p, model_field_half(m.ws, Rational(1))).is_tangent,
                  "corrected weight-1/2 field, model " + std::to_string(k + 1));
        }
    }
    const auto printed = model_field_half(WeightSystem({1}), Rational(1), 1, HalfFieldForm::Printed);
    check(!tangency_residual(abs2(1), printed).is_tangent, "printed coefficient is not tangent to the ball");
    return check.done("weight-1 field tangent on 3 models, corrected 1/2 field on 2, printed form fails");
}

Outcome unbalanced_empty() {
    const WeightSystem ws({2});
    const MixedPoly p = pow(abs2(1), 2) + GaussQ(Rational(1, 2)) * (pow(z(1), 3) * zb(1) + z(1) * pow(zb(1), 3));
    Checker check;
    check(!is_balanced(p, ws), "p is unbalanced");
    for (const Rational& mu : {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
        check(tangent_field_space(p, ws, mu).basis.empty(), "empty at mu = " + to_string(mu));
    }
    return check.done("no tangent fields at mu = 1/4, 1/2, 3/4, 1");
}

Outcome straighten_ball() {
    const WeightSystem ws({1});
    const HoloVectorField given({GaussQ(0, 2) * z(1), MixedPoly(-1)});
    Checker check;
    check(tangency_residual(abs2(1), given).is_tangent, "given field is tangent");
    const MixedPoly y1 = imag_part(z(1));
    // as given, and scaled by -1 so the z1 coefficient is 1
    for (const HoloVectorField& q : {given, GaussQ(-1) * given}) {
        const auto r = straighten_negative_field(abs2(1), q, ws);
        check(r.p_hat == GaussQ(2) * y1 * y1, "p_hat = 2 y1^2");
        check(r.c == 2, "c = 2");
        check(r.exponent == 2, "m = 2");
        // s0 = m c (z1 / 2i)^(m-1)
        const MixedPoly expected = GaussQ(r.exponent) * GaussQ(r.c) * (GaussQ(0, Rational(-1, 2)) * z(1));
        check(r.s0 == expected, "s0 = m c (z1/2i)^(m-1)");
        check(r.field == HoloVectorField::coordinate(1, 1), "field becomes d/dz1");
        check(r.all_checks_pass(), "internal postconditions");
    }
    return check.done("p_hat = 2 y1^2, c = 2, s0 = -2i z1");
}

Outcome cayley() {
    Checker check;
    Real worst_identity(0);
    Real worst_trip(0);
    const std::vector<Model> models = {{abs2(1), WeightSystem({1})},
                                       {abs2(1) + pow(abs2(2), 2), WeightSystem({1, 2})}};
    const Real tol("1e-12");
    for (const auto& m : models) {
        int points = 0;
        for (const auto& q : random_box_points(m.ws.size(), 1000, kSeed)) {
            const NumericPoint g = cayley_forward(q, m.ws);
            const Complex a = Complex(1) + Complex(Real(0), Real(1)) * q.w / Real(4);
            const Real lhs = norm(g.w) + eval(m.p, g.z).real() - Real(1);
            const Real rhs = (q.w.imag() + eval(m.p, q.z).real()) / norm(a);
            worst_identity = std::max(worst_identity, Real(abs(lhs - rhs)));
            const NumericPoint back = cayley_inverse(g, m.ws);
            Real trip = abs(back.w - q.w);
            for (std::size_t j = 0; j < q.z.size(); ++j) trip = std::max(trip, Real(abs(back.z[j] - q.z[j])));
            worst_trip = std::max(worst_trip, trip);
            ++points;
        }
        check(points == 1000, "1000 points");
    }
    check(worst_identity < tol, "identity residual below 1e-12");
    check(worst_trip < tol, "round trip below 1e-12");
    return check.done("max residual " + sci(worst_identity) + ", max round trip " + sci(worst_trip));
}

Outcome weight_assignment() {
    Checker check;
    const auto a = assign_weights_adapted(abs2(1) + pow(abs2(2), 2) + pow(abs2(2), 3));
    check(a.ws && *a.ws == WeightSystem({1, 2}), "m = (1,2)");
    check(a.admissible(), "admissible");
    check(a.p == abs2(1) + pow(abs2(2), 2), "p = |z1|^2 + |z2|^4");
    // with m = (1) fixed; left to itself the axis order 4 would give m = (2)
    const auto b = homogeneous_model_extract(pow(abs2(1), 2), WeightSystem({1}));
    check(b.verdict == WeightAssignmentReport::Verdict::NoWeightOnePart, "|z1|^4 has no weight-1 part");
    check(b.p.is_zero(), "empty model");
    const auto c = assign_weights_adapted(pow(abs2(1), 2));
    check(c.ws && *c.ws == WeightSystem({2}) && c.admissible(), "adapted weights make |z1|^4 its own model");
    return check.done("m = (1,2) admissible; |z1|^4 reports " + to_string(b.verdict));
}

Outcome balanced_oracle() {
    Corpus corpus(kSeed);
    const Real pi = boost::math::constants::pi<Real>();
    Checker check;
    Real worst(0);
    for (const WeightSystem& ws : {WeightSystem({1}), WeightSystem({2, 1}), WeightSystem({4, 3})}) {
        const Integer big_m = ws.period() / 2;  // lcm of the m_j
        for (int s = 0; s < 25; ++s) {
            const MixedPoly p = corpus.real_poly(ws.size(), 6, corpus.uniform(1, 5));
            const MixedPoly bal = balanced_part(p, ws);
            const int d = static_cast<int>(p.degree());
            const int n = 4 * big_m.convert_to<int>() * (d + 1);
            for (int pt = 0; pt < 20; ++pt) {
                std::vector<Complex> zs;
                for (int j = 0; j < ws.size(); ++j) {
                    zs.emplace_back(Real(corpus.uniform(-5, 5)) / corpus.uniform(1, 5),
                                    Real(corpus.uniform(-5, 5)) / corpus.uniform(1, 5));
                }
                Complex avg(0);
                Real scale(0);
                for (int k = 0; k < n; ++k) {
                    const Real theta = Real(4) * pi * Real(big_m.convert_to<int>()) * k / n;
                    std::vector<Complex> rot;
                    for (int j = 1; j <= ws.size(); ++j) {
                        const Real a = Real(ws.delta(j)) * theta;
                        rot.push_back(zs[static_cast<std::size_t>(j - 1)] * Complex(cos(a), sin(a)));
                    }
                    const Complex v = eval(p, rot);
                    avg += v;
                    scale += abs(v);
                }
                avg /= n;
                scale /= n;
                const Complex sym = eval(bal, zs);
                const Real denom = std::max(Real(abs(sym)), scale);
                const Real rel = denom == 0 ? Real(abs(avg - sym)) : Real(abs(avg - sym) / denom);
                worst = std::max(worst, rel);
            }
        }
    }
    check(worst < Real("1e-10"), "relative deviation below 1e-10");
    return check.done("75 polynomials x 20 points, max relative deviation " + sci(worst));
}

Outcome property_suites() {
    Checker check;
    Corpus corpus(kSeed);
    const std::vector<WeightSystem> systems = {WeightSystem({1}), WeightSystem({4, 3}), WeightSystem({1, 2, 3})};
    for (int s = 0; s < 60; ++s) {
        const WeightSystem& ws = systems[static_cast<std::size_t>(s) % systems.size()];
        const MixedPoly p = corpus.real_poly(ws.size(), 6, corpus.uniform(1, 5));
        const auto dec = signature_decompose(p, ws);
        check(dec.reconstruct() == p, "signature reconstruction");
        for (const auto& [nu, part] : dec.parts()) check(dec.part(-nu) == part.conj(), "conjugate symmetry");
        MixedPoly sum;
        for (const auto& [wt, part] : weight_graded_parts(p, ws)) sum += part;
        check(sum == p, "weight reconstruction");
    }
    {
        const WeightSystem ws({1, 2});
        const MixedPoly p = abs2(1) + pow(abs2(2), 2);
        for (int s = 0; s < 30; ++s) {
            const HoloVectorField x =
                corpus.homogeneous_field(ws, corpus.weight_on_grid(ws, Rational(-1), Rational(1)), 3, true);
            const HoloVectorField y =
                corpus.homogeneous_field(ws, corpus.weight_on_grid(ws, Rational(-1), Rational(1)), 3, true);
            const Rational a = corpus.small_real();
            const Rational b = corpus.small_real();
            check(tangency_residual(p, GaussQ(a) * x + GaussQ(b) * y).residual ==
                      GaussQ(a) * tangency_residual(p, x).residual + GaussQ(b) * tangency_residual(p, y).residual,
                  "residual linearity");
        }
    }
    int fields = 0;
    const auto models = wcalc::testing::model_suite(kSeed);
    for (const auto& m : models) {
        for (const Rational& mu : wcalc::testing::weight_grid(m.ws, Rational(-1), Rational(1))) {
            const auto fb = tangent_field_space(m.p, m.ws, mu);
            check(wcalc::testing::real_independent(fb.basis), "basis independence");
            for (const auto& b : fb.basis) {
                ++fields;
                check(is_homogeneous(b, m.ws, mu) && tangency_residual(m.p, b).is_tangent, "solver soundness");
                if (mu >= 0) {
                    check(wcalc::testing::vanishes_at_origin(b), "Q(0) = 0 for mu >= 0");
                    check(wcalc::testing::divisible_by_w(b[0]), "q0 divisible by w for mu >= 0");
                }
                if (mu > 0) check(!b[0].is_zero(), "q0 nonzero for mu > 0");
            }
            if (mu != 0) check(wcalc::testing::q0_injective(fb.basis), "q0 = 0 forces Q = 0 for mu != 0");
        }
    }
    const WeightSystem ws({2, 3});
    for (int s = 0; s < 5; ++s) {
        MixedPoly phi;
        for (const auto& m : holomorphic_monomials_of_weight(ws, Rational(1), false)) {
            if (corpus.uniform(0, 1)) phi.add_term(m, corpus.coeff());
        }
        for (const auto& fb : annihilator_space(phi, ws, Rational(1, 2))) {
            for (const auto& r : fb.basis) check(apply(r, phi).is_zero(), "annihilator soundness");
        }
    }
    return check.done(std::to_string(models.size()) + " models, " + std::to_string(fields) + " basis fields");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"worked example, exact", worked_example},
        {"grading identities, exact", grading_identities},
        {"ball dimensions, exact", ball_dimensions},
        {"canonical fields, exact", canonical_fields},
        {"unbalanced quartic has no positive-weight fields", unbalanced_empty},
        {"straightening on the ball, exact", straighten_ball},
        {"Cayley identity and round trip, tol 1e-12", cayley},
        {"weight assignment, exact", weight_assignment},
        {"balanced part vs weighted averaging, rel tol 1e-10", balanced_oracle},
        {"property suites, seed " + std::to_string(kSeed), property_suites},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << k + 1 << ": " << criteria[k].first << " | "
                  << o.detail << " [" << ms.count() << " ms]\n";
        if (!o.pass) ++failed;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
