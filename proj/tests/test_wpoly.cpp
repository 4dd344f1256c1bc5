#include "doctest.h"

#include "wcalc/wpoly.hpp"

using namespace wcalc;

namespace {

MixedPoly z(int k) { return MixedPoly::z(k); }
MixedPoly zb(int k) { return MixedPoly::zb(k); }
MixedPoly abs2(int k) { return z(k) * zb(k); }
MixedPoly re(const MixedPoly& f) { return real_part(f); }
const GaussQ I = GaussQ::i();

// f = z1^3 z2^2, g = z1 z2, p = 2 Re(f conj g)
MixedPoly example_p() {
    const MixedPoly f = pow(z(1), 3) * pow(z(2), 2);
    const MixedPoly g = z(1) * z(2);
    return GaussQ(2) * re(f * g.conj());
}

}  // namespace

TEST_CASE("weight system basics") {
    const WeightSystem ws({4, 3});
    CHECK(ws.delta(0) == 1);
    CHECK(ws.delta(1) == Rational(1, 8));
    CHECK(ws.delta(2) == Rational(1, 6));
    CHECK(ws.period() == 24);
    CHECK_THROWS_AS(WeightSystem({0}), std::invalid_argument);
    CHECK_THROWS_AS(WeightSystem({-2, 1}), std::invalid_argument);
    const auto odd = WeightSystem::from_axis_orders({2, 3});
    CHECK_FALSE(odd.has_integral_m());
    CHECK(odd.delta(2) == Rational(1, 3));
}

TEST_CASE("monomial weights") {
    const WeightSystem ws({4, 3});
    CHECK(monomial_weight(Monomial::from({3, 2}), ws) == Rational(17, 24));
    CHECK(monomial_weight(Monomial::from({}, {}, 1), ws) == 1);
    CHECK(monomial_weight(Monomial::from({1}, {1}), WeightSystem({1})) == 1);
}

TEST_CASE("signatures") {
    const WeightSystem ws({4, 3});
    CHECK(signature_of(Monomial::from({3, 2}, {1, 1}), ws) == Rational(5, 12));
    CHECK(signature_of(Monomial::from({1}, {1}), ws) == 0);
    CHECK(signature_of(Monomial::from({}, {2, 3}), ws) == Rational(-3, 4));
    CHECK_THROWS_AS(signature_of(Monomial::from({1}, {}, 1), ws), std::invalid_argument);
}

TEST_CASE("signature decomposition") {
    SUBCASE("a balanced square") {
        const auto d = signature_decompose(abs2(1), WeightSystem({1}));
        CHECK(d.signatures() == std::vector<Rational>{0});
        CHECK(d.part(0) == abs2(1));
    }
    SUBCASE("the worked example") {
        const auto d = signature_decompose(example_p(), WeightSystem({4, 3}));
        CHECK(d.signatures() == std::vector<Rational>{Rational(-5, 12), Rational(5, 12)});
        CHECK(d.part(Rational(-5, 12)) == d.part(Rational(5, 12)).conj());
        CHECK(d.reconstruct() == example_p());
    }
    SUBCASE("equal-weight cross term") {
        const MixedPoly p = pow(z(1), 2) * zb(2) + z(2) * pow(zb(1), 2);
        const auto d = signature_decompose(p, WeightSystem({4, 2}));
        CHECK(d.signatures() == std::vector<Rational>{0});
    }
    SUBCASE("non-real input is rejected") {
        CHECK_THROWS_AS(signature_decompose(I * abs2(1), WeightSystem({1})), std::invalid_argument);
        CHECK_THROWS_AS(signature_decompose(MixedPoly::w() + MixedPoly::wb(), WeightSystem({1})),
                        std::invalid_argument);
    }
}

TEST_CASE("balanced part") {
    const WeightSystem m1({1});
    CHECK(balanced_part(abs2(1), m1) == abs2(1));
    CHECK(balanced_part(example_p(), WeightSystem({4, 3})).is_zero());
    const MixedPoly p = abs2(1) + pow(z(1), 3) * zb(1) + z(1) * pow(zb(1), 3);
    CHECK(balanced_part(p, m1) == abs2(1));
    CHECK(balanced_part(balanced_part(p, m1), m1) == balanced_part(p, m1));
    CHECK(is_balanced(abs2(1), m1));
    CHECK_FALSE(is_balanced(p, m1));
}

TEST_CASE("coefficient functions") {
    const WeightSystem ws({4, 3});
    const MixedPoly part = pow(z(1), 3) * pow(z(2), 2) * zb(1) * zb(2);
    const auto f = extract_coefficient_functions(part, ws);
    REQUIRE(f.size() == 1);
    CHECK(f.begin()->first == std::vector<unsigned>{1, 1});
    CHECK(f.begin()->second == pow(z(1), 3) * pow(z(2), 2));

    CHECK(extract_coefficient_functions(MixedPoly(), ws).empty());

    const MixedPoly mixed = pow(z(1), 2) * zb(2) + z(1) * z(2) * zb(1);
    const auto g = extract_coefficient_functions(mixed, WeightSystem({1, 1}));
    CHECK_THROWS_AS(extract_coefficient_functions(mixed, WeightSystem({4, 2})), std::invalid_argument);
    REQUIRE(g.size() == 2);
    CHECK(g.at({0, 1}) == pow(z(1), 2));
    CHECK(g.at({1}) == z(1) * z(2));

    CHECK_THROWS_AS(extract_coefficient_functions(example_p(), ws), std::invalid_argument);
}

TEST_CASE("weight-1 parts have coefficient functions of weight (nu+1)/2") {
    const WeightSystem ws({1, 2});
    // Re(z1 zb2^2) has signature 1/2 - 1/2 = 0, |z2|^4 signature 0
    const MixedPoly p = abs2(1) + pow(abs2(2), 2) + GaussQ(2) * re(z(1) * pow(zb(2), 2));
    for (const auto& [nu, part] : signature_decompose(p, ws).parts()) {
        for (const auto& [B, f] : extract_coefficient_functions(part, ws)) {
            CHECK(homogeneous_weight(f, ws) == (nu + 1) / 2);
        }
    }
}

TEST_CASE("reality and pure terms") {
    CHECK(check_reality(abs2(1)));
    CHECK_FALSE(check_reality(I * abs2(1)));
    CHECK(check_reality(example_p()));
    CHECK(check_reality(MixedPoly::w() + MixedPoly::wb()));

    CHECK(check_no_pure_terms(abs2(1)));
    CHECK_FALSE(check_no_pure_terms(pow(z(1), 2) + pow(zb(1), 2)));
    CHECK(check_no_pure_terms(GaussQ(Rational(1, 2)) * abs2(1)));
    CHECK_FALSE(check_no_pure_terms(abs2(1) + 1));
}

TEST_CASE("weight-graded parts") {
    const WeightSystem m1({1});
    const auto a = weight_graded_parts(abs2(1) + pow(abs2(1), 2), m1);
    REQUIRE(a.size() == 2);
    CHECK(a.at(1) == abs2(1));
    CHECK(a.at(2) == pow(abs2(1), 2));

    CHECK(weight_graded_parts(abs2(1), m1).size() == 1);

    const WeightSystem ws({1, 2});
    const MixedPoly f = abs2(1) + pow(abs2(2), 2) + pow(abs2(2), 3);
    const auto b = weight_graded_parts(f, ws);
    REQUIRE(b.size() == 2);
    CHECK(b.at(1) == abs2(1) + pow(abs2(2), 2));
    CHECK(b.at(Rational(3, 2)) == pow(abs2(2), 3));
    CHECK(homogeneous_weight(f, ws) == std::nullopt);
    CHECK(homogeneous_weight(b.at(1), ws) == Rational(1));
}

TEST_CASE("boundary substitution") {
    const MixedPoly p = abs2(1);
    const MixedPoly u = MixedPoly::u();
    CHECK(substitute_boundary(MixedPoly::w() - MixedPoly::wb() + GaussQ(0, 2) * p, p).is_zero());
    CHECK(substitute_boundary(MixedPoly::w(), p) == u - I * p);
    CHECK(substitute_boundary(pow(MixedPoly::w(), 2), p) ==
          pow(u, 2) - GaussQ(0, 2) * u * p - pow(p, 2));
}

TEST_CASE("weighted substitution") {
    SUBCASE("identity") {
        const WeightSystem ws({4, 3});
        CHECK(weighted_substitution(example_p(), {z(1), z(2)}, ws) == example_p());
    }
    SUBCASE("triangular change") {
        const WeightSystem ws({1, 2});
        const MixedPoly r = weighted_substitution(abs2(2), {z(1), z(2) + pow(z(1), 2)}, WeightSystem({2, 1}));
        CHECK(r == (z(2) + pow(z(1), 2)) * (zb(2) + pow(zb(1), 2)));
        (void)ws;
    }
    SUBCASE("a linear shift removes the z2 y1 coupling") {
        // y1 = Im z1; p = 2 y1^2 + Re(z2) y1 + |z2|^2 with equal weights.
        const WeightSystem ws({1, 1});
        const MixedPoly y1 = imag_part(z(1));
        const MixedPoly p = GaussQ(2) * y1 * y1 + re(z(2)) * y1 + abs2(2);
        const MixedPoly r =
            weighted_substitution(p, {z(1) - GaussQ(0, Rational(1, 4)) * z(2), z(2)}, ws);
        CHECK(homogeneous_weight(r, ws) == Rational(1));
        for (const auto& [m, c] : r.terms()) {
            const bool couples = (m.z_exp(1) + m.zb_exp(1) == 1) && (m.z_exp(2) + m.zb_exp(2) == 1);
            CHECK_FALSE(couples);
        }
    }
    SUBCASE("rejections") {
        const WeightSystem ws({1, 1});
        CHECK_THROWS_AS(weighted_substitution(abs2(1), {pow(z(1), 2), z(2)}, ws), std::invalid_argument);
        CHECK_THROWS_AS(weighted_substitution(abs2(1), {zb(1), z(2)}, ws), std::invalid_argument);
        CHECK_THROWS_AS(weighted_substitution(abs2(1), {z(2), z(2)}, ws), std::invalid_argument);
    }
}

TEST_CASE("exact dilations") {
    const WeightSystem m1({1});
    CHECK(dilate(abs2(1), ExactPower(Rational(1), m1), m1) == abs2(1));
    const ExactPower t(Rational(2), m1);
    CHECK(t.value() == 4);
    CHECK(dilate(abs2(1), t, m1) == GaussQ(4) * abs2(1));

    const WeightSystem ws({4, 3});
    const ExactPower s(Rational(3, 2), ws);
    CHECK(dilate(example_p(), s, ws) == GaussQ(s.value()) * example_p());
    CHECK(dilate(MixedPoly::w(), s, ws) == GaussQ(s.value()) * MixedPoly::w());

    CHECK(ExactPower::from_value(Rational(16), m1).root() == 4);
    CHECK_THROWS_AS(ExactPower::from_value(Rational(2), m1), std::invalid_argument);
    CHECK_THROWS_AS(ExactPower(Rational(-1), m1), std::invalid_argument);
    CHECK_THROWS_AS(t.pow(Rational(1, 3)), std::invalid_argument);
}

TEST_CASE("monomial enumeration") {
    const WeightSystem ws({1, 2});
    for (const auto& m : holomorphic_monomials_of_weight(ws, Rational(1), true)) {
        CHECK(monomial_weight(m, ws) == 1);
        CHECK(m.is_holomorphic());
    }
    // w, z1^2, z1 z2^2, z2^4
    CHECK(holomorphic_monomials_of_weight(ws, Rational(1), true).size() == 4);
    CHECK(holomorphic_monomials_of_weight(ws, Rational(1), false).size() == 3);
    CHECK(holomorphic_monomials_of_weight(ws, Rational(-1, 4), true).empty());
    for (const auto& m : mixed_monomials_of_weight(ws, Rational(1))) CHECK(monomial_weight(m, ws) == 1);
}

TEST_CASE("monomial order is graded") {
    const Monomial a = Monomial::from({2});
    const Monomial b = Monomial::from({1, 1});
    const Monomial c = Monomial::from({1});
    CHECK(c < a);
    CHECK(a < b);
}

TEST_CASE("calculus helpers") {
    const MixedPoly f = pow(z(1), 3) * zb(1);
    CHECK(diff(f, 1) == GaussQ(3) * pow(z(1), 2) * zb(1));
    CHECK(diff_bar(f, 1) == pow(z(1), 3));
    const MixedPoly h = pow(z(1), 2) * z(2);
    CHECK(integrate_z(diff(h, 1), 1) == h);
    CHECK_THROWS(integrate_z(f, 1));
    CHECK(real_part(I * z(1)) + I * imag_part(I * z(1)) == I * z(1));
}
