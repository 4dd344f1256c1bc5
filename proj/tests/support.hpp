#pragma once

// Helpers shared by the test binaries.

#include "wcalc/corpus.hpp"
#include "wcalc/models.hpp"
#include "wcalc/vfield.hpp"

#include <set>
#include <utility>

namespace wcalc::testing {

/// Real coordinates of fields over the union of their (component, monomial)
/// supports, two rows (re, im) per support entry, one column per field.
inline RealMatrix real_coordinates(const std::vector<HoloVectorField>& fields) {
    std::set<std::pair<int, Monomial>> keys;
    for (const auto& f : fields) {
        for (int k = 0; k <= f.n(); ++k) {
            for (const auto& [m, c] : f[k].terms()) keys.insert({k, m});
        }
    }
    RealMatrix out = RealMatrix::Zero(static_cast<Eigen::Index>(2 * keys.size()),
                                      static_cast<Eigen::Index>(fields.size()));
    for (std::size_t col = 0; col < fields.size(); ++col) {
        Eigen::Index row = 0;
        for (const auto& [k, m] : keys) {
            const GaussQ c = k <= fields[col].n() ? fields[col].coeff(k, m) : GaussQ();
            out(row, static_cast<Eigen::Index>(col)) = c.re();
            out(row + 1, static_cast<Eigen::Index>(col)) = c.im();
            row += 2;
        }
    }
    return out;
}

inline bool in_real_span(const std::vector<HoloVectorField>& basis, const HoloVectorField& f) {
    auto all = basis;
    all.push_back(f);
    const RealMatrix with = real_coordinates(all);
    const RealMatrix without = with.leftCols(with.cols() - 1);
    return rank(with) == rank(without);
}

inline bool real_independent(const std::vector<HoloVectorField>& fields) {
    return rank(real_coordinates(fields)) == static_cast<Eigen::Index>(fields.size());
}

inline MixedPoly sphere(const WeightSystem& ws) {
    MixedPoly p;
    for (int j = 1; j <= ws.size(); ++j) {
        p += pow(MixedPoly::z(j) * MixedPoly::zb(j), static_cast<unsigned>(ws.order(j) / 2));
    }
    return p;
}

struct Model {
    MixedPoly p;
    WeightSystem ws;
};

/// Weight-1 models with no pure terms whose zero set holds no complex curve:
/// a fixed list plus seeded perturbations of the weighted sphere, kept only
/// when sampled positivity supports it.
inline std::vector<Model> model_suite(std::uint64_t seed) {
    const auto z = [](int k) { return MixedPoly::z(k); };
    const auto zb = [](int k) { return MixedPoly::zb(k); };
    const auto abs2 = [&](int k) { return z(k) * zb(k); };
    std::vector<Model> out = {
        {abs2(1), WeightSystem({1})},
        {abs2(1) + abs2(2), WeightSystem({1, 1})},
        {abs2(1) + pow(abs2(2), 2), WeightSystem({1, 2})},
        {pow(abs2(1), 2) + pow(abs2(2), 3), WeightSystem({2, 3})},
        // vanishes on the imaginary axis only, a totally real line
        {pow(abs2(1), 2) + GaussQ(Rational(1, 2)) * (pow(z(1), 3) * zb(1) + z(1) * pow(zb(1), 3)),
         WeightSystem({2})},
        {abs2(1) + pow(abs2(2), 2) + real_part(z(1) * pow(zb(2), 2)), WeightSystem({1, 2})},
    };
    Corpus corpus(seed);
    const std::vector<WeightSystem> systems = {WeightSystem({1, 2}), WeightSystem({2, 2}), WeightSystem({2, 3}),
                                               WeightSystem({1, 1, 2})};
    for (int made = 0, tries = 0; made < 8 && tries < 100; ++tries) {
        const WeightSystem& ws = systems[static_cast<std::size_t>(tries) % systems.size()];
        const MixedPoly raw = corpus.homogeneous_real_poly(ws, Rational(1), 3);
        MixedPoly mixed;
        for (const auto& [m, c] : raw.terms()) {
            if (!m.z.empty() && !m.zb.empty()) mixed.add_term(m, c * GaussQ(Rational(1, 8)));
        }
        const MixedPoly p = GaussQ(2) * sphere(ws) + mixed;
        if (zero_set_checks(p, ws, 300, seed).no_complex_curve != Verdict3::Supported) continue;
        out.push_back({p, ws});
        ++made;
    }
    return out;
}

/// Multiples of 1/period in [lo, hi].
inline std::vector<Rational> weight_grid(const WeightSystem& ws, const Rational& lo, const Rational& hi) {
    std::vector<Rational> out;
    const Rational step = Rational(1) / Rational(ws.period());
    for (Rational mu = lo; mu <= hi; mu += step) out.push_back(mu);
    return out;
}

inline bool vanishes_at_origin(const HoloVectorField& h) {
    for (int k = 0; k <= h.n(); ++k) {
        if (!h[k].coeff(Monomial{}).is_zero()) return false;
    }
    return true;
}

inline bool divisible_by_w(const MixedPoly& f) {
    for (const auto& [m, c] : f.terms()) {
        if (m.w == 0) return false;
    }
    return true;
}

// rank of the q_0 components equals the dimension: Q -> q_0 is injective
inline bool q0_injective(const std::vector<HoloVectorField>& basis) {
    std::vector<HoloVectorField> q0s;
    for (const auto& b : basis) q0s.push_back(HoloVectorField({b[0]}));
    return real_independent(q0s);
}

}  // namespace wcalc::testing
