#pragma once

// Seeded generators for random polynomials and fields, shared by the tests
// and the reproduction suite.

#include "wcalc/vfield.hpp"

#include <cstdint>
#include <random>

namespace wcalc {

class Corpus {
public:
    explicit Corpus(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    /// Small Gaussian rational, never zero.
    GaussQ coeff() {
        for (;;) {
            GaussQ c(Rational(uniform(-5, 5), uniform(1, 4)), Rational(uniform(-5, 5), uniform(1, 4)));
            if (!c.is_zero()) return c;
        }
    }

    Rational small_real() {
        for (;;) {
            Rational r(uniform(-6, 6), uniform(1, 3));
            if (r != 0) return r;
        }
    }

    /// Random multiple of 1/period in [lo, hi].
    Rational weight_on_grid(const WeightSystem& ws, const Rational& lo, const Rational& hi) {
        const Rational p(ws.period());
        const Rational a = lo * p;
        const Rational b = hi * p;
        Integer ia = numerator(a) / denominator(a);
        if (Rational(ia) < a) ia += 1;
        Integer ib = numerator(b) / denominator(b);
        if (Rational(ib) > b) ib -= 1;
        const int k = uniform(ia.convert_to<int>(), ib.convert_to<int>());
        return Rational(k) / p;
    }

    /// Real polynomial in z, zb with up to `terms` monomials t + conj(t) of
    /// total degree between 1 and max_degree.
    MixedPoly real_poly(int n, unsigned max_degree, int terms) {
        MixedPoly t;
        for (int s = 0; s < terms; ++s) {
            Monomial m;
            const auto deg = static_cast<unsigned>(uniform(1, static_cast<int>(max_degree)));
            for (unsigned d = 0; d < deg; ++d) {
                const int k = uniform(1, n);
                if (uniform(0, 1)) {
                    m.set_z(k, m.z_exp(k) + 1);
                } else {
                    m.set_zb(k, m.zb_exp(k) + 1);
                }
            }
            t.add_term(m, coeff());
        }
        return t + t.conj();
    }

    /// Real polynomial homogeneous of the given weight (possibly zero when no
    /// monomial has that weight).
    MixedPoly homogeneous_real_poly(const WeightSystem& ws, const Rational& weight, int terms) {
        const auto monos = mixed_monomials_of_weight(ws, weight);
        MixedPoly t;
        if (monos.empty()) return t;
        for (int s = 0; s < terms; ++s) {
            t.add_term(monos[static_cast<std::size_t>(uniform(0, static_cast<int>(monos.size()) - 1))], coeff());
        }
        return t + t.conj();
    }

    /// Random combination of monomial fields of weight mu.
    HoloVectorField homogeneous_field(const WeightSystem& ws, const Rational& mu, int terms, bool include_w) {
        const auto fields = monomial_fields_of_weight(ws, mu, include_w);
        HoloVectorField h = HoloVectorField::zero(ws.size());
        if (fields.empty()) return h;
        for (int s = 0; s < terms; ++s) {
            h += fields[static_cast<std::size_t>(uniform(0, static_cast<int>(fields.size()) - 1))].field(ws.size(),
                                                                                                         coeff());
        }
        return h;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace wcalc
