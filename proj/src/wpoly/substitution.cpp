#include "wcalc/wpoly.hpp"

#include <limits>

namespace wcalc {

MixedPoly weighted_substitution(const MixedPoly& p, const std::vector<MixedPoly>& subs,
                                const WeightSystem& ws) {
    const int n = ws.size();
    if (static_cast<int>(subs.size()) != n) {
        throw std::invalid_argument("weighted substitution needs one substitute per variable");
    }
    if (p.num_z() > n) throw std::invalid_argument("polynomial references a variable outside the weight system");

    ComplexMatrix linear = ComplexMatrix::Constant(n, n, GaussQ());
    for (int j = 1; j <= n; ++j) {
        const MixedPoly& h = subs[static_cast<std::size_t>(j - 1)];
        if (!h.is_holomorphic() || h.has_w()) {
            throw std::invalid_argument("substitute for z" + std::to_string(j) + " is not holomorphic in z");
        }
        const auto wt = homogeneous_weight(h, ws);
        if (!wt || *wt != ws.delta(j)) {
            throw std::invalid_argument("substitute for z" + std::to_string(j) +
                                        " is not homogeneous of weight delta_" + std::to_string(j));
        }
        for (int k = 1; k <= n; ++k) {
            Monomial zk;
            zk.set_z(k, 1);
            linear(j - 1, k - 1) = h.coeff(zk);
        }
    }
    if (rank(linear) != n) throw std::invalid_argument("weighted substitution is not invertible");

    Substitution s;
    for (int j = 1; j <= n; ++j) {
        const MixedPoly& h = subs[static_cast<std::size_t>(j - 1)];
        s.z.emplace(j, h);
        s.zb.emplace(j, h.conj());
    }
    return substitute(p, s);
}

ExactPower::ExactPower(Rational root, const WeightSystem& ws) : root_(std::move(root)), period_(ws.period()) {
    if (root_ <= 0) throw std::invalid_argument("exact power: root must be positive");
}

ExactPower ExactPower::from_value(const Rational& t, const WeightSystem& ws) {
    if (t <= 0) throw std::invalid_argument("exact power: t must be positive");
    Rational root;
    if (ws.period() > std::numeric_limits<unsigned>::max() ||
        !exact_root(t, ws.period().convert_to<unsigned>(), root)) {
        throw std::invalid_argument("t = " + to_string(t) + " is not an exact " + ws.period().str() +
                                    "-th power of a rational");
    }
    return ExactPower(root, ws);
}

Rational ExactPower::value() const { return pow(Rational(1)); }

Rational ExactPower::pow(const Rational& lambda) const {
    const Rational e = lambda * Rational(period_);
    if (denominator(e) != 1) {
        throw std::invalid_argument("t^" + to_string(lambda) + " is not exact for this weight system");
    }
    const Integer k = numerator(e);
    const Integer mag = k < 0 ? Integer(-k) : k;
    if (mag > 100000) throw std::invalid_argument("exact power exponent too large");
    const auto ku = mag.convert_to<unsigned>();
    Rational r(boost::multiprecision::pow(numerator(root_), ku),
               boost::multiprecision::pow(denominator(root_), ku));
    return k < 0 ? Rational(1 / r) : r;
}

MixedPoly dilate(const MixedPoly& p, const ExactPower& t, const WeightSystem& ws) {
    MixedPoly r;
    for (const auto& [m, c] : p.terms()) r.add_term(m, c * GaussQ(t.pow(monomial_weight(m, ws))));
    return r;
}

}  // namespace wcalc
