#include "wcalc/models.hpp"

#include <boost/multiprecision/complex_adaptor.hpp>

#include <cmath>
#include <numbers>
#include <random>

namespace wcalc {

namespace {

Complex ipow(const Complex& x, unsigned e) {
    Complex r(1);
    Complex b = x;
    while (e > 0) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e > 0) b *= b;
    }
    return r;
}

bool finite(const Complex& c) {
    using boost::multiprecision::isfinite;
    return isfinite(c.real()) && isfinite(c.imag());
}

const Complex kI(Real(0), Real(1));

}  // namespace

bool NumericPoint::is_finite() const {
    if (!finite(w)) return false;
    for (const auto& c : z) {
        if (!finite(c)) return false;
    }
    return true;
}

Complex evaluate(const MixedPoly& f, const NumericPoint& pt) {
    if (f.num_z() > static_cast<int>(pt.z.size())) {
        throw std::invalid_argument("evaluate: point has fewer coordinates than the polynomial");
    }
    const Complex u(pt.w.real(), Real(0));
    const Complex wb = conj(pt.w);
    Complex sum(0);
    for (const auto& [m, c] : f.terms()) {
        Complex t = to_complex(c);
        if (m.w) t *= ipow(pt.w, m.w);
        if (m.wb) t *= ipow(wb, m.wb);
        if (m.u) t *= ipow(u, m.u);
        for (int k = 1; k <= m.num_z(); ++k) {
            const auto& zk = pt.z[static_cast<std::size_t>(k - 1)];
            if (m.z_exp(k)) t *= ipow(zk, m.z_exp(k));
            if (m.zb_exp(k)) t *= ipow(conj(zk), m.zb_exp(k));
        }
        sum += t;
    }
    return sum;
}

Complex evaluate(const MixedPoly& f, const std::vector<Complex>& z) {
    if (!f.is_z_only()) throw std::invalid_argument("evaluate: polynomial depends on w or u");
    return evaluate(f, NumericPoint{Complex(0), z});
}

NumericPoint cayley_forward(const NumericPoint& q, const WeightSystem& ws) {
    if (static_cast<int>(q.z.size()) != ws.size()) throw std::invalid_argument("cayley: dimension mismatch");
    const Complex a = Complex(1) + kI * q.w / Real(4);
    if (a == Complex(0)) throw std::domain_error("cayley: singular point 1 + i w*/4 = 0");
    const Complex log_a = log(a);
    NumericPoint g;
    g.w = (Complex(2) - a) / a;
    for (int j = 1; j <= ws.size(); ++j) {
        const Real d(ws.delta(j));
        g.z.push_back(q.z[static_cast<std::size_t>(j - 1)] * exp(Real(-2) * d * log_a));
    }
    return g;
}

NumericPoint cayley_inverse(const NumericPoint& g, const WeightSystem& ws) {
    if (static_cast<int>(g.z.size()) != ws.size()) throw std::invalid_argument("cayley: dimension mismatch");
    const Complex den = Complex(1) + g.w;
    if (den == Complex(0)) throw std::domain_error("cayley inverse: singular point w = -1");
    const Complex a = Complex(2) / den;  // 1 + i w*/4
    const Complex log_a = log(a);
    NumericPoint q;
    q.w = Complex(Real(0), Real(-4)) * (Complex(1) - g.w) / den;
    for (int j = 1; j <= ws.size(); ++j) {
        const Real d(ws.delta(j));
        q.z.push_back(g.z[static_cast<std::size_t>(j - 1)] * exp(Real(2) * d * log_a));
    }
    return q;
}

Real cayley_identity_residual(const NumericPoint& q, const MixedPoly& p, const WeightSystem& ws) {
    const NumericPoint g = cayley_forward(q, ws);
    const Complex a = Complex(1) + kI * q.w / Real(4);
    const Real lhs = norm(g.w) + evaluate(p, g.z).real() - Real(1);
    const Real rhs = (q.w.imag() + evaluate(p, q.z).real()) / norm(a);
    return lhs - rhs;
}

std::vector<NumericPoint> random_box_points(int n, int count, std::uint64_t seed, double w_radius,
                                            double z_radius) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto disc = [&](double radius) {
        const double r = radius * std::sqrt(unit(rng));
        const double t = 2.0 * std::numbers::pi * unit(rng);
        return Complex(Real(r * std::cos(t)), Real(r * std::sin(t)));
    };
    std::vector<NumericPoint> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int s = 0; s < count; ++s) {
        NumericPoint q;
        q.w = disc(w_radius);
        for (int j = 0; j < n; ++j) q.z.push_back(disc(z_radius));
        out.push_back(std::move(q));
    }
    return out;
}

CayleySweep cayley_sweep(const MixedPoly& p, const WeightSystem& ws, int count, std::uint64_t seed) {
    const auto wt = homogeneous_weight(p, ws);
    if (!p.is_z_only() || !check_reality(p) || !wt || *wt != 1 || !is_balanced(p, ws)) {
        throw std::invalid_argument("cayley check needs p real, balanced and homogeneous of weight 1");
    }
    if (p.num_z() > ws.size()) throw std::invalid_argument("cayley check: p uses more variables than the weights");
    CayleySweep out;
    for (const auto& q : random_box_points(ws.size(), count, seed)) {
        const Real res = abs(cayley_identity_residual(q, p, ws));
        const NumericPoint back = cayley_inverse(cayley_forward(q, ws), ws);
        Real trip = abs(back.w - q.w);
        for (std::size_t j = 0; j < q.z.size(); ++j) trip = std::max(trip, Real(abs(back.z[j] - q.z[j])));
        if (res > out.max_residual) out.max_residual = res;
        if (trip > out.max_round_trip) out.max_round_trip = trip;
        ++out.points;
    }
    return out;
}

}  // namespace wcalc
