#include "wcalc/vfield.hpp"

namespace wcalc {

namespace {

constexpr int kMaxFlowIterations = 256;

// Sets every z_l, zb_l with l != j to zero.
MixedPoly restrict_to_axis(const MixedPoly& f, int j, int n) {
    Substitution s;
    for (int l = 1; l <= n; ++l) {
        if (l == j) continue;
        s.z.emplace(l, MixedPoly());
        s.zb.emplace(l, MixedPoly());
    }
    return substitute(f, s);
}

// (z_j - zb_j) / 2i, the imaginary part of z_j.
MixedPoly im_axis(int j) {
    return (MixedPoly::z(j) - MixedPoly::zb(j)) * GaussQ(Rational(0), Rational(-1, 2));
}

// z_j / 2i.
MixedPoly half_z(int j) { return MixedPoly::z(j) * GaussQ(Rational(0), Rational(-1, 2)); }

GaussQ two_i_pow(unsigned e) {
    GaussQ r(1);
    for (unsigned k = 0; k < e; ++k) r *= GaussQ(Rational(0), Rational(2));
    return r;
}

// Exponent m_k with delta_k + m_k delta_j = 1, when it is a positive integer.
std::optional<unsigned> coupling_exponent(const WeightSystem& ws, int k, int j) {
    const Rational e = (Rational(1) - ws.delta(k)) / ws.delta(j);
    if (denominator(e) != 1 || e <= 0) return std::nullopt;
    return numerator(e).convert_to<unsigned>();
}

// Part of f that is linear in z_k, free of zb_k and of every variable other
// than z_j, zb_j.
MixedPoly linear_in(const MixedPoly& f, int k, int j) {
    MixedPoly r;
    for (const auto& [m, c] : f.terms()) {
        if (m.z_exp(k) != 1 || m.zb_exp(k) != 0) continue;
        bool ok = true;
        for (int l = 1; l <= m.num_z() && ok; ++l) {
            if (l == k || l == j) continue;
            ok = m.z_exp(l) == 0 && m.zb_exp(l) == 0;
        }
        if (ok) r.add_term(m, c);
    }
    return r;
}

std::vector<AxisCoupling> read_couplings(const MixedPoly& f, const WeightSystem& ws, int j, bool& profile_ok) {
    std::vector<AxisCoupling> out;
    profile_ok = true;
    const MixedPoly y = im_axis(j);
    for (int k = 1; k <= ws.size(); ++k) {
        if (k == j) continue;
        const MixedPoly lin = linear_in(f, k, j);
        const auto mk = coupling_exponent(ws, k, j);
        if (!mk) {
            if (!lin.is_zero()) profile_ok = false;
            continue;
        }
        Monomial probe;
        probe.set_z(k, 1);
        probe.set_z(j, *mk);
        const GaussQ alpha = f.coeff(probe) * two_i_pow(*mk);
        if (lin != alpha * MixedPoly::z(k) * pow(y, *mk)) profile_ok = false;
        if (!alpha.is_zero()) out.push_back({k, static_cast<int>(*mk), alpha});
    }
    return out;
}

}  // namespace

StraightenResult straighten_negative_field(const MixedPoly& p, const HoloVectorField& q_in,
                                           const WeightSystem& ws) {
    const int n = ws.size();
    if (q_in.n() > n) throw std::invalid_argument("vector field has more variables than the weight system");
    if (p.num_z() > n) throw std::invalid_argument("polynomial references a variable outside the weight system");
    HoloVectorField q = HoloVectorField::zero(n) + q_in;

    const auto pw = homogeneous_weight(p, ws);
    if (!p.is_z_only() || !check_reality(p) || !pw || *pw != 1) {
        throw std::invalid_argument("straighten needs p real, in z only, homogeneous of weight 1");
    }
    const auto mu = field_weight(q, ws);
    if (!mu) throw std::invalid_argument("straighten: the zero field has no weight");
    if (!is_homogeneous(q, ws, *mu)) throw std::invalid_argument("straighten: field is not weighted-homogeneous");
    if (*mu == -1) throw std::invalid_argument("straighten: weight -1 fields are real translations in w");
    bool weight_ok = false;
    for (int k = 1; k <= n; ++k) weight_ok = weight_ok || ws.delta(k) == -*mu;
    if (!weight_ok) throw std::invalid_argument("straighten: weight " + to_string(*mu) + " is not -delta_j");
    if (!tangency_residual(p, q).is_tangent) throw std::invalid_argument("straighten: field is not tangent");

    int j = 0;
    for (int k = 1; k <= n && j == 0; ++k) {
        const auto& qk = q[k];
        if (!qk.is_zero() && qk.terms().size() == 1 && qk.terms().begin()->first == Monomial{}) j = k;
    }
    if (j == 0) throw std::invalid_argument("straighten: no z-coefficient is a nonzero constant");

    StraightenResult r;
    r.weight = *mu;
    r.axis = j;
    r.exponent = ws.order(j);
    const auto m = static_cast<unsigned>(r.exponent);

    // Flow of the z-part of Q for time z~_j, started on {z~_j = 0}: a fixed
    // point of z(t) = z(0) + int_0^t Q_z(z(s)) ds.
    std::vector<MixedPoly> start(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) start[static_cast<std::size_t>(k - 1)] = k == j ? MixedPoly() : MixedPoly::z(k);
    std::vector<MixedPoly> cur = start;
    bool converged = false;
    for (int it = 0; it < kMaxFlowIterations && !converged; ++it) {
        Substitution s;
        for (int k = 1; k <= n; ++k) s.z.emplace(k, cur[static_cast<std::size_t>(k - 1)]);
        std::vector<MixedPoly> next(static_cast<std::size_t>(n));
        for (int k = 1; k <= n; ++k) {
            const auto idx = static_cast<std::size_t>(k - 1);
            next[idx] = start[idx] + integrate_z(substitute(q[k], s), j);
        }
        converged = next == cur;
        cur = std::move(next);
    }
    if (!converged) throw std::logic_error("straighten: flow iteration did not terminate");
    r.change = cur;

    Substitution to_new;
    for (int k = 1; k <= n; ++k) to_new.z.emplace(k, r.change[static_cast<std::size_t>(k - 1)]);
    r.s0 = substitute(q[0], to_new);
    r.s = integrate_z(r.s0, j);
    r.p_tilde = weighted_substitution(p, r.change, ws);
    r.p_hat = r.p_tilde + imag_part(r.s);
    r.field = HoloVectorField::coordinate(n, j);

    r.independent_of_re_axis = (diff(r.p_hat, j) + diff_bar(r.p_hat, j)).is_zero();

    Monomial zjm;
    zjm.set_z(j, m);
    const GaussQ c = r.p_hat.coeff(zjm) * two_i_pow(m);
    const MixedPoly y = im_axis(j);
    const MixedPoly ym = pow(y, m);
    const MixedPoly hm = pow(half_z(j), m);
    const bool c_real = c.is_real();
    r.c = c.re();
    r.axis_profile_ok = c_real && restrict_to_axis(r.p_hat, j, n) == GaussQ(r.c) * ym &&
                        restrict_to_axis(r.p_tilde, j, n) == GaussQ(r.c) * (ym - hm - hm.conj());
    r.s0_profile_ok =
        c_real && restrict_to_axis(r.s0, j, n) == GaussQ(Rational(m) * r.c) * pow(half_z(j), m - 1);

    bool lin_ok = false;
    r.couplings = read_couplings(r.p_hat, ws, j, lin_ok);
    bool deriv_ok = true;
    for (int k = 1; k <= n; ++k) {
        if (k == j) continue;
        MixedPoly expect;
        for (const auto& cp : r.couplings) {
            if (cp.index == k) {
                const auto e = static_cast<unsigned>(cp.exponent);
                expect = cp.alpha * (pow(y, e) - pow(half_z(j), e));
            }
        }
        if (restrict_to_axis(diff(r.p_tilde, k), j, n) != expect) deriv_ok = false;
    }
    r.coupling_profile_ok = lin_ok && deriv_ok;

    // Couplings with m_k = m - 1 are removed by z_j -> z_j + beta z_k.
    r.p_final = r.p_hat;
    if (r.c != 0) {
        for (const auto& cp : r.couplings) {
            if (cp.exponent != r.exponent - 1) continue;
            const GaussQ beta = GaussQ(Rational(0), Rational(-2)) * cp.alpha / GaussQ(Rational(m) * r.c);
            std::vector<MixedPoly> lin(static_cast<std::size_t>(n));
            for (int k = 1; k <= n; ++k) lin[static_cast<std::size_t>(k - 1)] = MixedPoly::z(k);
            lin[static_cast<std::size_t>(j - 1)] += beta * MixedPoly::z(cp.index);
            r.p_final = weighted_substitution(r.p_final, lin, ws);
            r.eliminations.emplace_back(cp.index, beta);
        }
    }
    bool final_lin_ok = false;
    const auto surviving = read_couplings(r.p_final, ws, j, final_lin_ok);
    r.exponent_bounds_ok = final_lin_ok;
    for (const auto& cp : surviving) {
        if (2 * cp.exponent < r.exponent || cp.exponent > r.exponent - 2) r.exponent_bounds_ok = false;
    }
    return r;
}

}  // namespace wcalc
