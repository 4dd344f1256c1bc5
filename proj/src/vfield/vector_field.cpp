#include "wcalc/vfield.hpp"

#include <algorithm>

namespace wcalc {

HoloVectorField::HoloVectorField(std::vector<MixedPoly> q) : q_(std::move(q)) {
    if (q_.empty()) throw std::invalid_argument("vector field needs at least the d/dw component");
    for (std::size_t k = 0; k < q_.size(); ++k) {
        if (!q_[k].is_holomorphic()) {
            throw std::invalid_argument("vector field coefficient " + std::to_string(k) + " is not holomorphic");
        }
    }
}

HoloVectorField HoloVectorField::zero(int n) {
    if (n < 0) throw std::invalid_argument("vector field dimension must be nonnegative");
    return HoloVectorField(std::vector<MixedPoly>(static_cast<std::size_t>(n + 1)));
}

HoloVectorField HoloVectorField::coordinate(int n, int k) {
    if (k < 0 || k > n) throw std::out_of_range("coordinate field index out of range");
    std::vector<MixedPoly> q(static_cast<std::size_t>(n + 1));
    q[static_cast<std::size_t>(k)] = MixedPoly(1);
    return HoloVectorField(std::move(q));
}

bool HoloVectorField::is_zero() const {
    return std::all_of(q_.begin(), q_.end(), [](const MixedPoly& p) { return p.is_zero(); });
}

HoloVectorField& HoloVectorField::operator+=(const HoloVectorField& o) {
    if (o.q_.size() > q_.size()) q_.resize(o.q_.size());
    for (std::size_t k = 0; k < o.q_.size(); ++k) q_[k] += o.q_[k];
    return *this;
}

HoloVectorField& HoloVectorField::operator-=(const HoloVectorField& o) {
    if (o.q_.size() > q_.size()) q_.resize(o.q_.size());
    for (std::size_t k = 0; k < o.q_.size(); ++k) q_[k] -= o.q_[k];
    return *this;
}

HoloVectorField& HoloVectorField::operator*=(const GaussQ& c) {
    for (auto& p : q_) p *= c;
    return *this;
}

Rational monomial_field_weight(const Monomial& m, int k, const WeightSystem& ws) {
    return monomial_weight(m, ws) - ws.delta(k);
}

std::map<Rational, HoloVectorField> field_graded_parts(const HoloVectorField& h, const WeightSystem& ws) {
    if (h.n() > ws.size()) throw std::invalid_argument("vector field has more variables than the weight system");
    std::map<Rational, HoloVectorField> parts;
    for (int k = 0; k <= h.n(); ++k) {
        for (const auto& [m, c] : h[k].terms()) {
            auto [it, inserted] = parts.try_emplace(monomial_field_weight(m, k, ws), HoloVectorField::zero(h.n()));
            std::vector<MixedPoly> q(static_cast<std::size_t>(h.n() + 1));
            q[static_cast<std::size_t>(k)] = MixedPoly::term(m, c);
            it->second += HoloVectorField(std::move(q));
        }
    }
    return parts;
}

std::optional<Rational> field_weight(const HoloVectorField& h, const WeightSystem& ws) {
    const auto parts = field_graded_parts(h, ws);
    if (parts.empty()) return std::nullopt;
    return parts.begin()->first;
}

bool is_homogeneous(const HoloVectorField& h, const WeightSystem& ws, const Rational& mu) {
    const auto parts = field_graded_parts(h, ws);
    return parts.empty() || (parts.size() == 1 && parts.begin()->first == mu);
}

MixedPoly apply(const HoloVectorField& h, const MixedPoly& f) {
    MixedPoly r;
    for (int k = 0; k <= h.n(); ++k) {
        if (h[k].is_zero()) continue;
        MixedPoly d = diff(f, k);
        if (!d.is_zero()) r += h[k] * d;
    }
    return r;
}

HoloVectorField commutator(const HoloVectorField& x, const HoloVectorField& y) {
    const int n = std::max(x.n(), y.n());
    std::vector<MixedPoly> q(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
        MixedPoly yk = k <= y.n() ? y[k] : MixedPoly();
        MixedPoly xk = k <= x.n() ? x[k] : MixedPoly();
        q[static_cast<std::size_t>(k)] = apply(x, yk) - apply(y, xk);
    }
    return HoloVectorField(std::move(q));
}

namespace {

// -(i/2) q_0 + sum_j q_j dp/dz_j, before restriction to the boundary.
MixedPoly tangency_expression(const MixedPoly& p, const HoloVectorField& h) {
    MixedPoly e = GaussQ(Rational(0), Rational(-1, 2)) * h[0];
    for (int j = 1; j <= h.n(); ++j) {
        if (!h[j].is_zero()) e += h[j] * diff(p, j);
    }
    return e;
}

void require_real_z_poly(const MixedPoly& p) {
    if (!p.is_z_only()) throw std::invalid_argument("defining polynomial must be in z, zb only");
    if (!check_reality(p)) throw std::invalid_argument("defining polynomial must be real");
}

}  // namespace

TangencyReport tangency_residual(const MixedPoly& p, const HoloVectorField& h) {
    require_real_z_poly(p);
    TangencyReport rep;
    rep.residual = real_part(substitute_boundary(tangency_expression(p, h), p));
    rep.is_tangent = rep.residual.is_zero();
    if (!rep.is_tangent) rep.witness = rep.residual.terms().begin()->first;
    return rep;
}

HoloVectorField MonomialField::field(int n, const GaussQ& c) const {
    std::vector<MixedPoly> q(static_cast<std::size_t>(n + 1));
    q.at(static_cast<std::size_t>(component)) = MixedPoly::term(monomial, c);
    return HoloVectorField(std::move(q));
}

std::vector<MonomialField> monomial_fields_of_weight(const WeightSystem& ws, const Rational& mu,
                                                     bool include_w) {
    std::vector<MonomialField> out;
    for (int k = include_w ? 0 : 1; k <= ws.size(); ++k) {
        for (auto& m : holomorphic_monomials_of_weight(ws, mu + ws.delta(k), include_w)) {
            out.push_back({k, std::move(m)});
        }
    }
    return out;
}

namespace {

// Scales v so that its first nonzero entry becomes 1.
template <class Scalar>
void normalize_leading(ExactVector<Scalar>& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!is_zero(v(i))) {
            const Scalar lead = v(i);
            for (Eigen::Index j = 0; j < v.size(); ++j) v(j) = v(j) / lead;
            return;
        }
    }
}

HoloVectorField combine(const std::vector<MonomialField>& fields, const std::vector<GaussQ>& coeffs, int n) {
    HoloVectorField h = HoloVectorField::zero(n);
    for (std::size_t m = 0; m < fields.size(); ++m) {
        if (!coeffs[m].is_zero()) h += fields[m].field(n, coeffs[m]);
    }
    return h;
}

}  // namespace

FieldBasis tangent_field_space(const MixedPoly& p, const WeightSystem& ws, const Rational& mu) {
    require_real_z_poly(p);
    if (p.num_z() > ws.size()) throw std::invalid_argument("polynomial references a variable outside the weight system");
    const auto wt = homogeneous_weight(p, ws);
    if (!wt || *wt != 1) throw std::invalid_argument("tangent field space needs p homogeneous of weight 1");

    const int n = ws.size();
    FieldBasis out{mu, {}};
    const auto fields = monomial_fields_of_weight(ws, mu, true);
    if (fields.empty()) return out;

    // Residual of c F_m is (c E_m + conj(c) conj(E_m)) / 2 with E_m on the boundary.
    std::vector<MixedPoly> e;
    std::vector<MixedPoly> e_conj;
    std::map<Monomial, std::size_t> rows;
    for (const auto& f : fields) {
        e.push_back(substitute_boundary(tangency_expression(p, f.field(n)), p));
        e_conj.push_back(e.back().conj());
        for (const auto& [m, c] : e.back().terms()) rows.try_emplace(m, 0);
        for (const auto& [m, c] : e_conj.back().terms()) rows.try_emplace(m, 0);
    }
    std::vector<LinearConstraint> system;
    system.reserve(rows.size());
    const GaussQ half(Rational(1, 2));
    for (const auto& [mono, unused] : rows) {
        LinearConstraint c;
        for (std::size_t k = 0; k < fields.size(); ++k) {
            const GaussQ a = e[k].coeff(mono);
            const GaussQ b = e_conj[k].coeff(mono);
            if (!a.is_zero()) c.add(a * half, static_cast<int>(k), false);
            if (!b.is_zero()) c.add(b * half, static_cast<int>(k), true);
        }
        if (!c.terms.empty()) system.push_back(std::move(c));
    }
    const RealMatrix m = real_linearize(system, static_cast<int>(fields.size()));
    for (auto v : nullspace(m)) {
        normalize_leading(v);
        HoloVectorField h = combine(fields, complex_from_real(v), n);
        if (!tangency_residual(p, h).is_tangent) {
            throw std::logic_error("tangent_field_space: basis element failed re-verification");
        }
        out.basis.push_back(std::move(h));
    }
    return out;
}

std::vector<FieldBasis> annihilator_space(const MixedPoly& phi, const WeightSystem& ws,
                                          const Rational& weight_bound) {
    if (!phi.is_holomorphic() || phi.has_w()) {
        throw std::invalid_argument("annihilator check needs a holomorphic polynomial in z");
    }
    if (phi.num_z() > ws.size()) throw std::invalid_argument("polynomial references a variable outside the weight system");

    const int n = ws.size();
    const Integer& period = ws.period();
    std::vector<FieldBasis> out;
    // The lowest field weight is -max delta_k >= -1/2.
    const Rational top = weight_bound * Rational(period);
    Integer hi = numerator(top) / denominator(top);
    if (top < 0 && denominator(top) != 1) hi -= 1;  // floor
    for (Integer s = -period; s <= hi; ++s) {
        const Rational mu(s, period);
        const auto fields = monomial_fields_of_weight(ws, mu, false);
        if (fields.empty()) continue;

        std::vector<MixedPoly> images;
        std::map<Monomial, Eigen::Index> rows;
        for (const auto& f : fields) {
            images.push_back(MixedPoly::term(f.monomial) * diff(phi, f.component));
            for (const auto& [m, c] : images.back().terms()) rows.try_emplace(m, 0);
        }
        Eigen::Index r = 0;
        for (auto& [m, idx] : rows) idx = r++;
        ComplexMatrix a = ComplexMatrix::Constant(r, static_cast<Eigen::Index>(fields.size()), GaussQ());
        for (std::size_t k = 0; k < fields.size(); ++k) {
            for (const auto& [m, c] : images[k].terms()) a(rows.at(m), static_cast<Eigen::Index>(k)) = c;
        }
        FieldBasis fb{mu, {}};
        for (auto v : nullspace(a)) {
            normalize_leading(v);
            std::vector<GaussQ> coeffs(v.data(), v.data() + v.size());
            HoloVectorField h = combine(fields, coeffs, n);
            if (!apply(h, phi).is_zero()) {
                throw std::logic_error("annihilator_space: basis element failed re-verification");
            }
            fb.basis.push_back(h);
            fb.basis.push_back(GaussQ::i() * h);
        }
        if (!fb.basis.empty()) out.push_back(std::move(fb));
    }
    return out;
}

HoloVectorField dilation_field(const WeightSystem& ws) {
    const int n = ws.size();
    std::vector<MixedPoly> q(static_cast<std::size_t>(n + 1));
    q[0] = MixedPoly::w();
    for (int j = 1; j <= n; ++j) q[static_cast<std::size_t>(j)] = GaussQ(ws.delta(j)) * MixedPoly::z(j);
    return HoloVectorField(std::move(q));
}

HoloVectorField model_field_half(const WeightSystem& ws, const Rational& lambda, int index, HalfFieldForm form) {
    const int n = ws.size();
    if (index < 1 || index > n) throw std::out_of_range("model_field_half: index out of range");
    if (ws.delta(index) != Rational(1, 2)) {
        throw std::invalid_argument("model_field_half needs delta = 1/2 for the distinguished variable");
    }
    const Rational factor = form == HalfFieldForm::Verified ? Rational(4) : Rational(2);
    const MixedPoly z1 = MixedPoly::z(index);
    const GaussQ minus_i(Rational(0), Rational(-1));
    std::vector<MixedPoly> q(static_cast<std::size_t>(n + 1));
    q[0] = GaussQ(Rational(0), Rational(-2)) * MixedPoly::w() * z1;
    q[static_cast<std::size_t>(index)] = MixedPoly::w();
    for (int j = 1; j <= n; ++j) {
        q[static_cast<std::size_t>(j)] += minus_i * GaussQ(factor * ws.delta(j)) * z1 * MixedPoly::z(j);
    }
    HoloVectorField h = GaussQ(lambda) * HoloVectorField(std::move(q));
    if (form == HalfFieldForm::Verified) {
        MixedPoly p;
        for (int j = 1; j <= n; ++j) p += pow(MixedPoly::z(j) * MixedPoly::zb(j), static_cast<unsigned>(ws.order(j) / 2));
        if (ws.has_integral_m() && !tangency_residual(p, h).is_tangent) {
            throw std::logic_error("model_field_half: constructed field is not tangent to sum |z_j|^(2 m_j)");
        }
    }
    return h;
}

HoloVectorField model_field_one(const WeightSystem& ws, const Rational& lambda) {
    const int n = ws.size();
    std::vector<MixedPoly> q(static_cast<std::size_t>(n + 1));
    q[0] = MixedPoly::w() * MixedPoly::w();
    for (int j = 1; j <= n; ++j) {
        q[static_cast<std::size_t>(j)] = GaussQ(2 * ws.delta(j)) * MixedPoly::w() * MixedPoly::z(j);
    }
    return GaussQ(lambda) * HoloVectorField(std::move(q));
}

}  // namespace wcalc
