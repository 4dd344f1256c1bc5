#include "wcalc/models.hpp"

#include <algorithm>
#include <random>

namespace wcalc {

namespace {

void require_real_z(const MixedPoly& f, const char* what) {
    if (!f.is_z_only() || !check_reality(f)) {
        throw std::invalid_argument(std::string(what) + ": polynomial must be real and in z, zb only");
    }
}

}  // namespace

DomainModel::DomainModel(Kind k, MixedPoly poly, WeightSystem weights, std::optional<Rational> b)
    : kind(k), p(std::move(poly)), ws(std::move(weights)) {
    require_real_z(p, "domain model");
    if (p.num_z() > ws.size()) throw std::invalid_argument("domain model: p uses more variables than the weights");
    switch (kind) {
        case Kind::BoundedG:
            bound = b.value_or(Rational(1));
            break;
        case Kind::UnboundedD:
            bound = b.value_or(Rational(0));
            break;
        case Kind::HomogeneousModel: {
            const auto wt = homogeneous_weight(p, ws);
            if (!wt || *wt != 1) throw std::invalid_argument("homogeneous model: p must have weight 1");
            if (b && *b != 0) throw std::invalid_argument("homogeneous model: bound is always 0");
            bound = 0;
            break;
        }
    }
}

Real DomainModel::defining_value(const NumericPoint& pt) const {
    const Real pz = evaluate(p, pt.z).real();
    if (kind == Kind::BoundedG) return norm(pt.w) + pz;
    return pt.w.imag() + pz;
}

bool DomainModel::contains(const NumericPoint& pt) const { return defining_value(pt) < Real(bound); }

std::string to_string(DomainModel::Kind kind) {
    switch (kind) {
        case DomainModel::Kind::BoundedG: return "bounded-G";
        case DomainModel::Kind::UnboundedD: return "unbounded-D";
        case DomainModel::Kind::HomogeneousModel: return "homogeneous-model";
    }
    return "?";
}

bool t2_invariance_check(const DomainModel& dm) {
    if (dm.kind != DomainModel::Kind::BoundedG) {
        throw std::invalid_argument("T^2 invariance is checked on the bounded model");
    }
    return is_balanced(dm.p, dm.ws);
}

MixedPoly chi_t_rescale(const MixedPoly& f, const ExactPower& t, const Rational& mu, const WeightSystem& ws) {
    return dilate(f, t, ws) * GaussQ(t.pow(-mu));
}

std::map<Monomial, Rational> rescale_exponents(const MixedPoly& f, const Rational& mu, const WeightSystem& ws) {
    std::map<Monomial, Rational> out;
    for (const auto& [m, c] : f.terms()) out.emplace(m, monomial_weight(m, ws) - mu);
    return out;
}

std::string to_string(WeightAssignmentReport::Verdict v) {
    switch (v) {
        case WeightAssignmentReport::Verdict::Admissible: return "admissible";
        case WeightAssignmentReport::Verdict::LowWeightTerm: return "term of weight below 1";
        case WeightAssignmentReport::Verdict::NoWeightOnePart: return "no admissible weight-1 part";
        case WeightAssignmentReport::Verdict::InfiniteAxisOrder: return "infinite order along an axis";
    }
    return "?";
}

WeightAssignmentReport homogeneous_model_extract(const MixedPoly& f, const WeightSystem& ws) {
    require_real_z(f, "model extraction");
    if (f.num_z() > ws.size()) throw std::invalid_argument("model extraction: f uses more variables than the weights");
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() == 0) throw std::invalid_argument("model extraction: f(0) must vanish");
        if (m.degree() == 1) throw std::invalid_argument("model extraction: f has a linear term");
    }
    WeightAssignmentReport rep;
    rep.axis_orders = ws.orders();
    rep.ws = ws;
    for (const auto& [m, c] : f.terms()) {
        const Rational wt = monomial_weight(m, ws);
        if (wt == 1) {
            rep.p.add_term(m, c);
        } else if (wt < 1 && (!rep.violating_weight || wt < *rep.violating_weight)) {
            rep.violating = m;
            rep.violating_weight = wt;
        }
    }
    if (rep.violating) {
        rep.verdict = WeightAssignmentReport::Verdict::LowWeightTerm;
    } else if (rep.p.is_zero()) {
        rep.verdict = WeightAssignmentReport::Verdict::NoWeightOnePart;
    } else {
        rep.verdict = WeightAssignmentReport::Verdict::Admissible;
    }
    return rep;
}

std::optional<unsigned> order_along_direction(const MixedPoly& f, const std::vector<GaussQ>& direction) {
    require_real_z(f, "order along direction");
    if (std::all_of(direction.begin(), direction.end(), [](const GaussQ& t) { return t.is_zero(); })) {
        throw std::invalid_argument("order along direction: T must be nonzero");
    }
    if (f.num_z() > static_cast<int>(direction.size())) {
        throw std::invalid_argument("order along direction: T has fewer entries than f has variables");
    }
    Substitution s;
    for (int k = 1; k <= static_cast<int>(direction.size()); ++k) {
        const GaussQ& t = direction[static_cast<std::size_t>(k - 1)];
        s.z.emplace(k, t * MixedPoly::z(1));
        s.zb.emplace(k, t.conj() * MixedPoly::zb(1));
    }
    const MixedPoly r = substitute(f, s);
    if (r.is_zero()) return std::nullopt;
    return r.terms().begin()->first.degree();  // terms are ordered by degree first
}

WeightAssignmentReport assign_weights_adapted(const MixedPoly& f, int n) {
    require_real_z(f, "weight assignment");
    if (n == 0) n = f.num_z();
    if (n < f.num_z()) throw std::invalid_argument("weight assignment: n is smaller than the number of variables");
    if (n == 0) throw std::invalid_argument("weight assignment: no variables");
    WeightAssignmentReport rep;
    std::vector<int> orders;
    for (int s = 1; s <= n; ++s) {
        std::vector<GaussQ> e(static_cast<std::size_t>(n));
        e[static_cast<std::size_t>(s - 1)] = GaussQ(1);
        const auto ord = order_along_direction(f, e);
        if (!ord) {
            rep.verdict = WeightAssignmentReport::Verdict::InfiniteAxisOrder;
            rep.infinite_axis = s;
            rep.axis_orders = orders;
            return rep;
        }
        if (*ord < 2) throw std::invalid_argument("weight assignment: f has a linear term");
        if (*ord % 2 != 0) {
            rep.warnings.push_back("odd order " + std::to_string(*ord) + " along axis " + std::to_string(s) +
                                   "; f cannot be convex there");
        }
        orders.push_back(static_cast<int>(*ord));
    }
    auto out = homogeneous_model_extract(f, WeightSystem::from_axis_orders(orders));
    out.warnings = std::move(rep.warnings);
    return out;
}

std::string to_string(Verdict3 v) {
    switch (v) {
        case Verdict3::Supported: return "supported";
        case Verdict3::Refuted: return "refuted";
        case Verdict3::Inconclusive: return "inconclusive";
    }
    return "?";
}

ZeroSetReport zero_set_checks(const MixedPoly& p, const WeightSystem& ws, int samples, std::uint64_t seed) {
    require_real_z(p, "zero-set checks");
    const auto wt = homogeneous_weight(p, ws);
    if (!wt || *wt != 1) throw std::invalid_argument("zero-set checks: p must be homogeneous of weight 1");
    if (samples < 1) throw std::invalid_argument("zero-set checks: need at least one sample");
    const int n = ws.size();

    ZeroSetReport rep;
    for (int j = 1; j <= n; ++j) {
        Substitution s;
        for (int l = 1; l <= n; ++l) {
            if (l == j) continue;
            s.z.emplace(l, MixedPoly());
            s.zb.emplace(l, MixedPoly());
        }
        if (substitute(p, s).is_zero()) rep.vanishing_axes.push_back(j);
    }
    rep.coordinate_lines = rep.vanishing_axes.empty() ? Verdict3::Supported : Verdict3::Refuted;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    bool first = true;
    for (int s = 0; s < samples; ++s) {
        std::vector<Complex> z;
        Real rho(0);
        for (int j = 1; j <= n; ++j) {
            z.emplace_back(Real(gauss(rng)), Real(gauss(rng)));
            rho += pow(abs(z.back()), ws.order(j));
        }
        if (rho == 0) continue;
        // z_j -> rho^{-delta_j} z_j lands on the weighted unit sphere.
        for (int j = 1; j <= n; ++j) z[static_cast<std::size_t>(j - 1)] *= pow(rho, -Real(ws.delta(j)));
        const Real v = evaluate(p, z).real();
        if (first || v < rep.min_sampled) {
            rep.min_sampled = v;
            rep.min_point = z;
            first = false;
        }
    }
    if (rep.min_sampled > Real(kPositivityTolerance)) {
        rep.positivity = Verdict3::Supported;
    } else if (rep.min_sampled < Real(-kPositivityTolerance)) {
        rep.positivity = Verdict3::Refuted;
    } else {
        rep.positivity = Verdict3::Inconclusive;
    }

    if (rep.coordinate_lines == Verdict3::Refuted) {
        rep.no_complex_curve = Verdict3::Refuted;
    } else if (rep.positivity == Verdict3::Supported) {
        rep.no_complex_curve = Verdict3::Supported;
    } else {
        rep.no_complex_curve = Verdict3::Inconclusive;
    }
    return rep;
}

}  // namespace wcalc
