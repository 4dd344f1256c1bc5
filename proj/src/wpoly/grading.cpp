#include "wcalc/wpoly.hpp"

#include <functional>

namespace wcalc {

WeightSystem::WeightSystem(std::vector<int> m) {
    for (int mj : m) {
        if (mj < 1) throw std::invalid_argument("weight system: every m_j must be a positive integer");
        orders_.push_back(2 * mj);
    }
    finish();
}

WeightSystem WeightSystem::from_axis_orders(std::vector<int> orders) {
    WeightSystem ws;
    for (int d : orders) {
        if (d < 2) throw std::invalid_argument("weight system: axis orders must be >= 2");
    }
    ws.orders_ = std::move(orders);
    ws.finish();
    return ws;
}

void WeightSystem::finish() {
    deltas_.clear();
    deltas_.emplace_back(1);
    period_ = 1;
    for (int d : orders_) {
        deltas_.emplace_back(1, d);
        period_ = lcm(period_, Integer(d));
    }
}

const Rational& WeightSystem::delta(int k) const {
    if (k < 0 || k > size()) throw std::out_of_range("weight system: variable index out of range");
    return deltas_[static_cast<std::size_t>(k)];
}

int WeightSystem::order(int j) const {
    if (j < 1 || j > size()) throw std::out_of_range("weight system: variable index out of range");
    return orders_[static_cast<std::size_t>(j - 1)];
}

Rational WeightSystem::m(int j) const { return Rational(order(j), 2); }

bool WeightSystem::has_integral_m() const {
    for (int d : orders_) {
        if (d % 2 != 0) return false;
    }
    return true;
}

Rational monomial_weight(const Monomial& mono, const WeightSystem& ws) {
    if (mono.num_z() > ws.size()) {
        throw std::invalid_argument("monomial references a variable outside the weight system");
    }
    Rational wt(mono.w + mono.wb + mono.u);
    for (int k = 1; k <= mono.num_z(); ++k) {
        const unsigned e = mono.z_exp(k) + mono.zb_exp(k);
        if (e != 0) wt += Rational(e) * ws.delta(k);
    }
    return wt;
}

Rational signature_of(const Monomial& mono, const WeightSystem& ws) {
    if (mono.has_w() || mono.u != 0) {
        throw std::invalid_argument("signature is defined for monomials in z and zb only");
    }
    if (mono.num_z() > ws.size()) {
        throw std::invalid_argument("monomial references a variable outside the weight system");
    }
    Rational s(0);
    for (int k = 1; k <= mono.num_z(); ++k) {
        const int e = static_cast<int>(mono.z_exp(k)) - static_cast<int>(mono.zb_exp(k));
        if (e != 0) s += Rational(e) * ws.delta(k);
    }
    return s;
}

std::map<Rational, MixedPoly> weight_graded_parts(const MixedPoly& f, const WeightSystem& ws) {
    std::map<Rational, MixedPoly> parts;
    for (const auto& [m, c] : f.terms()) parts[monomial_weight(m, ws)].add_term(m, c);
    return parts;
}

std::optional<Rational> homogeneous_weight(const MixedPoly& f, const WeightSystem& ws) {
    std::optional<Rational> wt;
    for (const auto& [m, c] : f.terms()) {
        Rational mw = monomial_weight(m, ws);
        if (wt && *wt != mw) return std::nullopt;
        wt = std::move(mw);
    }
    return wt;
}

bool check_reality(const MixedPoly& p) { return p.conj() == p; }

bool check_no_pure_terms(const MixedPoly& p) {
    for (const auto& [m, c] : p.terms()) {
        if (m.z.empty() || m.zb.empty()) return false;
    }
    return true;
}

std::vector<Rational> SignatureDecomposition::signatures() const {
    std::vector<Rational> out;
    for (const auto& [nu, part] : parts_) out.push_back(nu);
    return out;
}

MixedPoly SignatureDecomposition::part(const Rational& nu) const {
    auto it = parts_.find(nu);
    return it == parts_.end() ? MixedPoly() : it->second;
}

MixedPoly SignatureDecomposition::reconstruct() const {
    MixedPoly sum;
    for (const auto& [nu, part] : parts_) sum += part;
    return sum;
}

SignatureDecomposition signature_decompose(const MixedPoly& p, const WeightSystem& ws) {
    if (!p.is_z_only()) throw std::invalid_argument("signature decomposition needs a polynomial in z, zb");
    if (!check_reality(p)) throw std::invalid_argument("signature decomposition needs a real polynomial");
    std::map<Rational, MixedPoly> parts;
    for (const auto& [m, c] : p.terms()) parts[signature_of(m, ws)].add_term(m, c);
    return SignatureDecomposition(std::move(parts));
}

MixedPoly balanced_part(const MixedPoly& p, const WeightSystem& ws) {
    return signature_decompose(p, ws).part(Rational(0));
}

bool is_balanced(const MixedPoly& p, const WeightSystem& ws) {
    const auto d = signature_decompose(p, ws);
    return d.parts().empty() || (d.parts().size() == 1 && d.parts().begin()->first == 0);
}

std::map<std::vector<unsigned>, MixedPoly> extract_coefficient_functions(const MixedPoly& part,
                                                                          const WeightSystem& ws) {
    std::map<std::vector<unsigned>, MixedPoly> out;
    std::optional<Rational> nu;
    for (const auto& [m, c] : part.terms()) {
        Rational s = signature_of(m, ws);
        if (nu && *nu != s) throw std::invalid_argument("input mixes several signatures");
        nu = std::move(s);
        Monomial hol = m;
        hol.zb.clear();
        out[m.zb].add_term(hol, c);
    }
    return out;
}

MixedPoly substitute_boundary(const MixedPoly& q, const MixedPoly& p) {
    const MixedPoly ip = GaussQ::i() * p;
    Substitution s;
    s.w = MixedPoly::u() - ip;
    s.wb = MixedPoly::u() + ip;
    return substitute(q, s);
}

namespace {

// Enumerate exponent vectors e over variables with integer weights `wts`
// (scaled by the period) summing exactly to `target`.
void enumerate_exponents(const std::vector<Integer>& wts, std::size_t idx, const Integer& target,
                         std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
    if (idx == wts.size()) {
        if (target == 0) out.push_back(cur);
        return;
    }
    const Integer& w = wts[idx];
    for (unsigned e = 0; Integer(e) * w <= target; ++e) {
        cur[idx] = e;
        enumerate_exponents(wts, idx + 1, target - Integer(e) * w, cur, out);
    }
    cur[idx] = 0;
}

bool scaled_target(const Rational& weight, const Integer& period, Integer& target) {
    const Rational t = weight * Rational(period);
    if (denominator(t) != 1 || t < 0) return false;
    target = numerator(t);
    return true;
}

}  // namespace

std::vector<Monomial> holomorphic_monomials_of_weight(const WeightSystem& ws, const Rational& weight,
                                                      bool include_w) {
    Integer target;
    if (!scaled_target(weight, ws.period(), target)) return {};
    std::vector<Integer> wts;
    if (include_w) wts.push_back(ws.period());
    for (int k = 1; k <= ws.size(); ++k) wts.push_back(ws.period() / ws.order(k));
    std::vector<unsigned> cur(wts.size(), 0u);
    std::vector<std::vector<unsigned>> exps;
    enumerate_exponents(wts, 0, target, cur, exps);
    std::vector<Monomial> out;
    for (auto& e : exps) {
        Monomial m;
        std::size_t off = 0;
        if (include_w) {
            m.w = e[0];
            off = 1;
        }
        m.z.assign(e.begin() + static_cast<std::ptrdiff_t>(off), e.end());
        m.trim();
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Monomial> mixed_monomials_of_weight(const WeightSystem& ws, const Rational& weight) {
    Integer target;
    if (!scaled_target(weight, ws.period(), target)) return {};
    std::vector<Integer> wts;
    for (int rep = 0; rep < 2; ++rep) {
        for (int k = 1; k <= ws.size(); ++k) wts.push_back(ws.period() / ws.order(k));
    }
    std::vector<unsigned> cur(wts.size(), 0u);
    std::vector<std::vector<unsigned>> exps;
    enumerate_exponents(wts, 0, target, cur, exps);
    const auto n = static_cast<std::ptrdiff_t>(ws.size());
    std::vector<Monomial> out;
    for (auto& e : exps) {
        out.push_back(Monomial::from({e.begin(), e.begin() + n}, {e.begin() + n, e.end()}));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wcalc
