#include "wcalc/wpoly.hpp"

#include <algorithm>

namespace wcalc {

namespace {

void trim_vec(std::vector<unsigned>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

unsigned at(const std::vector<unsigned>& v, std::size_t i) { return i < v.size() ? v[i] : 0u; }

std::vector<unsigned> add_vec(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    std::vector<unsigned> r(std::max(a.size(), b.size()), 0u);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = at(a, i) + at(b, i);
    return r;
}

}  // namespace

Monomial Monomial::from(std::vector<unsigned> J, std::vector<unsigned> K, unsigned a, unsigned b,
                        unsigned c) {
    Monomial m;
    m.w = a;
    m.wb = b;
    m.u = c;
    m.z = std::move(J);
    m.zb = std::move(K);
    m.trim();
    return m;
}

void Monomial::trim() {
    trim_vec(z);
    trim_vec(zb);
}

unsigned Monomial::z_exp(int k) const { return k >= 1 ? at(z, static_cast<std::size_t>(k - 1)) : w; }
unsigned Monomial::zb_exp(int k) const { return k >= 1 ? at(zb, static_cast<std::size_t>(k - 1)) : wb; }

void Monomial::set_z(int k, unsigned e) {
    if (k == 0) {
        w = e;
        return;
    }
    const auto i = static_cast<std::size_t>(k - 1);
    if (z.size() <= i) z.resize(i + 1, 0u);
    z[i] = e;
    trim_vec(z);
}

void Monomial::set_zb(int k, unsigned e) {
    if (k == 0) {
        wb = e;
        return;
    }
    const auto i = static_cast<std::size_t>(k - 1);
    if (zb.size() <= i) zb.resize(i + 1, 0u);
    zb[i] = e;
    trim_vec(zb);
}

unsigned Monomial::degree() const {
    unsigned d = w + wb + u;
    for (auto e : z) d += e;
    for (auto e : zb) d += e;
    return d;
}

Monomial Monomial::conj() const {
    Monomial m;
    m.w = wb;
    m.wb = w;
    m.u = u;
    m.z = zb;
    m.zb = z;
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.w = a.w + b.w;
    m.wb = a.wb + b.wb;
    m.u = a.u + b.u;
    m.z = add_vec(a.z, b.z);
    m.zb = add_vec(a.zb, b.zb);
    return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    // Larger exponent in an earlier slot sorts first.
    if (auto c = b.w <=> a.w; c != 0) return c;
    if (auto c = b.wb <=> a.wb; c != 0) return c;
    if (auto c = b.u <=> a.u; c != 0) return c;
    const std::size_t nz = std::max(a.z.size(), b.z.size());
    for (std::size_t i = 0; i < nz; ++i) {
        if (auto c = at(b.z, i) <=> at(a.z, i); c != 0) return c;
    }
    const std::size_t nzb = std::max(a.zb.size(), b.zb.size());
    for (std::size_t i = 0; i < nzb; ++i) {
        if (auto c = at(b.zb, i) <=> at(a.zb, i); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

MixedPoly::MixedPoly(const GaussQ& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MixedPoly MixedPoly::term(Monomial m, const GaussQ& c) {
    MixedPoly p;
    m.trim();
    p.add_term(m, c);
    return p;
}

MixedPoly MixedPoly::w() { return term(Monomial::from({}, {}, 1, 0, 0)); }
MixedPoly MixedPoly::wb() { return term(Monomial::from({}, {}, 0, 1, 0)); }
MixedPoly MixedPoly::u() { return term(Monomial::from({}, {}, 0, 0, 1)); }

MixedPoly MixedPoly::z(int k) {
    if (k < 1) throw std::invalid_argument("z index must be >= 1");
    Monomial m;
    m.set_z(k, 1);
    return term(m);
}

MixedPoly MixedPoly::zb(int k) {
    if (k < 1) throw std::invalid_argument("zb index must be >= 1");
    Monomial m;
    m.set_zb(k, 1);
    return term(m);
}

GaussQ MixedPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussQ() : it->second;
}

void MixedPoly::add_term(const Monomial& m, const GaussQ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int MixedPoly::num_z() const {
    int n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.num_z());
    return n;
}

unsigned MixedPoly::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

PolyContext MixedPoly::context() const {
    const bool w = has_w();
    const bool u = has_u();
    if (w && u) return PolyContext::Mixed;
    if (u) return PolyContext::Boundary;
    if (w || num_z() > 0) return PolyContext::Ambient;
    return PolyContext::Constant;
}

bool MixedPoly::is_holomorphic() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.is_holomorphic(); });
}

bool MixedPoly::is_z_only() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return !t.first.has_w() && t.first.u == 0; });
}

bool MixedPoly::has_u() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.u != 0; });
}

bool MixedPoly::has_w() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.has_w(); });
}

MixedPoly MixedPoly::conj() const {
    MixedPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m.conj(), c.conj());
    return r;
}

MixedPoly& MixedPoly::operator+=(const MixedPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MixedPoly& MixedPoly::operator-=(const MixedPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MixedPoly operator*(const MixedPoly& a, const MixedPoly& b) {
    MixedPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    }
    return r;
}

MixedPoly& MixedPoly::operator*=(const MixedPoly& o) {
    *this = *this * o;
    return *this;
}

MixedPoly& MixedPoly::operator*=(const GaussQ& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MixedPoly operator-(MixedPoly a) {
    for (auto& [m, v] : a.terms_) v = -v;
    return a;
}

MixedPoly pow(const MixedPoly& p, unsigned e) {
    MixedPoly result(1);
    MixedPoly base = p;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return result;
}

MixedPoly diff(const MixedPoly& p, int k) {
    MixedPoly r;
    for (const auto& [m, c] : p.terms()) {
        const unsigned e = m.z_exp(k);
        if (e == 0) continue;
        Monomial d = m;
        d.set_z(k, e - 1);
        r.add_term(d, c * GaussQ(static_cast<int>(e)));
    }
    return r;
}

MixedPoly diff_bar(const MixedPoly& p, int k) {
    MixedPoly r;
    for (const auto& [m, c] : p.terms()) {
        const unsigned e = m.zb_exp(k);
        if (e == 0) continue;
        Monomial d = m;
        d.set_zb(k, e - 1);
        r.add_term(d, c * GaussQ(static_cast<int>(e)));
    }
    return r;
}

MixedPoly integrate_z(const MixedPoly& p, int k) {
    if (k < 1) throw std::invalid_argument("integrate_z: index must be >= 1");
    if (!p.is_holomorphic()) throw std::invalid_argument("integrate_z: polynomial is not holomorphic");
    MixedPoly r;
    for (const auto& [m, c] : p.terms()) {
        const unsigned e = m.z_exp(k);
        Monomial d = m;
        d.set_z(k, e + 1);
        r.add_term(d, c / GaussQ(Rational(e + 1)));
    }
    return r;
}

MixedPoly real_part(const MixedPoly& p) {
    return (p + p.conj()) * GaussQ(Rational(1, 2));
}

MixedPoly imag_part(const MixedPoly& p) {
    return (p - p.conj()) * GaussQ(Rational(0), Rational(-1, 2));
}

MixedPoly substitute(const MixedPoly& p, const Substitution& s) {
    // Cache powers per variable; substitutions are applied simultaneously.
    std::map<std::pair<int, unsigned>, MixedPoly> cache;  // (slot, exponent)
    auto image = [&](int slot) -> std::optional<MixedPoly> {
        // slot: -1 w, -2 wb, -3 u, k>0 z_k, k<-3 zb_{-k-3}
        if (slot == -1) return s.w;
        if (slot == -2) return s.wb;
        if (slot == -3) return s.u;
        if (slot > 0) {
            auto it = s.z.find(slot);
            return it == s.z.end() ? std::nullopt : std::optional<MixedPoly>(it->second);
        }
        auto it = s.zb.find(-slot - 3);
        return it == s.zb.end() ? std::nullopt : std::optional<MixedPoly>(it->second);
    };
    auto power = [&](int slot, unsigned e, const MixedPoly& img) -> const MixedPoly& {
        auto key = std::make_pair(slot, e);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, pow(img, e)).first;
        return it->second;
    };

    MixedPoly result;
    for (const auto& [m, c] : p.terms()) {
        Monomial kept;
        MixedPoly factor(c);
        auto handle = [&](int slot, unsigned e, auto set_kept) {
            if (e == 0) return;
            auto img = image(slot);
            if (img) {
                factor *= power(slot, e, *img);
            } else {
                set_kept(e);
            }
        };
        handle(-1, m.w, [&](unsigned e) { kept.w = e; });
        handle(-2, m.wb, [&](unsigned e) { kept.wb = e; });
        handle(-3, m.u, [&](unsigned e) { kept.u = e; });
        for (int k = 1; k <= static_cast<int>(m.z.size()); ++k) {
            handle(k, m.z_exp(k), [&](unsigned e) { kept.set_z(k, e); });
        }
        for (int k = 1; k <= static_cast<int>(m.zb.size()); ++k) {
            handle(-k - 3, m.zb_exp(k), [&](unsigned e) { kept.set_zb(k, e); });
        }
        result += factor * MixedPoly::term(kept);
    }
    return result;
}

}  // namespace wcalc
