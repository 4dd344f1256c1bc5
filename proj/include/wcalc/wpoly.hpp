#pragma once

// Weighted gradings and mixed polynomials in (w, wb, u, z, zb).
//
// Variable indices are 1-based for z_1..z_n; index 0 denotes w wherever a
// single index selects "a holomorphic variable".

#include "wcalc/exactalg.hpp"

#include <compare>
#include <map>
#include <optional>
#include <vector>

namespace wcalc {

/// Weights delta_j = 1/(2 m_j) for z_j, and delta_0 = 1 for w.
class WeightSystem {
public:
    /// Throws std::invalid_argument unless every m_j is a positive integer.
    explicit WeightSystem(std::vector<int> m);

    /// Weights 1/order_j for arbitrary integer orders >= 2. Odd orders
    /// produce a system with non-integer m_j = order_j / 2.
    static WeightSystem from_axis_orders(std::vector<int> orders);

    int size() const { return static_cast<int>(orders_.size()); }
    /// k = 0 gives 1 (the weight of w).
    const Rational& delta(int k) const;
    /// 1/delta_j = 2 m_j.
    int order(int j) const;
    /// m_j = order_j / 2 (integral unless built from odd axis orders).
    Rational m(int j) const;
    bool has_integral_m() const;
    /// 2M = lcm(2 m_1, ..., 2 m_n): every weight is a multiple of 1/period().
    const Integer& period() const { return period_; }
    const std::vector<int>& orders() const { return orders_; }

    friend bool operator==(const WeightSystem& a, const WeightSystem& b) {
        return a.orders_ == b.orders_;
    }

private:
    WeightSystem() = default;
    void finish();

    std::vector<int> orders_;
    std::vector<Rational> deltas_;  // deltas_[0] = 1
    Integer period_{1};
};

/// Exponents of w^a wb^b u^c z^J zb^K. J and K carry no trailing zeros.
struct Monomial {
    unsigned w = 0;
    unsigned wb = 0;
    unsigned u = 0;
    std::vector<unsigned> z;
    std::vector<unsigned> zb;

    static Monomial from(std::vector<unsigned> J, std::vector<unsigned> K = {}, unsigned a = 0,
                         unsigned b = 0, unsigned c = 0);

    unsigned z_exp(int k) const;
    unsigned zb_exp(int k) const;
    void set_z(int k, unsigned e);
    void set_zb(int k, unsigned e);

    unsigned degree() const;
    /// Largest z/zb index referenced.
    int num_z() const { return static_cast<int>(std::max(z.size(), zb.size())); }
    bool is_constant() const { return degree() == 0; }
    bool is_holomorphic() const { return wb == 0 && u == 0 && zb.empty(); }
    bool is_antiholomorphic() const { return w == 0 && u == 0 && z.empty(); }
    bool has_w() const { return w != 0 || wb != 0; }

    Monomial conj() const;
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Graded order: lower total degree first; within a degree, larger
    /// exponents earlier in (w, wb, u, z_1.., zb_1..) come first.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

    void trim();
};

enum class PolyContext { Constant, Ambient, Boundary, Mixed };

/// Finitely supported map Monomial -> GaussQ with no stored zeros.
class MixedPoly {
public:
    using TermMap = std::map<Monomial, GaussQ>;

    MixedPoly() = default;
    MixedPoly(const GaussQ& c);  // NOLINT(google-explicit-constructor)
    MixedPoly(int c) : MixedPoly(GaussQ(c)) {}  // NOLINT(google-explicit-constructor)

    static MixedPoly term(Monomial m, const GaussQ& c = GaussQ(1));
    static MixedPoly w();
    static MixedPoly wb();
    static MixedPoly u();
    static MixedPoly z(int k);
    static MixedPoly zb(int k);

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    GaussQ coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const GaussQ& c);

    int num_z() const;
    unsigned degree() const;
    PolyContext context() const;
    bool is_holomorphic() const;
    /// Only z and zb appear.
    bool is_z_only() const;
    bool has_u() const;
    bool has_w() const;

    MixedPoly conj() const;

    MixedPoly& operator+=(const MixedPoly& o);
    MixedPoly& operator-=(const MixedPoly& o);
    MixedPoly& operator*=(const MixedPoly& o);
    MixedPoly& operator*=(const GaussQ& c);

    friend MixedPoly operator+(MixedPoly a, const MixedPoly& b) { return a += b; }
    friend MixedPoly operator-(MixedPoly a, const MixedPoly& b) { return a -= b; }
    friend MixedPoly operator*(const MixedPoly& a, const MixedPoly& b);
    friend MixedPoly operator*(MixedPoly a, const GaussQ& c) { return a *= c; }
    friend MixedPoly operator*(const GaussQ& c, MixedPoly a) { return a *= c; }
    friend MixedPoly operator-(MixedPoly a);
    friend bool operator==(const MixedPoly&, const MixedPoly&) = default;

private:
    TermMap terms_;
};

MixedPoly pow(const MixedPoly& p, unsigned e);
/// Holomorphic partial derivative; k = 0 is d/dw. Barred variables are constants.
MixedPoly diff(const MixedPoly& p, int k);
/// Antiholomorphic partial derivative; k = 0 is d/dwb.
MixedPoly diff_bar(const MixedPoly& p, int k);
/// Antiderivative in z_k (k >= 1) with zero constant of integration, i.e. the
/// unique primitive divisible by z_k. Requires p holomorphic.
MixedPoly integrate_z(const MixedPoly& p, int k);
/// (p + conj p) / 2 and (p - conj p) / 2i, with u treated as real.
MixedPoly real_part(const MixedPoly& p);
MixedPoly imag_part(const MixedPoly& p);

/// Images of variables under a polynomial substitution. Missing entries mean
/// "leave the variable alone".
struct Substitution {
    std::optional<MixedPoly> w, wb, u;
    std::map<int, MixedPoly> z, zb;
};
MixedPoly substitute(const MixedPoly& p, const Substitution& s);

/// Sum of the monomial's exponents weighted by ws (w, wb, u all weigh 1).
Rational monomial_weight(const Monomial& mono, const WeightSystem& ws);
/// wt(J) - wt(K). Throws unless the monomial is in z and zb only.
Rational signature_of(const Monomial& mono, const WeightSystem& ws);

/// Map weight -> part; exact reconstruction, each part homogeneous.
std::map<Rational, MixedPoly> weight_graded_parts(const MixedPoly& f, const WeightSystem& ws);
/// The common weight when f is nonzero and weighted-homogeneous.
std::optional<Rational> homogeneous_weight(const MixedPoly& f, const WeightSystem& ws);

bool check_reality(const MixedPoly& p);
/// True iff every term involves both z and zb. Constants count as pure.
bool check_no_pure_terms(const MixedPoly& p);

class SignatureDecomposition {
public:
    explicit SignatureDecomposition(std::map<Rational, MixedPoly> parts) : parts_(std::move(parts)) {}

    const std::map<Rational, MixedPoly>& parts() const& { return parts_; }
    std::map<Rational, MixedPoly> parts() && { return std::move(parts_); }
    std::vector<Rational> signatures() const;
    /// Zero polynomial when the signature does not occur.
    MixedPoly part(const Rational& nu) const;
    MixedPoly reconstruct() const;

private:
    std::map<Rational, MixedPoly> parts_;
};

/// Throws std::invalid_argument if p is not real or not in z, zb only.
SignatureDecomposition signature_decompose(const MixedPoly& p, const WeightSystem& ws);
MixedPoly balanced_part(const MixedPoly& p, const WeightSystem& ws);
bool is_balanced(const MixedPoly& p, const WeightSystem& ws);

/// Groups a single-signature part as sum_B f_B(z) zb^B. Keys are trimmed
/// multi-indices B. Throws if the input mixes signatures or leaves z, zb.
std::map<std::vector<unsigned>, MixedPoly> extract_coefficient_functions(const MixedPoly& part,
                                                                          const WeightSystem& ws);

/// w -> u - i p, wb -> u + i p on the boundary graph {v + p = 0}.
MixedPoly substitute_boundary(const MixedPoly& q, const MixedPoly& p);

/// Replaces z_j by subs[j-1] (and zb_j by its conjugate). Each substitute must
/// be holomorphic and homogeneous of weight delta_j, and the map must have an
/// invertible linear part. Throws std::invalid_argument otherwise.
MixedPoly weighted_substitution(const MixedPoly& p, const std::vector<MixedPoly>& subs,
                                const WeightSystem& ws);

/// t = root^(2M) for a positive rational root, so every t^lambda with 2M*lambda
/// integral is an exact rational.
class ExactPower {
public:
    ExactPower(Rational root, const WeightSystem& ws);
    /// Throws std::invalid_argument unless t has an exact positive 2M-th root.
    static ExactPower from_value(const Rational& t, const WeightSystem& ws);

    const Rational& root() const { return root_; }
    Rational value() const;
    /// t^lambda; throws unless 2M * lambda is an integer.
    Rational pow(const Rational& lambda) const;

private:
    Rational root_;
    Integer period_;
};

/// z_j -> t^delta_j z_j, zb_j likewise, w -> t w, wb -> t wb, u -> t u.
MixedPoly dilate(const MixedPoly& p, const ExactPower& t, const WeightSystem& ws);

/// Multi-indices (a, J) with a + wt(J) == weight. When include_w is false, a
/// is always 0. Results follow the Monomial order.
std::vector<Monomial> holomorphic_monomials_of_weight(const WeightSystem& ws, const Rational& weight,
                                                      bool include_w);
/// Monomials z^J zb^K with wt(J) + wt(K) == weight.
std::vector<Monomial> mixed_monomials_of_weight(const WeightSystem& ws, const Rational& weight);

}  // namespace wcalc
