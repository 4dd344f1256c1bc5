#pragma once

// Holomorphic polynomial vector fields q_0 d/dw + sum_k q_k d/dz_k, their
// weights and brackets, and the exact tangency solver for models {v + p < 0}.

#include "wcalc/wpoly.hpp"

#include <optional>
#include <vector>

namespace wcalc {

class HoloVectorField {
public:
    /// q[0] is the d/dw coefficient. Throws if a coefficient is not holomorphic.
    explicit HoloVectorField(std::vector<MixedPoly> q);

    static HoloVectorField zero(int n);
    /// d/dz_k, with k = 0 for d/dw.
    static HoloVectorField coordinate(int n, int k);

    int n() const { return static_cast<int>(q_.size()) - 1; }
    const MixedPoly& operator[](int k) const { return q_.at(static_cast<std::size_t>(k)); }
    const std::vector<MixedPoly>& coefficients() const { return q_; }
    bool is_zero() const;
    /// Coefficient in component k of the monomial m (zero if absent).
    GaussQ coeff(int k, const Monomial& m) const { return (*this)[k].coeff(m); }

    HoloVectorField& operator+=(const HoloVectorField& o);
    HoloVectorField& operator-=(const HoloVectorField& o);
    HoloVectorField& operator*=(const GaussQ& c);

    friend HoloVectorField operator+(HoloVectorField a, const HoloVectorField& b) { return a += b; }
    friend HoloVectorField operator-(HoloVectorField a, const HoloVectorField& b) { return a -= b; }
    friend HoloVectorField operator*(const GaussQ& c, HoloVectorField a) { return a *= c; }
    friend HoloVectorField operator*(HoloVectorField a, const GaussQ& c) { return a *= c; }
    friend bool operator==(const HoloVectorField&, const HoloVectorField&) = default;

private:
    std::vector<MixedPoly> q_;
};

/// Weight of the monomial field z^J w^a d/dz_k: a + wt(J) - delta_k.
Rational monomial_field_weight(const Monomial& m, int k, const WeightSystem& ws);
/// Smallest weight of a nonzero homogeneous part; nullopt for the zero field.
std::optional<Rational> field_weight(const HoloVectorField& h, const WeightSystem& ws);
std::map<Rational, HoloVectorField> field_graded_parts(const HoloVectorField& h, const WeightSystem& ws);
bool is_homogeneous(const HoloVectorField& h, const WeightSystem& ws, const Rational& mu);

/// sum_k q_k df/dz_k; barred variables are treated as constants.
MixedPoly apply(const HoloVectorField& h, const MixedPoly& f);
/// [X, Y] as derivations: X(Y_k) - Y(X_k) componentwise.
HoloVectorField commutator(const HoloVectorField& x, const HoloVectorField& y);

struct TangencyReport {
    MixedPoly residual;  // in (u, z, zb)
    bool is_tangent = false;
    std::optional<Monomial> witness;  // first nonzero residual term
};

/// Re(-(i/2) q_0 + sum_j q_j dp/dz_j) restricted to the boundary w = u - i p.
TangencyReport tangency_residual(const MixedPoly& p, const HoloVectorField& h);

struct FieldBasis {
    Rational weight;
    std::vector<HoloVectorField> basis;
    int real_dimension() const { return static_cast<int>(basis.size()); }
};

/// A monomial field m d/dz_k (k = 0 for d/dw).
struct MonomialField {
    int component;
    Monomial monomial;
    HoloVectorField field(int n, const GaussQ& c = GaussQ(1)) const;
};

/// Every monomial field of exact weight mu, ordered by component then
/// monomial. include_w = false restricts to fields on C^n (no w, no d/dw).
std::vector<MonomialField> monomial_fields_of_weight(const WeightSystem& ws, const Rational& mu,
                                                     bool include_w);

/// Real basis of the tangent fields homogeneous of weight mu. Requires p real
/// and weighted-homogeneous of weight 1.
FieldBasis tangent_field_space(const MixedPoly& p, const WeightSystem& ws, const Rational& mu);

/// Fields R on C^n with R(phi) = 0, one FieldBasis per admissible weight
/// <= weight_bound that has solutions. Each complex solution v contributes v
/// and i v, so real_dimension is twice the complex dimension.
std::vector<FieldBasis> annihilator_space(const MixedPoly& phi, const WeightSystem& ws,
                                          const Rational& weight_bound);

/// w d/dw + sum_j delta_j z_j d/dz_j.
HoloVectorField dilation_field(const WeightSystem& ws);

enum class HalfFieldForm {
    Verified,  // coefficient 4 delta_j on z_1 z_j d/dz_j; tangent
    Printed    // coefficient 2 delta_j, kept for comparison; not tangent
};

/// lambda (-2i w z_1 d/dw + w d/dz_1 - sum_j c i delta_j z_1 z_j d/dz_j) where
/// c = 4 (Verified) or 2 (Printed); `index` picks the distinguished variable.
/// Throws unless delta_index = 1/2. The Verified form is checked against
/// sum_j |z_j|^(2 m_j) before it is returned.
HoloVectorField model_field_half(const WeightSystem& ws, const Rational& lambda, int index = 1,
                                 HalfFieldForm form = HalfFieldForm::Verified);

/// lambda (w^2 d/dw + sum_j 2 delta_j w z_j d/dz_j).
HoloVectorField model_field_one(const WeightSystem& ws, const Rational& lambda);

struct AxisCoupling {
    int index;        // k != j
    int exponent;     // m_k with delta_k + m_k delta_j = 1
    GaussQ alpha;     // coefficient of z_k y_j^{m_k}
};

struct StraightenResult {
    Rational weight;             // mu = -delta_j
    int axis = 0;                // j: the variable whose coefficient is constant
    int exponent = 0;            // m = 1 / delta_j
    std::vector<MixedPoly> change;  // z_k = change[k-1](z~)
    MixedPoly s0;                // q_0 in the new coordinates
    MixedPoly s;                 // primitive of s0 in z_j, divisible by z_j
    MixedPoly p_tilde;           // p after the z-change
    MixedPoly p_hat;             // p_tilde + Im S
    HoloVectorField field = HoloVectorField::zero(0);  // d/dz_j in the final coordinates
    Rational c;                  // p_hat on the z_j axis is c y_j^m
    std::vector<AxisCoupling> couplings;
    /// Extra linear changes z_j -> z_j + beta z_k applied when m_k = m - 1.
    std::vector<std::pair<int, GaussQ>> eliminations;
    MixedPoly p_final;           // p_hat after the eliminations

    bool independent_of_re_axis = false;
    bool axis_profile_ok = false;   // p_tilde(z_j axis) = c[y^m - 2 Re (z/2i)^m]
    bool coupling_profile_ok = false;  // dp_tilde/dz_k on the axis
    bool exponent_bounds_ok = false;   // m/2 <= m_k <= m-2 for surviving couplings
    bool s0_profile_ok = false;        // s0(z_j axis) = m c (z_j/2i)^{m-1}

    bool all_checks_pass() const {
        return independent_of_re_axis && axis_profile_ok && coupling_profile_ok && exponent_bounds_ok &&
               s0_profile_ok;
    }
};

/// Brings a tangent field of weight -delta_j into the form d/dz_j by a
/// weighted change of the z variables followed by w -> w + S(z).
/// Throws std::invalid_argument when Q is not a tangent field of weight
/// -delta_j for some j (weight -1 included), or has no constant z-coefficient.
StraightenResult straighten_negative_field(const MixedPoly& p, const HoloVectorField& q,
                                           const WeightSystem& ws);

}  // namespace wcalc
