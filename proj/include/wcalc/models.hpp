#pragma once

// Model domains, the Cayley-type map between the bounded and unbounded
// models, coordinate scalings, weight assignment and zero-set diagnostics.

#include "wcalc/wpoly.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wcalc {

using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr double kPositivityTolerance = 1e-8;

struct NumericPoint {
    Complex w;
    std::vector<Complex> z;

    bool is_finite() const;
};

inline Complex to_complex(const GaussQ& c) {
    return {Real(c.re()), Real(c.im())};
}

/// Evaluates f at (w, z); u is taken as Re w.
Complex evaluate(const MixedPoly& f, const NumericPoint& pt);
/// Evaluates a polynomial in z, zb only.
Complex evaluate(const MixedPoly& f, const std::vector<Complex>& z);

/// Unbounded coordinates (w*, z*) to bounded ones, principal branch.
/// Throws std::domain_error when 1 + i w*/4 = 0.
NumericPoint cayley_forward(const NumericPoint& q, const WeightSystem& ws);
/// Inverse of cayley_forward. Throws std::domain_error when w = -1.
NumericPoint cayley_inverse(const NumericPoint& g, const WeightSystem& ws);

/// |w|^2 + p(z) - 1 - (Im w* + p(z*)) |1 + i w*/4|^-2 with (w, z) the image
/// of q. Requires p balanced of weight 1.
Real cayley_identity_residual(const NumericPoint& q, const MixedPoly& p, const WeightSystem& ws);

/// Uniform samples with |w*| <= w_radius and each |z*_j| <= z_radius.
std::vector<NumericPoint> random_box_points(int n, int count, std::uint64_t seed, double w_radius = 2.0,
                                            double z_radius = 1.0);

struct CayleySweep {
    int points = 0;
    Real max_residual;    // identity residual
    Real max_round_trip;  // |inverse(forward(q)) - q|, max over coordinates
};

/// Residual and round trip over random_box_points. Throws unless p is
/// balanced and homogeneous of weight 1.
CayleySweep cayley_sweep(const MixedPoly& p, const WeightSystem& ws, int count, std::uint64_t seed);

struct DomainModel {
    enum class Kind { BoundedG, UnboundedD, HomogeneousModel };

    Kind kind;
    MixedPoly p;
    WeightSystem ws;
    /// Right-hand side of the defining inequality: 1 for G, 0 by default for
    /// D (the printed form uses 1), always 0 for the homogeneous model.
    Rational bound;

    /// Throws unless p is real in z only; HomogeneousModel also needs weight 1.
    DomainModel(Kind kind, MixedPoly p, WeightSystem ws, std::optional<Rational> bound = std::nullopt);

    /// G: |w|^2 + p < bound. D and the model: Im w + p < bound.
    bool contains(const NumericPoint& pt) const;
    Real defining_value(const NumericPoint& pt) const;
};

std::string to_string(DomainModel::Kind kind);

/// True iff p is balanced. Throws unless dm is a bounded model.
bool t2_invariance_check(const DomainModel& dm);

/// t^-mu f(t^delta z), with w and u scaled by t.
MixedPoly chi_t_rescale(const MixedPoly& f, const ExactPower& t, const Rational& mu, const WeightSystem& ws);
/// Exponent of t carried by each monomial after chi_t_rescale.
std::map<Monomial, Rational> rescale_exponents(const MixedPoly& f, const Rational& mu, const WeightSystem& ws);

struct WeightAssignmentReport {
    enum class Verdict { Admissible, LowWeightTerm, NoWeightOnePart, InfiniteAxisOrder };

    std::vector<int> axis_orders;            // 2 m_s, i.e. 1/delta_s
    std::optional<WeightSystem> ws;
    MixedPoly p;                             // weight-1 part
    Verdict verdict = Verdict::NoWeightOnePart;
    std::optional<Monomial> violating;       // lowest-weight term below 1
    std::optional<Rational> violating_weight;
    std::optional<int> infinite_axis;
    std::vector<std::string> warnings;

    bool admissible() const { return verdict == Verdict::Admissible; }
};

std::string to_string(WeightAssignmentReport::Verdict v);

/// Splits f into its weight-1 part and the rest. Throws std::invalid_argument
/// when f is not real in z, has a constant term, or has linear terms.
WeightAssignmentReport homogeneous_model_extract(const MixedPoly& f, const WeightSystem& ws);

/// Lowest total degree in (zeta, zeta-bar) of f(zeta T); nullopt when the
/// restriction vanishes. Throws for T = 0 or f not real in z.
std::optional<unsigned> order_along_direction(const MixedPoly& f, const std::vector<GaussQ>& direction);

/// Weights from axis orders in already adapted coordinates. n = 0 means
/// f.num_z(). Odd orders are accepted with a warning.
WeightAssignmentReport assign_weights_adapted(const MixedPoly& f, int n = 0);

enum class Verdict3 { Supported, Refuted, Inconclusive };
std::string to_string(Verdict3 v);

struct ZeroSetReport {
    Verdict3 positivity = Verdict3::Inconclusive;
    Real min_sampled;
    std::vector<Complex> min_point;
    Verdict3 coordinate_lines = Verdict3::Inconclusive;
    std::vector<int> vanishing_axes;
    /// Combined verdict on "the zero set carries no complex curve".
    Verdict3 no_complex_curve = Verdict3::Inconclusive;
};

/// Sampled positivity on the weighted unit sphere sum |z_j|^(1/delta_j) = 1,
/// plus the exact check that p vanishes on no coordinate axis.
ZeroSetReport zero_set_checks(const MixedPoly& p, const WeightSystem& ws, int samples,
                              std::uint64_t seed = kDefaultSeed);

}  // namespace wcalc
