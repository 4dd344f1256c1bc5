#pragma once

// Exact rational and Gaussian-rational scalars, plus dense exact linear
// algebra over them. Matrices are plain Eigen matrices with an exact scalar.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wcalc {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// "a/b" with the denominator always present, e.g. "5/12", "-3/1".
std::string to_fraction_string(const Rational& r);
/// Shortest form: "5/12", "-3".
std::string to_string(const Rational& r);
/// Accepts "a", "-a", "a/b". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

/// Exact k-th root of a nonnegative rational when it exists.
bool exact_root(const Rational& value, unsigned k, Rational& root);

/// Complex number with rational real and imaginary parts.
class GaussQ {
public:
    GaussQ() = default;
    GaussQ(const Rational& re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussQ(int re) : re_(re) {}              // NOLINT(google-explicit-constructor)
    GaussQ(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussQ i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_imaginary() const { return re_ == 0; }

    GaussQ conj() const { return {re_, -im_}; }
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    GaussQ& operator+=(const GaussQ& o);
    GaussQ& operator-=(const GaussQ& o);
    GaussQ& operator*=(const GaussQ& o);
    GaussQ& operator/=(const GaussQ& o);

    friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
    friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
    friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }
    friend GaussQ operator/(GaussQ a, const GaussQ& b) { return a /= b; }
    friend GaussQ operator-(const GaussQ& a) { return {-a.re_, -a.im_}; }

    friend bool operator==(const GaussQ& a, const GaussQ& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    Rational re_{0};
    Rational im_{0};
};

inline GaussQ conj(const GaussQ& x) { return x.conj(); }
inline Rational conj(const Rational& x) { return x; }
inline bool is_zero(const GaussQ& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x == 0; }

/// Parser-compatible literal: "3", "-1/2", "i", "-2/3i", "(1/2+1/3i)".
std::string to_string(const GaussQ& x);
std::ostream& operator<<(std::ostream& os, const GaussQ& x);

/// Least common multiple of all denominators in the value.
Integer denominator_lcm(const Rational& x);
Integer denominator_lcm(const GaussQ& x);

template <class Scalar>
using ExactMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using ExactVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RealMatrix = ExactMatrix<Rational>;
using ComplexMatrix = ExactMatrix<GaussQ>;

namespace detail {

template <class Scalar>
struct Echelon {
    ExactMatrix<Scalar> rows;
    std::vector<Eigen::Index> pivots;  // pivot column of each leading row
};

// Fraction-free (Bareiss) row echelon form. Each row is first scaled by the
// lcm of its denominators so entries start integral; the pivot in a column is
// the first nonzero entry at or below the current row.
template <class Scalar>
Echelon<Scalar> fraction_free_echelon(const ExactMatrix<Scalar>& m) {
    Echelon<Scalar> e{m, {}};
    auto& a = e.rows;
    const Eigen::Index nr = a.rows();
    const Eigen::Index nc = a.cols();
    for (Eigen::Index i = 0; i < nr; ++i) {
        Integer l = 1;
        for (Eigen::Index j = 0; j < nc; ++j) l = lcm(l, denominator_lcm(a(i, j)));
        if (l != 1) {
            const Scalar s{Rational(l)};
            for (Eigen::Index j = 0; j < nc; ++j) a(i, j) *= s;
        }
    }
    Scalar prev{Rational(1)};
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < nc && r < nr; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < nr; ++i) {
            if (!is_zero(a(i, c))) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r) a.row(piv).swap(a.row(r));
        const Scalar p = a(r, c);
        for (Eigen::Index i = r + 1; i < nr; ++i) {
            const Scalar f = a(i, c);
            for (Eigen::Index j = c + 1; j < nc; ++j) {
                a(i, j) = (p * a(i, j) - f * a(r, j)) / prev;
            }
            a(i, c) = Scalar{Rational(0)};
        }
        prev = p;
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

}  // namespace detail

template <class Scalar>
Eigen::Index rank(const ExactMatrix<Scalar>& m) {
    return static_cast<Eigen::Index>(detail::fraction_free_echelon(m).pivots.size());
}

/// Exact kernel basis of `m`. One vector per free column, with that column set
/// to 1 and every other free column set to 0, so the basis is canonical.
template <class Scalar>
std::vector<ExactVector<Scalar>> nullspace(const ExactMatrix<Scalar>& m) {
    const auto e = detail::fraction_free_echelon(m);
    const Eigen::Index nc = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(nc), false);
    for (auto c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<ExactVector<Scalar>> basis;
    for (Eigen::Index f = 0; f < nc; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        ExactVector<Scalar> x = ExactVector<Scalar>::Constant(nc, Scalar{Rational(0)});
        x(f) = Scalar{Rational(1)};
        for (auto r = static_cast<Eigen::Index>(e.pivots.size()) - 1; r >= 0; --r) {
            const Eigen::Index pc = e.pivots[static_cast<std::size_t>(r)];
            Scalar acc{Rational(0)};
            for (Eigen::Index j = pc + 1; j < nc; ++j) {
                if (!is_zero(x(j))) acc += e.rows(r, j) * x(j);
            }
            x(pc) = -acc / e.rows(r, pc);
        }
        basis.push_back(std::move(x));
    }
    if (static_cast<Eigen::Index>(e.pivots.size() + basis.size()) != nc) {
        throw std::logic_error("nullspace: rank + nullity != cols");
    }
    return basis;
}

/// One term of a constraint: coeff * product of (possibly conjugated) unknowns.
/// A linear term has exactly one factor.
struct ConstraintTerm {
    GaussQ coeff;
    std::vector<std::pair<int, bool>> factors;  // (unknown index, conjugated)
};

/// A homogeneous constraint on complex unknowns: Σ terms = 0 (Complex),
/// Re Σ terms = 0 (RealPart) or Im Σ terms = 0 (ImagPart).
struct LinearConstraint {
    enum class Kind { Complex, RealPart, ImagPart };
    Kind kind = Kind::Complex;
    std::vector<ConstraintTerm> terms;

    LinearConstraint& add(const GaussQ& c, int unknown, bool conjugated = false) {
        terms.push_back({c, {{unknown, conjugated}}});
        return *this;
    }
};

/// Real-mode matrix acting on (re x_0, im x_0, re x_1, im x_1, ...).
/// Throws std::invalid_argument for a term that is constant or nonlinear, or
/// that references an unknown out of range.
RealMatrix real_linearize(std::span<const LinearConstraint> system, int unknowns);

/// Inverse of the column layout used by real_linearize.
std::vector<GaussQ> complex_from_real(const ExactVector<Rational>& v);

}  // namespace wcalc

namespace Eigen {

template <>
struct NumTraits<wcalc::GaussQ> : GenericNumTraits<wcalc::GaussQ> {
    using Real = wcalc::GaussQ;
    using NonInteger = wcalc::GaussQ;
    using Nested = wcalc::GaussQ;
    using Literal = wcalc::GaussQ;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 40,
        MulCost = 120
    };
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
