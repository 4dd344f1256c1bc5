#include "wcalc/exactalg.hpp"

#include <boost/multiprecision/integer.hpp>

#include <charconv>
#include <ostream>

namespace wcalc {

std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return to_fraction_string(r);
}

namespace {

Integer parse_integer(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("malformed integer: " + std::string(s));
    for (std::size_t k = start; k < s.size(); ++k) {
        if (s[k] < '0' || s[k] > '9') {
            throw std::invalid_argument("malformed integer: " + std::string(s));
        }
    }
    Integer v(std::string(s.substr(start)));
    return s[0] == '-' ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
        throw std::invalid_argument("malformed rational: " + std::string(text));
    }
    const Integer den = parse_integer(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    return Rational(num, den);
}

Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::abs(a / gcd(a, b) * b);
}

namespace {

bool exact_integer_root(const Integer& v, unsigned k, Integer& root) {
    if (v < 0) return false;
    if (v == 0 || v == 1 || k == 1) {
        root = v;
        return true;
    }
    // Binary search on [0, 2^(bits/k + 1)].
    const auto bits = boost::multiprecision::msb(v) + 1;
    Integer lo = 0;
    Integer hi = Integer(1) << static_cast<unsigned>(bits / k + 1);
    while (lo < hi) {
        Integer mid = (lo + hi + 1) / 2;
        if (boost::multiprecision::pow(mid, k) <= v) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    if (boost::multiprecision::pow(lo, k) != v) return false;
    root = lo;
    return true;
}

}  // namespace

bool exact_root(const Rational& value, unsigned k, Rational& root) {
    if (k == 0) return false;
    Integer n, d;
    if (!exact_integer_root(numerator(value), k, n)) return false;
    if (!exact_integer_root(denominator(value), k, d)) return false;
    root = Rational(n, d);
    return true;
}

GaussQ& GaussQ::operator+=(const GaussQ& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussQ& GaussQ::operator-=(const GaussQ& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussQ& GaussQ::operator*=(const GaussQ& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussQ& GaussQ::operator/=(const GaussQ& o) {
    const Rational n = o.norm2();
    if (n == 0) throw std::domain_error("GaussQ division by zero");
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string to_string(const GaussQ& x) {
    if (x.is_real()) return to_string(x.re());
    auto imag_literal = [](const Rational& v) {
        if (v == 1) return std::string("i");
        if (v == -1) return std::string("-i");
        return to_string(v) + "i";
    };
    if (x.is_imaginary()) return imag_literal(x.im());
    std::string s = "(" + to_string(x.re());
    if (x.im() > 0) s += "+";
    s += imag_literal(x.im());
    s += ")";
    return s;
}

std::ostream& operator<<(std::ostream& os, const GaussQ& x) { return os << to_string(x); }

Integer denominator_lcm(const Rational& x) { return denominator(x); }

Integer denominator_lcm(const GaussQ& x) {
    return lcm(denominator(x.re()), denominator(x.im()));
}

RealMatrix real_linearize(std::span<const LinearConstraint> system, int unknowns) {
    if (unknowns < 0) throw std::invalid_argument("real_linearize: negative unknown count");
    Eigen::Index rows = 0;
    for (const auto& c : system) rows += (c.kind == LinearConstraint::Kind::Complex) ? 2 : 1;

    RealMatrix m = RealMatrix::Constant(rows, 2 * unknowns, Rational(0));
    Eigen::Index row = 0;
    for (const auto& c : system) {
        const bool want_re = c.kind != LinearConstraint::Kind::ImagPart;
        const bool want_im = c.kind != LinearConstraint::Kind::RealPart;
        const Eigen::Index re_row = row;
        const Eigen::Index im_row = (c.kind == LinearConstraint::Kind::Complex) ? row + 1 : row;
        for (const auto& t : c.terms) {
            if (t.factors.size() != 1) {
                throw std::invalid_argument(t.factors.empty()
                                                ? "real_linearize: constant term in homogeneous system"
                                                : "real_linearize: nonlinear term");
            }
            const auto [k, conjugated] = t.factors.front();
            if (k < 0 || k >= unknowns) throw std::invalid_argument("real_linearize: unknown out of range");
            const Rational& a = t.coeff.re();
            const Rational& b = t.coeff.im();
            // (a+bi)(x+iy) = (ax-by) + i(bx+ay);  (a+bi)(x-iy) = (ax+by) + i(bx-ay)
            const Eigen::Index cx = 2 * k;
            const Eigen::Index cy = 2 * k + 1;
            if (want_re) {
                m(re_row, cx) += a;
                m(re_row, cy) += conjugated ? b : Rational(-b);
            }
            if (want_im) {
                m(im_row, cx) += b;
                m(im_row, cy) += conjugated ? Rational(-a) : a;
            }
        }
        row += (c.kind == LinearConstraint::Kind::Complex) ? 2 : 1;
    }
    return m;
}

std::vector<GaussQ> complex_from_real(const ExactVector<Rational>& v) {
    if (v.size() % 2 != 0) throw std::invalid_argument("complex_from_real: odd length");
    std::vector<GaussQ> out;
    out.reserve(static_cast<std::size_t>(v.size() / 2));
    for (Eigen::Index k = 0; k < v.size(); k += 2) out.emplace_back(v(k), v(k + 1));
    return out;
}

}  // namespace wcalc
