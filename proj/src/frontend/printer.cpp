#include "wcalc/frontend.hpp"

namespace wcalc {

namespace {

std::string monomial_text(const Monomial& m) {
    std::string out;
    auto factor = [&](const std::string& name, unsigned e) {
        if (e == 0) return;
        if (!out.empty()) out += '*';
        out += name;
        if (e > 1) out += '^' + std::to_string(e);
    };
    factor("w", m.w);
    factor("wb", m.wb);
    factor("u", m.u);
    for (int k = 1; k <= m.num_z(); ++k) factor("z" + std::to_string(k), m.z_exp(k));
    for (int k = 1; k <= m.num_z(); ++k) factor("zb" + std::to_string(k), m.zb_exp(k));
    return out;
}

// A coefficient is printed with a leading sign when it is real or purely
// imaginary; general complex values stay parenthesized.
bool negative_form(const GaussQ& c) {
    return (c.is_real() && c.re() < 0) || (c.re() == 0 && c.im() < 0);
}

}  // namespace

std::string print_poly(const MixedPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        const bool neg = negative_form(c);
        const GaussQ mag = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        const std::string mono = monomial_text(m);
        if (mono.empty()) {
            out += to_string(mag);
        } else if (mag == GaussQ(1)) {
            out += mono;
        } else {
            out += to_string(mag) + '*' + mono;
        }
    }
    return out;
}

std::string print_field(const HoloVectorField& h) {
    std::string out;
    for (int k = 0; k <= h.n(); ++k) {
        if (h[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += '(' + print_poly(h[k]) + ") d/d" + (k == 0 ? std::string("w") : "z" + std::to_string(k));
    }
    return out.empty() ? "(0) d/dw" : out;
}

}  // namespace wcalc
