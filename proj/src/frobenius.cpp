#include "h2xr/frobenius.hpp"

#include <algorithm>
#include <cstdlib>

#include "h2xr/errors.hpp"
#include "h2xr/hyperbolic_plane.hpp"

namespace h2xr {

Rational Rational::wrapped() const {
    Rational r = *this;
    while (!(Rational(-1, 2) < r)) r = r + Rational(1);
    while (!(r <= Rational(1, 2))) r = r - Rational(1);
    return r;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

bool operator<(const TranslationClass& a, const TranslationClass& b) {
    if (!(a.r0 == b.r0)) return a.r0 < b.r0;
    if (!(a.r1 == b.r1)) return a.r1 < b.r1;
    return a.r2 < b.r2;
}

bool TranslationClass::satisfies_congruences(int p1, int p2) const {
    if (!(Rational(-1, 2) < r0 && r0 <= Rational(1, 2))) return false;
    if (!(Rational(-1, 2) < r1 && r1 <= Rational(1, 2))) return false;
    if (!(Rational(-1, 2) < r2 && r2 <= Rational(1, 2))) return false;
    if (!(2 * r0).is_integer()) return false;
    if (!(p1 * r1).is_integer()) return false;
    if (!(p2 * r2).is_integer()) return false;
    if (!(p2 * (r1 + r0)).is_integer()) return false;
    // r2 is the translation part of g2 = g0 g1, determined mod the lattice
    if (!((r2 - r0 - r1).is_integer())) return false;
    return true;
}

std::string TranslationClass::str() const {
    return "(" + r0.str() + "," + r1.str() + "," + r2.str() + ")";
}

TranslationClass parse_translation_class(const std::string& text) {
    std::string s = text;
    std::erase_if(s, [](char c) { return c == '(' || c == ')' || c == ' '; });
    auto c1 = s.find(',');
    auto c2 = s.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("translation class must look like r0,r1,r2");
    return {parse_rational(s.substr(0, c1)), parse_rational(s.substr(c1 + 1, c2 - c1 - 1)),
            parse_rational(s.substr(c2 + 1))};
}

int KernelSite::stabilizer_order(int p1, int p2) const {
    switch (site) {
        case Site::Interior: return 1;
        case Site::A: return 2;
        case Site::B: return p1;
        case Site::C: return p2;
    }
    return 1;
}

std::string site_name(Site s) {
    switch (s) {
        case Site::Interior: return "interior";
        case Site::A: return "A";
        case Site::B: return "B";
        case Site::C: return "C";
    }
    return "?";
}

Site parse_site(const std::string& name) {
    if (name == "interior" || name == "I" || name.empty()) return Site::Interior;
    if (name == "A" || name == "a") return Site::A;
    if (name == "B" || name == "b") return Site::B;
    if (name == "C" || name == "c") return Site::C;
    throw std::invalid_argument("unknown kernel site '" + name + "'");
}

namespace {
void require_hyperbolic(int p1, int p2) {
    if (!is_hyperbolic_signature(p1, p2))
        throw NonHyperbolicError("parameters (2," + std::to_string(p1) + "," + std::to_string(p2) +
                                 ") are not hyperbolic");
}

TranslationClass make_class(Rational r0, Rational r1) {
    return {r0.wrapped(), r1.wrapped(), (r0 + r1).wrapped()};
}
}  // namespace

std::set<TranslationClass> enumerate_simply(int p1, int p2) {
    require_hyperbolic(p1, p2);
    std::set<TranslationClass> out;
    int g = std::gcd(p1, p2);

    // r0 = 0 family: r1 must lie in (1/p1)Z and (1/p2)Z, hence (1/g)Z.
    for (int m = -((g - 1) / 2); m <= g / 2; ++m) out.insert(make_class(Rational(0), Rational(m, g)));

    // r0 = 1/2 family: r1 in (1/p1)Z with r1 + 1/2 in (1/p2)Z. The solution
    // set, when nonempty, is a coset of (1/g)Z; find a particular solution
    // exactly and sweep the coset.
    for (int k = 0; k < p1; ++k) {
        Rational r1(k, p1);
        if ((p2 * (r1 + Rational(1, 2))).is_integer()) {
            for (int m = 0; m < g; ++m)
                out.insert(make_class(Rational(1, 2), r1 + Rational(m, g)));
            break;
        }
    }
    return out;
}

std::set<TranslationClass> brute_force_congruences(int p1, int p2) {
    require_hyperbolic(p1, p2);
    std::set<TranslationClass> out;
    for (int n0 = 0; n0 <= 1; ++n0) {
        Rational r0(n0, 2);
        for (int m1 = -((p1 - 1) / 2); m1 <= p1 / 2; ++m1) {
            TranslationClass c = make_class(r0, Rational(m1, p1));
            if (c.satisfies_congruences(p1, p2)) out.insert(c);
        }
    }
    return out;
}

std::set<TranslationClass> enumerate_multiply(int p1, int p2, Site site) {
    require_hyperbolic(p1, p2);
    if (site == Site::Interior)
        throw std::invalid_argument("interior kernels are enumerated by enumerate_simply");
    std::set<TranslationClass> out;
    // the generator stabilizing the site must have zero translation part
    for (const TranslationClass& c : enumerate_simply(p1, p2)) {
        Rational pinned = site == Site::A ? c.r0 : (site == Site::B ? c.r1 : c.r2);
        if (pinned == Rational(0)) out.insert(c);
    }
    return out;
}

TranslationClass canonical_class(const TranslationClass& c) {
    TranslationClass neg{(-c.r0).wrapped(), (-c.r1).wrapped(), (-c.r2).wrapped()};
    return c < neg ? neg : c;  // lexicographically greatest of the sign orbit
}

std::set<TranslationClass> dedupe_equivariant(const std::set<TranslationClass>& classes) {
    std::set<TranslationClass> out;
    for (const auto& c : classes) out.insert(canonical_class(c));
    return out;
}

}  // namespace h2xr
