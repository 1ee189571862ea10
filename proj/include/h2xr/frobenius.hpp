#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace h2xr {

// Exact rational over int64, always normalized (positive denominator, reduced).
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_integer() const { return den == 1; }

    friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
    friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
    friend Rational operator-(Rational a) { return {-a.num, a.den}; }
    friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
    friend Rational operator*(std::int64_t k, Rational a) { return {k * a.num, a.den}; }
    friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(Rational a, Rational b) { return a.num * b.den <= b.num * a.den; }

    // representative congruent mod 1 lying in (-1/2, 1/2]
    Rational wrapped() const;
    // nearest-integer residual, |.| <= 1/2 (equals wrapped magnitude)
    Rational fractional() const { return wrapped(); }

    std::string str() const;  // "0", "1/2", "-1/3", ...
};

Rational parse_rational(const std::string& text);

// Fibre translation parts (r0, r1, r2) = (tau_0, tau_1, tau_2)/xi as exact
// rationals in (-1/2, 1/2].
struct TranslationClass {
    Rational r0, r1, r2;

    friend bool operator==(const TranslationClass& a, const TranslationClass& b) {
        return a.r0 == b.r0 && a.r1 == b.r1 && a.r2 == b.r2;
    }
    friend bool operator<(const TranslationClass& a, const TranslationClass& b);

    bool satisfies_congruences(int p1, int p2) const;
    std::string str() const;  // "(0,1/2,1/2)"
};

TranslationClass parse_translation_class(const std::string& text);

enum class Site { Interior, A, B, C };

struct KernelSite {
    Site site = Site::Interior;
    int stabilizer_order(int p1, int p2) const;
};

std::string site_name(Site s);
Site parse_site(const std::string& name);

// All translation classes admissible for an interior kernel: the complete
// solution set of the congruences 2 r0, p1 r1, p2 r2, p2 (r1 + r0) integral
// with r2 = r0 + r1 mod 1. Built from the two r0-families in closed form.
std::set<TranslationClass> enumerate_simply(int p1, int p2);

// Classes admitting a kernel pinned at the given vertex (the generator
// fixing the vertex must carry zero translation part).
std::set<TranslationClass> enumerate_multiply(int p1, int p2, Site site);

// Independent oracle: direct exact scan over r0 in {0, 1/2} and all r1 with
// denominator p1 in (-1/2, 1/2].
std::set<TranslationClass> brute_force_congruences(int p1, int p2);

// Collapses { v, -v mod 1 } orbits (equivariant sign flips) to a canonical
// representative: the lexicographically greatest member.
std::set<TranslationClass> dedupe_equivariant(const std::set<TranslationClass>& classes);

TranslationClass canonical_class(const TranslationClass& c);

}  // namespace h2xr
