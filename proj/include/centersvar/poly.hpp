#pragma once

#include <optional>
#include <string>
#include <vector>

#include "centersvar/rational.hpp"

namespace centersvar {

/// Dense univariate polynomial over the rationals, coefficients in increasing
/// degree. The zero polynomial has no coefficients and degree -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)

    static Poly monomial(const Rational& c, int degree);
    /// The linear polynomial (t - root).
    static Poly linear_root(const Rational& root);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    Rational coeff(int k) const;
    const Rational& leading() const { return coeffs_.back(); }

    Rational operator()(const Rational& t) const;

    template <class T>
    T eval(const T& t) const {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + T(to_long_double(*it));
        return acc;
    }

    Poly monic() const;
    Poly derivative() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, const Poly& a);
    friend Poly operator-(const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

    std::string to_string(const char* var = "t") const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Rational roots (with repetition) found by the rational root theorem on the
/// integer-scaled polynomial. Intended for small-degree, small-height inputs.
std::vector<Rational> rational_roots(const Poly& p);

/// Binary form of nominal degree d in (s : t), stored dehomogenized at s = 1:
/// F(s, t) = sum_k c_k t^k s^(d-k). The root (s:t) = (0:1) has multiplicity
/// d - deg(poly).
struct BinaryForm {
    Poly poly;
    int degree = 0;

    int multiplicity_at_infinity() const { return poly.is_zero() ? degree : degree - poly.degree(); }
    bool is_zero() const { return poly.is_zero(); }
};

/// Point of the projective line, (s : t). s = 0 is the point at infinity.
struct ProjectiveParameter {
    Rational s = 1;
    Rational t = 0;

    bool at_infinity() const { return is_zero(s); }
    /// Affine value t/s; only meaningful when finite.
    Rational affine() const { return t / s; }
};

/// GCD of binary forms: the gcd of the dehomogenized parts times the shared
/// power of s.
BinaryForm gcd(const BinaryForm& a, const BinaryForm& b);

/// Removes one linear factor vanishing at the given parameter. Returns false
/// if the form does not vanish there.
bool deflate(BinaryForm& form, const ProjectiveParameter& root);

/// Evaluates at (s : t).
Rational evaluate(const BinaryForm& form, const ProjectiveParameter& at);

}  // namespace centersvar
