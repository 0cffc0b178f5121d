#pragma once

#include <array>
#include <functional>
#include <vector>

#include "centersvar/exact_linalg.hpp"
#include "centersvar/mpoly.hpp"
#include "centersvar/rational.hpp"

namespace centersvar {

/// Exponent vector of a monomial in (z0, z1, z2, z3).
using Monomial4 = std::array<int, 4>;

/// Monomials of total degree d in four variables, graded lexicographic with
/// z0 > z1 > z2 > z3 (so z0^d first, z3^d last). 10 for d = 2, 35 for d = 4.
const std::vector<Monomial4>& monomials(int degree);

/// Homogeneous form on P^3 with exact coefficients in the monomial order above.
class Form {
  public:
    Form() = default;
    Form(int degree, std::vector<Rational> coeffs);

    static Form zero(int degree);
    /// z^T S z for a symmetric 4x4 matrix S.
    static Form from_symmetric(const RMatrix& sym);
    static Form from_mpoly(const MPoly& p);

    /// Recovers the coefficients of a degree-d form from its values by exact
    /// interpolation at a fixed set of integer points.
    static Form interpolate(int degree, const std::function<Rational(const RVector&)>& values);

    int degree() const noexcept { return degree_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const;

    Rational operator()(const RVector& z) const;

    template <class T>
    T eval(const std::array<T, 4>& z) const {
        const auto& mons = monomials(degree_);
        T acc(0);
        for (std::size_t m = 0; m < mons.size(); ++m) {
            if (sgn(coeffs_[m]) == 0) continue;
            T term(to_long_double(coeffs_[m]));
            for (int v = 0; v < 4; ++v)
                for (int k = 0; k < mons[m][static_cast<std::size_t>(v)]; ++k) term *= z[static_cast<std::size_t>(v)];
            acc += term;
        }
        return acc;
    }

    /// Symmetric matrix of a quadratic form.
    RMatrix to_symmetric() const;
    MPoly to_mpoly() const;

    /// Substitution z = M w (pull back through a linear map).
    Form pullback(const RMatrix& m) const;
    /// Partial derivative with respect to z_var.
    Form derivative(std::size_t var) const;

    friend Form operator+(const Form& a, const Form& b);
    friend Form operator*(const Rational& c, const Form& a);
    friend bool operator==(const Form& a, const Form& b) { return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_; }

  private:
    int degree_ = 0;
    std::vector<Rational> coeffs_;
};

/// Coefficient matrix with one column per form.
RMatrix coefficient_matrix(const std::vector<Form>& forms);

/// Dimension of the span of the coefficient vectors.
std::size_t span_dimension(const std::vector<Form>& forms);

/// Exact equality of the coefficient spans of two families of forms.
bool same_span(const std::vector<Form>& a, const std::vector<Form>& b);

/// The interpolation nodes used by Form::interpolate.
const std::vector<RVector>& interpolation_nodes(int degree);

}  // namespace centersvar
