#pragma once

#include <map>
#include <string>
#include <vector>

#include "centersvar/rational.hpp"

namespace centersvar {

/// Sparse multivariate polynomial over the rationals in a fixed number of
/// variables. Used for the symbolic standard-frame invariants and as an
/// independent expansion route in tests.
class MPoly {
  public:
    using Exponents = std::vector<int>;

    explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static MPoly constant(std::size_t nvars, const Rational& c);
    static MPoly variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const noexcept { return nvars_; }
    const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    int total_degree() const;

    Rational coefficient(const Exponents& e) const;
    void add_term(const Exponents& e, const Rational& c);

    Rational evaluate(const std::vector<Rational>& point) const;

    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const Rational& c, const MPoly& a);
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

    /// Human-readable text with variables named prefix0, prefix1, ...
    std::string to_string(const std::string& prefix = "a") const;

  private:
    std::size_t nvars_;
    std::map<Exponents, Rational> terms_;
};

/// Parses a polynomial written as a signed sum of terms like "-3a0^2a1a3".
/// Variables are prefix followed by a single digit index.
MPoly parse_mpoly(const std::string& text, std::size_t nvars, char prefix);

/// 3x3 determinant over polynomial entries (rows given as triples).
MPoly det3(const std::vector<std::vector<MPoly>>& rows);
MPoly det4(const std::vector<std::vector<MPoly>>& rows);

}  // namespace centersvar
