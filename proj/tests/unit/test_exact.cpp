#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "centersvar/error.hpp"
#include "centersvar/exact_linalg.hpp"
#include "centersvar/forms.hpp"
#include "centersvar/mpoly.hpp"
#include "centersvar/poly.hpp"
#include "centersvar/rational.hpp"

using namespace centersvar;

namespace {

Rational random_rational(std::mt19937_64& rng, int bound = 9) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, 5);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

RMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    RMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            m(i, j) = random_rational(rng);
            m(i, j).canonicalize();
        }
    return m;
}

// Leibniz expansion, independent of the elimination code.
Rational leibniz_det(const RMatrix& m) {
    std::vector<std::size_t> perm(m.rows());
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace

TEST_CASE("rational parsing and formatting round-trip") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(format_rational(Rational(-4, 6)) == "-2/3");
    CHECK(format_rational(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational("1/-2"), Error);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        Rational r = random_rational(rng, 1000);
        r.canonicalize();
        CHECK(parse_rational(format_rational(r)) == r);
    }
}

TEST_CASE("primitive integer vectors") {
    const RVector v{Rational(-2, 3), Rational(4, 9), Rational(0)};
    const auto p = primitive_integer_vector(v);
    REQUIRE(p.size() == 3);
    CHECK(p[0] == 3);
    CHECK(p[1] == -2);
    CHECK(p[2] == 0);
    const RVector z{Rational(0), Rational(0)};
    CHECK(primitive_integer_vector(z).empty());
}

TEST_CASE("long double conversion") {
    CHECK(to_long_double(Rational(1, 3)) == doctest::Approx(1.0 / 3.0));
    Rational big = Rational(Integer("123456789012345678901234567890"), Integer("7"));
    CHECK(to_double(big) == doctest::Approx(1.7636684144620811e28));
}

TEST_CASE("determinants agree with the Leibniz expansion") {
    std::mt19937_64 rng(2);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            const RMatrix m = random_matrix(rng, n, n);
            CHECK(det(m) == leibniz_det(m));
            if (n == 3) CHECK(det3(m.data().data(), m.data().data() + 3, m.data().data() + 6) == leibniz_det(m));
            if (n == 4)
                CHECK(det4(m.data().data(), m.data().data() + 4, m.data().data() + 8, m.data().data() + 12) ==
                      leibniz_det(m));
        }
}

TEST_CASE("kernel, rank and inverse") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        RMatrix m = random_matrix(rng, 3, 6);
        // Force a dependent row half of the time.
        if (trial % 2) {
            RMatrix m2(4, 6);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 6; ++j) m2(i, j) = m(i, j);
            for (std::size_t j = 0; j < 6; ++j) m2(3, j) = 2 * m(0, j) - m(2, j);
            m = m2;
        }
        const RMatrix k = kernel(m);
        CHECK(rank(m) + k.cols() == m.cols());
        const RMatrix prod = m * k;
        for (const auto& v : prod.data()) CHECK(sgn(v) == 0);
        CHECK(rank(k) == k.cols());
    }
    const RMatrix a = random_matrix(rng, 4, 4);
    auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(a * *inv == RMatrix::identity(4));
    RMatrix singular(2, 2);
    singular(0, 0) = 1;
    singular(0, 1) = 2;
    singular(1, 0) = 2;
    singular(1, 1) = 4;
    CHECK_FALSE(inverse(singular).has_value());
}

TEST_CASE("univariate polynomials") {
    const Poly p = Poly::linear_root(Rational(1, 2)) * Poly::linear_root(3) * Poly::linear_root(-2);
    const Poly q = Poly::linear_root(3) * Poly::linear_root(7);
    CHECK(gcd(p, q) == Poly::linear_root(3));
    auto [quo, rem] = Poly::divmod(p, q);
    CHECK(quo * q + rem == p);
    CHECK(rem.degree() < q.degree());
    auto roots = rational_roots(p);
    std::sort(roots.begin(), roots.end());
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == -2);
    CHECK(roots[1] == Rational(1, 2));
    CHECK(roots[2] == 3);
    CHECK(p(Rational(1, 2)) == 0);
    CHECK(p.derivative().degree() == 2);
}

TEST_CASE("binary forms track roots at infinity") {
    // (t - 2) s^2 as a cubic: roots 2 and infinity twice.
    BinaryForm f{Poly::linear_root(2), 3};
    CHECK(f.multiplicity_at_infinity() == 2);
    BinaryForm g{Poly::linear_root(2) * Poly::linear_root(5), 3};
    const BinaryForm h = gcd(f, g);
    CHECK(h.degree == 2);
    CHECK(h.multiplicity_at_infinity() == 1);
    CHECK(deflate(f, ProjectiveParameter{0, 1}));
    CHECK(f.degree == 2);
    CHECK(f.multiplicity_at_infinity() == 1);
    CHECK(deflate(f, ProjectiveParameter{1, 2}));
    CHECK(f.poly.degree() == 0);
    CHECK_FALSE(deflate(f, ProjectiveParameter{1, 9}));
    CHECK(evaluate(BinaryForm{Poly::linear_root(2), 2}, ProjectiveParameter{2, 1}) == Rational(1 - 4) * 2);
}

TEST_CASE("multivariate polynomial parsing and arithmetic") {
    const MPoly p = parse_mpoly("-a0^2a1+3a2a3-a3^3", 4, 'a');
    CHECK(p.total_degree() == 3);
    CHECK(p.coefficient({2, 1, 0, 0}) == -1);
    CHECK(p.coefficient({0, 0, 1, 1}) == 3);
    const RVector pt{1, 2, 3, 4};
    CHECK(p.evaluate(pt) == -2 + 36 - 64);
    CHECK(parse_mpoly(p.to_string("a"), 4, 'a') == p);
    const MPoly x = MPoly::variable(4, 0);
    CHECK((x * x - p).evaluate(pt) == 1 - (-2 + 36 - 64));
}

TEST_CASE("forms: interpolation, symmetric matrices, pullback") {
    CHECK(monomials(2).size() == 10);
    CHECK(monomials(4).size() == 35);
    CHECK(monomials(2).front() == Monomial4{2, 0, 0, 0});
    CHECK(monomials(2).back() == Monomial4{0, 0, 0, 2});
    std::mt19937_64 rng(4);
    for (int deg : {2, 3, 4}) {
        RVector c(monomials(deg).size());
        for (auto& v : c) v = random_rational(rng);
        const Form f(deg, c);
        const Form g = Form::interpolate(deg, [&](const RVector& z) { return f(z); });
        CHECK(g == f);
        CHECK(Form::from_mpoly(f.to_mpoly()) == f);
    }
    RMatrix sym(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j) sym(i, j) = sym(j, i) = random_rational(rng);
    const Form q = Form::from_symmetric(sym);
    CHECK(q.to_symmetric() == sym);
    const RVector z{1, -2, 3, 5};
    Rational direct = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) direct += z[i] * sym(i, j) * z[j];
    CHECK(q(z) == direct);
    const RMatrix m = random_matrix(rng, 4, 4);
    const Form pulled = q.pullback(m);
    CHECK(pulled.to_symmetric() == m.transpose() * sym * m);
}
