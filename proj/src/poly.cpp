#include "centersvar/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "centersvar/error.hpp"

namespace centersvar {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rational& constant) {
    if (!centersvar::is_zero(constant)) coeffs_.push_back(constant);
}

Poly Poly::monomial(const Rational& c, int degree) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1, Rational(0));
    coeffs.back() = c;
    return Poly(std::move(coeffs));
}

Poly Poly::linear_root(const Rational& root) { return Poly({-root, Rational(1)}); }

Rational Poly::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational Poly::operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    const Rational inv = 1 / leading();
    return inv * *this;
}

Poly Poly::derivative() const {
    if (degree() < 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
    return Poly(std::move(d));
}

void Poly::trim() {
    while (!coeffs_.empty() && centersvar::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a) {
    std::vector<Rational> c(a.coeffs_);
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
}

Poly operator*(const Rational& s, const Poly& a) {
    std::vector<Rational> c(a.coeffs_);
    for (auto& x : c) x *= s;
    return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(ErrorCode::InvalidInput, "polynomial division by zero");
    std::vector<Rational> rem = a.coeffs_;
    const int db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
    const Rational inv_lead = 1 / b.leading();
    for (int k = a.degree(); k >= db; --k) {
        const Rational c = rem[static_cast<std::size_t>(k)] * inv_lead;
        quot[static_cast<std::size_t>(k - db)] = c;
        if (centersvar::is_zero(c)) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs_[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

std::string Poly::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (centersvar::is_zero(c)) continue;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        const Rational mag = abs(c);
        if (mag != 1 || k == 0) os << format_rational(mag);
        if (k > 0) os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = Poly::divmod(x, y).second;
        // Keep coefficient growth in check.
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

namespace {

std::vector<Integer> divisors(Integer n) {
    n = abs(n);
    std::vector<Integer> out;
    if (n == 0) return out;
    // Inputs here have small height; trial division is fine.
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p) {
    std::vector<Rational> roots;
    if (p.degree() < 1) return roots;
    Poly q = p;
    // Roots at zero.
    while (q.degree() >= 1 && is_zero(q.coeff(0))) {
        roots.emplace_back(0);
        q = Poly::divmod(q, Poly::linear_root(0)).first;
    }
    if (q.degree() < 1) return roots;
    auto ints = primitive_integer_vector(q.coeffs());
    const auto lead_divs = divisors(ints.back());
    const auto const_divs = divisors(ints.front());
    std::vector<Rational> candidates;
    for (const auto& num : const_divs)
        for (const auto& den : lead_divs) {
            Rational r(num, den);
            r.canonicalize();
            candidates.push_back(r);
            candidates.push_back(-r);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
        while (q.degree() >= 1 && is_zero(q(r))) {
            roots.push_back(r);
            q = Poly::divmod(q, Poly::linear_root(r)).first;
        }
    }
    return roots;
}

BinaryForm gcd(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Poly g = gcd(a.poly, b.poly);
    const int inf = std::min(a.multiplicity_at_infinity(), b.multiplicity_at_infinity());
    BinaryForm out{g, g.degree() + inf};
    return out;
}

Rational evaluate(const BinaryForm& form, const ProjectiveParameter& at) {
    Rational acc = 0;
    Rational s_pow = 1;
    // sum_k c_k t^k s^(d-k), Horner in t with s powers.
    std::vector<Rational> s_powers(static_cast<std::size_t>(form.degree) + 1);
    for (int k = 0; k <= form.degree; ++k) {
        s_powers[static_cast<std::size_t>(k)] = s_pow;
        s_pow *= at.s;
    }
    Rational t_pow = 1;
    for (int k = 0; k <= form.degree; ++k) {
        acc += form.poly.coeff(k) * t_pow * s_powers[static_cast<std::size_t>(form.degree - k)];
        t_pow *= at.t;
    }
    return acc;
}

bool deflate(BinaryForm& form, const ProjectiveParameter& root) {
    if (form.degree < 1 || form.is_zero()) return false;
    if (root.at_infinity()) {
        if (form.multiplicity_at_infinity() < 1) return false;
        form.degree -= 1;
        return true;
    }
    const Rational r = root.affine();
    if (!is_zero(form.poly(r))) return false;
    form.poly = Poly::divmod(form.poly, Poly::linear_root(r)).first;
    form.degree -= 1;
    return true;
}

}  // namespace centersvar
