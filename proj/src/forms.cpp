#include "centersvar/forms.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <memory>
#include <mutex>

#include "centersvar/error.hpp"

namespace centersvar {

namespace {

std::vector<Monomial4> build_monomials(int degree) {
    std::vector<Monomial4> out;
    for (int a = degree; a >= 0; --a)
        for (int b = degree - a; b >= 0; --b)
            for (int c = degree - a - b; c >= 0; --c) out.push_back({a, b, c, degree - a - b - c});
    return out;
}

Rational monomial_value(const Monomial4& m, const RVector& z) {
    Rational v = 1;
    for (std::size_t i = 0; i < 4; ++i)
        for (int k = 0; k < m[i]; ++k) v *= z[i];
    return v;
}

struct InterpolationData {
    std::vector<RVector> nodes;
    RMatrix inverse;  // maps node values to coefficients
};

InterpolationData build_interpolation(int degree) {
    const auto& mons = monomials(degree);
    const std::size_t n = mons.size();
    // Deterministic small-integer nodes; greedily keep those that raise the rank.
    std::uint64_t state = 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(degree);
    auto next_coord = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long>((state >> 33) % 9) - 4;
    };
    InterpolationData data;
    std::vector<RVector> accepted_rows;
    while (data.nodes.size() < n) {
        RVector z(4);
        for (auto& c : z) c = next_coord();
        if (z[0] == 0 && z[1] == 0 && z[2] == 0 && z[3] == 0) continue;
        RVector row(n);
        for (std::size_t m = 0; m < n; ++m) row[m] = monomial_value(mons[m], z);
        auto trial = accepted_rows;
        trial.push_back(row);
        if (rank(RMatrix::from_rows(trial)) == trial.size()) {
            accepted_rows = std::move(trial);
            data.nodes.push_back(z);
        }
    }
    auto inv = inverse(RMatrix::from_rows(accepted_rows));
    assert(inv.has_value());
    data.inverse = std::move(*inv);
    return data;
}

const InterpolationData& interpolation_data(int degree) {
    static std::mutex mutex;
    static std::array<std::unique_ptr<InterpolationData>, 7> cache;
    if (degree < 0 || degree >= static_cast<int>(cache.size()))
        fail(ErrorCode::InvalidInput, "unsupported form degree for interpolation");
    std::lock_guard lock(mutex);
    auto& slot = cache[static_cast<std::size_t>(degree)];
    if (!slot) slot = std::make_unique<InterpolationData>(build_interpolation(degree));
    return *slot;
}

}  // namespace

const std::vector<Monomial4>& monomials(int degree) {
    static std::mutex mutex;
    static std::array<std::unique_ptr<std::vector<Monomial4>>, 9> cache;
    if (degree < 0 || degree >= static_cast<int>(cache.size()))
        fail(ErrorCode::InvalidInput, "unsupported form degree");
    std::lock_guard lock(mutex);
    auto& slot = cache[static_cast<std::size_t>(degree)];
    if (!slot) slot = std::make_unique<std::vector<Monomial4>>(build_monomials(degree));
    return *slot;
}

const std::vector<RVector>& interpolation_nodes(int degree) { return interpolation_data(degree).nodes; }

Form::Form(int degree, std::vector<Rational> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != monomials(degree).size())
        fail(ErrorCode::InvalidInput, "coefficient count does not match form degree");
}

Form Form::zero(int degree) { return Form(degree, RVector(monomials(degree).size(), Rational(0))); }

Form Form::from_symmetric(const RMatrix& sym) {
    const auto& mons = monomials(2);
    RVector coeffs(mons.size());
    for (std::size_t m = 0; m < mons.size(); ++m) {
        std::vector<std::size_t> vars;
        for (std::size_t v = 0; v < 4; ++v)
            for (int k = 0; k < mons[m][v]; ++k) vars.push_back(v);
        coeffs[m] = vars[0] == vars[1] ? sym(vars[0], vars[0]) : Rational(sym(vars[0], vars[1]) + sym(vars[1], vars[0]));
    }
    return Form(2, std::move(coeffs));
}

Form Form::from_mpoly(const MPoly& p) {
    if (p.nvars() != 4) fail(ErrorCode::InvalidInput, "form needs four variables");
    const int d = p.is_zero() ? 0 : p.total_degree();
    Form f = zero(d);
    const auto& mons = monomials(d);
    for (const auto& [e, c] : p.terms()) {
        const Monomial4 m{e[0], e[1], e[2], e[3]};
        bool found = false;
        for (std::size_t k = 0; k < mons.size(); ++k) {
            if (mons[k] == m) {
                f.coeffs_[k] = c;
                found = true;
                break;
            }
        }
        if (!found) fail(ErrorCode::InvalidInput, "polynomial is not homogeneous");
    }
    return f;
}

Form Form::interpolate(int degree, const std::function<Rational(const RVector&)>& values) {
    const auto& data = interpolation_data(degree);
    RVector v(data.nodes.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = values(data.nodes[i]);
    return Form(degree, data.inverse * v);
}

bool Form::is_zero() const {
    for (const auto& c : coeffs_)
        if (sgn(c) != 0) return false;
    return true;
}

Rational Form::operator()(const RVector& z) const {
    const auto& mons = monomials(degree_);
    Rational acc = 0;
    for (std::size_t m = 0; m < mons.size(); ++m) {
        if (sgn(coeffs_[m]) == 0) continue;
        acc += coeffs_[m] * monomial_value(mons[m], z);
    }
    return acc;
}

RMatrix Form::to_symmetric() const {
    if (degree_ != 2) fail(ErrorCode::InvalidInput, "symmetric matrix requires a quadratic form");
    const auto& mons = monomials(2);
    RMatrix s(4, 4);
    for (std::size_t m = 0; m < mons.size(); ++m) {
        std::vector<std::size_t> vars;
        for (std::size_t v = 0; v < 4; ++v)
            for (int k = 0; k < mons[m][v]; ++k) vars.push_back(v);
        if (vars[0] == vars[1]) {
            s(vars[0], vars[0]) = coeffs_[m];
        } else {
            s(vars[0], vars[1]) = coeffs_[m] / 2;
            s(vars[1], vars[0]) = coeffs_[m] / 2;
        }
    }
    return s;
}

MPoly Form::to_mpoly() const {
    MPoly p(4);
    const auto& mons = monomials(degree_);
    for (std::size_t m = 0; m < mons.size(); ++m) p.add_term({mons[m][0], mons[m][1], mons[m][2], mons[m][3]}, coeffs_[m]);
    return p;
}

Form Form::pullback(const RMatrix& m) const {
    return interpolate(degree_, [&](const RVector& w) { return (*this)(m * w); });
}

Form Form::derivative(std::size_t var) const {
    if (degree_ == 0) return zero(0);
    const auto& mons = monomials(degree_);
    const auto& lower = monomials(degree_ - 1);
    Form out = zero(degree_ - 1);
    for (std::size_t m = 0; m < mons.size(); ++m) {
        if (mons[m][var] == 0 || sgn(coeffs_[m]) == 0) continue;
        Monomial4 e = mons[m];
        --e[var];
        const auto it = std::find(lower.begin(), lower.end(), e);
        out.coeffs_[static_cast<std::size_t>(it - lower.begin())] += coeffs_[m] * mons[m][var];
    }
    return out;
}

Form operator+(const Form& a, const Form& b) {
    if (a.degree_ != b.degree_) fail(ErrorCode::InvalidInput, "adding forms of different degree");
    RVector c(a.coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
    return Form(a.degree_, std::move(c));
}

Form operator*(const Rational& s, const Form& a) {
    RVector c(a.coeffs_);
    for (auto& x : c) x *= s;
    return Form(a.degree_, std::move(c));
}

RMatrix coefficient_matrix(const std::vector<Form>& forms) {
    if (forms.empty()) return {};
    const std::size_t n = forms.front().coeffs().size();
    RMatrix m(n, forms.size());
    for (std::size_t j = 0; j < forms.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, j) = forms[j].coeffs()[i];
    return m;
}

std::size_t span_dimension(const std::vector<Form>& forms) { return rank(coefficient_matrix(forms)); }

bool same_span(const std::vector<Form>& a, const std::vector<Form>& b) {
    std::vector<Form> both = a;
    both.insert(both.end(), b.begin(), b.end());
    const std::size_t ra = span_dimension(a);
    return ra == span_dimension(b) && ra == span_dimension(both);
}

}  // namespace centersvar
