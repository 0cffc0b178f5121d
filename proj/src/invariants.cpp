#include "centersvar/invariants.hpp"

#include <algorithm>

#include "centersvar/error.hpp"

namespace centersvar {

namespace {

struct PlaneBrackets {
    const Configuration& p;
    Rational operator()(int i, int j, int k) const {
        return bracket(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(j - 1)],
                       p[static_cast<std::size_t>(k - 1)]);
    }
};

struct ExactLiftedBrackets {
    const Configuration& x;
    const RVector& z;
    Rational operator()(int i, int j, int k) const {
        RVector rows[4] = {x[static_cast<std::size_t>(i - 1)].rational(), x[static_cast<std::size_t>(j - 1)].rational(),
                           x[static_cast<std::size_t>(k - 1)].rational(), z};
        return det4(rows[0].data(), rows[1].data(), rows[2].data(), rows[3].data());
    }
};

void require_plane(const Configuration& p, std::size_t n) {
    if (p.size() != n || p.ambient_dim() != 2)
        fail(ErrorCode::InvalidInput, "expected " + std::to_string(n) + " points of P^2");
}

void require_space(const Configuration& x, std::size_t n, const ProjectivePoint& a) {
    if (x.size() != n || x.ambient_dim() != 3)
        fail(ErrorCode::InvalidInput, "expected " + std::to_string(n) + " points of P^3");
    if (a.size() != 4) fail(ErrorCode::InvalidInput, "center must be a point of P^3");
}

template <std::size_t N>
InvariantVector make(InvariantKind kind, const std::array<Rational, N>& v) {
    return {kind, std::vector<Rational>(v.begin(), v.end())};
}

}  // namespace

std::string_view to_string(InvariantKind kind) {
    switch (kind) {
        case InvariantKind::N5: return "N5";
        case InvariantKind::N6: return "N6";
        case InvariantKind::N7: return "N7";
    }
    return "?";
}

InvariantKind parse_invariant_kind(std::string_view text) {
    if (text == "N5") return InvariantKind::N5;
    if (text == "N6") return InvariantKind::N6;
    if (text == "N7") return InvariantKind::N7;
    fail(ErrorCode::InvalidInput, "unknown invariant kind '" + std::string(text) + "'");
}

bool InvariantVector::non_semistable() const {
    return std::all_of(values.begin(), values.end(), [](const Rational& v) { return sgn(v) == 0; });
}

InvariantVector InvariantVector::canonical() const {
    if (non_semistable()) return *this;
    if (kind != InvariantKind::N6) return {kind, primitive_scaled(values)};
    const std::span<const Rational> linear(values.data(), 5);
    InvariantVector out = *this;
    if (std::all_of(linear.begin(), linear.end(), [](const Rational& v) { return sgn(v) == 0; })) {
        out.values[5] = sgn(values[5]);
        return out;
    }
    const RVector scaled = primitive_scaled(linear);
    Rational lambda;
    for (std::size_t i = 0; i < 5; ++i)
        if (sgn(values[i]) != 0) {
            lambda = scaled[i] / values[i];
            break;
        }
    std::copy(scaled.begin(), scaled.end(), out.values.begin());
    out.values[5] = values[5] * lambda * lambda;
    return out;
}

bool equivalent(const InvariantVector& u, const InvariantVector& v) {
    if (u.kind != v.kind || u.values.size() != v.values.size()) return false;
    if (u.non_semistable() || v.non_semistable()) return false;
    if (u.kind != InvariantKind::N6) return proportional(u.values, v.values);
    const std::span<const Rational> lu(u.values.data(), 5), lv(v.values.data(), 5);
    auto zero = [](std::span<const Rational> s) {
        return std::all_of(s.begin(), s.end(), [](const Rational& c) { return sgn(c) == 0; });
    };
    if (zero(lu) != zero(lv)) return false;
    if (zero(lu)) return (sgn(u.values[5]) == 0) == (sgn(v.values[5]) == 0);
    if (!proportional(lu, lv)) return false;
    for (std::size_t i = 0; i < 5; ++i)
        if (sgn(lu[i]) != 0) return v.values[5] * lu[i] * lu[i] == u.values[5] * lv[i] * lv[i];
    return false;
}

const std::array<Permutation7, 15>& even_fano_permutations() {
    static const std::array<Permutation7, 15> perms = {{
        {1, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 6, 7, 5}, {1, 2, 3, 4, 7, 5, 6}, {1, 2, 3, 5, 4, 7, 6},
        {1, 2, 3, 5, 6, 4, 7}, {1, 2, 3, 5, 7, 6, 4}, {1, 2, 3, 6, 4, 5, 7}, {1, 2, 3, 6, 5, 7, 4},
        {1, 2, 3, 6, 7, 4, 5}, {1, 2, 3, 7, 4, 6, 5}, {1, 2, 3, 7, 5, 4, 6}, {1, 2, 3, 7, 6, 5, 4},
        {1, 2, 4, 3, 5, 7, 6}, {1, 2, 4, 3, 6, 5, 7}, {1, 2, 4, 3, 7, 6, 5},
    }};
    return perms;
}

int permutation_sign(const Permutation7& pi) {
    int inversions = 0;
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i + 1; j < 7; ++j)
            if (pi[i] > pi[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

InvariantVector g5(const Configuration& p) {
    require_plane(p, 5);
    return make(InvariantKind::N5, g5_from_brackets<Rational>(PlaneBrackets{p}));
}

InvariantVector g5_lifted(const Configuration& x, const ProjectivePoint& a) {
    require_space(x, 5, a);
    const RVector z = a.rational();
    return make(InvariantKind::N5, g5_from_brackets<Rational>(ExactLiftedBrackets{x, z}));
}

std::array<MPoly, 6> g5_standard_frame_octics() {
    const std::size_t nv = 4;
    std::array<MPoly, 4> a;
    for (std::size_t i = 0; i < 4; ++i) a[i] = MPoly::variable(nv, i);
    const Configuration frame = standard_frame_p3();
    // Meet of the line <a, x> with the chart x3 = 0: x itself when x3 = 0,
    // otherwise a3 x - x3 a; the last coordinate is dropped.
    std::vector<std::array<MPoly, 3>> images;
    for (const auto& x : frame.points()) {
        std::array<MPoly, 3> img;
        for (std::size_t i = 0; i < 3; ++i)
            img[i] = sgn(x[3]) == 0 ? MPoly::constant(nv, Rational(x[i]))
                                    : Rational(x[i]) * a[3] - Rational(x[3]) * a[i];
        images.push_back(img);
    }
    // The frame point e3 meets the chart at -(a0:a1:a2); use the positive representative.
    for (auto& c : images[3]) c = Rational(-1) * c;
    auto br = [&](int i, int j, int k) {
        const auto& p = images[static_cast<std::size_t>(i - 1)];
        const auto& q = images[static_cast<std::size_t>(j - 1)];
        const auto& r = images[static_cast<std::size_t>(k - 1)];
        return det3({{p[0], p[1], p[2]}, {q[0], q[1], q[2]}, {r[0], r[1], r[2]}});
    };
    return g5_from_brackets<MPoly>(br);
}

InvariantVector t6(const Configuration& p) {
    require_plane(p, 6);
    return make(InvariantKind::N6, t6_from_brackets<Rational>(PlaneBrackets{p}));
}

Rational igusa_F(const InvariantVector& t) {
    if (t.kind != InvariantKind::N6) fail(ErrorCode::InvalidInput, "Igusa quartic needs an N6 vector");
    return igusa_F(t.values[0], t.values[1], t.values[2], t.values[3], t.values[4]);
}

InvariantVector t6_lifted(const Configuration& x, const ProjectivePoint& z) {
    require_space(x, 6, z);
    const RVector zr = z.rational();
    return make(InvariantKind::N6, t6_from_brackets<Rational>(ExactLiftedBrackets{x, zr}));
}

LiftedForms t6_lifted_forms(const Configuration& x) {
    if (x.size() != 6 || x.ambient_dim() != 3) fail(ErrorCode::InvalidInput, "expected 6 points of P^3");
    LiftedForms out;
    for (std::size_t i = 0; i < 5; ++i)
        out.quadrics[i] = Form::interpolate(2, [&](const RVector& z) {
            return t6_from_brackets<Rational>(ExactLiftedBrackets{x, z})[i];
        });
    out.quartic = Form::interpolate(4, [&](const RVector& z) {
        return t6_from_brackets<Rational>(ExactLiftedBrackets{x, z})[5];
    });
    return out;
}

Rational fano(const Configuration& p, const Permutation7& pi) {
    require_plane(p, 7);
    return fano_from_brackets<Rational>(PlaneBrackets{p}, pi);
}

InvariantVector fano15(const Configuration& p) {
    require_plane(p, 7);
    return make(InvariantKind::N7, fano15_from_brackets<Rational>(PlaneBrackets{p}));
}

InvariantVector fano15_lifted(const Configuration& x, const ProjectivePoint& a) {
    require_space(x, 7, a);
    const RVector z = a.rational();
    return make(InvariantKind::N7, fano15_from_brackets<Rational>(ExactLiftedBrackets{x, z}));
}

std::array<std::complex<long double>, 15> fano15_lifted(const Configuration& x,
                                                        const std::array<std::complex<long double>, 4>& a) {
    if (x.size() != 7 || x.ambient_dim() != 3) fail(ErrorCode::InvalidInput, "expected 7 points of P^3");
    return fano15_from_brackets<std::complex<long double>>(LiftedBrackets<std::complex<long double>>(x, a));
}

std::array<Rational, 15> fano15_odd(const Configuration& p) {
    require_plane(p, 7);
    std::array<Rational, 15> out;
    const auto& perms = even_fano_permutations();
    for (std::size_t i = 0; i < 15; ++i) {
        Permutation7 odd = perms[i];
        for (int& v : odd) v = v == 1 ? 2 : (v == 2 ? 1 : v);
        out[i] = fano_from_brackets<Rational>(PlaneBrackets{p}, odd);
    }
    return out;
}

Rational morley(const Configuration& p) {
    const InvariantVector f = fano15(p);
    Rational sum = 0;
    for (const auto& v : f.values) sum += v;
    return 2 * sum;
}

Form weddle_quartic(const Configuration& z) {
    if (z.size() != 6 || z.ambient_dim() != 3) fail(ErrorCode::InvalidInput, "Weddle quartic needs 6 points of P^3");
    RMatrix basis(4, 4);
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t i = 0; i < 4; ++i) basis(i, j) = z[j][i];
    const auto u = inverse(basis);
    if (!u) fail(ErrorCode::DegenerateInput, "first four points are not in general position");
    const RVector r = *u * z[4].rational();
    const RVector s = *u * z[5].rational();
    Form w = Form::interpolate(4, [&](const RVector& point) {
        const RVector x = *u * point;
        RMatrix m(4, 4);
        for (std::size_t i = 0; i < 4; ++i) {
            m(i, 0) = r[i] * s[i];
            m(i, 1) = x[i] * x[i];
            m(i, 2) = r[i] * x[i];
            m(i, 3) = s[i] * x[i];
        }
        const auto& d = m.data();
        return det4(d.data(), d.data() + 4, d.data() + 8, d.data() + 12);
    });
    if (w.is_zero()) fail(ErrorCode::DegenerateInput, "points are not in general position");
    return w;
}

}  // namespace centersvar
