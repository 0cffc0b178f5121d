#include <algorithm>
#include <array>

#include "centersvar/error.hpp"
#include "centersvar/loci.hpp"

namespace centersvar {

namespace {

using PolyVec = std::array<Poly, 4>;

Poly dot(const RMatrix& s, const RVector& u, const PolyVec& v) {
    Poly acc;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (!is_zero(s(i, j)) && !is_zero(u[i])) acc = acc + (s(i, j) * u[i]) * v[j];
    return acc;
}

Poly quadratic(const RMatrix& s, const PolyVec& v) {
    Poly acc;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (!is_zero(s(i, j))) acc = acc + s(i, j) * (v[i] * v[j]);
    return acc;
}

void require_five(const Configuration& x, const char* what) {
    if (x.size() != 5 || x.ambient_dim() != 3)
        fail(ErrorCode::InvalidInput, std::string(what) + " must be 5 points of P^3");
}

ProjectivePoint meet_line_plane(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& u,
                                const ProjectivePoint& v, const ProjectivePoint& w) {
    const Rational bq = bracket(u, v, w, q);
    const Rational bp = bracket(u, v, w, p);
    RVector m(4);
    for (std::size_t i = 0; i < 4; ++i) m[i] = bq * p[i] - bp * q[i];
    return ProjectivePoint(m);
}

bool in_plane(const Configuration& x, std::size_t i, std::size_t j, std::size_t k, const ProjectivePoint& a) {
    const ProjectivePoint triple[] = {x[i], x[j], x[k]};
    return span_rank(triple) == 3 && is_zero(bracket(x[i], x[j], x[k], a));
}

}  // namespace

Rational QuadricSurface::operator()(const RVector& z) const {
    Rational acc = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) acc += z[i] * sym(i, j) * z[j];
    return acc;
}

bool QuadricSurface::same_as(const QuadricSurface& other) const {
    return proportional(sym.data(), other.sym.data());
}

RVector CubicParametrization::evaluate(const ProjectiveParameter& at) const {
    RVector out(4);
    for (std::size_t i = 0; i < 4; ++i) out[i] = centersvar::evaluate(coords[i], at);
    return out;
}

ProjectivePoint CubicParametrization::operator()(const ProjectiveParameter& at) const {
    const RVector v = evaluate(at);
    if (std::all_of(v.begin(), v.end(), [](const Rational& c) { return is_zero(c); }))
        fail(ErrorCode::DegenerateCurve, "parametrization vanishes at a parameter");
    return ProjectivePoint(v);
}

BinaryForm CubicParametrization::restrict(const Form& f) const {
    const auto& mons = monomials(f.degree());
    Poly acc;
    for (std::size_t m = 0; m < mons.size(); ++m) {
        if (is_zero(f.coeffs()[m])) continue;
        Poly term(f.coeffs()[m]);
        for (std::size_t v = 0; v < 4; ++v)
            for (int k = 0; k < mons[m][v]; ++k) term = term * coords[v].poly;
        acc = acc + term;
    }
    return {acc, 3 * f.degree()};
}

std::optional<ProjectiveParameter> CubicParametrization::parameter_of(const ProjectivePoint& p) const {
    BinaryForm g{Poly(), 3};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            const Poly minor = Rational(p[j]) * coords[i].poly - Rational(p[i]) * coords[j].poly;
            g = gcd(g, BinaryForm{minor, 3});
        }
    if (g.is_zero() || g.degree != 1) return std::nullopt;
    ProjectiveParameter root;
    if (g.multiplicity_at_infinity() == 1)
        root = {0, 1};
    else
        root = {1, -g.poly.coeff(0) / g.poly.coeff(1)};
    const RVector v = evaluate(root);
    if (!proportional(v, p.rational())) return std::nullopt;
    return root;
}

bool TwistedCubic::contains(const ProjectivePoint& p) const {
    const RVector z = p.rational();
    return std::all_of(quadrics.begin(), quadrics.end(), [&](const Form& q) { return is_zero(q(z)); });
}

std::string_view to_string(Degeneration d) {
    switch (d) {
        case Degeneration::SmoothCubic: return "SmoothCubic";
        case Degeneration::LinePlusConic: return "LinePlusConic";
        case Degeneration::ThreeLines: return "ThreeLines";
        case Degeneration::LinePlusPlane: return "LinePlusPlane";
        case Degeneration::AllOfP3: return "AllOfP3";
    }
    return "?";
}

std::string_view to_string(LocusComponent::Type t) {
    switch (t) {
        case LocusComponent::Type::Line: return "Line";
        case LocusComponent::Type::Conic: return "Conic";
        case LocusComponent::Type::Plane: return "Plane";
        case LocusComponent::Type::Space: return "Space";
    }
    return "?";
}

std::optional<RMatrix> centers_n_le4(const Configuration& x, const Configuration& y, const ProjectivePoint& a,
                                     const ProjectivePoint& b) {
    if (x.size() != y.size() || x.size() > 4 || x.ambient_dim() != 3 || y.ambient_dim() != 3)
        fail(ErrorCode::InvalidInput, "expected two configurations of at most 4 points of P^3");
    const Configuration p = project(y, b);
    const Configuration q = project(x, a);
    // Complete each image to four points in general position.
    auto complete = [](const Configuration& c) {
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                for (std::size_t k = j + 1; k < c.size(); ++k) {
                    const ProjectivePoint t[] = {c[i], c[j], c[k]};
                    if (span_rank(t) < 3) fail(ErrorCode::DegenerateInput, "image points are not in general position");
                }
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                if (c[i] == c[j]) fail(ErrorCode::DegenerateInput, "image points coincide");
        std::vector<ProjectivePoint> pts = c.points();
        const std::vector<ProjectivePoint> extra = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1},
                                                    {1, 2, 3}, {1, -1, 2}, {2, 3, -1}, {3, -2, 5}};
        for (const auto& e : extra) {
            if (pts.size() == 4) break;
            auto trial = pts;
            trial.push_back(e);
            bool ok = true;
            for (std::size_t i = 0; i < trial.size() && ok; ++i)
                for (std::size_t j = i + 1; j < trial.size() && ok; ++j) {
                    if (trial[i] == trial[j]) ok = false;
                    for (std::size_t k = j + 1; k < trial.size() && ok; ++k) {
                        const ProjectivePoint t[] = {trial[i], trial[j], trial[k]};
                        if (span_rank(t) < 3) ok = false;
                    }
                }
            if (ok) pts = std::move(trial);
        }
        return Configuration(2, std::move(pts));
    };
    const Configuration pc = complete(p);
    const Configuration qc = complete(q);
    auto h = homography_fit(pc, qc);
    if (!h) fail(ErrorCode::DegenerateInput, "image points are not in general position");
    return h;
}

TwistedCubic cubic_locus_n5(const Configuration& x, const Configuration& y, const ProjectivePoint& a) {
    require_five(x, "X");
    require_five(y, "Y");
    if (a.size() != 4) fail(ErrorCode::InvalidInput, "center must be a point of P^3");
    if (!center_admissible(x, a, AdmissibilityMode::Moduli))
        fail(ErrorCode::InadmissibleCenter, "center lies on a line through two points of X");
    const RMatrix u = normalizing_transform(x);
    const RMatrix v = normalizing_transform(y);
    const RVector an = u * a.rational();
    std::size_t r = 0;
    while (is_zero(an[r])) ++r;
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < 4; ++i)
        if (i != r) rows.push_back(i);
    // Row i of the reduced matrix: (b_i - c_i b_r, a_i (b_i - b_r)) with c_i = a_i / a_r.
    auto entry = [&](std::size_t i, int col, const RVector& b) -> Rational {
        if (col == 0) return b[i] - an[i] / an[r] * b[r];
        return an[i] * (b[i] - b[r]);
    };
    TwistedCubic out;
    std::size_t slot = 0;
    for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = p + 1; q < 3; ++q) {
            const std::size_t i = rows[p], j = rows[q];
            const Form minor = Form::interpolate(2, [&](const RVector& b) -> Rational {
                return entry(i, 0, b) * entry(j, 1, b) - entry(i, 1, b) * entry(j, 0, b);
            });
            out.quadrics[slot++] = minor.pullback(v);
        }
    out.base_points = y;
    if (classify_degeneration_n5(x, a) == Degeneration::SmoothCubic) {
        try {
            out.param = cubic_param_n5(out);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::DegenerateCurve) throw;
        }
    }
    return out;
}

CubicParametrization cubic_param_n5(const TwistedCubic& cubic) {
    if (cubic.base_points.size() < 2) fail(ErrorCode::InvalidInput, "parametrization needs two base points");
    const RVector p = cubic.base_points[0].rational();
    const RVector q = cubic.base_points[1].rational();
    for (const auto& f : cubic.quadrics)
        if (f.degree() != 2 || !is_zero(f(p)) || !is_zero(f(q)))
            fail(ErrorCode::InvalidInput, "base points are not on the curve");
    // Complete p, q to a basis with two coordinate vectors.
    RVector w0, w1;
    for (std::size_t k = 0; k < 4 && w0.empty(); ++k)
        for (std::size_t l = k + 1; l < 4 && w0.empty(); ++l) {
            RVector ek(4, Rational(0)), el(4, Rational(0));
            ek[k] = 1;
            el[l] = 1;
            if (!is_zero(det4(p.data(), q.data(), ek.data(), el.data()))) {
                w0 = ek;
                w1 = el;
            }
        }
    if (w0.empty()) fail(ErrorCode::DegenerateCurve, "first two base points coincide");
    PolyVec w;
    for (std::size_t i = 0; i < 4; ++i) w[i] = Poly(RVector{w0[i], w1[i]});
    // A point alpha p + beta q + gamma w of the plane; conics through p and q
    // restricted to it have coefficients on (alpha beta, alpha gamma, beta gamma, gamma^2).
    std::array<std::array<Poly, 4>, 3> m;
    for (std::size_t r = 0; r < 3; ++r) {
        const RMatrix s = cubic.quadrics[r].to_symmetric();
        Rational bpq = 0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) bpq += p[i] * s(i, j) * q[j];
        m[r][0] = Poly(2 * bpq);
        m[r][1] = Rational(2) * dot(s, p, w);
        m[r][2] = Rational(2) * dot(s, q, w);
        m[r][3] = quadratic(s, w);
    }
    auto minor_without = [&](std::size_t skip) {
        std::array<std::array<Poly, 3>, 3> sub;
        for (std::size_t r = 0; r < 3; ++r) {
            std::size_t c = 0;
            for (std::size_t k = 0; k < 4; ++k)
                if (k != skip) sub[r][c++] = m[r][k];
        }
        return det3(sub[0].data(), sub[1].data(), sub[2].data());
    };
    const Poly k1 = -minor_without(1);
    const Poly k2 = minor_without(2);
    const Poly k3 = -minor_without(3);
    CubicParametrization out;
    for (std::size_t i = 0; i < 4; ++i) out.coords[i] = {p[i] * k1 + q[i] * k2 + k3 * w[i], 3};
    BinaryForm content{Poly(), 3};
    for (const auto& c : out.coords) content = gcd(content, c);
    if (content.is_zero() || content.degree != 0) fail(ErrorCode::DegenerateCurve, "curve is not a twisted cubic");
    for (const auto& f : cubic.quadrics)
        if (!out.restrict(f).is_zero()) fail(ErrorCode::DegenerateCurve, "curve is not a twisted cubic");
    return out;
}

Degeneration classify_degeneration_n5(const Configuration& x, const ProjectivePoint& a) {
    require_five(x, "X");
    if (std::find(x.points().begin(), x.points().end(), a) != x.points().end()) return Degeneration::AllOfP3;
    if (on_secant_line(x, a)) return Degeneration::LinePlusPlane;
    std::size_t planes = 0;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            for (std::size_t k = j + 1; k < 5; ++k)
                if (in_plane(x, i, j, k, a)) ++planes;
    if (planes == 0) return Degeneration::SmoothCubic;
    return planes == 1 ? Degeneration::LinePlusConic : Degeneration::ThreeLines;
}

std::vector<LocusComponent> predicted_components_n5(const Configuration& x, const Configuration& y,
                                                    const ProjectivePoint& a) {
    require_five(y, "Y");
    using Type = LocusComponent::Type;
    auto rest = [](std::initializer_list<std::size_t> used) {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < 5; ++i)
            if (std::find(used.begin(), used.end(), i) == used.end()) out.push_back(i);
        return out;
    };
    switch (classify_degeneration_n5(x, a)) {
        case Degeneration::AllOfP3: return {{Type::Space, {}}};
        case Degeneration::SmoothCubic: return {};
        case Degeneration::LinePlusPlane:
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = i + 1; j < 5; ++j) {
                    const ProjectivePoint pts[] = {x[i], x[j], a};
                    if (span_rank(pts) > 2) continue;
                    const auto o = rest({i, j});
                    return {{Type::Line, {y[i], y[j]}}, {Type::Plane, {y[o[0]], y[o[1]], y[o[2]]}}};
                }
            break;
        case Degeneration::LinePlusConic:
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = i + 1; j < 5; ++j)
                    for (std::size_t k = j + 1; k < 5; ++k) {
                        if (!in_plane(x, i, j, k, a)) continue;
                        const auto o = rest({i, j, k});
                        return {{Type::Conic, {y[i], y[j], y[k]}}, {Type::Line, {y[o[0]], y[o[1]]}}};
                    }
            break;
        case Degeneration::ThreeLines: {
            std::vector<std::array<std::size_t, 3>> planes;
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = i + 1; j < 5; ++j)
                    for (std::size_t k = j + 1; k < 5; ++k)
                        if (in_plane(x, i, j, k, a)) planes.push_back({i, j, k});
            const auto& f = planes[0];
            const auto& g = planes[1];
            std::size_t shared = 5;
            for (auto idx : f)
                if (std::find(g.begin(), g.end(), idx) != g.end()) shared = idx;
            std::vector<std::size_t> jk, pq;
            for (auto idx : f)
                if (idx != shared) jk.push_back(idx);
            for (auto idx : g)
                if (idx != shared) pq.push_back(idx);
            const ProjectivePoint m = meet_line_plane(y[pq[0]], y[pq[1]], y[shared], y[jk[0]], y[jk[1]]);
            return {{Type::Line, {y[jk[0]], y[jk[1]]}},
                    {Type::Line, {y[pq[0]], y[pq[1]]}},
                    {Type::Line, {y[shared], m}}};
        }
    }
    fail(ErrorCode::Inconsistent, "degeneration components not found");
}

}  // namespace centersvar
