#include "centersvar/projective.hpp"

#include <algorithm>
#include <sstream>

#include "centersvar/error.hpp"

namespace centersvar {

ProjectivePoint::ProjectivePoint(std::span<const Rational> coords) {
    if (coords.size() < 2) fail(ErrorCode::InvalidInput, "projective point needs at least two coordinates");
    coords_ = primitive_integer_vector(coords);
    if (coords_.empty()) fail(ErrorCode::InvalidInput, "all coordinates of a projective point are zero");
}

ProjectivePoint::ProjectivePoint(std::initializer_list<long> coords) {
    RVector v;
    for (long c : coords) v.emplace_back(c);
    *this = ProjectivePoint(std::span<const Rational>(v));
}

ProjectivePoint ProjectivePoint::from_integers(std::span<const Integer> coords) {
    RVector v(coords.begin(), coords.end());
    return ProjectivePoint(std::span<const Rational>(v));
}

std::string ProjectivePoint::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ":" : "") << coords_[i].get_str();
    os << ')';
    return os.str();
}

Configuration::Configuration(std::size_t ambient_dim, std::vector<ProjectivePoint> points)
    : ambient_dim_(ambient_dim), points_(std::move(points)) {
    for (const auto& p : points_)
        if (p.dim() != ambient_dim_) fail(ErrorCode::InvalidInput, "point dimension differs from ambient dimension");
}

Configuration::Configuration(std::vector<ProjectivePoint> points)
    : Configuration(points.empty() ? 0 : points.front().dim(), std::move(points)) {}

Configuration Configuration::without(std::size_t index) const {
    std::vector<ProjectivePoint> pts;
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (i != index) pts.push_back(points_[i]);
    return {ambient_dim_, std::move(pts)};
}

Configuration Configuration::subset(std::span<const std::size_t> indices) const {
    std::vector<ProjectivePoint> pts;
    for (std::size_t i : indices) pts.push_back(points_.at(i));
    return {ambient_dim_, std::move(pts)};
}

Configuration Configuration::transformed(const RMatrix& h) const {
    if (h.rows() != ambient_dim_ + 1 || h.cols() != ambient_dim_ + 1)
        fail(ErrorCode::InvalidInput, "transform size does not match ambient dimension");
    std::vector<ProjectivePoint> pts;
    for (const auto& p : points_) pts.emplace_back(std::span<const Rational>(h * p.rational()));
    return {ambient_dim_, std::move(pts)};
}

RMatrix Configuration::coordinate_matrix() const {
    RMatrix m(ambient_dim_ + 1, points_.size());
    for (std::size_t j = 0; j < points_.size(); ++j)
        for (std::size_t i = 0; i <= ambient_dim_; ++i) m(i, j) = points_[j][i];
    return m;
}

CameraMatrix::CameraMatrix(RMatrix entries) : entries_(std::move(entries)) {
    if (entries_.cols() != entries_.rows() + 1 || rank(entries_) != entries_.rows())
        fail(ErrorCode::InvalidInput, "camera matrix must be d x (d+1) of rank d");
}

CameraMatrix CameraMatrix::canonical(const ProjectivePoint& center) {
    const std::size_t n = center.size();
    std::size_t k = n - 1;
    if (sgn(center[k]) == 0) {
        k = 0;
        while (sgn(center[k]) == 0) ++k;
    }
    RMatrix a(n - 1, n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == k) continue;
        a(row, i) = center[k];
        a(row, k) = -center[i];
        ++row;
    }
    return CameraMatrix(std::move(a));
}

ProjectivePoint CameraMatrix::center() const {
    const RMatrix k = kernel(entries_);
    const RVector v = k.column(0);
    return ProjectivePoint(std::span<const Rational>(v));
}

ProjectivePoint CameraMatrix::apply(const ProjectivePoint& x) const {
    if (x.size() != entries_.cols()) fail(ErrorCode::InvalidInput, "point dimension does not match camera");
    const RVector y = entries_ * x.rational();
    if (std::all_of(y.begin(), y.end(), [](const Rational& c) { return sgn(c) == 0; }))
        fail(ErrorCode::CenterHit, "point coincides with the camera center");
    return ProjectivePoint(std::span<const Rational>(y));
}

std::string_view to_string(StabilityClass c) {
    switch (c) {
        case StabilityClass::Stable: return "Stable";
        case StabilityClass::StrictlySemistable: return "StrictlySemistable";
        case StabilityClass::Unstable: return "Unstable";
    }
    return "?";
}

Rational bracket(std::span<const ProjectivePoint> points) {
    const std::size_t k = points.size();
    RMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        if (points[i].size() != k) fail(ErrorCode::InvalidInput, "bracket needs k points of P^(k-1)");
        for (std::size_t j = 0; j < k; ++j) m(i, j) = points[i][j];
    }
    if (k == 3) {
        const auto& d = m.data();
        return det3(d.data(), d.data() + 3, d.data() + 6);
    }
    if (k == 4) {
        const auto& d = m.data();
        return det4(d.data(), d.data() + 4, d.data() + 8, d.data() + 12);
    }
    return det(std::move(m));
}

Rational bracket(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& r) {
    const ProjectivePoint pts[] = {p, q, r};
    return bracket(std::span<const ProjectivePoint>(pts));
}

Rational bracket(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& r,
                 const ProjectivePoint& s) {
    const ProjectivePoint pts[] = {p, q, r, s};
    return bracket(std::span<const ProjectivePoint>(pts));
}

RVector project_raw(const RVector& x, const RVector& a) {
    if (x.size() != a.size() || a.size() < 2) fail(ErrorCode::InvalidInput, "projection dimension mismatch");
    std::size_t k = a.size() - 1;
    if (sgn(a[k]) == 0) {
        k = 0;
        while (k < a.size() && sgn(a[k]) == 0) ++k;
        if (k == a.size()) fail(ErrorCode::InvalidInput, "zero center");
    }
    RVector out;
    out.reserve(a.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (i != k) out.push_back(a[k] * x[i] - x[k] * a[i]);
    return out;
}

ProjectivePoint project(const ProjectivePoint& x, const ProjectivePoint& a) {
    const RVector y = project_raw(x.rational(), a.rational());
    if (std::all_of(y.begin(), y.end(), [](const Rational& c) { return sgn(c) == 0; }))
        fail(ErrorCode::CenterHit, "point " + x.to_string() + " equals the center");
    return ProjectivePoint(std::span<const Rational>(y));
}

Configuration project(const Configuration& x, const ProjectivePoint& a) {
    if (a.dim() != x.ambient_dim()) fail(ErrorCode::InvalidInput, "center dimension does not match configuration");
    std::vector<ProjectivePoint> pts;
    for (const auto& p : x.points()) pts.push_back(project(p, a));
    return {x.ambient_dim() - 1, std::move(pts)};
}

bool proportional(std::span<const Rational> u, std::span<const Rational> v) {
    if (u.size() != v.size()) return false;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] * v[j] != u[j] * v[i]) return false;
    return true;
}

namespace {

// Matrix T with T e_i ~ p_i and T (1,...,1) ~ p_{d+1}, from the first d+2 points.
std::optional<RMatrix> frame_matrix(const Configuration& p) {
    const std::size_t m = p.ambient_dim() + 1;
    if (p.size() < m + 1) fail(ErrorCode::InvalidInput, "not enough points for a projective frame");
    RMatrix basis(m, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i) basis(i, j) = p[j][i];
    auto lambda = solve(basis, p[m].rational());
    if (!lambda) return std::nullopt;
    for (const auto& l : *lambda)
        if (sgn(l) == 0) return std::nullopt;
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i) basis(i, j) *= (*lambda)[j];
    return basis;
}

}  // namespace

std::optional<RMatrix> homography_fit(const Configuration& p, const Configuration& q) {
    if (p.size() != q.size() || p.ambient_dim() != q.ambient_dim())
        fail(ErrorCode::InvalidInput, "homography_fit needs configurations of equal size and dimension");
    auto tp = frame_matrix(p);
    if (!tp) fail(ErrorCode::DegenerateInput, "leading points are not in general position");
    auto tq = frame_matrix(q);
    if (!tq) return std::nullopt;
    const RMatrix h = *tq * *inverse(*tp);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const RVector hp = h * p[i].rational();
        const RVector qi = q[i].rational();
        if (!proportional(hp, qi)) return std::nullopt;
    }
    return h;
}

std::size_t span_rank(std::span<const ProjectivePoint> points) {
    if (points.empty()) return 0;
    RMatrix m(points.size(), points.front().size());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = points[i][j];
    return rank(std::move(m));
}

StabilityClass stability_class(const Configuration& p) {
    const std::size_t n = p.size();
    if (p.ambient_dim() != 2 || n < 5 || n > 7) fail(ErrorCode::InvalidInput, "stability is defined here for 5, 6 or 7 points of P^2");
    std::size_t max_coincident = 1;
    std::size_t max_collinear = 2;
    for (std::size_t i = 0; i < n; ++i) {
        const auto c = static_cast<std::size_t>(std::count(p.points().begin(), p.points().end(), p[i]));
        max_coincident = std::max(max_coincident, c);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (p[i] == p[j]) continue;
            std::size_t on_line = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(bracket(p[i], p[j], p[k])) == 0) ++on_line;
            max_collinear = std::max(max_collinear, on_line);
        }
    }
    if (max_coincident == n) max_collinear = n;
    // Hilbert-Mumford numerics: a linear subspace of dimension k may hold at most n(k+1)/3 points.
    const std::size_t point_weight = 3 * max_coincident;
    const std::size_t line_weight = 3 * max_collinear;
    if (point_weight > n || line_weight > 2 * n) return StabilityClass::Unstable;
    if (point_weight == n || line_weight == 2 * n) return StabilityClass::StrictlySemistable;
    return StabilityClass::Stable;
}

bool on_secant_line(const Configuration& x, const ProjectivePoint& a) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == a) return true;
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            if (x[i] == x[j]) continue;
            const ProjectivePoint pts[] = {x[i], x[j], a};
            if (span_rank(pts) <= 2) return true;
        }
    }
    return false;
}

bool center_admissible(const Configuration& x, const ProjectivePoint& a, AdmissibilityMode mode) {
    if (a.dim() != x.ambient_dim()) fail(ErrorCode::InvalidInput, "center dimension does not match configuration");
    const bool secant_rule = mode == AdmissibilityMode::Goepel || x.size() == 5;
    if (secant_rule) return !on_secant_line(x, a);
    return std::find(x.points().begin(), x.points().end(), a) == x.points().end();
}

Configuration gale_transform(const Configuration& p) {
    const RMatrix m = p.coordinate_matrix();
    if (rank(m) != m.rows()) fail(ErrorCode::DegenerateInput, "coordinate matrix is rank deficient");
    const RMatrix k = kernel(m);
    if (k.cols() < 2) fail(ErrorCode::DegenerateInput, "association needs at least d+3 points");
    std::vector<ProjectivePoint> pts;
    for (std::size_t i = 0; i < k.rows(); ++i) {
        const auto row = k.row(i);
        if (std::all_of(row.begin(), row.end(), [](const Rational& c) { return sgn(c) == 0; }))
            fail(ErrorCode::DegenerateInput, "associated point is undefined");
        pts.emplace_back(row);
    }
    return Configuration(k.cols() - 1, std::move(pts));
}

Configuration standard_frame_p3() {
    return Configuration(3, {ProjectivePoint{1, 0, 0, 0}, ProjectivePoint{0, 1, 0, 0}, ProjectivePoint{0, 0, 1, 0},
                             ProjectivePoint{0, 0, 0, 1}, ProjectivePoint{1, 1, 1, 1}});
}

RMatrix normalizing_transform(const Configuration& x) {
    auto t = frame_matrix(x);
    if (!t) fail(ErrorCode::DegenerateInput, "leading points are not in general position");
    return *inverse(*t);
}

}  // namespace centersvar
