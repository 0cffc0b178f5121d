#include "centersvar/datagen.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "centersvar/error.hpp"
#include "centersvar/invariants.hpp"
#include "centersvar/loci.hpp"

namespace centersvar {

namespace {

constexpr int kRejectionBudget = 400;

RVector random_vector(std::mt19937_64& rng, std::size_t size, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    RVector v(size);
    for (auto& c : v) c = d(rng);
    return v;
}

bool nonzero(const RVector& v) {
    return std::any_of(v.begin(), v.end(), [](const Rational& c) { return !is_zero(c); });
}

RMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
    RMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const RVector r = random_vector(rng, cols, bound);
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = r[j];
    }
    return m;
}

// Distinct points, no three on a line and (in P^3) no four on a plane.
bool general_position(const Configuration& c) {
    const std::size_t n = c.size();
    const std::size_t d = c.ambient_dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (c[i] == c[j]) return false;
            for (std::size_t k = j + 1; k < n; ++k) {
                const ProjectivePoint t[] = {c[i], c[j], c[k]};
                if (span_rank(t) < 3) return false;
                if (d < 3) continue;
                for (std::size_t l = k + 1; l < n; ++l) {
                    const ProjectivePoint q[] = {c[i], c[j], c[k], c[l]};
                    if (span_rank(q) < 4) return false;
                }
            }
        }
    return true;
}

bool stable_image(const Configuration& x, const ProjectivePoint& a) {
    return stability_class(project(x, a)) == StabilityClass::Stable;
}

bool six_point_checks(const Configuration& x, const Configuration& y) {
    try {
        quadric_pair_n6(x, y);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::DegenerateInput) return false;
        throw;
    }
    return true;
}

bool seven_point_checks(const Configuration& x, const Configuration& y, const ProjectivePoint& a,
                        const ProjectivePoint& b) {
    if (!stable_image(x, a) || !stable_image(y, b)) return false;
    for (std::size_t k = 0; k < 7; ++k)
        if (!six_point_checks(x.without(k), y.without(k))) return false;
    return true;
}

bool generic_for(const Reconstruction& r, std::size_t n) {
    const auto& x = r.x;
    const auto& y = r.y;
    if (!general_position(x) || !general_position(y)) return false;
    if (std::find(x.points().begin(), x.points().end(), r.a_true) != x.points().end()) return false;
    if (std::find(y.points().begin(), y.points().end(), r.b_true) != y.points().end()) return false;
    if (n < 5) return true;
    if (on_secant_line(x, r.a_true) || on_secant_line(y, r.b_true)) return false;
    if (n == 5)
        return stable_image(x, r.a_true) && stable_image(y, r.b_true) &&
               classify_degeneration_n5(x, r.a_true) == Degeneration::SmoothCubic &&
               classify_degeneration_n5(y, r.b_true) == Degeneration::SmoothCubic;
    if (n == 6) {
        if (!stable_image(x, r.a_true) || !stable_image(y, r.b_true)) return false;
        for (std::size_t k = 0; k < 6; ++k)
            if (classify_degeneration_n5(x.without(k), r.a_true) != Degeneration::SmoothCubic ||
                classify_degeneration_n5(y.without(k), r.b_true) != Degeneration::SmoothCubic)
                return false;
        return six_point_checks(x, y);
    }
    if (n == 7) return seven_point_checks(x, y, r.a_true, r.b_true);
    for (std::size_t first : {std::size_t{0}, std::size_t{1}}) {
        std::vector<std::size_t> idx(7);
        for (std::size_t i = 0; i < 7; ++i) idx[i] = first + i;
        if (!seven_point_checks(x.subset(idx), y.subset(idx), r.a_true, r.b_true)) return false;
    }
    return true;
}

bool proportional_nonzero(const InvariantVector& u, const InvariantVector& v) {
    return !u.non_semistable() && !v.non_semistable() && proportional(u.values, v.values);
}

Configuration plane_general(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        std::vector<ProjectivePoint> pts;
        while (pts.size() < n) {
            const RVector v = random_vector(rng, 3, 20);
            if (nonzero(v)) pts.emplace_back(v);
        }
        Configuration c(2, pts);
        if (general_position(c)) return c;
    }
}

// First `on_line` points on a line, the rest generic, no other collinearity.
Configuration plane_with_line(std::mt19937_64& rng, std::size_t n, std::size_t on_line) {
    for (;;) {
        const RVector p = random_vector(rng, 3, 20), q = random_vector(rng, 3, 20);
        if (!nonzero(p) || !nonzero(q)) continue;
        std::vector<ProjectivePoint> pts;
        std::uniform_int_distribution<int> coef(-9, 9);
        bool ok = true;
        while (pts.size() < on_line && ok) {
            const int s = coef(rng), t = coef(rng);
            RVector v(3);
            for (std::size_t i = 0; i < 3; ++i) v[i] = s * p[i] + t * q[i];
            if (!nonzero(v)) continue;
            const ProjectivePoint pt(v);
            if (std::find(pts.begin(), pts.end(), pt) != pts.end()) continue;
            pts.push_back(pt);
        }
        while (pts.size() < n) {
            const RVector v = random_vector(rng, 3, 20);
            if (nonzero(v)) pts.emplace_back(v);
        }
        const Configuration c(2, pts);
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j) {
                if (c[i] == c[j]) ok = false;
                for (std::size_t k = j + 1; k < n && ok; ++k)
                    if (k >= on_line && is_zero(bracket(c[i], c[j], c[k]))) ok = false;
            }
        if (ok) return c;
    }
}

RVector combination(std::initializer_list<std::pair<int, const ProjectivePoint*>> terms) {
    RVector v(4, Rational(0));
    for (const auto& [c, p] : terms)
        for (std::size_t i = 0; i < 4; ++i) v[i] += c * Rational((*p)[i]);
    return v;
}

}  // namespace

Reconstruction generate_reconstruction(std::size_t n, std::uint64_t seed, int coord_bound) {
    if (n < 3) fail(ErrorCode::InvalidInput, "reconstruction needs at least 3 points");
    if (coord_bound < 10) fail(ErrorCode::InvalidInput, "coordinate bound must be at least 10");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
        Reconstruction r;
        r.a_prime = random_matrix(rng, 4, 5, coord_bound);
        r.b_prime = random_matrix(rng, 4, 5, coord_bound);
        std::vector<ProjectivePoint> zs;
        for (std::size_t i = 0; i < n; ++i) {
            RVector v;
            do v = random_vector(rng, 5, coord_bound);
            while (!nonzero(v));
            zs.emplace_back(v);
        }
        if (rank(r.a_prime) != 4 || rank(r.b_prime) != 4) continue;
        r.a_prime_center = ProjectivePoint(kernel(r.a_prime).column(0));
        r.b_prime_center = ProjectivePoint(kernel(r.b_prime).column(0));
        if (r.a_prime_center == r.b_prime_center) continue;
        bool off_line = true;
        for (const auto& z : zs) {
            const ProjectivePoint t[] = {r.a_prime_center, r.b_prime_center, z};
            if (span_rank(t) < 3) off_line = false;
        }
        if (!off_line) continue;
        r.z = Configuration(4, zs);
        std::vector<ProjectivePoint> xs, ys;
        for (const auto& z : zs) {
            xs.emplace_back(r.a_prime * z.rational());
            ys.emplace_back(r.b_prime * z.rational());
        }
        r.x = Configuration(3, xs);
        r.y = Configuration(3, ys);
        r.a_true = ProjectivePoint(r.a_prime * r.b_prime_center.rational());
        r.b_true = ProjectivePoint(r.b_prime * r.a_prime_center.rational());
        if (!generic_for(r, n)) continue;
        if (!certify_reconstruction(r))
            fail(ErrorCode::Inconsistent, "generated reconstruction fails invariant proportionality");
        return r;
    }
    fail(ErrorCode::GenerationFailed, "rejection budget exhausted; raise the coordinate bound");
}

bool certify_reconstruction(const Reconstruction& r) {
    const std::size_t n = r.x.size();
    if (n <= 4) return true;
    if (n == 5) return proportional_nonzero(g5_lifted(r.x, r.a_true), g5_lifted(r.y, r.b_true));
    if (n == 6) return equivalent(t6_lifted(r.x, r.a_true), t6_lifted(r.y, r.b_true));
    for (std::size_t first = 0; first + 7 <= n; ++first) {
        std::vector<std::size_t> idx(7);
        for (std::size_t i = 0; i < 7; ++i) idx[i] = first + i;
        if (!proportional_nonzero(fano15_lifted(r.x.subset(idx), r.a_true), fano15_lifted(r.y.subset(idx), r.b_true)))
            return false;
    }
    return true;
}

std::string_view to_string(DegenerateKind kind) {
    switch (kind) {
        case DegenerateKind::CoincidentPair: return "CoincidentPair";
        case DegenerateKind::FourCollinear: return "FourCollinear";
        case DegenerateKind::FiveCollinear: return "FiveCollinear";
        case DegenerateKind::OnConic: return "OnConic";
        case DegenerateKind::GenericCenter: return "GenericCenter";
        case DegenerateKind::CoplanarCenter: return "CoplanarCenter";
        case DegenerateKind::DoublyCoplanarCenter: return "DoublyCoplanarCenter";
        case DegenerateKind::CollinearCenter: return "CollinearCenter";
        case DegenerateKind::PointCenter: return "PointCenter";
    }
    return "?";
}

DegenerateKind parse_degenerate_kind(std::string_view text) {
    for (auto k : {DegenerateKind::CoincidentPair, DegenerateKind::FourCollinear, DegenerateKind::FiveCollinear,
                   DegenerateKind::OnConic, DegenerateKind::GenericCenter, DegenerateKind::CoplanarCenter,
                   DegenerateKind::DoublyCoplanarCenter, DegenerateKind::CollinearCenter, DegenerateKind::PointCenter})
        if (to_string(k) == text) return k;
    fail(ErrorCode::InvalidInput, "unknown degenerate kind '" + std::string(text) + "'");
}

DegenerateInstance generate_degenerate(DegenerateKind kind, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    if (n == 0) n = 7;
    switch (kind) {
        case DegenerateKind::CoincidentPair: {
            if (n < 3) fail(ErrorCode::InvalidInput, "need at least 3 points");
            auto pts = plane_general(rng, n).points();
            pts[1] = pts[0];
            return {Configuration(2, pts), std::nullopt};
        }
        case DegenerateKind::FourCollinear:
            if (n < 5) fail(ErrorCode::InvalidInput, "need at least 5 points");
            return {plane_with_line(rng, n, 4), std::nullopt};
        case DegenerateKind::FiveCollinear:
            if (n < 6) fail(ErrorCode::InvalidInput, "need at least 6 points");
            return {plane_with_line(rng, n, 5), std::nullopt};
        case DegenerateKind::OnConic: {
            std::uniform_int_distribution<int> d(-12, 12);
            std::vector<ProjectivePoint> pts;
            while (pts.size() < n) {
                const long s = d(rng), t = d(rng);
                if (s == 0 && t == 0) continue;
                const ProjectivePoint p{s * s, s * t, t * t};
                if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
            }
            return {Configuration(2, pts), std::nullopt};
        }
        default: break;
    }

    const Degeneration target = [&] {
        switch (kind) {
            case DegenerateKind::CoplanarCenter: return Degeneration::LinePlusConic;
            case DegenerateKind::DoublyCoplanarCenter: return Degeneration::ThreeLines;
            case DegenerateKind::CollinearCenter: return Degeneration::LinePlusPlane;
            case DegenerateKind::PointCenter: return Degeneration::AllOfP3;
            default: return Degeneration::SmoothCubic;
        }
    }();
    std::uniform_int_distribution<int> coef(1, 9);
    auto signed_coef = [&] { return (rng() & 1 ? 1 : -1) * coef(rng); };
    for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
        std::vector<ProjectivePoint> pts;
        while (pts.size() < 5) {
            const RVector v = random_vector(rng, 4, 10);
            if (nonzero(v)) pts.emplace_back(v);
        }
        const Configuration x(3, pts);
        if (!general_position(x)) continue;
        std::vector<std::size_t> idx = {0, 1, 2, 3, 4};
        std::shuffle(idx.begin(), idx.end(), rng);
        const auto& [i, j, k, p, q] = std::tie(x[idx[0]], x[idx[1]], x[idx[2]], x[idx[3]], x[idx[4]]);
        RVector a;
        switch (kind) {
            case DegenerateKind::GenericCenter: a = random_vector(rng, 4, 10); break;
            case DegenerateKind::CoplanarCenter:
                a = combination({{signed_coef(), &i}, {signed_coef(), &j}, {signed_coef(), &k}});
                break;
            case DegenerateKind::DoublyCoplanarCenter: {
                const Rational bq = bracket(i, j, k, q), bp = bracket(i, j, k, p);
                RVector m(4);
                for (std::size_t c = 0; c < 4; ++c) m[c] = bq * p[c] - bp * q[c];
                if (!nonzero(m)) continue;
                const ProjectivePoint mp(m);
                a = combination({{signed_coef(), &i}, {signed_coef(), &mp}});
                break;
            }
            case DegenerateKind::CollinearCenter: a = combination({{signed_coef(), &i}, {signed_coef(), &j}}); break;
            case DegenerateKind::PointCenter: a = i.rational(); break;
            default: break;
        }
        if (!nonzero(a)) continue;
        const ProjectivePoint center(a);
        if (classify_degeneration_n5(x, center) != target) continue;
        return {x, center};
    }
    fail(ErrorCode::GenerationFailed, "could not realize the requested degeneration");
}

}  // namespace centersvar
