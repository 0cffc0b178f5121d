#pragma once

#include <algorithm>
#include <random>
#include <set>

#include "centersvar/exact_linalg.hpp"
#include "centersvar/projective.hpp"

namespace centersvar::testing {

inline ProjectivePoint random_point(std::mt19937_64& rng, std::size_t size, int bound = 20) {
    std::uniform_int_distribution<int> d(-bound, bound);
    for (;;) {
        RVector v(size);
        for (auto& c : v) c = d(rng);
        if (std::any_of(v.begin(), v.end(), [](const Rational& c) { return sgn(c) != 0; }))
            return ProjectivePoint(std::span<const Rational>(v));
    }
}

inline Configuration random_configuration(std::mt19937_64& rng, std::size_t n, std::size_t dim, int bound = 20) {
    std::vector<ProjectivePoint> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(random_point(rng, dim + 1, bound));
    return Configuration(dim, pts);
}

inline RMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> d(-9, 9);
    for (;;) {
        RMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
        if (sgn(det(m)) != 0) return m;
    }
}

// Distinct points (s^2 : s t : t^2) on the conic xz = y^2.
inline Configuration random_conic_points(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> d(-12, 12);
    std::set<ProjectivePoint> seen;
    std::vector<ProjectivePoint> pts;
    while (pts.size() < n) {
        const long s = d(rng), t = d(rng);
        if (s == 0 && t == 0) continue;
        const ProjectivePoint p{s * s, s * t, t * t};
        if (seen.insert(p).second) pts.push_back(p);
    }
    return Configuration(2, pts);
}

// Seven plane points with the first four on a line and no other degeneracy.
inline Configuration four_collinear_seven(std::mt19937_64& rng) {
    for (;;) {
        const ProjectivePoint p = random_point(rng, 3), q = random_point(rng, 3);
        if (p == q) continue;
        std::vector<ProjectivePoint> pts;
        for (long k : {1L, 2L, -3L, 5L}) {
            RVector v = p.rational();
            for (std::size_t i = 0; i < 3; ++i) v[i] += k * q[i];
            if (std::all_of(v.begin(), v.end(), [](const Rational& c) { return sgn(c) == 0; })) break;
            pts.emplace_back(v);
        }
        if (pts.size() < 4) continue;
        for (int i = 0; i < 3; ++i) pts.push_back(random_point(rng, 3));
        const Configuration c(2, pts);
        // Reject accidental extra collinearities or coincidences.
        bool ok = true;
        for (std::size_t i = 0; i < 7 && ok; ++i)
            for (std::size_t j = i + 1; j < 7 && ok; ++j) {
                if (c[i] == c[j]) ok = false;
                for (std::size_t k = j + 1; k < 7 && ok; ++k)
                    if ((i >= 4 || j >= 4 || k >= 4) && sgn(bracket(c[i], c[j], c[k])) == 0) ok = false;
            }
        if (ok) return c;
    }
}

}  // namespace centersvar::testing
