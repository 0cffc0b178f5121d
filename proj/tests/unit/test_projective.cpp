#include "doctest.h"

#include <algorithm>
#include <random>

#include "centersvar/error.hpp"
#include "centersvar/projective.hpp"
#include "test_support.hpp"

using namespace centersvar;

using namespace centersvar::testing;

TEST_CASE("projective points are canonical") {
    const RVector v{Rational(-2), Rational(4), Rational(6, 5)};
    const ProjectivePoint p(v);
    CHECK(p == ProjectivePoint{5, -10, -3});
    CHECK(p.to_string() == "(5:-10:-3)");
    const RVector zero{Rational(0), Rational(0), Rational(0)};
    CHECK_THROWS_AS(ProjectivePoint(std::span<const Rational>(zero)), Error);
}

TEST_CASE("bracket values") {
    const ProjectivePoint e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
    CHECK(bracket(e1, e2, e3) == 1);
    CHECK(bracket(e1, e1, e3) == 0);
    CHECK(bracket(ProjectivePoint{1, 0, 0, 0}, ProjectivePoint{0, 1, 0, 0}, ProjectivePoint{0, 0, 1, 0},
                  ProjectivePoint{43, -50, 6, -5}) == -5);
    const ProjectivePoint two[] = {ProjectivePoint{1, 0, 0}, ProjectivePoint{0, 1, 0}};
    CHECK_THROWS_AS(bracket(std::span<const ProjectivePoint>(two)), Error);
}

TEST_CASE("bracket is alternating and multilinear") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const auto p = random_point(rng, 4), q = random_point(rng, 4), r = random_point(rng, 4),
                   s = random_point(rng, 4);
        CHECK(bracket(p, q, r, s) == -bracket(q, p, r, s));
        CHECK(bracket(p, q, r, s) == -bracket(p, q, s, r));
        CHECK(bracket(p, p, r, s) == 0);
        // Additivity in the first slot, applied to raw coordinates.
        RVector sum = p.rational();
        for (std::size_t i = 0; i < 4; ++i) sum[i] += q[i];
        const auto t = random_point(rng, 4);
        RMatrix m(4, 4);
        for (std::size_t j = 0; j < 4; ++j) {
            m(0, j) = sum[j];
            m(1, j) = r[j];
            m(2, j) = s[j];
            m(3, j) = t[j];
        }
        CHECK(det(m) == bracket(p, r, s, t) + bracket(q, r, s, t));
    }
}

TEST_CASE("projection through the canonical camera") {
    const ProjectivePoint a{43, -50, 6, -5};
    CHECK(project(ProjectivePoint{1, 0, 0, 0}, a) == ProjectivePoint{1, 0, 0});
    CHECK(project(ProjectivePoint{1, 1, 1, 1}, a) == ProjectivePoint{43 + 5, -50 + 5, 6 + 5});
    const ProjectivePoint r{3, -7, 2, 9};
    CHECK(project(r, a) == ProjectivePoint{9 * 43 - 3 * -5, 9 * -50 - -7 * -5, 9 * 6 - 2 * -5});
    CHECK_THROWS_AS(project(a, a), Error);
    // a3 = 0 uses the first nonzero coordinate as chart.
    const ProjectivePoint b{0, 2, 1, 0};
    CHECK(project(ProjectivePoint{1, 0, 0, 0}, b) == ProjectivePoint{1, 0, 0});
    CHECK(project(ProjectivePoint{0, 0, 0, 1}, b) == ProjectivePoint{0, 0, 1});
    const CameraMatrix cam = CameraMatrix::canonical(a);
    CHECK(cam.center() == a);
    std::mt19937_64 rng(12);
    for (int i = 0; i < 20; ++i) {
        const auto x = random_point(rng, 4);
        if (x == a) continue;
        CHECK(cam.apply(x) == project(x, a));
    }
}

TEST_CASE("projection ignores representative scaling") {
    const RVector x{Rational(2, 3), Rational(-1), Rational(5), Rational(1, 7)};
    RVector x2 = x;
    for (auto& c : x2) c *= Rational(-11, 4);
    const ProjectivePoint a{1, 2, 3, 4};
    CHECK(project(ProjectivePoint(x), a) == project(ProjectivePoint(x2), a));
}

TEST_CASE("homography fitting") {
    std::mt19937_64 rng(13);
    const Configuration p = random_configuration(rng, 6, 2);
    const auto id = homography_fit(p, p);
    REQUIRE(id.has_value());
    CHECK(proportional(id->data(), RMatrix::identity(3).data()));
    for (int trial = 0; trial < 10; ++trial) {
        const RMatrix h0 = random_invertible(rng, 3);
        const Configuration q = p.transformed(h0);
        const auto h = homography_fit(p, q);
        REQUIRE(h.has_value());
        CHECK(proportional(h->data(), h0.data()));
        for (std::size_t i = 0; i < p.size(); ++i) CHECK(proportional(*h * p[i].rational(), q[i].rational()));
        auto pts = q.points();
        RVector moved = pts[5].rational();
        moved[0] += 1;
        pts[5] = ProjectivePoint(moved);
        CHECK_FALSE(homography_fit(p, Configuration(2, pts)).has_value());
    }
    const Configuration collinear(2, {ProjectivePoint{1, 0, 0}, ProjectivePoint{0, 1, 0}, ProjectivePoint{1, 1, 0},
                                      ProjectivePoint{0, 0, 1}, ProjectivePoint{1, 2, 3}});
    CHECK_THROWS_AS(homography_fit(collinear, collinear), Error);
}

TEST_CASE("stability classes") {
    std::mt19937_64 rng(14);
    const Configuration five = random_configuration(rng, 5, 2);
    CHECK(stability_class(five) == StabilityClass::Stable);
    auto six = random_configuration(rng, 6, 2).points();
    six[4] = six[1];
    CHECK(stability_class(Configuration(2, six)) == StabilityClass::StrictlySemistable);
    std::vector<ProjectivePoint> seven;
    for (long i = 0; i < 5; ++i) seven.push_back(ProjectivePoint{1, i, 0});
    seven.push_back(ProjectivePoint{0, 0, 1});
    seven.push_back(ProjectivePoint{1, 1, 1});
    CHECK(stability_class(Configuration(2, seven)) == StabilityClass::Unstable);
    seven[4] = ProjectivePoint{2, 3, 5};
    CHECK(stability_class(Configuration(2, seven)) == StabilityClass::Stable);
    // Six points with four on a line: semistable, not stable.
    std::vector<ProjectivePoint> four_line;
    for (long i = 0; i < 4; ++i) four_line.push_back(ProjectivePoint{1, i, 0});
    four_line.push_back(ProjectivePoint{0, 0, 1});
    four_line.push_back(ProjectivePoint{1, 1, 1});
    CHECK(stability_class(Configuration(2, four_line)) == StabilityClass::StrictlySemistable);
    auto five_pts = five.points();
    five_pts[3] = five_pts[0];
    CHECK(stability_class(Configuration(2, five_pts)) == StabilityClass::Unstable);
    CHECK_THROWS_AS(stability_class(random_configuration(rng, 4, 2)), Error);
}

TEST_CASE("stability is invariant under permutations and transforms") {
    std::mt19937_64 rng(15);
    std::vector<ProjectivePoint> seven;
    for (long i = 0; i < 4; ++i) seven.push_back(ProjectivePoint{1, i, 2 * i});
    for (int i = 0; i < 3; ++i) seven.push_back(random_point(rng, 3));
    const Configuration c(2, seven);
    const StabilityClass base = stability_class(c);
    for (int trial = 0; trial < 5; ++trial) {
        auto pts = seven;
        std::shuffle(pts.begin(), pts.end(), rng);
        const Configuration moved = Configuration(2, pts).transformed(random_invertible(rng, 3));
        CHECK(stability_class(moved) == base);
    }
}

TEST_CASE("center admissibility") {
    std::mt19937_64 rng(16);
    const Configuration six = random_configuration(rng, 6, 3);
    CHECK_FALSE(center_admissible(six, six[2], AdmissibilityMode::Moduli));
    CHECK(center_admissible(six, random_point(rng, 4), AdmissibilityMode::Moduli));
    const Configuration five = random_configuration(rng, 5, 3);
    RVector on_line = five[0].rational();
    for (std::size_t i = 0; i < 4; ++i) on_line[i] += 3 * five[1][i];
    CHECK_FALSE(center_admissible(five, ProjectivePoint(on_line), AdmissibilityMode::Moduli));
    const Configuration seven = random_configuration(rng, 7, 3);
    CHECK(center_admissible(seven, random_point(rng, 4), AdmissibilityMode::Goepel));
    RVector on_line7 = seven[3].rational();
    for (std::size_t i = 0; i < 4; ++i) on_line7[i] -= 2 * seven[6][i];
    CHECK_FALSE(center_admissible(seven, ProjectivePoint(on_line7), AdmissibilityMode::Goepel));
    CHECK(center_admissible(seven, ProjectivePoint(on_line7), AdmissibilityMode::Moduli));
}

TEST_CASE("association of five plane points lives on the line") {
    std::mt19937_64 rng(17);
    const Configuration g = gale_transform(random_configuration(rng, 5, 2));
    CHECK(g.ambient_dim() == 1);
    CHECK(g.size() == 5);
    const Configuration deficient(2, {ProjectivePoint{1, 0, 0}, ProjectivePoint{0, 1, 0}, ProjectivePoint{1, 1, 0},
                                      ProjectivePoint{2, 1, 0}, ProjectivePoint{1, 3, 0}});
    CHECK_THROWS_AS(gale_transform(deficient), Error);
}

TEST_CASE("normalizing transform sends the leading points to the standard frame") {
    std::mt19937_64 rng(18);
    const Configuration x = random_configuration(rng, 6, 3);
    const RMatrix u = normalizing_transform(x);
    const Configuration fr = standard_frame_p3();
    for (std::size_t i = 0; i < 5; ++i) CHECK(ProjectivePoint(u * x[i].rational()) == fr[i]);
}
