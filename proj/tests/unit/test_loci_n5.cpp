#include "doctest.h"

#include <random>

#include "centersvar/datagen.hpp"
#include "centersvar/error.hpp"
#include "centersvar/invariants.hpp"
#include "centersvar/loci.hpp"
#include "centersvar/mpoly.hpp"
#include "test_support.hpp"

using namespace centersvar;
using namespace centersvar::testing;

namespace {

Configuration standard_five() { return standard_frame_p3(); }

std::vector<Form> printed_quadrics() {
    return {Form::from_mpoly(parse_mpoly("28b1b2+27b1b3-55b2b3", 4, 'b')),
            Form::from_mpoly(parse_mpoly("185b0b2+288b0b3-473b2b3", 4, 'b')),
            Form::from_mpoly(parse_mpoly("31b0b1-160b0b3+129b1b3", 4, 'b'))};
}

Configuration general_five(std::mt19937_64& rng) {
    for (;;) {
        const Configuration c = random_configuration(rng, 5, 3, 12);
        bool ok = true;
        for (std::size_t s = 0; s < 5 && ok; ++s) {
            std::vector<ProjectivePoint> four;
            for (std::size_t i = 0; i < 5; ++i)
                if (i != s) four.push_back(c[i]);
            ok = span_rank(four) == 4;
        }
        if (ok) return c;
    }
}

bool on_all(const std::array<Form, 3>& qs, const RVector& z) {
    for (const auto& q : qs)
        if (sgn(q(z)) != 0) return false;
    return true;
}

RVector lin(const ProjectivePoint& p, const Rational& s, const ProjectivePoint& q, const Rational& t) {
    RVector v(4);
    for (std::size_t i = 0; i < 4; ++i) v[i] = s * p[i] + t * q[i];
    return v;
}

}  // namespace

TEST_CASE("golden fiber: the three printed quadrics span the computed ideal") {
    const Configuration x = standard_five();
    const ProjectivePoint a{43, -50, 6, -5};
    const TwistedCubic c = cubic_locus_n5(x, x, a);
    const std::vector<Form> computed(c.quadrics.begin(), c.quadrics.end());
    CHECK(span_dimension(computed) == 3);
    CHECK(same_span(computed, printed_quadrics()));
    for (const auto& p : x.points()) CHECK(c.contains(p));
    CHECK(c.contains(a));
}

TEST_CASE("cubic through Y for random data, and the pencil parametrization") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 5; ++trial) {
        const Configuration x = general_five(rng), y = general_five(rng);
        ProjectivePoint a = random_point(rng, 4, 15);
        if (classify_degeneration_n5(x, a) != Degeneration::SmoothCubic) continue;
        const TwistedCubic c = cubic_locus_n5(x, y, a);
        for (const auto& p : y.points()) CHECK(c.contains(p));
        REQUIRE(c.param.has_value());
        for (int k = 0; k < 10; ++k) {
            const ProjectiveParameter t{Rational(k % 3 + 1), Rational(k * 7 - 20, k + 1)};
            CHECK(on_all(c.quadrics, c.param->evaluate(t)));
        }
        CHECK(on_all(c.quadrics, c.param->evaluate({0, 1})));
        std::vector<ProjectiveParameter> params;
        for (const auto& p : y.points()) {
            auto t = c.param->parameter_of(p);
            REQUIRE(t.has_value());
            CHECK((*c.param)(*t) == p);
            for (const auto& other : params) CHECK_FALSE(proportional(RVector{other.s, other.t}, RVector{t->s, t->t}));
            params.push_back(*t);
        }
        // A plane meets the curve in three parameters.
        const ProjectivePoint h = random_point(rng, 4, 9);
        const BinaryForm section = c.param->restrict(Form(1, h.rational()));
        CHECK_FALSE(section.is_zero());
        CHECK(section.degree == 3);
    }
}

TEST_CASE("n=5 soundness along the golden cubic") {
    const Configuration x = standard_five();
    const ProjectivePoint a{43, -50, 6, -5};
    const TwistedCubic c = cubic_locus_n5(x, x, a);
    REQUIRE(c.param.has_value());
    const InvariantVector ga = g5_lifted(x, a);
    std::mt19937_64 rng(52);
    std::uniform_int_distribution<int> d(-30, 30);
    int checked = 0;
    for (int k = 0; k < 50; ++k) {
        ProjectiveParameter t{Rational(d(rng)), Rational(d(rng))};
        if (sgn(t.s) == 0 && sgn(t.t) == 0) continue;
        const ProjectivePoint b = (*c.param)(t);
        if (!center_admissible(x, b, AdmissibilityMode::Moduli)) continue;
        ++checked;
        CHECK(proportional(ga.values, g5_lifted(x, b).values));
    }
    CHECK(checked > 40);
}

TEST_CASE("oracle reconstructions: b_true is on the cubic") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Reconstruction r = generate_reconstruction(5, seed, 10);
        const TwistedCubic c = cubic_locus_n5(r.x, r.y, r.a_true);
        CHECK(c.contains(r.b_true));
        for (const auto& p : r.y.points()) CHECK(c.contains(p));
    }
}

TEST_CASE("inadmissible centers and degenerate frames are refused") {
    const Configuration x = standard_five();
    CHECK_THROWS_WITH_AS(cubic_locus_n5(x, x, ProjectivePoint{1, 1, 0, 0}), doctest::Contains("line"), Error);
    try {
        cubic_locus_n5(x, x, ProjectivePoint{1, 1, 0, 0});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InadmissibleCenter);
    }
    const Configuration flat(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {3, 1, 4, 1}});
    try {
        cubic_locus_n5(flat, x, ProjectivePoint{43, -50, 6, -5});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK((e.code() == ErrorCode::DegenerateInput || e.code() == ErrorCode::InadmissibleCenter));
    }
}

TEST_CASE("degeneration classes of generated centers") {
    const std::pair<DegenerateKind, Degeneration> cases[] = {
        {DegenerateKind::GenericCenter, Degeneration::SmoothCubic},
        {DegenerateKind::CoplanarCenter, Degeneration::LinePlusConic},
        {DegenerateKind::DoublyCoplanarCenter, Degeneration::ThreeLines},
        {DegenerateKind::CollinearCenter, Degeneration::LinePlusPlane},
        {DegenerateKind::PointCenter, Degeneration::AllOfP3},
    };
    for (const auto& [kind, expected] : cases)
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            const DegenerateInstance inst = generate_degenerate(kind, 5, seed);
            REQUIRE(inst.center.has_value());
            CHECK(classify_degeneration_n5(inst.points, *inst.center) == expected);
        }
    const Configuration x = standard_five();
    CHECK(classify_degeneration_n5(x, ProjectivePoint{43, -50, 6, -5}) == Degeneration::SmoothCubic);
    CHECK(classify_degeneration_n5(x, ProjectivePoint{2, 3, 5, 0}) == Degeneration::LinePlusConic);
    CHECK(classify_degeneration_n5(x, x[1]) == Degeneration::AllOfP3);
}

TEST_CASE("line plus conic: the fiber contains both predicted components") {
    std::mt19937_64 rng(53);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const DegenerateInstance inst = generate_degenerate(DegenerateKind::CoplanarCenter, 5, seed);
        const Configuration y = general_five(rng);
        const TwistedCubic c = cubic_locus_n5(inst.points, y, *inst.center);
        const auto comps = predicted_components_n5(inst.points, y, *inst.center);
        REQUIRE(comps.size() == 2);
        const LocusComponent* conic = nullptr;
        const LocusComponent* line = nullptr;
        for (const auto& comp : comps) {
            if (comp.type == LocusComponent::Type::Conic) conic = &comp;
            if (comp.type == LocusComponent::Type::Line) line = &comp;
        }
        REQUIRE(conic);
        REQUIRE(line);
        for (int k = 1; k <= 5; ++k) CHECK(on_all(c.quadrics, lin(line->span[0], k, line->span[1], 7 - 3 * k)));
        // The conic: a nonzero restriction of a quadric to the plane, met by lines
        // through its first spanning point.
        const ProjectivePoint& p = conic->span[0];
        const ProjectivePoint& u = conic->span[1];
        const ProjectivePoint& v = conic->span[2];
        int sampled = 0;
        for (int k = 1; sampled < 5 && k < 40; ++k) {
            const RVector d = [&] {
                RVector r(4);
                for (std::size_t i = 0; i < 4; ++i) r[i] = Rational(u[i]) + Rational(k) * v[i];
                return r;
            }();
            for (const auto& q : c.quadrics) {
                const RMatrix s = q.to_symmetric();
                Rational bpd = 0, qd = 0;
                for (std::size_t i = 0; i < 4; ++i)
                    for (std::size_t j = 0; j < 4; ++j) {
                        bpd += Rational(p[i]) * s(i, j) * d[j];
                        qd += d[i] * s(i, j) * d[j];
                    }
                if (sgn(qd) == 0) continue;
                const Rational lambda = -2 * bpd / qd;
                RVector pt(4);
                for (std::size_t i = 0; i < 4; ++i) pt[i] = Rational(p[i]) + lambda * d[i];
                CHECK(on_all(c.quadrics, pt));
                ++sampled;
                break;
            }
        }
        CHECK(sampled == 5);
    }
}

TEST_CASE("three lines: every predicted line lies in the fiber") {
    std::mt19937_64 rng(54);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const DegenerateInstance inst = generate_degenerate(DegenerateKind::DoublyCoplanarCenter, 5, seed);
        const Configuration y = general_five(rng);
        const TwistedCubic c = cubic_locus_n5(inst.points, y, *inst.center);
        const auto comps = predicted_components_n5(inst.points, y, *inst.center);
        REQUIRE(comps.size() == 3);
        for (const auto& comp : comps) {
            CHECK(comp.type == LocusComponent::Type::Line);
            for (int k = 1; k <= 5; ++k) CHECK(on_all(c.quadrics, lin(comp.span[0], 2 * k - 3, comp.span[1], k)));
        }
    }
}

TEST_CASE("line plus plane and all of P3 are reported as components") {
    std::mt19937_64 rng(55);
    const Configuration y = general_five(rng);
    const DegenerateInstance col = generate_degenerate(DegenerateKind::CollinearCenter, 5, 1);
    const auto comps = predicted_components_n5(col.points, y, *col.center);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].type == LocusComponent::Type::Line);
    CHECK(comps[1].type == LocusComponent::Type::Plane);
    CHECK(span_rank(comps[1].span) == 3);
    const DegenerateInstance pt = generate_degenerate(DegenerateKind::PointCenter, 5, 1);
    const auto all = predicted_components_n5(pt.points, y, *pt.center);
    REQUIRE(all.size() == 1);
    CHECK(all[0].type == LocusComponent::Type::Space);
}

TEST_CASE("n <= 4: a witness homography always exists") {
    std::mt19937_64 rng(56);
    for (std::size_t n : {3u, 4u})
        for (int trial = 0; trial < 5; ++trial) {
            const Configuration x = random_configuration(rng, n, 3, 10), y = random_configuration(rng, n, 3, 10);
            const ProjectivePoint a = random_point(rng, 4, 10), b = random_point(rng, 4, 10);
            const auto h = centers_n_le4(x, y, a, b);
            REQUIRE(h.has_value());
            const Configuration px = project(x, a), py = project(y, b);
            for (std::size_t i = 0; i < n; ++i) CHECK(proportional(*h * py[i].rational(), px[i].rational()));
        }
    // Three collinear image points on one side only.
    const Configuration x(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}});
    const Configuration y(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 1}});
    try {
        centers_n_le4(x, y, ProjectivePoint{0, 0, 0, 1}, ProjectivePoint{1, 2, 3, 5});
        FAIL("expected DegenerateInput");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateInput);
    }
}
