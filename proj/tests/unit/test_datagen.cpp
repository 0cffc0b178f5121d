#include "doctest.h"

#include "centersvar/datagen.hpp"
#include "centersvar/error.hpp"
#include "centersvar/exact_linalg.hpp"
#include "centersvar/invariants.hpp"
#include "centersvar/loci.hpp"

using namespace centersvar;

TEST_CASE("reconstruction is deterministic per seed") {
    const Reconstruction a = generate_reconstruction(6, 42);
    const Reconstruction b = generate_reconstruction(6, 42);
    CHECK(a.x.points() == b.x.points());
    CHECK(a.y.points() == b.y.points());
    CHECK(a.a_true == b.a_true);
    const Reconstruction c = generate_reconstruction(6, 43);
    CHECK(c.x.points() != a.x.points());
}

TEST_CASE("reconstruction matches its cameras") {
    for (std::size_t n : {4, 5, 6, 7}) {
        CAPTURE(n);
        const Reconstruction r = generate_reconstruction(n, 3);
        REQUIRE(r.x.size() == n);
        REQUIRE(r.z.size() == n);
        CHECK(r.a_prime.rows() == 4);
        CHECK(r.a_prime.cols() == 5);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(r.x[i] == ProjectivePoint(r.a_prime * r.z[i].rational()));
            CHECK(r.y[i] == ProjectivePoint(r.b_prime * r.z[i].rational()));
        }
        CHECK(r.a_true == ProjectivePoint(r.a_prime * r.b_prime_center.rational()));
        CHECK(r.b_true == ProjectivePoint(r.b_prime * r.a_prime_center.rational()));
        CHECK(certify_reconstruction(r));
    }
}

TEST_CASE("certification rejects a tampered center") {
    Reconstruction r = generate_reconstruction(5, 0);
    RVector b = r.b_true.rational();
    b[0] += 1;
    r.b_true = ProjectivePoint(b);
    CHECK_FALSE(certify_reconstruction(r));
}

TEST_CASE("coordinate bound is respected") {
    CHECK_THROWS_AS(generate_reconstruction(5, 9, 3), Error);
    const Reconstruction r = generate_reconstruction(5, 9, 12);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            CHECK(abs(r.a_prime(i, j)) <= 12);
            CHECK(abs(r.b_prime(i, j)) <= 12);
        }
}

TEST_CASE("plane degeneration kinds") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto pair = generate_degenerate(DegenerateKind::CoincidentPair, 7, seed).points;
        CHECK(pair.size() == 7);
        CHECK(pair[0] == pair[1]);
        for (const auto& v : fano15(pair).values) CHECK(sgn(v) == 0);

        const auto conic = generate_degenerate(DegenerateKind::OnConic, 6, seed).points;
        CHECK(sgn(t6(conic).values[5]) == 0);

        const auto four = generate_degenerate(DegenerateKind::FourCollinear, 7, seed).points;
        const ProjectivePoint line[] = {four[0], four[1], four[2], four[3]};
        CHECK(span_rank(line) == 2);
        CHECK(stability_class(four) == StabilityClass::Stable);

        const auto five = generate_degenerate(DegenerateKind::FiveCollinear, 7, seed).points;
        CHECK(stability_class(five) == StabilityClass::Unstable);
    }
}

TEST_CASE("degenerate kinds parse and print") {
    for (auto k : {DegenerateKind::CoincidentPair, DegenerateKind::OnConic, DegenerateKind::PointCenter})
        CHECK(parse_degenerate_kind(to_string(k)) == k);
    CHECK_THROWS_AS(parse_degenerate_kind("Nonsense"), Error);
}

TEST_CASE("center kinds carry a center") {
    const auto inst = generate_degenerate(DegenerateKind::CollinearCenter, 0, 1);
    REQUIRE(inst.center.has_value());
    CHECK(inst.points.size() == 5);
    CHECK(classify_degeneration_n5(inst.points, *inst.center) == Degeneration::LinePlusPlane);
}
