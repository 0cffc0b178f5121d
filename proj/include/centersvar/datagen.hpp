#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "centersvar/projective.hpp"

namespace centersvar {

/// A scene Z in P^4 seen by two cameras P^4 -> P^3, with the ambiguous center
/// pair it induces.
struct Reconstruction {
    Configuration z;
    RMatrix a_prime;  // 4 x 5
    RMatrix b_prime;  // 4 x 5
    ProjectivePoint a_prime_center;
    ProjectivePoint b_prime_center;
    Configuration x;
    Configuration y;
    ProjectivePoint a_true;
    ProjectivePoint b_true;
};

/// Samples integer scenes and cameras with entries in [-bound, bound] until
/// all genericity predicates for n hold. Deterministic per (n, seed, bound).
Reconstruction generate_reconstruction(std::size_t n, std::uint64_t seed, int coord_bound = 10);

/// Checks the invariant proportionality between (X, a_true) and (Y, b_true)
/// that the construction guarantees. Trivially true for n <= 4.
bool certify_reconstruction(const Reconstruction& r);

enum class DegenerateKind {
    CoincidentPair,
    FourCollinear,
    FiveCollinear,
    OnConic,
    GenericCenter,
    CoplanarCenter,
    DoublyCoplanarCenter,
    CollinearCenter,
    PointCenter,
};
std::string_view to_string(DegenerateKind kind);
DegenerateKind parse_degenerate_kind(std::string_view text);

struct DegenerateInstance {
    Configuration points;
    std::optional<ProjectivePoint> center;
};

/// Plane kinds return n points of P^2 (n = 7 if 0 is passed). Center kinds
/// return 5 points of P^3 together with a center in the named position
/// relative to them; n is ignored.
DegenerateInstance generate_degenerate(DegenerateKind kind, std::size_t n, std::uint64_t seed);

}  // namespace centersvar
