#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "centersvar/exact_linalg.hpp"
#include "centersvar/rational.hpp"

namespace centersvar {

/// Point of P^d stored in canonical form: the primitive integer vector whose
/// first nonzero entry is positive. Projective equality is plain equality.
class ProjectivePoint {
  public:
    ProjectivePoint() = default;
    /// Throws InvalidInput for the zero vector.
    explicit ProjectivePoint(std::span<const Rational> coords);
    ProjectivePoint(std::initializer_list<long> coords);
    static ProjectivePoint from_integers(std::span<const Integer> coords);

    /// Projective dimension d (coordinate count minus one).
    std::size_t dim() const noexcept { return coords_.empty() ? 0 : coords_.size() - 1; }
    std::size_t size() const noexcept { return coords_.size(); }
    const std::vector<Integer>& coords() const noexcept { return coords_; }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }
    RVector rational() const { return {coords_.begin(), coords_.end()}; }
    std::string to_string() const;

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) = default;
    friend auto operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) = default;

  private:
    std::vector<Integer> coords_;
};

/// Ordered, labeled points of a common P^d.
class Configuration {
  public:
    Configuration() = default;
    Configuration(std::size_t ambient_dim, std::vector<ProjectivePoint> points);
    explicit Configuration(std::vector<ProjectivePoint> points);

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<ProjectivePoint>& points() const noexcept { return points_; }
    const ProjectivePoint& operator[](std::size_t i) const { return points_[i]; }

    /// Configuration with the point at `index` removed.
    Configuration without(std::size_t index) const;
    /// Sub-configuration picking the given (0-based) indices in order.
    Configuration subset(std::span<const std::size_t> indices) const;
    /// Applies a (d+1)x(d+1) matrix to every point.
    Configuration transformed(const RMatrix& h) const;
    /// (d+1) x n matrix with the points as columns.
    RMatrix coordinate_matrix() const;

    friend bool operator==(const Configuration& a, const Configuration& b) = default;

  private:
    std::size_t ambient_dim_ = 0;
    std::vector<ProjectivePoint> points_;
};

/// d x (d+1) camera matrix of rank d; its center is the kernel.
class CameraMatrix {
  public:
    explicit CameraMatrix(RMatrix entries);
    /// The chart-intersection camera with the given center (see project()).
    static CameraMatrix canonical(const ProjectivePoint& center);

    const RMatrix& entries() const noexcept { return entries_; }
    ProjectivePoint center() const;
    ProjectivePoint apply(const ProjectivePoint& x) const;

  private:
    RMatrix entries_;
};

enum class StabilityClass { Stable, StrictlySemistable, Unstable };
std::string_view to_string(StabilityClass c);

enum class AdmissibilityMode { Moduli, Goepel };

/// Determinant of the matrix whose rows are the canonical coordinates of k
/// points of P^(k-1), in the given order.
Rational bracket(std::span<const ProjectivePoint> points);
Rational bracket(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& r);
Rational bracket(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& r,
                 const ProjectivePoint& s);

/// Unnormalized chart projection of x from center a: a_k x - x_k a with the
/// k-th coordinate dropped, where k = 3 when a_3 != 0 and otherwise the first
/// index with a_k != 0. Returned vector may be zero when x == a.
RVector project_raw(const RVector& x, const RVector& a);

/// Image of x under the canonical camera with center a. Throws CenterHit when
/// x == a.
ProjectivePoint project(const ProjectivePoint& x, const ProjectivePoint& a);
Configuration project(const Configuration& x, const ProjectivePoint& a);

/// Exact homography H with H p_i ~ q_i for all i, if one exists. The first four
/// points of p must be in general position (DegenerateInput otherwise).
std::optional<RMatrix> homography_fit(const Configuration& p, const Configuration& q);

/// True iff every 2x2 minor of [u | v] vanishes (u and v proportional).
bool proportional(std::span<const Rational> u, std::span<const Rational> v);

/// GIT stability of n in {5, 6, 7} points of P^2 (Hilbert-Mumford numerics).
StabilityClass stability_class(const Configuration& p);

/// Whether a avoids the indeterminacy locus for projecting X.
bool center_admissible(const Configuration& x, const ProjectivePoint& a, AdmissibilityMode mode);

/// True iff a lies on a line through two distinct points of X (or on X).
bool on_secant_line(const Configuration& x, const ProjectivePoint& a);

/// Association: rows of a kernel basis of the (d+1) x n coordinate matrix, as
/// n points of P^(n-d-2).
Configuration gale_transform(const Configuration& p);

/// The frame of P^3 used for normalization: e0, e1, e2, e3, (1,1,1,1).
Configuration standard_frame_p3();

/// U with U x_i ~ e_i (i < 4) and U x_4 ~ (1,1,1,1), from the first five
/// points. Throws DegenerateInput when they are not in general position.
RMatrix normalizing_transform(const Configuration& x);

/// Rank of the matrix with the given points as rows.
std::size_t span_rank(std::span<const ProjectivePoint> points);

}  // namespace centersvar
