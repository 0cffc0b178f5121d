#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "centersvar/forms.hpp"
#include "centersvar/poly.hpp"
#include "centersvar/projective.hpp"

namespace centersvar {

/// Quadric surface z^T S z = 0, S symmetric, defined up to scale.
struct QuadricSurface {
    RMatrix sym;

    Form form() const { return Form::from_symmetric(sym); }
    Rational operator()(const RVector& z) const;
    bool contains(const ProjectivePoint& p) const { return is_zero((*this)(p.rational())); }
    /// Same surface (proportional matrices).
    bool same_as(const QuadricSurface& other) const;
};

/// Rational curve t -> (c0(t) : c1(t) : c2(t) : c3(t)) with binary cubic
/// coordinates in the parameter (s : t).
struct CubicParametrization {
    std::array<BinaryForm, 4> coords;

    RVector evaluate(const ProjectiveParameter& at) const;
    /// Throws DegenerateCurve if every coordinate vanishes at the parameter.
    ProjectivePoint operator()(const ProjectiveParameter& at) const;
    /// Pullback of a form to a binary form of degree 3 * deg(form).
    BinaryForm restrict(const Form& f) const;
    /// Parameter mapping to p, if p is on the curve and the parameter is rational.
    std::optional<ProjectiveParameter> parameter_of(const ProjectivePoint& p) const;
};

/// A twisted cubic by the degree-2 part of its ideal.
struct TwistedCubic {
    std::array<Form, 3> quadrics;
    Configuration base_points;
    std::optional<CubicParametrization> param;

    bool contains(const ProjectivePoint& p) const;
};

enum class Degeneration { SmoothCubic, LinePlusConic, ThreeLines, LinePlusPlane, AllOfP3 };
std::string_view to_string(Degeneration d);

/// One component of the predicted b-locus for a degenerate center. Lines and
/// planes are the spans of `span`; a conic lies in the plane spanned by `span`
/// and passes through those three points.
struct LocusComponent {
    enum class Type { Line, Conic, Plane, Space };
    Type type = Type::Space;
    std::vector<ProjectivePoint> span;
};
std::string_view to_string(LocusComponent::Type t);

/// Floating-point point of P^3 found by the numeric solver.
struct NumericPoint {
    std::array<std::complex<double>, 4> coords{};
    double residual = 0.0;
    bool is_real = false;
    /// Set when the point was recognized as rational and verified exactly.
    std::optional<ProjectivePoint> exact;
};

/// Sine of the angle between the complex lines spanned by u and v.
double projective_distance(std::span<const std::complex<double>> u, std::span<const std::complex<double>> v);
double projective_distance(const NumericPoint& p, const ProjectivePoint& q);

struct SolverOptions {
    double tol = 1e-9;
    std::uint64_t seed = 0;
};

// n <= 4

/// Witness homography H with H * project(Y, b) ~ project(X, a).
std::optional<RMatrix> centers_n_le4(const Configuration& x, const Configuration& y, const ProjectivePoint& a,
                                     const ProjectivePoint& b);

// n = 5

TwistedCubic cubic_locus_n5(const Configuration& x, const Configuration& y, const ProjectivePoint& a);

/// Parametrizes a twisted cubic by the pencil of planes through its first two
/// base points: parameter (s : t) is the plane spanned by those points and
/// s w0 + t w1 for a fixed complement w0, w1.
CubicParametrization cubic_param_n5(const TwistedCubic& cubic);

Degeneration classify_degeneration_n5(const Configuration& x, const ProjectivePoint& a);

/// Components of the b-locus predicted for the degeneration of (X, a).
std::vector<LocusComponent> predicted_components_n5(const Configuration& x, const Configuration& y,
                                                    const ProjectivePoint& a);

// n = 6

struct QuadricPair {
    QuadricSurface s_beta;
    QuadricSurface s_alpha;
    RVector beta;
    RVector alpha;
};

QuadricPair quadric_pair_n6(const Configuration& x, const Configuration& y);

ProjectivePoint map_a_to_b_n6(const Configuration& x, const Configuration& y, const ProjectivePoint& a);
ProjectivePoint map_b_to_a_n6(const Configuration& x, const Configuration& y, const ProjectivePoint& b);

/// Rational points of a quadric surface obtained as second intersections of
/// random rational lines through a known point of it.
std::vector<ProjectivePoint> sample_quadric(const QuadricSurface& q, const ProjectivePoint& known, std::size_t count,
                                            std::uint64_t seed);

// n >= 7

/// All isolated common zeros of the forms (quadrics), numerically, by
/// homotopy continuation on three random combinations in a random chart.
std::vector<NumericPoint> solve_quadric_system(const std::vector<Form>& forms, std::optional<std::size_t> expected,
                                               const SolverOptions& opts);

struct CandidatesN7 {
    std::vector<NumericPoint> a;
    std::vector<NumericPoint> b;
    std::vector<QuadricSurface> s_beta;
    std::vector<QuadricSurface> s_alpha;
};

CandidatesN7 candidates_n7(const Configuration& x, const Configuration& y, const SolverOptions& opts);

struct CenterPair {
    NumericPoint a;
    NumericPoint b;
    double residual = 0.0;
};

std::vector<CenterPair> pair_candidates_n7(const Configuration& x, const Configuration& y,
                                           const std::vector<NumericPoint>& a_cands,
                                           const std::vector<NumericPoint>& b_cands, double tol);

struct EmptinessCertificate {
    std::vector<CenterPair> first;   // from points 1..7
    std::vector<CenterPair> second;  // from points 2..8
    std::vector<CenterPair> common;
};

EmptinessCertificate centers_n_ge8(const Configuration& x, const Configuration& y, const SolverOptions& opts,
                                   double match_tol = 1e-7);

struct WeddlePoint {
    NumericPoint vertex;
    std::array<double, 7> quartic_residuals{};
};

WeddlePoint weddle_curve_point(const Configuration& x, const SolverOptions& opts);

/// Fano vector of (X, a) scaled to unit norm with its largest entry real positive.
std::array<std::complex<double>, 15> normalized_fano(const Configuration& x,
                                                     const std::array<std::complex<double>, 4>& a);

/// Distance of a unit Fano vector from the all-ones direction.
double omega_distance(const std::array<std::complex<double>, 15>& v);

// Dispatch

struct EverythingN4 {
    std::size_t n = 0;
};
struct CubicFibrationN5 {
    ProjectivePoint given_center;
    TwistedCubic cubic;
    Degeneration degeneration = Degeneration::SmoothCubic;
};
struct SurfacePairN6 {
    QuadricPair surfaces;
    std::vector<std::pair<ProjectivePoint, ProjectivePoint>> sampled_pairs;
    std::optional<ProjectivePoint> matched_b;
};
struct ThreePairsN7 {
    CandidatesN7 candidates;
    std::vector<CenterPair> pairs;
};
struct EmptyN8 {
    EmptinessCertificate certificate;
};

using CentersVariety = std::variant<EverythingN4, CubicFibrationN5, SurfacePairN6, ThreePairsN7, EmptyN8>;

/// Case split by n. n = 5 needs a center; n = 6 uses it when given.
CentersVariety centers_variety(const Configuration& x, const Configuration& y, const std::optional<ProjectivePoint>& a,
                               const SolverOptions& opts);

}  // namespace centersvar
