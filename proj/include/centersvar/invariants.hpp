#pragma once

#include <array>
#include <complex>
#include <string_view>
#include <vector>

#include "centersvar/forms.hpp"
#include "centersvar/mpoly.hpp"
#include "centersvar/projective.hpp"

namespace centersvar {

enum class InvariantKind { N5, N6, N7 };
std::string_view to_string(InvariantKind kind);
InvariantKind parse_invariant_kind(std::string_view text);

/// Coordinates of a point of one of the moduli spaces of 5, 6 or 7 plane
/// points. N6 carries weights (1,1,1,1,1,2); N5 and N7 are unweighted.
struct InvariantVector {
    InvariantKind kind = InvariantKind::N5;
    std::vector<Rational> values;

    /// True for the zero vector (no point of the moduli space).
    bool non_semistable() const;
    /// Rescaled to primitive integers with the first nonzero entry positive;
    /// for N6 the scale acts with weight 2 on the last entry.
    InvariantVector canonical() const;

    friend bool operator==(const InvariantVector& a, const InvariantVector& b) = default;
};

/// Projective equality, weight-aware for N6. Zero vectors are never equivalent
/// to anything.
bool equivalent(const InvariantVector& u, const InvariantVector& v);

/// One-line notation of a permutation of {1..7}.
using Permutation7 = std::array<int, 7>;

/// The fifteen even permutations used for the Fano map, in their fixed order.
const std::array<Permutation7, 15>& even_fano_permutations();

int permutation_sign(const Permutation7& pi);

// Generic formulas over a bracket oracle br(i, j, k) with 1-based indices.

template <class T, class B>
std::array<T, 6> g5_from_brackets(B&& br) {
    return {br(1, 2, 4) * br(1, 3, 4) * br(1, 3, 5) * br(2, 3, 5) * br(2, 4, 5),
            br(1, 2, 5) * br(1, 3, 5) * br(1, 3, 4) * br(2, 3, 4) * br(2, 4, 5),
            br(1, 2, 3) * br(1, 3, 4) * br(1, 4, 5) * br(2, 4, 5) * br(2, 3, 5),
            br(1, 2, 5) * br(1, 4, 5) * br(1, 3, 4) * br(2, 3, 4) * br(2, 3, 5),
            br(1, 2, 3) * br(1, 3, 5) * br(1, 4, 5) * br(2, 4, 5) * br(2, 3, 4),
            br(1, 2, 4) * br(1, 4, 5) * br(1, 3, 5) * br(2, 3, 5) * br(2, 3, 4)};
}

template <class T, class B>
std::array<T, 6> t6_from_brackets(B&& br) {
    return {br(1, 2, 3) * br(4, 5, 6),
            br(1, 2, 4) * br(3, 5, 6),
            br(1, 2, 5) * br(3, 4, 6),
            br(1, 3, 4) * br(2, 5, 6),
            br(1, 3, 5) * br(2, 4, 6),
            br(1, 2, 3) * br(1, 4, 5) * br(2, 4, 6) * br(3, 5, 6) - br(1, 2, 4) * br(1, 3, 5) * br(2, 3, 6) * br(4, 5, 6)};
}

/// f_pi: the Fano bracket product with every index i replaced by pi(i).
template <class T, class B>
T fano_from_brackets(B&& br, const Permutation7& pi) {
    auto p = [&pi](int i) { return pi[static_cast<std::size_t>(i - 1)]; };
    return br(p(1), p(2), p(4)) * br(p(2), p(3), p(5)) * br(p(3), p(4), p(6)) * br(p(4), p(5), p(7)) *
           br(p(1), p(5), p(6)) * br(p(2), p(6), p(7)) * br(p(1), p(3), p(7));
}

template <class T, class B>
std::array<T, 15> fano15_from_brackets(B&& br) {
    std::array<T, 15> out;
    const auto& perms = even_fano_permutations();
    for (std::size_t i = 0; i < 15; ++i) out[i] = fano_from_brackets<T>(br, perms[i]);
    return out;
}

/// The Igusa quartic in five variables.
template <class T>
T igusa_F(const T& t0, const T& t1, const T& t2, const T& t3, const T& t4) {
    const T s = -t2 * t3 + t1 * t4 + t0 * t1 + t0 * t4 - t0 * t2 - t0 * t3 - t0 * t0;
    return s * s - T(4) * t0 * t1 * t4 * (-t0 + t1 - t2 - t3 + t4);
}

/// Bracket oracle [x_i x_j x_k z] in an arbitrary scalar type.
template <class T>
class LiftedBrackets {
  public:
    LiftedBrackets(const Configuration& x, const std::array<T, 4>& z) : z_(z) {
        for (const auto& p : x.points()) {
            std::array<T, 4> c;
            for (std::size_t i = 0; i < 4; ++i) c[i] = T(to_long_double(Rational(p[i])));
            pts_.push_back(c);
        }
    }
    T operator()(int i, int j, int k) const {
        return det4(pts_[static_cast<std::size_t>(i - 1)].data(), pts_[static_cast<std::size_t>(j - 1)].data(),
                    pts_[static_cast<std::size_t>(k - 1)].data(), z_.data());
    }

  private:
    std::vector<std::array<T, 4>> pts_;
    std::array<T, 4> z_;
};

InvariantVector g5(const Configuration& p);
InvariantVector g5_lifted(const Configuration& x, const ProjectivePoint& a);

/// The six octics g_i of the projection of the standard frame of P^3 from a
/// symbolic center (a0 : a1 : a2 : a3), using the chart-intersection
/// representatives.
std::array<MPoly, 6> g5_standard_frame_octics();

InvariantVector t6(const Configuration& p);
Rational igusa_F(const InvariantVector& t);

/// Values of the lifted t-invariants at a concrete point z.
InvariantVector t6_lifted(const Configuration& x, const ProjectivePoint& z);

/// Lifted t-invariants as forms in z: five quadrics and one quartic.
struct LiftedForms {
    std::array<Form, 5> quadrics;
    Form quartic;
};
LiftedForms t6_lifted_forms(const Configuration& x);

Rational fano(const Configuration& p, const Permutation7& pi);
InvariantVector fano15(const Configuration& p);
InvariantVector fano15_lifted(const Configuration& x, const ProjectivePoint& a);
std::array<std::complex<long double>, 15> fano15_lifted(const Configuration& x,
                                                        const std::array<std::complex<long double>, 4>& a);

/// The fifteen odd Fano values f_{tau . pi} for tau = (12), paired with the
/// even list.
std::array<Rational, 15> fano15_odd(const Configuration& p);

/// Twice the sum of the even Fano values.
Rational morley(const Configuration& p);

/// Quartic of the Weddle surface of six points of P^3.
Form weddle_quartic(const Configuration& z);

}  // namespace centersvar
