#pragma once

#include <optional>
#include <vector>

#include "centersvar/matrix.hpp"
#include "centersvar/rational.hpp"

namespace centersvar {

using RMatrix = Matrix<Rational>;
using RVector = std::vector<Rational>;

/// Reduced row echelon form in place; returns the pivot columns in order.
std::vector<std::size_t> rref(RMatrix& m);

std::size_t rank(RMatrix m);

/// Exact right kernel as columns of an n x k matrix. The basis is the one read
/// off the reduced row echelon form: one vector per free column (in increasing
/// order) with a 1 in that column, so the kernel matrix is in reduced column
/// echelon form with respect to the free rows.
RMatrix kernel(const RMatrix& m);

/// Kernel vectors as a list (convenience over kernel()).
std::vector<RVector> kernel_vectors(const RMatrix& m);

Rational det(RMatrix m);

std::optional<RMatrix> inverse(const RMatrix& m);

/// Unique solution of a square system, if any.
std::optional<RVector> solve(const RMatrix& a, const RVector& b);

/// Small closed-form determinants shared by exact and floating code paths.
template <class T>
T det3(const T* r0, const T* r1, const T* r2) {
    return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
           r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
}

template <class T>
T det4(const T* r0, const T* r1, const T* r2, const T* r3) {
    // Laplace expansion along the 2x2 minors of the first two rows.
    const T m01 = r0[0] * r1[1] - r0[1] * r1[0];
    const T m02 = r0[0] * r1[2] - r0[2] * r1[0];
    const T m03 = r0[0] * r1[3] - r0[3] * r1[0];
    const T m12 = r0[1] * r1[2] - r0[2] * r1[1];
    const T m13 = r0[1] * r1[3] - r0[3] * r1[1];
    const T m23 = r0[2] * r1[3] - r0[3] * r1[2];
    const T n01 = r2[0] * r3[1] - r2[1] * r3[0];
    const T n02 = r2[0] * r3[2] - r2[2] * r3[0];
    const T n03 = r2[0] * r3[3] - r2[3] * r3[0];
    const T n12 = r2[1] * r3[2] - r2[2] * r3[1];
    const T n13 = r2[1] * r3[3] - r2[3] * r3[1];
    const T n23 = r2[2] * r3[3] - r2[3] * r3[2];
    return m01 * n23 - m02 * n13 + m03 * n12 + m12 * n03 - m13 * n02 + m23 * n01;
}

}  // namespace centersvar
