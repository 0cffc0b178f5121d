#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "centersvar/error.hpp"
#include "centersvar/invariants.hpp"
#include "centersvar/loci.hpp"

namespace centersvar {

namespace {

void require_six(const Configuration& x, const Configuration& y) {
    if (x.size() != 6 || y.size() != 6 || x.ambient_dim() != 3 || y.ambient_dim() != 3)
        fail(ErrorCode::InvalidInput, "expected two configurations of 6 points of P^3");
}

RVector one_dimensional_kernel(const std::array<Form, 5>& quadrics) {
    const RMatrix k = kernel(coefficient_matrix({quadrics.begin(), quadrics.end()}));
    if (k.cols() != 1) fail(ErrorCode::DegenerateInput, "lifted quadrics do not have a one-dimensional relation");
    return primitive_scaled(k.column(0));
}

QuadricSurface combine(const std::array<Form, 5>& quadrics, const RVector& weights) {
    Form sum = Form::zero(2);
    for (std::size_t i = 0; i < 5; ++i) sum = sum + weights[i] * quadrics[i];
    return {sum.to_symmetric()};
}

double unit_det(const std::array<const ProjectivePoint*, 4>& pts) {
    std::array<std::array<double, 4>, 4> rows{};
    for (std::size_t r = 0; r < 4; ++r) {
        double norm = 0;
        for (std::size_t c = 0; c < 4; ++c) {
            rows[r][c] = to_double(Rational((*pts[r])[c]));
            norm += rows[r][c] * rows[r][c];
        }
        norm = std::sqrt(norm);
        for (auto& v : rows[r]) v /= norm;
    }
    return std::fabs(det4(rows[0].data(), rows[1].data(), rows[2].data(), rows[3].data()));
}

// Smallest normalized 4x4 determinant among the data that the five-point
// subproblem without index k depends on.
double genericity_score(const Configuration& x, const Configuration& y, const ProjectivePoint& a, std::size_t k) {
    double score = 1.0;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 6; ++i)
        if (i != k) idx.push_back(i);
    for (std::size_t skip = 0; skip < 5; ++skip) {
        std::vector<std::size_t> four;
        for (std::size_t i = 0; i < 5; ++i)
            if (i != skip) four.push_back(idx[i]);
        score = std::min(score, unit_det({&x[four[0]], &x[four[1]], &x[four[2]], &x[four[3]]}));
        score = std::min(score, unit_det({&y[four[0]], &y[four[1]], &y[four[2]], &y[four[3]]}));
    }
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            for (std::size_t l = j + 1; l < 5; ++l)
                score = std::min(score, unit_det({&x[idx[i]], &x[idx[j]], &x[idx[l]], &a}));
    return score;
}

}  // namespace

QuadricPair quadric_pair_n6(const Configuration& x, const Configuration& y) {
    require_six(x, y);
    const LiftedForms lx = t6_lifted_forms(x);
    const LiftedForms ly = t6_lifted_forms(y);
    QuadricPair out;
    out.beta = one_dimensional_kernel(ly.quadrics);
    out.alpha = one_dimensional_kernel(lx.quadrics);
    out.s_beta = combine(lx.quadrics, out.beta);
    out.s_alpha = combine(ly.quadrics, out.alpha);
    return out;
}

ProjectivePoint map_a_to_b_n6(const Configuration& x, const Configuration& y, const ProjectivePoint& a) {
    require_six(x, y);
    if (a.size() != 4) fail(ErrorCode::InvalidInput, "center must be a point of P^3");
    if (std::find(x.points().begin(), x.points().end(), a) != x.points().end())
        fail(ErrorCode::InadmissibleCenter, "center is a point of X; the six cubics only have a limit there");
    const QuadricPair surfaces = quadric_pair_n6(x, y);
    if (!surfaces.s_beta.contains(a)) fail(ErrorCode::NoRationalImage, "center is not on S_beta");

    std::array<bool, 6> usable{};
    std::array<double, 6> score{};
    for (std::size_t k = 0; k < 6; ++k) {
        const Configuration xk = x.without(k);
        usable[k] = center_admissible(xk, a, AdmissibilityMode::Moduli) &&
                    classify_degeneration_n5(xk, a) == Degeneration::SmoothCubic;
        score[k] = usable[k] ? genericity_score(x, y, a, k) : 0.0;
    }
    std::map<std::size_t, TwistedCubic> cubics;
    auto cubic = [&](std::size_t k) -> const TwistedCubic& {
        auto it = cubics.find(k);
        if (it == cubics.end()) it = cubics.emplace(k, cubic_locus_n5(x.without(k), y.without(k), a)).first;
        return it->second;
    };

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t k = 0; k < 6; ++k)
        for (std::size_t l = 0; l < 6; ++l)
            if (k != l && usable[k] && usable[l]) pairs.emplace_back(k, l);
    std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& p, const auto& q) {
        return std::min(score[p.first], score[p.second]) > std::min(score[q.first], score[q.second]);
    });

    for (const auto& [k, l] : pairs) {
        const TwistedCubic& tk = cubic(k);
        if (!tk.param) continue;
        const TwistedCubic& tl = cubic(l);
        BinaryForm g{Poly(), 6};
        for (const auto& q : tl.quadrics) g = gcd(g, tk.param->restrict(q));
        if (g.is_zero()) continue;
        bool shared_ok = true;
        for (std::size_t i = 0; i < 6 && shared_ok; ++i) {
            if (i == k || i == l) continue;
            const auto root = tk.param->parameter_of(y[i]);
            shared_ok = root && deflate(g, *root);
        }
        if (!shared_ok || g.degree != 1) continue;
        const ProjectiveParameter root = g.multiplicity_at_infinity() == 1
                                             ? ProjectiveParameter{0, 1}
                                             : ProjectiveParameter{1, -g.poly.coeff(0) / g.poly.coeff(1)};
        const ProjectivePoint b = (*tk.param)(root);
        if (!surfaces.s_alpha.contains(b)) fail(ErrorCode::Inconsistent, "image center is not on S_alpha");
        for (std::size_t j = 0; j < 6; ++j)
            if (usable[j] && !cubic(j).contains(b))
                fail(ErrorCode::Inconsistent, "image center misses the cubic of subset " + std::to_string(j + 1));
        return b;
    }
    fail(ErrorCode::NoRationalImage, "the twisted cubics share no further rational point");
}

ProjectivePoint map_b_to_a_n6(const Configuration& x, const Configuration& y, const ProjectivePoint& b) {
    return map_a_to_b_n6(y, x, b);
}

std::vector<ProjectivePoint> sample_quadric(const QuadricSurface& q, const ProjectivePoint& known, std::size_t count,
                                            std::uint64_t seed) {
    const RVector p = known.rational();
    if (!is_zero(q(p))) fail(ErrorCode::InvalidInput, "known point is not on the quadric");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-9, 9);
    std::vector<ProjectivePoint> out;
    for (int attempt = 0; out.size() < count && attempt < 200 * static_cast<int>(count + 1); ++attempt) {
        RVector d(4);
        for (auto& c : d) c = coord(rng);
        Rational bilinear = 0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) bilinear += p[i] * q.sym(i, j) * d[j];
        const Rational qd = q(d);
        if (is_zero(qd) || is_zero(bilinear)) continue;
        const Rational lambda = -2 * bilinear / qd;
        RVector z(4);
        for (std::size_t i = 0; i < 4; ++i) z[i] = p[i] + lambda * d[i];
        const ProjectivePoint pt(z);
        if (pt == known || std::find(out.begin(), out.end(), pt) != out.end()) continue;
        out.push_back(pt);
    }
    return out;
}

}  // namespace centersvar
