#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "centersvar/error.hpp"
#include "centersvar/invariants.hpp"
#include "centersvar/loci.hpp"

namespace centersvar {

namespace {

using cd = std::complex<double>;
using cld = std::complex<long double>;
using Point4 = std::array<cld, 4>;

// A form with floating coefficients, scaled so the largest coefficient is 1.
class NumericForm {
  public:
    explicit NumericForm(const Form& f) {
        const auto& mons = monomials(f.degree());
        Rational scale = 0;
        for (const auto& c : f.coeffs()) scale = std::max(scale, Rational(abs(c)));
        if (is_zero(scale)) scale = 1;
        long double norm = 0;
        for (std::size_t m = 0; m < mons.size(); ++m) {
            if (is_zero(f.coeffs()[m])) continue;
            const long double c = to_long_double(f.coeffs()[m] / scale);
            terms_.push_back({mons[m], c});
            norm += c * c;
        }
        norm_ = std::sqrt(norm);
    }

    template <class T>
    T value(const std::array<T, 4>& z) const {
        T acc(0);
        for (const auto& [e, c] : terms_) {
            T term(c);
            for (std::size_t v = 0; v < 4; ++v)
                for (int k = 0; k < e[v]; ++k) term *= z[v];
            acc += term;
        }
        return acc;
    }

    template <class T>
    std::array<T, 4> gradient(const std::array<T, 4>& z) const {
        std::array<T, 4> g{};
        for (const auto& [e, c] : terms_)
            for (std::size_t v = 0; v < 4; ++v) {
                if (e[v] == 0) continue;
                T term(c * static_cast<long double>(e[v]));
                for (std::size_t w = 0; w < 4; ++w)
                    for (int k = 0; k < e[w] - (w == v ? 1 : 0); ++k) term *= z[w];
                g[v] += term;
            }
        return g;
    }

    /// |f(z)| for unit z with f scaled to unit coefficient norm.
    long double residual(const Point4& z) const { return std::abs(value(z)) / norm_; }

  private:
    std::vector<std::pair<Monomial4, long double>> terms_;
    long double norm_ = 1;
};

template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

cld random_complex(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    return {static_cast<long double>(g(rng)), static_cast<long double>(g(rng))};
}

// m random combinations of the forms on the affine chart z = p0 + sum u_i d_i.
struct ChartSystem {
    const std::vector<NumericForm>* forms = nullptr;
    std::size_t m = 0;
    Point4 p0{};
    std::vector<Point4> dirs;
    std::vector<std::vector<cld>> mix;

    template <class T>
    std::array<T, 4> point(const Vec<T>& u) const {
        std::array<T, 4> z;
        for (std::size_t c = 0; c < 4; ++c) {
            z[c] = T(p0[c]);
            for (std::size_t i = 0; i < m; ++i) z[c] += u(static_cast<Eigen::Index>(i)) * T(dirs[i][c]);
        }
        return z;
    }

    template <class T>
    void evaluate(const Vec<T>& u, Vec<T>& f, Mat<T>& jac) const {
        const auto z = point(u);
        f = Vec<T>::Zero(static_cast<Eigen::Index>(m));
        jac = Mat<T>::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
        for (std::size_t k = 0; k < forms->size(); ++k) {
            const T v = (*forms)[k].value(z);
            const auto g = (*forms)[k].gradient(z);
            for (std::size_t j = 0; j < m; ++j) {
                const T c(mix[j][k]);
                f(static_cast<Eigen::Index>(j)) += c * v;
                for (std::size_t i = 0; i < m; ++i) {
                    T dg(0);
                    for (std::size_t w = 0; w < 4; ++w) dg += g[w] * T(dirs[i][w]);
                    jac(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) += c * dg;
                }
            }
        }
    }
};

ChartSystem random_chart(const std::vector<NumericForm>& forms, std::size_t m, std::mt19937_64& rng) {
    ChartSystem sys;
    sys.forms = &forms;
    sys.m = m;
    for (auto& c : sys.p0) c = random_complex(rng);
    sys.dirs.resize(m);
    for (auto& d : sys.dirs)
        for (auto& c : d) c = random_complex(rng);
    sys.mix.assign(m, std::vector<cld>(forms.size()));
    for (auto& row : sys.mix)
        for (auto& c : row) c = random_complex(rng);
    return sys;
}

// Homotopy (1 - tau) gamma G + tau F with G_j = u_j^2 - 1.
class Tracker {
  public:
    Tracker(const ChartSystem& sys, cd gamma) : sys_(sys), gamma_(gamma), m_(static_cast<Eigen::Index>(sys.m)) {}

    std::optional<Vec<cd>> track(Vec<cd> u) const {
        double tau = 0.0;
        double h = 0.02;
        int successes = 0;
        while (tau < 1.0) {
            if (h < 1e-13) return std::nullopt;
            const double step = std::min(h, 1.0 - tau);
            Vec<cd> pred = rk4(u, tau, step);
            const double next = tau + step;
            if (corrector(pred, next)) {
                u = pred;
                tau = next;
                if (u.norm() > 1e8) return std::nullopt;
                if (++successes >= 3) {
                    h = std::min(h * 1.8, 0.1);
                    successes = 0;
                }
            } else {
                h *= 0.5;
                successes = 0;
            }
        }
        return u;
    }

  private:
    void homotopy(const Vec<cd>& u, double tau, Vec<cd>& hval, Mat<cd>& hu, Vec<cd>& ht) const {
        Vec<cd> f;
        Mat<cd> jf;
        sys_.evaluate(u, f, jf);
        Vec<cd> g(m_);
        for (Eigen::Index j = 0; j < m_; ++j) g(j) = u(j) * u(j) - 1.0;
        hval = (1.0 - tau) * gamma_ * g + tau * f;
        hu = tau * jf;
        for (Eigen::Index j = 0; j < m_; ++j) hu(j, j) += (1.0 - tau) * gamma_ * 2.0 * u(j);
        ht = f - gamma_ * g;
    }

    Vec<cd> velocity(const Vec<cd>& u, double tau) const {
        Vec<cd> hval, ht;
        Mat<cd> hu;
        homotopy(u, tau, hval, hu, ht);
        return -hu.partialPivLu().solve(ht);
    }

    Vec<cd> rk4(const Vec<cd>& u, double tau, double h) const {
        const Vec<cd> k1 = velocity(u, tau);
        const Vec<cd> k2 = velocity(u + 0.5 * h * k1, tau + 0.5 * h);
        const Vec<cd> k3 = velocity(u + 0.5 * h * k2, tau + 0.5 * h);
        const Vec<cd> k4 = velocity(u + h * k3, tau + h);
        return u + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }

    bool corrector(Vec<cd>& u, double tau) const {
        for (int it = 0; it < 4; ++it) {
            Vec<cd> hval, ht;
            Mat<cd> hu;
            homotopy(u, tau, hval, hu, ht);
            const Vec<cd> delta = hu.partialPivLu().solve(hval);
            if (!delta.allFinite()) return false;
            u -= delta;
            if (delta.norm() < 1e-9 * (1.0 + u.norm())) return true;
            if (it == 0 && delta.norm() > 0.1 * (1.0 + u.norm())) return false;
        }
        return false;
    }

    const ChartSystem& sys_;
    cd gamma_;
    Eigen::Index m_;
};

template <class T>
Vec<T> newton(const ChartSystem& sys, Vec<T> u, int iterations) {
    for (int it = 0; it < iterations; ++it) {
        Vec<T> f;
        Mat<T> j;
        sys.evaluate(u, f, j);
        const Vec<T> delta = j.fullPivLu().solve(f);
        if (!delta.allFinite()) break;
        u -= delta;
    }
    return u;
}

Point4 normalize(const Point4& z) {
    std::size_t big = 0;
    for (std::size_t i = 1; i < 4; ++i)
        if (std::abs(z[i]) > std::abs(z[big]) * (1 + 1e-12L)) big = i;
    Point4 out;
    long double norm = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        out[i] = z[i] / z[big];
        norm += std::norm(out[i]);
    }
    norm = std::sqrt(norm);
    for (auto& c : out) c /= norm;
    return out;
}

double point_distance(const Point4& u, const Point4& v) {
    std::array<cd, 4> a, b;
    for (std::size_t i = 0; i < 4; ++i) {
        a[i] = cd(static_cast<double>(u[i].real()), static_cast<double>(u[i].imag()));
        b[i] = cd(static_cast<double>(v[i].real()), static_cast<double>(v[i].imag()));
    }
    return projective_distance(a, b);
}

long double max_residual(const std::vector<NumericForm>& forms, const Point4& z) {
    long double r = 0;
    for (const auto& f : forms) r = std::max(r, f.residual(z));
    return r;
}

// Best rational approximation of x by continued fractions within the bound.
std::optional<Rational> rational_approximation(long double x, long double accuracy, const Integer& max_den) {
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    long double r = x;
    for (int it = 0; it < 64; ++it) {
        const long double fl = std::floor(r);
        if (std::fabs(fl) > 1e18L) return std::nullopt;
        const Integer a(static_cast<double>(fl));
        const Integer p2 = a * p1 + p0;
        const Integer q2 = a * q1 + q0;
        if (q2 > max_den) return std::nullopt;
        Rational approx(p2, q2);
        approx.canonicalize();
        if (std::fabs(to_long_double(approx) - x) <= accuracy) return approx;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const long double frac = r - fl;
        if (frac == 0) return std::nullopt;
        r = 1 / frac;
    }
    return std::nullopt;
}

std::optional<ProjectivePoint> certify_rational(const std::vector<Form>& forms, const Point4& z) {
    std::size_t big = 0;
    for (std::size_t i = 1; i < 4; ++i)
        if (std::abs(z[i]) > std::abs(z[big])) big = i;
    RVector coords(4);
    const Integer max_den("1000000000");
    for (std::size_t i = 0; i < 4; ++i) {
        const cld ratio = z[i] / z[big];
        if (std::fabs(ratio.imag()) > 1e-12L) return std::nullopt;
        auto r = rational_approximation(ratio.real(), 1e-14L, max_den);
        if (!r) return std::nullopt;
        coords[i] = *r;
    }
    const ProjectivePoint p(coords);
    const RVector pr = p.rational();
    for (const auto& f : forms)
        if (!is_zero(f(pr))) return std::nullopt;
    return p;
}

NumericPoint make_numeric(const Point4& z, long double residual, double tol) {
    const Point4 n = normalize(z);
    NumericPoint out;
    bool real = true;
    for (std::size_t i = 0; i < 4; ++i) {
        out.coords[i] = cd(static_cast<double>(n[i].real()), static_cast<double>(n[i].imag()));
        if (std::fabs(n[i].imag()) > tol) real = false;
    }
    out.residual = static_cast<double>(residual);
    out.is_real = real;
    return out;
}

bool key_less(const NumericPoint& a, const NumericPoint& b) {
    for (std::size_t i = 0; i < 4; ++i) {
        if (a.coords[i].real() != b.coords[i].real()) return a.coords[i].real() < b.coords[i].real();
        if (a.coords[i].imag() != b.coords[i].imag()) return a.coords[i].imag() < b.coords[i].imag();
    }
    return false;
}

// Endpoints of all total-degree paths for m random combinations on a random
// m-dimensional chart, refined in long double.
std::vector<Point4> endpoints(const std::vector<NumericForm>& forms, std::size_t m, std::mt19937_64& rng) {
    const ChartSystem sys = random_chart(forms, m, rng);
    const cld g = random_complex(rng);
    const cd gamma = cd(static_cast<double>(g.real()), static_cast<double>(g.imag())) / static_cast<double>(std::abs(g));
    const Tracker tracker(sys, gamma);
    std::vector<Point4> out;
    const std::size_t paths = std::size_t{1} << m;
    for (std::size_t mask = 0; mask < paths; ++mask) {
        Vec<cd> start(static_cast<Eigen::Index>(m));
        for (std::size_t j = 0; j < m; ++j) start(static_cast<Eigen::Index>(j)) = (mask >> j) & 1 ? -1.0 : 1.0;
        auto end = tracker.track(start);
        if (!end) continue;
        Vec<cd> u = newton(sys, *end, 8);
        Vec<cld> ul(static_cast<Eigen::Index>(m));
        for (Eigen::Index j = 0; j < ul.size(); ++j) ul(j) = cld(u(j).real(), u(j).imag());
        ul = newton(sys, ul, 4);
        if (!ul.allFinite()) continue;
        out.push_back(sys.point(ul));
    }
    return out;
}

}  // namespace

double projective_distance(std::span<const cd> u, std::span<const cd> v) {
    cd inner = 0;
    double nu = 0, nv = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        inner += std::conj(u[i]) * v[i];
        nu += std::norm(u[i]);
        nv += std::norm(v[i]);
    }
    if (nu == 0 || nv == 0) return 1.0;
    const double c = std::norm(inner) / (nu * nv);
    return std::sqrt(std::max(0.0, 1.0 - c));
}

double projective_distance(const NumericPoint& p, const ProjectivePoint& q) {
    std::array<cd, 4> qc;
    for (std::size_t i = 0; i < 4; ++i) qc[i] = to_double(Rational(q[i]));
    return projective_distance(p.coords, qc);
}

std::vector<NumericPoint> solve_quadric_system(const std::vector<Form>& forms, std::optional<std::size_t> expected,
                                               const SolverOptions& opts) {
    if (forms.size() < 3) fail(ErrorCode::InvalidInput, "need at least three forms");
    for (const auto& f : forms)
        if (f.degree() != 2) fail(ErrorCode::InvalidInput, "solver expects quadratic forms");
    std::vector<NumericForm> numeric;
    for (const auto& f : forms) numeric.emplace_back(f);
    std::mt19937_64 rng(opts.seed);

    // A positive-dimensional zero set meets a random plane.
    for (const auto& z : endpoints(numeric, 2, rng))
        if (max_residual(numeric, normalize(z)) < opts.tol)
            fail(ErrorCode::NotFinite, "common zero locus is not finite");

    std::vector<NumericPoint> found;
    for (int attempt = 0; attempt < 6; ++attempt) {
        const auto ends = endpoints(numeric, 3, rng);
        // Path jumping shows up as repeated endpoints.
        std::vector<Point4> distinct;
        for (const auto& z : ends) {
            const Point4 n = normalize(z);
            if (std::none_of(distinct.begin(), distinct.end(),
                             [&](const Point4& d) { return point_distance(d, n) < 1e-8; }))
                distinct.push_back(n);
        }
        for (const auto& z : ends) {
            const Point4 n = normalize(z);
            const long double res = max_residual(numeric, n);
            if (!(res < opts.tol)) continue;
            NumericPoint p = make_numeric(n, res, opts.tol);
            auto dup = std::find_if(found.begin(), found.end(),
                                    [&](const NumericPoint& q) { return projective_distance(p.coords, q.coords) < 1e-8; });
            if (dup != found.end()) {
                if (p.residual < dup->residual) *dup = p;
                continue;
            }
            if (p.is_real) p.exact = certify_rational(forms, n);
            found.push_back(p);
        }
        if (distinct.size() == 8 && (!expected || found.size() >= *expected)) break;
    }
    std::sort(found.begin(), found.end(), key_less);
    if (found.size() > 8) fail(ErrorCode::NotFinite, "too many isolated solutions");
    if (expected && found.size() != *expected)
        fail(ErrorCode::Inconclusive, "found " + std::to_string(found.size()) + " common zeros, expected " +
                                          std::to_string(*expected));
    return found;
}

std::array<cd, 15> normalized_fano(const Configuration& x, const std::array<cd, 4>& a) {
    std::array<cld, 4> al;
    for (std::size_t i = 0; i < 4; ++i) al[i] = cld(a[i].real(), a[i].imag());
    const auto v = fano15_lifted(x, al);
    std::size_t big = 0;
    for (std::size_t i = 1; i < 15; ++i)
        if (std::abs(v[i]) > std::abs(v[big])) big = i;
    std::array<cd, 15> out{};
    if (std::abs(v[big]) == 0) return out;
    long double norm = 0;
    std::array<cld, 15> w;
    for (std::size_t i = 0; i < 15; ++i) {
        w[i] = v[i] / v[big];
        norm += std::norm(w[i]);
    }
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < 15; ++i) {
        const cld c = w[i] / norm;
        out[i] = cd(static_cast<double>(c.real()), static_cast<double>(c.imag()));
    }
    return out;
}

double omega_distance(const std::array<cd, 15>& v) {
    std::array<cd, 15> ones;
    ones.fill(1.0);
    return projective_distance(v, ones);
}

CandidatesN7 candidates_n7(const Configuration& x, const Configuration& y, const SolverOptions& opts) {
    if (x.size() != 7 || y.size() != 7 || x.ambient_dim() != 3 || y.ambient_dim() != 3)
        fail(ErrorCode::InvalidInput, "expected two configurations of 7 points of P^3");
    CandidatesN7 out;
    std::vector<Form> fa, fb;
    for (std::size_t k = 0; k < 7; ++k) {
        const QuadricPair qp = quadric_pair_n6(x.without(k), y.without(k));
        out.s_beta.push_back(qp.s_beta);
        out.s_alpha.push_back(qp.s_alpha);
        fa.push_back(qp.s_beta.form());
        fb.push_back(qp.s_alpha.form());
    }
    out.a = solve_quadric_system(fa, 3, opts);
    SolverOptions second = opts;
    second.seed = opts.seed ^ 0x5bd1e995u;
    out.b = solve_quadric_system(fb, 3, second);
    return out;
}

std::vector<CenterPair> pair_candidates_n7(const Configuration& x, const Configuration& y,
                                           const std::vector<NumericPoint>& a_cands,
                                           const std::vector<NumericPoint>& b_cands, double tol) {
    struct Entry {
        const NumericPoint* point;
        std::array<cd, 15> fano;
    };
    auto keep = [&](const Configuration& c, const std::vector<NumericPoint>& cands) {
        std::vector<Entry> out;
        for (const auto& p : cands) {
            Entry e{&p, normalized_fano(c, p.coords)};
            if (omega_distance(e.fano) < tol) continue;
            out.push_back(e);
        }
        return out;
    };
    const auto as = keep(x, a_cands);
    const auto bs = keep(y, b_cands);
    const std::size_t k = std::min(as.size(), bs.size());
    if (k == 0) return {};
    std::vector<std::vector<double>> cost(as.size(), std::vector<double>(bs.size()));
    for (std::size_t i = 0; i < as.size(); ++i)
        for (std::size_t j = 0; j < bs.size(); ++j) cost[i][j] = projective_distance(as[i].fano, bs[j].fano);

    // Exhaustive search over injective matchings of size k.
    double best = INFINITY, second = INFINITY;
    std::vector<std::pair<std::size_t, std::size_t>> best_match, current;
    std::vector<bool> used_b(bs.size(), false);
    std::function<void(std::size_t, double)> search = [&](std::size_t i, double acc) {
        if (current.size() == k) {
            if (acc < best) {
                second = best;
                best = acc;
                best_match = current;
            } else if (acc < second) {
                second = acc;
            }
            return;
        }
        if (i == as.size()) return;
        if (as.size() - i > k - current.size()) search(i + 1, acc);
        for (std::size_t j = 0; j < bs.size(); ++j) {
            if (used_b[j]) continue;
            used_b[j] = true;
            current.emplace_back(i, j);
            search(i + 1, acc + cost[i][j]);
            current.pop_back();
            used_b[j] = false;
        }
    };
    search(0, 0.0);
    if (std::isfinite(second) && second - best < tol)
        fail(ErrorCode::AmbiguousMatch, "two matchings of the candidates have nearly equal cost (" + std::to_string(best) +
                                            " vs " + std::to_string(second) + ")");
    std::vector<CenterPair> out;
    for (const auto& [i, j] : best_match) out.push_back({*as[i].point, *bs[j].point, cost[i][j]});
    return out;
}

EmptinessCertificate centers_n_ge8(const Configuration& x, const Configuration& y, const SolverOptions& opts,
                                   double match_tol) {
    if (x.size() != y.size() || x.size() < 8) fail(ErrorCode::InvalidInput, "expected two configurations of at least 8 points");
    auto run = [&](std::size_t first) {
        std::vector<std::size_t> idx(7);
        std::iota(idx.begin(), idx.end(), first);
        const Configuration xs = x.subset(idx);
        const Configuration ys = y.subset(idx);
        const CandidatesN7 c = candidates_n7(xs, ys, opts);
        return pair_candidates_n7(xs, ys, c.a, c.b, opts.tol);
    };
    EmptinessCertificate out;
    out.first = run(0);
    out.second = run(1);
    for (const auto& p : out.first)
        for (const auto& q : out.second)
            if (projective_distance(p.a.coords, q.a.coords) < match_tol &&
                projective_distance(p.b.coords, q.b.coords) < match_tol) {
                out.common.push_back(p);
                break;
            }
    return out;
}

namespace {

std::vector<cld> polynomial_roots(const Poly& p) {
    const int d = p.degree();
    std::vector<cld> coeffs(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) coeffs[static_cast<std::size_t>(k)] = to_long_double(p.coeff(k) / p.leading());
    auto eval = [&](cld t) {
        cld acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
        return acc;
    };
    auto deriv = [&](cld t) {
        cld acc = 0;
        for (int k = d; k >= 1; --k) acc = acc * t + static_cast<long double>(k) * coeffs[static_cast<std::size_t>(k)];
        return acc;
    };
    // Durand-Kerner from the usual spiral start.
    long double radius = 1;
    for (const auto& c : coeffs) radius = std::max(radius, 1 + std::abs(c));
    std::vector<cld> roots(static_cast<std::size_t>(d));
    const cld seed(0.4L, 0.9L);
    for (std::size_t i = 0; i < roots.size(); ++i) roots[i] = std::pow(seed, static_cast<long double>(i)) * (radius / 2);
    for (int it = 0; it < 500; ++it) {
        long double change = 0;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            cld denom = 1;
            for (std::size_t j = 0; j < roots.size(); ++j)
                if (j != i) denom *= roots[i] - roots[j];
            const cld step = eval(roots[i]) / denom;
            roots[i] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-17L) break;
    }
    for (auto& r : roots)
        for (int it = 0; it < 3; ++it) {
            const cld dv = deriv(r);
            if (std::abs(dv) == 0) break;
            r -= eval(r) / dv;
        }
    return roots;
}

}  // namespace

WeddlePoint weddle_curve_point(const Configuration& x, const SolverOptions& opts) {
    if (x.size() != 7 || x.ambient_dim() != 3) fail(ErrorCode::InvalidInput, "expected 7 points of P^3");
    const auto& mons = monomials(2);
    RMatrix incidence(7, mons.size());
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t m = 0; m < mons.size(); ++m) {
            Rational v = 1;
            for (std::size_t c = 0; c < 4; ++c)
                for (int k = 0; k < mons[m][c]; ++k) v *= x[i][c];
            incidence(i, m) = v;
        }
    const RMatrix net = kernel(incidence);
    if (net.cols() != 3) fail(ErrorCode::DegenerateInput, "quadrics through the points do not form a net");
    std::array<RMatrix, 3> basis;
    for (std::size_t k = 0; k < 3; ++k) basis[k] = Form(2, net.column(k)).to_symmetric();

    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int attempt = 0; attempt < 50; ++attempt) {
        RMatrix a(4, 4), b(4, 4);
        for (std::size_t k = 0; k < 3; ++k) {
            const Rational ca = coef(rng), cb = coef(rng);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) {
                    a(i, j) += ca * basis[k](i, j);
                    b(i, j) += cb * basis[k](i, j);
                }
        }
        std::array<std::array<Poly, 4>, 4> pencil;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) pencil[i][j] = Poly(RVector{a(i, j), b(i, j)});
        const Poly d = det4(pencil[0].data(), pencil[1].data(), pencil[2].data(), pencil[3].data());
        if (d.degree() != 4) continue;
        auto roots = polynomial_roots(d);
        std::stable_sort(roots.begin(), roots.end(),
                         [](const cld& p, const cld& q) { return std::fabs(p.imag()) < std::fabs(q.imag()); });
        const cld t = roots.front();
        std::array<std::array<cld, 4>, 4> q;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) q[i][j] = to_long_double(a(i, j)) + t * to_long_double(b(i, j));
        // The vertex is the column of the adjugate with the largest norm.
        Point4 best{};
        long double best_norm = -1;
        for (std::size_t col = 0; col < 4; ++col) {
            Point4 v;
            for (std::size_t row = 0; row < 4; ++row) {
                std::array<std::array<cld, 3>, 3> minor;
                for (std::size_t r = 0, rr = 0; r < 4; ++r) {
                    if (r == col) continue;
                    for (std::size_t c = 0, cc = 0; c < 4; ++c) {
                        if (c == row) continue;
                        minor[rr][cc++] = q[r][c];
                    }
                    ++rr;
                }
                const cld m = det3(minor[0].data(), minor[1].data(), minor[2].data());
                v[row] = (row + col) % 2 ? -m : m;
            }
            long double n = 0;
            for (const auto& c : v) n += std::norm(c);
            if (n > best_norm) {
                best_norm = n;
                best = v;
            }
        }
        if (best_norm <= 0) continue;
        const Point4 vertex = normalize(best);
        WeddlePoint out;
        long double worst = 0;
        for (std::size_t k = 0; k < 7; ++k) {
            const NumericForm w(weddle_quartic(x.without(k)));
            const long double r = w.residual(vertex);
            out.quartic_residuals[k] = static_cast<double>(r);
            worst = std::max(worst, r);
        }
        out.vertex = make_numeric(vertex, worst, opts.tol);
        return out;
    }
    fail(ErrorCode::DegenerateInput, "no regular pencil found in the net of quadrics");
}

CentersVariety centers_variety(const Configuration& x, const Configuration& y, const std::optional<ProjectivePoint>& a,
                               const SolverOptions& opts) {
    if (x.size() != y.size()) fail(ErrorCode::InvalidInput, "configurations have different sizes");
    if (x.ambient_dim() != 3 || y.ambient_dim() != 3) fail(ErrorCode::InvalidInput, "expected points of P^3");
    const std::size_t n = x.size();
    if (n <= 4) return EverythingN4{n};
    if (n == 5) {
        if (!a) fail(ErrorCode::InvalidInput, "n = 5 needs a center");
        return CubicFibrationN5{*a, cubic_locus_n5(x, y, *a), classify_degeneration_n5(x, *a)};
    }
    if (n == 6) {
        SurfacePairN6 out;
        out.surfaces = quadric_pair_n6(x, y);
        for (const auto& s : sample_quadric(out.surfaces.s_beta, x[0], 3, opts.seed)) {
            try {
                out.sampled_pairs.emplace_back(s, map_a_to_b_n6(x, y, s));
            } catch (const Error& e) {
                if (e.code() == ErrorCode::Inconsistent) throw;
            }
        }
        if (a) out.matched_b = map_a_to_b_n6(x, y, *a);
        return out;
    }
    if (n == 7) {
        ThreePairsN7 out;
        out.candidates = candidates_n7(x, y, opts);
        out.pairs = pair_candidates_n7(x, y, out.candidates.a, out.candidates.b, opts.tol);
        return out;
    }
    return EmptyN8{centers_n_ge8(x, y, opts)};
}

}  // namespace centersvar
