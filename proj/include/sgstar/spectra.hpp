#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "sgstar/exact_matrix.hpp"
#include "sgstar/signed_graph.hpp"

namespace sgstar {

/// Eigenvalues of a symmetric matrix by cyclic Jacobi sweeps, ascending.
/// Globally convergent for any symmetric input; accuracy is near machine
/// precision relative to the matrix norm.
inline std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    double scale = 1.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale = std::max(scale, std::fabs(at(i, j)));

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::fabs(at(p, q));
        if (off <= 1e-13 * scale) break;

        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (std::fabs(apq) <= 1e-18 * scale) {
                    at(p, q) = at(q, p) = 0.0;
                    continue;
                }
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = (theta >= 0.0) ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                                          : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                at(p, q) = at(q, p) = 0.0;
            }
    }

    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

/// Exact eigenspace dimension of mu: n - rank(A - mu*I); 0 when mu is not an
/// eigenvalue.
inline int multiplicity(const SignedGraph& g, const ExactScalar& mu) {
    return g.order() - static_cast<int>(rank(g.shifted_adjacency(mu)));
}

/// False (non-main) exactly when the all-ones vector lies in the column space of
/// A - mu*I, i.e. when the eigenspace is orthogonal to the all-ones vector.
inline bool is_main(const SignedGraph& g, const ExactScalar& mu) {
    ExactMatrix m = g.shifted_adjacency(mu);
    size_t base = rank(m);
    if (static_cast<int>(base) == g.order())
        throw NotAnEigenvalue("is_main: " + mu.str() + " is not an eigenvalue");
    ExactVector ones(g.order(), ExactScalar(1));
    return rank(m.augmented(ones)) != base;
}

struct EigenvalueDescriptor {
    bool exact = false;
    ExactScalar value;          // meaningful when exact
    double approx = 0.0;        // always set
    int multiplicity = 0;
    std::optional<bool> main;   // set for exact eigenvalues only
};

struct SpectrumReport {
    int n = 0;
    std::vector<EigenvalueDescriptor> descriptors;  // descending by value
};

namespace detail {

// Best rational approximation with bounded denominator (continued fractions,
// with the final semiconvergent considered).
inline mpq_class best_rational(double x, long max_den) {
    if (!std::isfinite(x)) throw Error("best_rational of non-finite value");
    long p0 = 1, q0 = 0;
    long p1 = static_cast<long>(std::floor(x)), q1 = 1;
    double y = x - std::floor(x);
    while (y > 1e-12) {
        y = 1.0 / y;
        double fa = std::floor(y);
        if (fa > 1e15) break;
        long a = static_cast<long>(fa);
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) {
            // Largest semiconvergent still within the denominator budget.
            long k = (max_den - q0) / q1;
            long ps = k * p1 + p0, qs = k * q1 + q0;
            if (qs >= 1 && std::abs(x - double(ps) / double(qs)) < std::abs(x - double(p1) / double(q1)))
                return mpq_class(ps, qs);
            return mpq_class(p1, q1);
        }
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        y -= fa;
    }
    return mpq_class(p1, q1);
}

inline const std::vector<long>& squarefree_radicands_up_to_64() {
    static const std::vector<long> list = [] {
        std::vector<long> out;
        for (long d = 2; d <= 64; ++d) {
            bool squarefree = true;
            for (long f = 2; f * f <= d; ++f)
                if (d % (f * f) == 0) {
                    squarefree = false;
                    break;
                }
            if (squarefree) out.push_back(d);
        }
        return out;
    }();
    return list;
}

}  // namespace detail

/// Floating eigenvalues clustered at relative tolerance 1e-8; cluster centres
/// within 1e-6 of a bounded rational or quadratic surd are promoted to exact
/// candidates and their multiplicities rank-certified. A promoted candidate whose
/// exact multiplicity disagrees with the cluster size raises CertificationMismatch.
inline SpectrumReport spectrum(const SignedGraph& g) {
    SpectrumReport report;
    report.n = g.order();
    const int n = g.order();
    if (n == 0) return report;

    std::vector<double> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = g.sign(i, j);
    std::vector<double> ev = symmetric_eigenvalues(std::move(a), n);  // ascending

    struct Cluster {
        double centre;
        int size;
    };
    std::vector<Cluster> clusters;
    for (int i = 0; i < n; ++i) {
        double v = ev[i];
        if (!clusters.empty()) {
            double prev = ev[i - 1];
            double tol = 1e-8 * std::max({1.0, std::fabs(v), std::fabs(prev)});
            if (v - prev <= tol) {
                Cluster& c = clusters.back();
                c.centre = (c.centre * c.size + v) / (c.size + 1);
                ++c.size;
                continue;
            }
        }
        clusters.push_back({v, 1});
    }

    const ExactVector ones(n, ExactScalar(1));

    // Certifies mu against the cluster size; returns the main/non-main flag.
    auto certify = [&](const ExactScalar& mu, int cluster_size) -> std::optional<bool> {
        ExactMatrix m = g.shifted_adjacency(mu);
        size_t base = rank(m);
        int mult = n - static_cast<int>(base);
        if (mult == 0) return std::nullopt;  // candidate is not an eigenvalue at all
        if (mult != cluster_size)
            throw CertificationMismatch("cluster of size " + std::to_string(cluster_size) +
                                        " near " + mu.str() + " has exact multiplicity " +
                                        std::to_string(mult));
        bool non_main = rank(m.augmented(ones)) == base;
        return !non_main;
    };

    for (size_t ci = 0; ci < clusters.size(); ++ci) {
        const double centre = clusters[ci].centre;
        const int size = clusters[ci].size;
        EigenvalueDescriptor d;
        d.approx = centre;
        d.multiplicity = size;

        // Rational candidate with denominator <= 64.
        mpq_class r = detail::best_rational(centre, 64);
        if (std::fabs(centre - mpq_class(r).get_d()) <= 1e-6) {
            ExactScalar mu{r};
            if (auto main_flag = certify(mu, size)) {
                d.exact = true;
                d.value = mu;
                d.main = *main_flag;
            }
        }
        // Quadratic surd a + b*sqrt(D): pair with another cluster as the
        // algebraic conjugate (same multiplicity, mirrored surd part).
        if (!d.exact) {
            for (size_t cj = 0; cj < clusters.size() && !d.exact; ++cj) {
                if (cj == ci || clusters[cj].size != size) continue;
                double mid = (centre + clusters[cj].centre) / 2.0;
                double half = (centre - clusters[cj].centre) / 2.0;
                mpq_class ra = detail::best_rational(mid, 64);
                if (std::fabs(mid - mpq_class(ra).get_d()) > 1e-5) continue;
                for (long radicand : detail::squarefree_radicands_up_to_64()) {
                    mpq_class rb = detail::best_rational(half / std::sqrt(double(radicand)), 64);
                    if (rb == 0) continue;
                    ExactScalar mu(ra, rb, radicand);
                    if (std::fabs(centre - mu.approx()) > 1e-6) continue;
                    if (auto main_flag = certify(mu, size)) {
                        d.exact = true;
                        d.value = mu;
                        d.main = *main_flag;
                        break;
                    }
                }
            }
        }
        report.descriptors.push_back(std::move(d));
    }

    // Descending by value; clusters are separated, so the float order is exact.
    std::sort(report.descriptors.begin(), report.descriptors.end(),
              [](const EigenvalueDescriptor& x, const EigenvalueDescriptor& y) {
                  if (x.approx != y.approx) return x.approx > y.approx;
                  return x.multiplicity > y.multiplicity;
              });
    return report;
}

/// Promoted (exactly certified) eigenvalues of g, descending.
inline std::vector<EigenvalueDescriptor> exact_eigenvalues(const SignedGraph& g) {
    std::vector<EigenvalueDescriptor> out;
    for (const auto& d : spectrum(g).descriptors)
        if (d.exact) out.push_back(d);
    return out;
}

}  // namespace sgstar
