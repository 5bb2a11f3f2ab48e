#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgstar/exact_matrix.hpp"
#include "sgstar/signed_graph.hpp"
#include "sgstar/spectra.hpp"

namespace sgstar {

/// Star set S for an eigenvalue mu together with the block decomposition
///
///     P A P^T = | A_S  B^T |
///               | B    C   |
///
/// of the adjacency matrix under the permutation P listing S first (ascending)
/// and the complement last (ascending). C is the star complement adjacency;
/// mu is never an eigenvalue of C, so (mu*I - C)^{-1} exists and is cached.
struct StarPartition {
    SignedGraph g;
    ExactScalar mu;
    VertexSet star_set;
    VertexSet complement;
    std::vector<int> order;  // permuted index -> original vertex
    ExactMatrix a_s;         // k x k
    ExactMatrix b;           // t x k, columns are star-vertex neighbourhoods in the complement
    ExactMatrix c;           // t x t
    ExactMatrix shift_inv;   // (mu*I - C)^{-1}

    int k() const { return static_cast<int>(star_set.size()); }
    int t() const { return static_cast<int>(complement.size()); }

    /// Column s_u of (B | C - mu*I) for the permuted vertex index u in [0, n).
    ExactVector s_column(int u) const {
        const int kk = k(), tt = t();
        ExactVector s(tt, ExactScalar(0));
        if (u < kk) {
            for (int i = 0; i < tt; ++i) s[i] = b(i, u);
        } else {
            int j = u - kk;
            for (int i = 0; i < tt; ++i) s[i] = c(i, j);
            s[j] -= mu;
        }
        return s;
    }

    /// <x, y> = x^T (mu*I - C)^{-1} y.
    ExactScalar bilinear(const ExactVector& x, const ExactVector& y) const {
        ExactVector img(shift_inv.rows(), ExactScalar(0));
        for (size_t i = 0; i < shift_inv.rows(); ++i)
            for (size_t j = 0; j < shift_inv.cols(); ++j) img[i] += shift_inv(i, j) * y[j];
        return dot(x, img);
    }
};

/// <x, y> = x^T (mu*I - C)^{-1} y for a star-complement adjacency matrix C.
inline ExactScalar bilinear(const ExactMatrix& c_matrix, const ExactScalar& mu,
                            const ExactVector& x, const ExactVector& y) {
    if (c_matrix.rows() != c_matrix.cols()) throw NotSquare("bilinear: C must be square");
    ExactMatrix shift = ExactMatrix(c_matrix.rows(), c_matrix.cols());
    for (size_t i = 0; i < c_matrix.rows(); ++i)
        for (size_t j = 0; j < c_matrix.cols(); ++j)
            shift(i, j) = (i == j ? mu - c_matrix(i, j) : -c_matrix(i, j));
    try {
        return dot(x, solve(shift, y));
    } catch (const SingularMatrix&) {
        throw SingularShift("mu = " + mu.str() + " is an eigenvalue of the star complement");
    }
}

namespace detail {

inline ExactMatrix shift_matrix(const ExactMatrix& c_matrix, const ExactScalar& mu) {
    ExactMatrix shift(c_matrix.rows(), c_matrix.cols());
    for (size_t i = 0; i < c_matrix.rows(); ++i)
        for (size_t j = 0; j < c_matrix.cols(); ++j)
            shift(i, j) = (i == j ? mu - c_matrix(i, j) : -c_matrix(i, j));
    return shift;
}

// Assembles the blocks for a candidate star set; does not yet validate the
// reconstruction identity.
inline StarPartition assemble_partition(const SignedGraph& g, const ExactScalar& mu,
                                        const VertexSet& star, const ExactMatrix& shift_inv) {
    StarPartition p;
    p.g = g;
    p.mu = mu;
    p.star_set = star;
    p.complement = star.complement_in(g.order());
    const auto& s = p.star_set.members();
    const auto& cpl = p.complement.members();
    const int kk = static_cast<int>(s.size()), tt = static_cast<int>(cpl.size());
    p.order.reserve(g.order());
    p.order.insert(p.order.end(), s.begin(), s.end());
    p.order.insert(p.order.end(), cpl.begin(), cpl.end());
    p.a_s = ExactMatrix(kk, kk);
    for (int i = 0; i < kk; ++i)
        for (int j = 0; j < kk; ++j) p.a_s(i, j) = ExactScalar(g.sign(s[i], s[j]));
    p.b = ExactMatrix(tt, kk);
    for (int i = 0; i < tt; ++i)
        for (int j = 0; j < kk; ++j) p.b(i, j) = ExactScalar(g.sign(cpl[i], s[j]));
    p.c = ExactMatrix(tt, tt);
    for (int i = 0; i < tt; ++i)
        for (int j = 0; j < tt; ++j) p.c(i, j) = ExactScalar(g.sign(cpl[i], cpl[j]));
    p.shift_inv = shift_inv;
    return p;
}

}  // namespace detail

struct StarSetVerification {
    bool ok = false;
    std::string violation;                         // empty when ok
    std::optional<std::pair<int, int>> offending;  // first bad entry of the identity
    std::optional<StarPartition> partition;        // present when ok
};

/// Checks the two Reconstruction Theorem conditions exactly: mu is not an
/// eigenvalue of C, and mu*I - A_S = B^T (mu*I - C)^{-1} B.
inline StarSetVerification verify_star_set(const SignedGraph& g, const ExactScalar& mu,
                                           const VertexSet& star) {
    star.check_range(g.order(), "star set");
    StarSetVerification out;

    const int k_expected = multiplicity(g, mu);
    if (static_cast<int>(star.size()) != k_expected) {
        out.violation = "|S| = " + std::to_string(star.size()) + " but multiplicity(mu) = " +
                        std::to_string(k_expected);
        return out;
    }

    VertexSet cpl = star.complement_in(g.order());
    SignedGraph comp_graph = induced(g, cpl);
    ExactMatrix shift = detail::shift_matrix(comp_graph.adjacency_exact(), mu);
    if (rank(shift) != shift.rows()) {
        out.violation = "mu is an eigenvalue of the star complement";
        return out;
    }
    ExactMatrix shift_inv = inverse(shift);
    StarPartition p = detail::assemble_partition(g, mu, star, shift_inv);

    ExactMatrix lhs(p.k(), p.k());
    for (int i = 0; i < p.k(); ++i)
        for (int j = 0; j < p.k(); ++j) lhs(i, j) = (i == j ? mu - p.a_s(i, j) : -p.a_s(i, j));
    ExactMatrix rhs = p.b.transpose() * (shift_inv * p.b);
    for (int i = 0; i < p.k(); ++i)
        for (int j = 0; j < p.k(); ++j)
            if (lhs(i, j) != rhs(i, j)) {
                out.violation = "reconstruction identity fails";
                out.offending = {i, j};
                return out;
            }

    out.ok = true;
    out.partition = std::move(p);
    return out;
}

/// Greedy star set: scan vertices in ascending index order and move a vertex into
/// the star set whenever deleting it drops the multiplicity of mu by exactly one.
/// A single pass always terminates with a full star set.
inline StarPartition find_star_set(const SignedGraph& g, const ExactScalar& mu) {
    int current = multiplicity(g, mu);
    if (current == 0) throw NotAnEigenvalue("find_star_set: " + mu.str() + " is not an eigenvalue");

    std::vector<int> star;
    std::vector<int> residual;
    residual.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) residual.push_back(v);

    for (int v = 0; v < g.order() && current > 0; ++v) {
        std::vector<int> without;
        without.reserve(residual.size() - 1);
        for (int w : residual)
            if (w != v) without.push_back(w);
        SignedGraph h = induced(g, VertexSet(without));
        if (multiplicity(h, mu) == current - 1) {
            star.push_back(v);
            residual = std::move(without);
            --current;
        }
    }
    if (current != 0) throw Error("greedy star-set construction failed (internal)");

    auto verification = verify_star_set(g, mu, VertexSet(star));
    if (!verification.ok)
        throw Error("greedy star set failed verification (internal): " + verification.violation);
    return *std::move(verification.partition);
}

/// Candidate neighbourhood of a new vertex: b in {-1,0,+1}^t with <b,b> = mu.
struct GoodVector {
    std::vector<int8_t> b;
    ExactVector image;  // (mu*I - C)^{-1} b, cached for pair evaluations

    friend bool operator==(const GoodVector& x, const GoodVector& y) { return x.b == y.b; }
};

/// <b_u, b_v> evaluated from the cached image of v.
inline ExactScalar pair_form(const GoodVector& u, const GoodVector& v) {
    ExactScalar acc(0);
    for (size_t i = 0; i < u.b.size(); ++i) {
        if (u.b[i] == 1) acc += v.image[i];
        else if (u.b[i] == -1) acc -= v.image[i];
    }
    return acc;
}

enum class PairLabel { Incompatible, NonEdge, PositiveEdge, NegativeEdge };

inline const char* to_string(PairLabel l) {
    switch (l) {
        case PairLabel::Incompatible: return "incompatible";
        case PairLabel::NonEdge: return "nonedge";
        case PairLabel::PositiveEdge: return "positive-edge";
        case PairLabel::NegativeEdge: return "negative-edge";
    }
    return "?";
}

/// Edge label of the extended graph from <b_u, b_v>; note the sign inversion:
/// -1 encodes a positive edge and +1 a negative edge.
inline PairLabel compatibility(const GoodVector& u, const GoodVector& v) {
    ExactScalar f = pair_form(u, v);
    if (f == ExactScalar(0)) return PairLabel::NonEdge;
    if (f == ExactScalar(-1)) return PairLabel::PositiveEdge;
    if (f == ExactScalar(1)) return PairLabel::NegativeEdge;
    return PairLabel::Incompatible;
}

/// All good vectors for the complement graph, in lexicographic order of b
/// (component order -1 < 0 < +1).
inline std::vector<GoodVector> good_vectors(const SignedGraph& complement, const ExactScalar& mu) {
    const int t = complement.order();
    if (t > 20)
        throw SearchSpaceTooLarge("good-vector search over 3^" + std::to_string(t) + " candidates");
    ExactMatrix shift = detail::shift_matrix(complement.adjacency_exact(), mu);
    ExactMatrix inv;
    try {
        inv = inverse(shift);
    } catch (const SingularMatrix&) {
        throw SingularShift("mu = " + mu.str() + " is an eigenvalue of the star complement");
    }

    std::vector<GoodVector> out;
    std::vector<int8_t> b(t, -1);
    while (true) {
        bool nonzero = std::any_of(b.begin(), b.end(), [](int8_t x) { return x != 0; });
        if (nonzero) {
            ExactVector image(t, ExactScalar(0));
            for (int j = 0; j < t; ++j) {
                if (b[j] == 0) continue;
                for (int i = 0; i < t; ++i) {
                    if (b[j] == 1) image[i] += inv(i, j);
                    else image[i] -= inv(i, j);
                }
            }
            ExactScalar form(0);
            for (int i = 0; i < t; ++i) {
                if (b[i] == 1) form += image[i];
                else if (b[i] == -1) form -= image[i];
            }
            if (form == mu) out.push_back(GoodVector{b, std::move(image)});
        }
        // next vector in lexicographic order
        int pos = t - 1;
        while (pos >= 0 && b[pos] == 1) {
            b[pos] = -1;
            --pos;
        }
        if (pos < 0) break;
        ++b[pos];
    }
    return out;
}

inline std::vector<GoodVector> good_vectors(const ExactMatrix& c_matrix, const ExactScalar& mu) {
    if (c_matrix.rows() != c_matrix.cols()) throw NotSquare("good_vectors: C must be square");
    std::vector<std::tuple<int, int, int>> edges;
    for (size_t i = 0; i < c_matrix.rows(); ++i)
        for (size_t j = i + 1; j < c_matrix.cols(); ++j) {
            if (c_matrix(i, j).is_zero()) continue;
            if (c_matrix(i, j) == ExactScalar(1))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j), 1);
            else if (c_matrix(i, j) == ExactScalar(-1))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j), -1);
            else
                throw Error("good_vectors: matrix entry outside {-1, 0, +1}");
        }
    return good_vectors(SignedGraph::build(static_cast<int>(c_matrix.rows()), edges), mu);
}

/// Good vectors with all pairwise labels; cliques of the non-incompatible
/// relation are exactly the pairwise-consistent extension candidates.
struct CompatibilityGraph {
    std::vector<GoodVector> vertices;
    std::vector<std::vector<PairLabel>> labels;  // symmetric; diagonal never an edge

    size_t size() const { return vertices.size(); }
    bool edge(size_t i, size_t j) const {
        return i != j && labels[i][j] != PairLabel::Incompatible;
    }
};

inline CompatibilityGraph build_compatibility_graph(std::vector<GoodVector> vectors) {
    CompatibilityGraph g;
    g.vertices = std::move(vectors);
    const size_t m = g.vertices.size();
    g.labels.assign(m, std::vector<PairLabel>(m, PairLabel::Incompatible));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            g.labels[i][j] = g.labels[j][i] = compatibility(g.vertices[i], g.vertices[j]);
    return g;
}

struct ExtensionLimits {
    size_t max_cliques = SIZE_MAX;
    size_t max_size = SIZE_MAX;
};

struct ExtensionCatalog {
    std::vector<GoodVector> vectors;      // all good vectors, lexicographic
    std::vector<std::vector<int>> cliques;  // index lists into `vectors`, each ascending
    bool truncated = false;
};

namespace detail {

struct BronKerbosch {
    const std::vector<std::vector<bool>>& adj;
    ExtensionLimits limits;
    ExtensionCatalog& out;
    bool stopped = false;

    void run(std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
        if (stopped) return;
        if (r.size() >= limits.max_size) {
            out.cliques.push_back(r);
            if (!p.empty()) out.truncated = true;
            check_count();
            return;
        }
        if (p.empty() && x.empty()) {
            out.cliques.push_back(r);
            check_count();
            return;
        }
        // pivot: vertex of P u X with the most neighbours in P
        int pivot = -1;
        size_t best = 0;
        for (const auto* set : {&p, &x})
            for (int u : *set) {
                size_t cnt = 0;
                for (int v : p)
                    if (adj[u][v]) ++cnt;
                if (pivot < 0 || cnt > best) {
                    pivot = u;
                    best = cnt;
                }
            }
        std::vector<int> candidates;
        for (int v : p)
            if (pivot < 0 || !adj[pivot][v]) candidates.push_back(v);
        for (int v : candidates) {
            std::vector<int> p2, x2;
            for (int w : p)
                if (adj[v][w]) p2.push_back(w);
            for (int w : x)
                if (adj[v][w]) x2.push_back(w);
            r.push_back(v);
            run(r, std::move(p2), std::move(x2));
            r.pop_back();
            if (stopped) return;
            p.erase(std::find(p.begin(), p.end(), v));
            x.push_back(v);
        }
    }

    void check_count() {
        if (out.cliques.size() >= limits.max_cliques) {
            stopped = true;
            out.truncated = true;
        }
    }
};

}  // namespace detail

/// Maximal cliques of the compatibility graph over all good vectors; each clique
/// is a maximal pairwise-compatible family, i.e. a maximal extension of the star
/// complement.
inline ExtensionCatalog max_extensions(const SignedGraph& c_graph, const ExactScalar& mu,
                                       ExtensionLimits limits = {}) {
    ExtensionCatalog catalog;
    catalog.vectors = good_vectors(c_graph, mu);
    const size_t m = catalog.vectors.size();
    if (m > 10000)
        throw SearchSpaceTooLarge("compatibility graph on " + std::to_string(m) + " good vectors");
    if (m == 0) return catalog;

    CompatibilityGraph compat = build_compatibility_graph(catalog.vectors);
    std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) adj[i][j] = compat.edge(i, j);

    detail::BronKerbosch bk{adj, limits, catalog};
    std::vector<int> r;
    std::vector<int> p(m), x;
    for (size_t i = 0; i < m; ++i) p[i] = static_cast<int>(i);
    bk.run(r, std::move(p), std::move(x));

    for (auto& clique : catalog.cliques) std::sort(clique.begin(), clique.end());
    std::sort(catalog.cliques.begin(), catalog.cliques.end());
    return catalog;
}

/// Builds the signed graph on |clique| + t vertices with the clique as star set
/// (vertices 0..k-1, ordered lexicographically by b) and c_graph as star
/// complement, then returns its verified StarPartition.
inline StarPartition realize_extension(const SignedGraph& c_graph, const ExactScalar& mu,
                                       std::vector<GoodVector> clique) {
    std::sort(clique.begin(), clique.end(),
              [](const GoodVector& x, const GoodVector& y) { return x.b < y.b; });
    const int k = static_cast<int>(clique.size());
    const int t = c_graph.order();
    const int n = k + t;

    std::vector<std::tuple<int, int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            PairLabel l = compatibility(clique[i], clique[j]);
            if (l == PairLabel::Incompatible)
                throw IncompatiblePair("clique members " + std::to_string(i) + " and " +
                                       std::to_string(j) + " have form value outside {0,1,-1}");
            if (l == PairLabel::PositiveEdge) edges.emplace_back(i, j, 1);
            if (l == PairLabel::NegativeEdge) edges.emplace_back(i, j, -1);
        }
    for (int i = 0; i < k; ++i) {
        ExactScalar self = pair_form(clique[i], clique[i]);
        if (self != mu)
            throw IncompatiblePair("clique member " + std::to_string(i) + " is not a good vector");
        for (int j = 0; j < t; ++j)
            if (clique[i].b[j] != 0) edges.emplace_back(i, k + j, clique[i].b[j]);
    }
    for (const auto& [u, v, s] : c_graph.edges()) edges.emplace_back(k + u, k + v, s);

    SignedGraph realized = SignedGraph::build(n, edges);
    std::vector<int> star(k);
    for (int i = 0; i < k; ++i) star[i] = i;
    auto verification = verify_star_set(realized, mu, VertexSet(star));
    if (!verification.ok)
        throw Error("realized extension failed star-set verification (internal): " +
                    verification.violation);
    return *std::move(verification.partition);
}

/// First violation of the inner-product table over all vertex pairs, or nullopt
/// when the table holds: <s_u,s_v> must be mu, 0, -1, +1 according as u = v,
/// u not~ v, u +~ v, u -~ v.
inline std::optional<std::pair<int, int>> inner_product_table_violation(const StarPartition& p) {
    const int n = p.g.order();
    std::vector<ExactVector> s_cols(n);
    std::vector<ExactVector> images(n);
    for (int u = 0; u < n; ++u) {
        s_cols[u] = p.s_column(u);
        ExactVector img(p.shift_inv.rows(), ExactScalar(0));
        for (size_t i = 0; i < p.shift_inv.rows(); ++i)
            for (size_t j = 0; j < p.shift_inv.cols(); ++j)
                img[i] += p.shift_inv(i, j) * s_cols[u][j];
        images[u] = std::move(img);
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            ExactScalar f = dot(s_cols[u], images[v]);
            ExactScalar expected;
            if (u == v) expected = p.mu;
            else {
                int s = p.g.sign(p.order[u], p.order[v]);
                expected = ExactScalar(-s);  // table convention: positive edge -> -1, negative edge -> +1
            }
            if (f != expected) return std::make_pair(u, v);
        }
    return std::nullopt;
}

}  // namespace sgstar
