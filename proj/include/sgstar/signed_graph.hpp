#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "sgstar/errors.hpp"
#include "sgstar/exact_matrix.hpp"
#include "sgstar/int_polynomial.hpp"

namespace sgstar {

/// Sorted set of distinct vertex indices in [0, n); n is checked by the consumer.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> members) : v_(std::move(members)) {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
    }

    const std::vector<int>& members() const { return v_; }
    size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    bool contains(int v) const { return std::binary_search(v_.begin(), v_.end(), v); }

    void check_range(int n, const char* what = "vertex set") const {
        for (int v : v_)
            if (v < 0 || v >= n)
                throw IndexOutOfRange(std::string(what) + ": vertex " + std::to_string(v) +
                                      " outside [0, " + std::to_string(n) + ")");
    }

    VertexSet complement_in(int n) const {
        check_range(n);
        std::vector<int> out;
        out.reserve(n - v_.size());
        for (int v = 0; v < n; ++v)
            if (!contains(v)) out.push_back(v);
        return VertexSet(std::move(out));
    }

    /// Symmetric difference, for the switching composition law.
    friend VertexSet symmetric_difference(const VertexSet& x, const VertexSet& y) {
        std::vector<int> out;
        std::set_symmetric_difference(x.v_.begin(), x.v_.end(), y.v_.begin(), y.v_.end(),
                                      std::back_inserter(out));
        return VertexSet(std::move(out));
    }

    friend bool operator==(const VertexSet& x, const VertexSet& y) { return x.v_ == y.v_; }

private:
    std::vector<int> v_;
};

/// Simple signed graph: symmetric adjacency matrix with entries in {-1, 0, +1}
/// and zero diagonal. Immutable after construction; all operations return new
/// graphs.
class SignedGraph {
public:
    SignedGraph() : n_(0) {}
    explicit SignedGraph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {
        if (n < 0) throw Error("negative vertex count");
    }

    static SignedGraph build(int n, const std::vector<std::tuple<int, int, int>>& edges) {
        SignedGraph g(n);
        for (const auto& [u, v, s] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw IndexOutOfRange("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                      ") outside [0, " + std::to_string(n) + ")");
            if (u == v) throw LoopEdge("loop at vertex " + std::to_string(u));
            if (s != 1 && s != -1)
                throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") has sign " + std::to_string(s) + ", expected +1 or -1");
            if (g.sign(u, v) != 0)
                throw DuplicateEdge("duplicate edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
            g.set(u, v, static_cast<int8_t>(s));
        }
        return g;
    }

    int order() const { return n_; }
    int sign(int u, int v) const { return adj_[static_cast<size_t>(u) * n_ + v]; }
    bool adjacent(int u, int v) const { return sign(u, v) != 0; }

    int edge_count() const {
        int m = 0;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adjacent(u, v)) ++m;
        return m;
    }

    /// Edges as (u, v, sign) with u < v, sorted lexicographically.
    std::vector<std::tuple<int, int, int>> edges() const {
        std::vector<std::tuple<int, int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adjacent(u, v)) out.emplace_back(u, v, sign(u, v));
        return out;
    }

    friend bool operator==(const SignedGraph& x, const SignedGraph& y) {
        return x.n_ == y.n_ && x.adj_ == y.adj_;
    }
    friend bool operator!=(const SignedGraph& x, const SignedGraph& y) { return !(x == y); }

    std::vector<std::vector<mpz_class>> adjacency_mpz() const {
        std::vector<std::vector<mpz_class>> a(n_, std::vector<mpz_class>(n_, 0));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) a[i][j] = sign(i, j);
        return a;
    }

    ExactMatrix adjacency_exact() const {
        ExactMatrix a(n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) a(i, j) = ExactScalar(sign(i, j));
        return a;
    }

    /// A - mu*I over the field of mu.
    ExactMatrix shifted_adjacency(const ExactScalar& mu) const {
        ExactMatrix m = adjacency_exact();
        for (int i = 0; i < n_; ++i) m(i, i) -= mu;
        return m;
    }

private:
    int n_;
    std::vector<int8_t> adj_;

    void set(int u, int v, int8_t s) {
        adj_[static_cast<size_t>(u) * n_ + v] = s;
        adj_[static_cast<size_t>(v) * n_ + u] = s;
    }

    friend SignedGraph switched(const SignedGraph&, const VertexSet&);
    friend SignedGraph negation(const SignedGraph&);
    friend SignedGraph induced(const SignedGraph&, const VertexSet&);
    friend SignedGraph underlying(const SignedGraph&);
};

/// Reverses the sign of every edge with exactly one endpoint in u_set
/// (conjugation by the diagonal +-1 matrix of u_set).
inline SignedGraph switched(const SignedGraph& g, const VertexSet& u_set) {
    u_set.check_range(g.order(), "switching set");
    SignedGraph out(g);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v) && u_set.contains(u) != u_set.contains(v))
                out.set(u, v, static_cast<int8_t>(-g.sign(u, v)));
    return out;
}

inline SignedGraph negation(const SignedGraph& g) {
    SignedGraph out(g);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) out.set(u, v, static_cast<int8_t>(-g.sign(u, v)));
    return out;
}

/// Every negative edge replaced by a positive one.
inline SignedGraph underlying(const SignedGraph& g) {
    SignedGraph out(g);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) out.set(u, v, 1);
    return out;
}

/// Principal subgraph on `keep`, reindexed in ascending order of the kept vertices.
inline SignedGraph induced(const SignedGraph& g, const VertexSet& keep) {
    keep.check_range(g.order(), "induced set");
    const auto& ks = keep.members();
    SignedGraph out(static_cast<int>(ks.size()));
    for (size_t i = 0; i < ks.size(); ++i)
        for (size_t j = i + 1; j < ks.size(); ++j)
            out.set(static_cast<int>(i), static_cast<int>(j),
                    static_cast<int8_t>(g.sign(ks[i], ks[j])));
    return out;
}

inline std::vector<int> degrees(const SignedGraph& g) {
    std::vector<int> d(g.order(), 0);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (g.adjacent(u, v)) ++d[u];
    return d;
}

/// Row sums of the signed adjacency matrix: positive minus negative degree.
inline std::vector<int> net_degrees(const SignedGraph& g) {
    std::vector<int> d(g.order(), 0);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v) d[u] += g.sign(u, v);
    return d;
}

inline bool is_regular(const SignedGraph& g) {
    auto d = degrees(g);
    return std::all_of(d.begin(), d.end(), [&](int x) { return x == d.front(); }) || d.empty();
}

/// The common net-degree when it exists.
inline std::optional<int> is_net_regular(const SignedGraph& g) {
    if (g.order() == 0) return 0;
    auto d = net_degrees(g);
    for (int x : d)
        if (x != d.front()) return std::nullopt;
    return d.front();
}

inline IntPolynomial char_poly(const SignedGraph& g) { return char_poly(g.adjacency_mpz()); }

// ---------------------------------------------------------------------------
// On-disk format: "n m" header line, then one "u v s" line per edge with
// s in {+1, -1}. '#'-prefixed lines are comments. The canonical writer sorts
// edges lexicographically.

inline void write_graph(std::ostream& os, const SignedGraph& g) {
    auto es = g.edges();
    os << g.order() << " " << es.size() << "\n";
    for (const auto& [u, v, s] : es) os << u << " " << v << " " << (s > 0 ? "+1" : "-1") << "\n";
}

inline std::string to_string(const SignedGraph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

inline SignedGraph read_graph(std::istream& is, const std::string& filename = "<stream>") {
    long line_no = 0;
    std::string line;
    auto next_tokens = [&]() -> std::vector<std::string> {
        while (std::getline(is, line)) {
            ++line_no;
            std::istringstream ls(line);
            std::vector<std::string> toks;
            std::string t;
            while (ls >> t) toks.push_back(t);
            if (toks.empty() || toks.front()[0] == '#') continue;
            return toks;
        }
        return {};
    };
    auto to_int = [&](const std::string& t, long min_v, long max_v) -> long {
        try {
            size_t used = 0;
            long v = std::stol(t, &used);
            if (used != t.size()) throw std::invalid_argument(t);
            if (v < min_v || v > max_v) throw std::out_of_range(t);
            return v;
        } catch (const std::exception&) {
            throw ParseError(filename, line_no, t, "expected an integer");
        }
    };

    auto header = next_tokens();
    if (header.empty()) throw ParseError(filename, line_no, "", "missing 'n m' header");
    if (header.size() != 2) throw ParseError(filename, line_no, line, "header must be 'n m'");
    long n = to_int(header[0], 0, 1000000);
    long m = to_int(header[1], 0, n * std::max<long>(n - 1, 0) / 2);

    std::vector<std::tuple<int, int, int>> edges;
    for (long e = 0; e < m; ++e) {
        auto toks = next_tokens();
        if (toks.empty())
            throw ParseError(filename, line_no, "", "expected " + std::to_string(m) +
                                                        " edge lines, got " + std::to_string(e));
        if (toks.size() != 3) throw ParseError(filename, line_no, line, "edge line must be 'u v s'");
        long u = to_int(toks[0], 0, n - 1);
        long v = to_int(toks[1], 0, n - 1);
        long s = (toks[2] == "+1" || toks[2] == "1") ? 1
                 : (toks[2] == "-1")                 ? -1
                                                     : 0;
        if (s == 0) throw ParseError(filename, line_no, toks[2], "sign must be +1 or -1");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v), static_cast<int>(s));
    }
    try {
        return SignedGraph::build(static_cast<int>(n), edges);
    } catch (const Error& err) {
        throw ParseError(filename, line_no, "", err.what());
    }
}

inline SignedGraph graph_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_graph(is, "<string>");
}

}  // namespace sgstar
