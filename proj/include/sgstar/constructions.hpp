#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <tuple>
#include <vector>

#include "sgstar/signed_graph.hpp"

namespace sgstar {

/// The 4-cycle 0-1-2-3-0 with the first neg_count edges negative; an odd number
/// of negative edges is required.
inline SignedGraph quadrangle(int neg_count) {
    if (neg_count != 1 && neg_count != 3)
        throw EvenNegativeCount("quadrangle requires 1 or 3 negative edges, got " +
                                std::to_string(neg_count));
    std::vector<std::tuple<int, int, int>> edges = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}};
    for (int e = 0; e < neg_count; ++e) std::get<2>(edges[e]) = -1;
    return SignedGraph::build(4, edges);
}

/// E8 roots scaled by 2, so every coordinate is an integer (half-integer roots
/// become odd entries) and every Gram product of true roots is (v_i . v_j) / 4.
struct RootList {
    std::vector<std::array<int, 8>> numerators;  // 2x the actual root

    size_t size() const { return numerators.size(); }
};

namespace detail {

inline std::vector<std::array<int, 8>> all_e8_roots_scaled() {
    std::vector<std::array<int, 8>> roots;
    roots.reserve(240);
    // +-e_i +- e_j, scaled: two entries +-2.
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int si : {2, -2})
                for (int sj : {2, -2}) {
                    std::array<int, 8> r{};
                    r[i] = si;
                    r[j] = sj;
                    roots.push_back(r);
                }
    // (1/2) sum +-e_i with an even number of positive summands, scaled: all +-1.
    for (int mask = 0; mask < 256; ++mask) {
        int positives = 8 - __builtin_popcount(static_cast<unsigned>(mask));
        if (positives % 2 != 0) continue;
        std::array<int, 8> r{};
        for (int i = 0; i < 8; ++i) r[i] = (mask >> i) & 1 ? -1 : 1;
        roots.push_back(r);
    }
    return roots;
}

}  // namespace detail

/// Positive system of E8: a root r is selected iff <w, r> > 0 for the generic
/// vector w = (1, 2, 4, ..., 128), whose powers-of-two coordinates give every
/// root a distinct nonzero signature. Both defining conditions of a positive
/// system are verified exhaustively.
inline RootList e8_positive_roots() {
    auto all = detail::all_e8_roots_scaled();
    if (all.size() != 240) throw Error("E8 root enumeration produced " + std::to_string(all.size()));
    std::set<std::array<int, 8>> root_set(all.begin(), all.end());
    if (root_set.size() != 240) throw Error("E8 root enumeration has duplicates");

    RootList out;
    for (const auto& r : all) {
        long w_dot = 0;
        for (int i = 0; i < 8; ++i) w_dot += static_cast<long>(r[i]) << i;
        if (w_dot == 0) throw Error("generic vector is orthogonal to a root");
        if (w_dot > 0) out.numerators.push_back(r);
    }
    if (out.size() != 120)
        throw Error("positive system has " + std::to_string(out.size()) + " roots, expected 120");

    // Condition (1): exactly one of r, -r selected.
    std::set<std::array<int, 8>> positive(out.numerators.begin(), out.numerators.end());
    for (const auto& r : all) {
        std::array<int, 8> neg;
        for (int i = 0; i < 8; ++i) neg[i] = -r[i];
        if (positive.count(r) == positive.count(neg))
            throw Error("positive system does not split a +-r pair");
    }
    // Condition (2): closed under addition within the root system.
    for (const auto& x : out.numerators)
        for (const auto& y : out.numerators) {
            std::array<int, 8> s;
            for (int i = 0; i < 8; ++i) s[i] = x[i] + y[i];
            if (root_set.count(s) && !positive.count(s))
                throw Error("positive system is not closed under root addition");
        }
    return out;
}

/// The Gram signed graph N^T N - 2I of the 120 positive roots of E8; every
/// off-diagonal entry is checked to land in {-1, 0, +1}.
inline SignedGraph e8_signed_graph() {
    RootList roots = e8_positive_roots();
    const int n = static_cast<int>(roots.size());
    std::vector<std::tuple<int, int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            long scaled = 0;
            for (int k = 0; k < 8; ++k)
                scaled += static_cast<long>(roots.numerators[i][k]) * roots.numerators[j][k];
            if (scaled % 4 != 0)
                throw GramEntryOutOfRange("non-integral Gram product at (" + std::to_string(i) +
                                          "," + std::to_string(j) + ")");
            long entry = scaled / 4 - (i == j ? 2 : 0);
            if (i == j) {
                if (entry != 0)
                    throw GramEntryOutOfRange("root " + std::to_string(i) + " has norm != 2");
            } else if (entry < -1 || entry > 1) {
                throw GramEntryOutOfRange("Gram entry " + std::to_string(entry) + " at (" +
                                          std::to_string(i) + "," + std::to_string(j) + ")");
            } else if (entry != 0) {
                edges.emplace_back(i, j, static_cast<int>(entry));
            }
        }
    }
    return SignedGraph::build(n, edges);
}

/// xorshift64* stream, fixed so generated corpora are portable:
///   s ^= s >> 12; s ^= s << 25; s ^= s >> 27; output s * 0x2545F4914F6CDD1D.
/// Uniform doubles take the top 53 bits of the output.
class Xorshift64Star {
public:
    explicit Xorshift64Star(uint64_t seed) : s_(seed ? seed : 0x9E3779B97F4A7C15ULL) {}

    uint64_t next() {
        s_ ^= s_ >> 12;
        s_ ^= s_ << 25;
        s_ ^= s_ >> 27;
        return s_ * 0x2545F4914F6CDD1DULL;
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    uint64_t s_;
};

/// Reproducible random signed graph: pairs (i, j), i < j, visited in row-major
/// order; one uniform draw decides the edge, a second (only when the edge
/// exists) decides the sign.
inline SignedGraph random_signed_graph(int n, double edge_prob, double neg_prob, uint64_t seed) {
    if (edge_prob < 0 || edge_prob > 1 || neg_prob < 0 || neg_prob > 1)
        throw Error("random_signed_graph probabilities must lie in [0, 1]");
    Xorshift64Star rng(seed);
    std::vector<std::tuple<int, int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (rng.uniform01() < edge_prob) {
                int sign = rng.uniform01() < neg_prob ? -1 : 1;
                edges.emplace_back(i, j, sign);
            }
        }
    return SignedGraph::build(n, edges);
}

}  // namespace sgstar
