#include <catch2/catch_amalgamated.hpp>

#include "sgstar/constructions.hpp"
#include "sgstar/exact_matrix.hpp"
#include "sgstar/signed_graph.hpp"

using namespace sgstar;

TEST_CASE("rank on the stock examples", "[exact-matrix]") {
    CHECK(rank(ExactMatrix::identity(3)) == 3);

    ExactMatrix ones(4, 4, ExactScalar(1));
    CHECK(rank(ones) == 1);

    // A - sqrt(2) I for the one-negative-edge quadrangle has rank 2 over Q(sqrt(2)),
    // certifying multiplicity 4 - 2 = 2.
    SignedGraph q = quadrangle(1);
    CHECK(rank(q.shifted_adjacency(ExactScalar::sqrt_of(2))) == 2);
    CHECK(rank(ExactMatrix(0, 0)) == 0);
}

TEST_CASE("rank plus nullity equals column count", "[exact-matrix][property]") {
    // ties the Bareiss rank to the independent Gauss-Jordan elimination in
    // kernel_basis, over Q and over Q(sqrt(7))
    uint64_t state = 7;
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long>((state >> 33) % 7) - 3;
    };
    for (int trial = 0; trial < 60; ++trial) {
        size_t rows = 2 + trial % 4, cols = 2 + (trial / 2) % 4;
        bool quadratic = trial % 3 == 0;
        ExactMatrix m(rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                m(i, j) = quadratic ? ExactScalar{mpq_class(next()), mpq_class(next()), 7}
                                    : ExactScalar(next());
        auto basis = kernel_basis(m);
        CHECK(rank(m) + basis.size() == cols);
        for (const auto& v : basis) {
            for (size_t i = 0; i < rows; ++i) {
                ExactScalar acc(0);
                for (size_t j = 0; j < cols; ++j) acc += m(i, j) * v[j];
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("solve examples", "[exact-matrix]") {
    ExactVector b = {ExactScalar(3), ExactScalar::rational(1, 2)};
    CHECK(solve(ExactMatrix::identity(2), b) == b);

    ExactMatrix two_i(2, 2);
    two_i(0, 0) = two_i(1, 1) = ExactScalar(2);
    ExactVector half = solve(two_i, b);
    CHECK(half[0] == ExactScalar::rational(3, 2));
    CHECK(half[1] == ExactScalar::rational(1, 4));

    // (sqrt(2) I - C)^{-1} e_0 for C a single positive edge: first column of the
    // adjugate inverse [[sqrt(2), 1], [1, sqrt(2)]] (determinant 1).
    ExactScalar r2 = ExactScalar::sqrt_of(2);
    ExactMatrix shift(2, 2);
    shift(0, 0) = shift(1, 1) = r2;
    shift(0, 1) = shift(1, 0) = ExactScalar(-1);
    ExactVector e0 = {ExactScalar(1), ExactScalar(0)};
    ExactVector col = solve(shift, e0);
    CHECK(col[0] == r2);
    CHECK(col[1] == ExactScalar(1));

    ExactMatrix singular(2, 2, ExactScalar(1));
    CHECK_THROWS_AS(solve(singular, b), SingularMatrix);
}

TEST_CASE("solve result satisfies the system exactly", "[exact-matrix][property]") {
    uint64_t state = 17;
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long>((state >> 33) % 9) - 4;
    };
    int solved = 0;
    for (int trial = 0; trial < 30 && solved < 15; ++trial) {
        size_t n = 2 + trial % 3;
        ExactMatrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                m(i, j) = ExactScalar(mpq_class(next()), mpq_class(next()), 3);
        ExactMatrix rhs(n, 2);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < 2; ++j) rhs(i, j) = ExactScalar(next());
        try {
            ExactMatrix x = solve(m, rhs);
            CHECK(m * x == rhs);
            ++solved;
        } catch (const SingularMatrix&) {
            CHECK(rank(m) < n);
        }
    }
    CHECK(solved >= 15);
}

TEST_CASE("determinant via Bareiss", "[exact-matrix]") {
    CHECK(det(ExactMatrix::identity(4)) == ExactScalar(1));
    ExactMatrix m(2, 2);
    m(0, 0) = ExactScalar::sqrt_of(2);
    m(0, 1) = ExactScalar(-1);
    m(1, 0) = ExactScalar(-1);
    m(1, 1) = ExactScalar::sqrt_of(2);
    CHECK(det(m) == ExactScalar(1));
    ExactMatrix singular(3, 3, ExactScalar(2));
    CHECK(det(singular).is_zero());
    // row swaps flip the sign
    ExactMatrix p(2, 2);
    p(0, 1) = ExactScalar(1);
    p(1, 0) = ExactScalar(1);
    CHECK(det(p) == ExactScalar(-1));
}

TEST_CASE("inverse round-trips", "[exact-matrix]") {
    SignedGraph q = quadrangle(1);
    ExactMatrix a = q.shifted_adjacency(ExactScalar::rational(7, 3));
    CHECK(a * inverse(a) == ExactMatrix::identity(4));
}
