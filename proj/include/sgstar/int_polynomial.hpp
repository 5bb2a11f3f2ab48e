#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "sgstar/errors.hpp"
#include "sgstar/exact_scalar.hpp"

namespace sgstar {

/// Polynomial with big-integer coefficients, lowest degree first, no trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(mpz_class v) { return IntPolynomial({std::move(v)}); }
    static IntPolynomial x_power(size_t k) {
        std::vector<mpz_class> c(k + 1, 0);
        c[k] = 1;
        return IntPolynomial(std::move(c));
    }

    const std::vector<mpz_class>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for the zero polynomial
    const mpz_class& leading() const { return c_.back(); }
    mpz_class coeff(size_t k) const { return k < c_.size() ? c_[k] : mpz_class(0); }

    friend bool operator==(const IntPolynomial& p, const IntPolynomial& q) { return p.c_ == q.c_; }
    friend bool operator!=(const IntPolynomial& p, const IntPolynomial& q) { return !(p == q); }

    friend IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
        std::vector<mpz_class> c(std::max(p.c_.size(), q.c_.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) + q.coeff(i);
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) {
        std::vector<mpz_class> c(std::max(p.c_.size(), q.c_.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) - q.coeff(i);
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
        if (p.is_zero() || q.is_zero()) return zero();
        std::vector<mpz_class> c(p.c_.size() + q.c_.size() - 1, 0);
        for (size_t i = 0; i < p.c_.size(); ++i)
            for (size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator*(const IntPolynomial& p, const mpz_class& s) {
        std::vector<mpz_class> c(p.c_);
        for (auto& v : c) v *= s;
        return IntPolynomial(std::move(c));
    }

    IntPolynomial derivative() const {
        if (c_.size() <= 1) return zero();
        std::vector<mpz_class> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long>(i);
        return IntPolynomial(std::move(c));
    }

    ExactScalar evaluate(const ExactScalar& x) const {
        ExactScalar acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + ExactScalar(c_[i]);
        return acc;
    }

    mpz_class content() const {
        mpz_class g = 0;
        for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        return g;  // 0 for the zero polynomial
    }

    /// Content removed and leading coefficient made positive.
    IntPolynomial primitive() const {
        if (is_zero()) return zero();
        mpz_class g = content();
        if (sign_of(leading()) < 0) g = -g;
        std::vector<mpz_class> c(c_);
        for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        return IntPolynomial(std::move(c));
    }

    /// Exact division; the caller guarantees divisibility in Z[x].
    friend IntPolynomial div_exact(const IntPolynomial& p, const IntPolynomial& q) {
        if (q.is_zero()) throw Error("polynomial division by zero");
        if (p.is_zero()) return zero();
        if (p.degree() < q.degree()) throw Error("inexact polynomial division");
        std::vector<mpz_class> rem(p.c_);
        std::vector<mpz_class> quot(p.degree() - q.degree() + 1, 0);
        for (long k = p.degree() - q.degree(); k >= 0; --k) {
            mpz_class& lead = rem[k + q.degree()];
            if (lead == 0) continue;
            mpz_class qk;
            mpz_class r;
            mpz_fdiv_qr(qk.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(), q.leading().get_mpz_t());
            if (r != 0) throw Error("inexact polynomial division");
            quot[k] = qk;
            for (long i = 0; i <= q.degree(); ++i) rem[k + i] -= qk * q.c_[i];
        }
        for (const auto& v : rem)
            if (v != 0) throw Error("inexact polynomial division");
        return IntPolynomial(std::move(quot));
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!out.empty()) out += (sign_of(c_[i]) > 0) ? " + " : " - ";
            else if (sign_of(c_[i]) < 0) out += "-";
            mpz_class a = abs(c_[i]);
            if (a != 1 || i == 0) out += a.get_str();
            if (i > 0) {
                if (a != 1) out += "*";
                out += "x";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    std::vector<mpz_class> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

namespace detail {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, all over Z.
inline IntPolynomial pseudo_rem(IntPolynomial a, const IntPolynomial& b) {
    long db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        long shift = a.degree() - db;
        IntPolynomial t = IntPolynomial::x_power(static_cast<size_t>(shift)) * b;
        a = a * b.leading() - t * a.leading();
    }
    return a;
}

}  // namespace detail

/// Gcd in Z[x] by the primitive Euclidean remainder sequence, returned primitive
/// with positive leading coefficient.
inline IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    a = a.primitive();
    b = b.primitive();
    while (!b.is_zero()) {
        IntPolynomial r = detail::pseudo_rem(a, b).primitive();
        a = std::move(b);
        b = std::move(r);
    }
    return a.primitive();
}

/// Monic characteristic polynomial det(xI - A) of a square integer matrix, exact
/// big-integer coefficients via the Faddeev-LeVerrier recurrence.
inline IntPolynomial char_poly(const std::vector<std::vector<mpz_class>>& a) {
    const size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw NotSquare("char_poly requires a square matrix");
    std::vector<mpz_class> coeffs(n + 1, 0);
    coeffs[n] = 1;
    if (n == 0) return IntPolynomial(std::move(coeffs));

    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    std::vector<std::vector<mpz_class>> next(n, std::vector<mpz_class>(n));
    for (size_t k = 1; k <= n; ++k) {
        // next = a * m
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                mpz_class acc = 0;
                for (size_t l = 0; l < n; ++l)
                    if (a[i][l] != 0) acc += a[i][l] * m[l][j];
                next[i][j] = std::move(acc);
            }
        std::swap(m, next);
        mpz_class tr = 0;
        for (size_t i = 0; i < n; ++i) tr += m[i][i];
        mpz_class ck;
        mpz_class r;
        mpz_fdiv_qr(ck.get_mpz_t(), r.get_mpz_t(), tr.get_mpz_t(), mpz_class(k).get_mpz_t());
        if (r != 0) throw Error("Faddeev-LeVerrier trace not divisible (internal)");
        ck = -ck;
        coeffs[n - k] = ck;
        for (size_t i = 0; i < n; ++i) m[i][i] += ck;
    }
    return IntPolynomial(std::move(coeffs));
}

struct SquarefreeFactor {
    IntPolynomial factor;
    int multiplicity;
};

struct SquarefreeDecomposition {
    mpz_class constant;                    // p = constant * prod factor^multiplicity
    std::vector<SquarefreeFactor> factors;  // squarefree, pairwise coprime, multiplicities increasing

    IntPolynomial reconstruct() const {
        IntPolynomial p = IntPolynomial::constant(constant);
        for (const auto& f : factors)
            for (int i = 0; i < f.multiplicity; ++i) p = p * f.factor;
        return p;
    }
};

/// Yun's squarefree decomposition over Z[x].
inline SquarefreeDecomposition squarefree_decomposition(const IntPolynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("squarefree decomposition of the zero polynomial");
    SquarefreeDecomposition out;
    mpz_class cont = p.content();
    if (sign_of(p.leading()) < 0) cont = -cont;
    out.constant = cont;
    IntPolynomial p0 = p.primitive();
    if (p0.degree() == 0) return out;

    IntPolynomial g = poly_gcd(p0, p0.derivative());
    if (g.degree() == 0) {
        out.factors.push_back({p0, 1});
        return out;
    }
    IntPolynomial b = div_exact(p0, g);
    IntPolynomial c = div_exact(p0.derivative(), g);
    IntPolynomial d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        IntPolynomial f = poly_gcd(b, d);
        if (f.degree() > 0) out.factors.push_back({f, i});
        b = div_exact(b, f);
        c = div_exact(d, f);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

}  // namespace sgstar
