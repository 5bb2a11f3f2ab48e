#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "sgstar/errors.hpp"

namespace sgstar {

inline int sign_of(const mpq_class& q) { return mpq_sgn(q.get_mpq_t()); }
inline int sign_of(const mpz_class& z) { return mpz_sgn(z.get_mpz_t()); }

/// A number in Q or in a real quadratic field Q(sqrt(D)), stored as a + b*sqrt(d).
///
/// Canonical form: d == 0 exactly when b == 0 (pure rational); otherwise d is a
/// squarefree integer > 1. Construction normalizes: square factors of d are pulled
/// into b, and sqrt(1) collapses into the rational part. Arithmetic between two
/// values with distinct nonzero d throws MixedFields.
class ExactScalar {
public:
    ExactScalar() : a_(0), b_(0), d_(0) {}
    ExactScalar(long v) : a_(v), b_(0), d_(0) {}          // NOLINT(google-explicit-constructor)
    ExactScalar(int v) : a_(v), b_(0), d_(0) {}           // NOLINT(google-explicit-constructor)
    ExactScalar(mpz_class v) : a_(std::move(v)), b_(0), d_(0) {}  // NOLINT
    ExactScalar(mpq_class v) : a_(std::move(v)), b_(0), d_(0) { a_.canonicalize(); }  // NOLINT

    ExactScalar(mpq_class rational_part, mpq_class surd_coefficient, long radicand)
        : a_(std::move(rational_part)), b_(std::move(surd_coefficient)), d_(radicand) {
        a_.canonicalize();
        b_.canonicalize();
        normalize();
    }

    static ExactScalar rational(mpz_class num, mpz_class den) {
        if (sign_of(den) == 0) throw Error("rational with zero denominator");
        mpq_class q(std::move(num), std::move(den));
        q.canonicalize();
        return ExactScalar(std::move(q));
    }

    static ExactScalar sqrt_of(long radicand) {
        if (radicand < 0) throw Error("sqrt of negative integer is not real");
        return ExactScalar(mpq_class(0), mpq_class(1), radicand);
    }

    const mpq_class& rational_part() const { return a_; }
    const mpq_class& surd_coefficient() const { return b_; }
    long radicand() const { return d_; }

    bool is_rational() const { return d_ == 0; }
    bool is_integer() const { return is_rational() && a_.get_den() == 1; }
    bool is_zero() const { return d_ == 0 && sign_of(a_) == 0; }

    /// Exact rational value; caller must ensure is_rational().
    const mpq_class& as_rational() const {
        if (!is_rational()) throw Error("scalar is not rational");
        return a_;
    }

    int sign() const {
        if (d_ == 0) return sign_of(a_);
        int sa = sign_of(a_), sb = sign_of(b_);
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // a and b have opposite signs: compare a^2 against b^2*d.
        // Equality is impossible since sqrt(d) is irrational (d squarefree > 1).
        mpq_class lhs = a_ * a_;
        mpq_class rhs = b_ * b_ * d_;
        return lhs > rhs ? sa : sb;
    }

    double approx() const {
        double v = a_.get_d();
        if (d_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
        return v;
    }

    ExactScalar operator-() const {
        ExactScalar r(*this);
        r.a_ = -r.a_;
        r.b_ = -r.b_;
        return r;
    }

    ExactScalar& operator+=(const ExactScalar& o) {
        long d = unify(o);
        a_ += o.a_;
        b_ += o.b_;
        d_ = d;
        normalize();
        return *this;
    }
    ExactScalar& operator-=(const ExactScalar& o) {
        long d = unify(o);
        a_ -= o.a_;
        b_ -= o.b_;
        d_ = d;
        normalize();
        return *this;
    }
    ExactScalar& operator*=(const ExactScalar& o) {
        long d = unify(o);
        mpq_class na = a_ * o.a_ + b_ * o.b_ * d;
        mpq_class nb = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
        d_ = d;
        normalize();
        return *this;
    }
    ExactScalar& operator/=(const ExactScalar& o) { return *this *= o.inverse(); }

    ExactScalar inverse() const {
        if (is_zero()) throw Error("division by zero scalar");
        if (d_ == 0) {
            ExactScalar r;
            r.a_ = mpq_class(1) / a_;
            return r;
        }
        // 1/(a + b*sqrt(d)) = (a - b*sqrt(d)) / (a^2 - b^2 d); the norm is nonzero
        // because sqrt(d) is irrational.
        mpq_class norm = a_ * a_ - b_ * b_ * d_;
        return ExactScalar(a_ / norm, -b_ / norm, d_);
    }

    ExactScalar conjugate() const {
        ExactScalar r(*this);
        r.b_ = -r.b_;
        return r;
    }

    friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
    friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
    friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }
    friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }

    friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }

    /// Canonical text form in the CLI grammar: "p/q" or "[RAT][+|-][RAT*]sqrt(D)".
    std::string str() const {
        if (d_ == 0) return a_.get_str();
        std::string out;
        if (sign_of(a_) != 0) out += a_.get_str();
        if (sign_of(b_) > 0) {
            if (!out.empty()) out += "+";
        } else {
            out += "-";
        }
        mpq_class coef = abs(b_);
        if (coef != 1) out += coef.get_str() + "*";
        out += "sqrt(" + std::to_string(d_) + ")";
        return out;
    }

    /// Parses the CLI exact-scalar grammar: INT, INT/INT, [RAT][+|-RAT*]sqrt(INT).
    static ExactScalar parse(const std::string& text);

private:
    mpq_class a_;
    mpq_class b_;
    long d_;

    long unify(const ExactScalar& o) const {
        if (d_ == o.d_) return d_;
        if (d_ == 0) return o.d_;
        if (o.d_ == 0) return d_;
        throw MixedFields("cannot mix sqrt(" + std::to_string(d_) + ") with sqrt(" +
                          std::to_string(o.d_) + ")");
    }

    void normalize() {
        if (sign_of(b_) == 0) {
            d_ = 0;
            return;
        }
        if (d_ < 0) throw Error("negative radicand");
        if (d_ == 0) {
            b_ = 0;
            return;
        }
        // Pull square factors out of the radicand.
        for (long f = 2; f * f <= d_; ++f) {
            long sq = f * f;
            while (d_ % sq == 0) {
                d_ /= sq;
                b_ *= f;
            }
        }
        if (d_ == 1) {
            a_ += b_;
            b_ = 0;
            d_ = 0;
        }
    }
};

namespace detail {

inline bool parse_unsigned_int(const std::string& s, size_t& pos, mpz_class& out) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return false;
    // base fixed to 10: the default base 0 reads a leading '0' as octal
    out = mpz_class(s.substr(start, pos - start), 10);
    return true;
}

// RAT := UINT [ '/' UINT ]; the sign is handled by the caller.
inline bool parse_unsigned_rat(const std::string& s, size_t& pos, mpq_class& out) {
    mpz_class num;
    if (!parse_unsigned_int(s, pos, num)) return false;
    if (pos < s.size() && s[pos] == '/') {
        size_t save = pos;
        ++pos;
        mpz_class den;
        if (!parse_unsigned_int(s, pos, den) || den == 0) {
            pos = save;
            out = mpq_class(num);
            return true;
        }
        out = mpq_class(num, den);
        out.canonicalize();
        return true;
    }
    out = mpq_class(num);
    return true;
}

inline bool parse_sqrt(const std::string& s, size_t& pos, long& radicand) {
    if (s.compare(pos, 5, "sqrt(") != 0) return false;
    size_t p = pos + 5;
    mpz_class r;
    if (!parse_unsigned_int(s, p, r)) return false;
    if (p >= s.size() || s[p] != ')') return false;
    if (!r.fits_slong_p()) throw Error("radicand too large: " + r.get_str());
    radicand = r.get_si();
    pos = p + 1;
    return true;
}

}  // namespace detail

inline ExactScalar ExactScalar::parse(const std::string& text) {
    const auto fail = [&]() -> ExactScalar {
        throw Error("invalid exact scalar '" + text + "' (expected INT, INT/INT or [RAT][+|-RAT*]sqrt(INT))");
    };
    size_t pos = 0;
    int sign1 = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign1 = -1;
        ++pos;
    }
    mpq_class first;
    bool have_first = detail::parse_unsigned_rat(text, pos, first);
    if (have_first) first *= sign1;

    if (have_first && pos == text.size()) return ExactScalar(first);

    mpq_class rational_part = 0;
    int surd_sign = sign1;
    mpq_class coef = 1;
    bool have_coef_value = false;

    if (have_first) {
        if (pos < text.size() && text[pos] == '*') {
            // first was the surd coefficient: RAT*sqrt(D)
            ++pos;
            coef = first;
            have_coef_value = true;
            surd_sign = 1;  // sign already folded into coef
        } else if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            rational_part = first;
            surd_sign = (text[pos] == '-') ? -1 : 1;
            ++pos;
            mpq_class c;
            if (detail::parse_unsigned_rat(text, pos, c)) {
                if (pos >= text.size() || text[pos] != '*') return fail();
                ++pos;
                coef = c;
                have_coef_value = true;
            }
        } else {
            return fail();
        }
    } else {
        // No leading rational: optional coefficient then sqrt.
        mpq_class c;
        size_t save = pos;
        if (detail::parse_unsigned_rat(text, pos, c)) {
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                coef = c;
                have_coef_value = true;
            } else {
                pos = save;
            }
        }
    }
    (void)have_coef_value;

    long radicand = 0;
    if (!detail::parse_sqrt(text, pos, radicand)) return fail();
    if (pos != text.size()) return fail();
    return ExactScalar(rational_part, coef * surd_sign, radicand);
}

}  // namespace sgstar
