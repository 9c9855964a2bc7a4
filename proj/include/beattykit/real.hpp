#pragma once

#include <gmpxx.h>

#include <string>

#include "beattykit/dd.hpp"

namespace beattykit {

// Exact representation of the real numbers the toolkit cares about:
// rationals, quadratic irrationals (p + r*sqrt(D))/q, and decimal
// literals carried as exact rational intervals.  Floor, comparison and
// the field operations used by the Beatty/continued-fraction code are
// exact for the first two kinds; decimal literals fail loudly
// (precision_exhausted) instead of silently degrading.
class Real {
public:
    enum class Kind { Rational, Quadratic, Decimal };

    Real() = default;  // rational zero

    static Real rational(mpq_class v);
    static Real integer(long n) { return rational(mpq_class(n)); }
    // (p + r*sqrt(D))/q, D a positive non-square, r != 0.
    static Real quadratic(mpz_class p, mpz_class r, mpz_class D, mpz_class q);
    static Real sqrt_of(unsigned long D) { return quadratic(0, 1, mpz_class(D), 1); }
    static Real golden_ratio() { return quadratic(1, 1, 5, 2); }
    // Digits are taken exactly; the certified radius is half an ulp of the
    // last written digit.  prec_bits is recorded (default 256).
    static Real decimal(const std::string& digits, unsigned prec_bits = 256);

    // Textual forms: rat:p/q  quad:p,r,D,q  sqrt:D  dec:<digits>  phi,
    // plus bare integers and bare decimal strings.
    static Real parse(const std::string& text);

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::Rational; }
    bool is_integer() const;
    mpq_class as_rational() const;  // throws unless Kind::Rational

    Real add_q(const mpq_class& v) const;
    Real sub_q(const mpq_class& v) const { return add_q(mpq_class(-v)); }
    Real mul_q(const mpq_class& v) const;
    Real neg() const;
    Real reciprocal() const;

    // General add/mul: exact whenever the result stays in the family
    // (rational operand, or two quadratics over the same radicand);
    // otherwise falls back to interval arithmetic at stored precision.
    Real add(const Real& other) const;
    Real sub(const Real& other) const { return add(other.neg()); }
    Real mul(const Real& other) const;

    mpz_class floor() const;  // throws precision_exhausted if uncertain
    Real frac() const { return sub_q(mpq_class(floor())); }

    int sign() const { return cmp_q(0); }
    int cmp_q(const mpq_class& v) const;  // -1 / 0 / +1
    int cmp(const Real& other) const;

    bool is_zero() const;

    double to_double() const;
    dd to_dd() const;
    // Exact rational enclosure [lo, hi] with hi - lo <= 2^-bits
    // (or the stored radius for decimal literals).
    void enclosure(mpq_class& lo, mpq_class& hi, unsigned bits = 128) const;

    std::string str() const;

private:
    Kind kind_ = Kind::Rational;
    mpq_class rat_;                  // Rational
    mpz_class p_, r_, D_, q_;        // Quadratic
    mpq_class lo_, hi_;              // Decimal interval
    std::string dec_str_;            // original digit string, if any
    unsigned prec_bits_ = 256;

    static Real make_quad(mpz_class p, mpz_class r, mpz_class D, mpz_class q);
    static Real make_interval(mpq_class lo, mpq_class hi, unsigned prec_bits);
};

}  // namespace beattykit
