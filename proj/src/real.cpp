#include "beattykit/real.hpp"

#include <cctype>
#include <stdexcept>

#include "beattykit/errors.hpp"

namespace beattykit {

namespace {

mpz_class mpq_floor(const mpq_class& v) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    return q;
}

mpz_class isqrt(const mpz_class& n) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// sign of A + B*sqrt(D), D > 0 not a perfect square
int sign_quad(const mpz_class& A, const mpz_class& B, const mpz_class& D) {
    int sa = sgn(A), sb = sgn(B);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare A^2 against B^2*D
    mpz_class a2 = A * A, b2d = B * B * D;
    int c = cmp(a2, b2d);
    if (c == 0) return 0;  // impossible for non-square D, kept for safety
    return (c > 0) ? sa : sb;
}

// pull square factors of D into r
void reduce_radicand(mpz_class& D, mpz_class& r) {
    for (mpz_class f = 2; f * f <= D && f < 100000; ++f) {
        mpz_class f2 = f * f;
        while (mpz_divisible_p(D.get_mpz_t(), f2.get_mpz_t())) {
            D /= f2;
            r *= f;
        }
    }
    if (mpz_perfect_square_p(D.get_mpz_t())) {
        r *= isqrt(D);
        D = 1;
    }
}

}  // namespace

Real Real::rational(mpq_class v) {
    v.canonicalize();
    Real x;
    x.kind_ = Kind::Rational;
    x.rat_ = std::move(v);
    return x;
}

Real Real::make_quad(mpz_class p, mpz_class r, mpz_class D, mpz_class q) {
    if (q == 0) throw std::invalid_argument("quadratic: zero denominator");
    if (r == 0 || D == 1) return rational(mpq_class(p + r, q));
    if (q < 0) {
        p = -p;
        r = -r;
        q = -q;
    }
    reduce_radicand(D, r);
    if (D == 1) return rational(mpq_class(p + r, q));
    mpz_class g = gcd(gcd(p, r), q);
    if (g > 1) {
        p /= g;
        r /= g;
        q /= g;
    }
    Real x;
    x.kind_ = Kind::Quadratic;
    x.p_ = std::move(p);
    x.r_ = std::move(r);
    x.D_ = std::move(D);
    x.q_ = std::move(q);
    return x;
}

Real Real::quadratic(mpz_class p, mpz_class r, mpz_class D, mpz_class q) {
    if (D <= 0) throw std::invalid_argument("quadratic: D must be positive");
    if (mpz_perfect_square_p(D.get_mpz_t()))
        throw std::invalid_argument("quadratic: D must not be a perfect square");
    if (r == 0) throw std::invalid_argument("quadratic: r must be nonzero");
    if (q == 0) throw std::invalid_argument("quadratic: q must be nonzero");
    return make_quad(std::move(p), std::move(r), std::move(D), std::move(q));
}

Real Real::make_interval(mpq_class lo, mpq_class hi, unsigned prec_bits) {
    Real x;
    x.kind_ = Kind::Decimal;
    x.lo_ = std::move(lo);
    x.hi_ = std::move(hi);
    x.prec_bits_ = prec_bits;
    return x;
}

Real Real::decimal(const std::string& digits, unsigned prec_bits) {
    std::string s = digits;
    bool negative = false;
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = (s[i] == '-');
        ++i;
    }
    std::string intpart, fracpart;
    bool dot = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '.') {
            if (dot) throw std::invalid_argument("decimal: two dots in " + digits);
            dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            (dot ? fracpart : intpart) += s[i];
        } else {
            throw std::invalid_argument("decimal: bad character in " + digits);
        }
    }
    if (intpart.empty() && fracpart.empty())
        throw std::invalid_argument("decimal: no digits in " + digits);
    if (intpart.empty()) intpart = "0";

    mpz_class scale = 1;
    for (size_t k = 0; k < fracpart.size(); ++k) scale *= 10;
    mpz_class num(intpart + fracpart);
    if (negative) num = -num;
    mpq_class value(num, scale);
    value.canonicalize();
    mpq_class radius(1, 2 * scale);

    Real x = make_interval(value - radius, value + radius, prec_bits);
    x.dec_str_ = digits;
    return x;
}

bool Real::is_integer() const {
    switch (kind_) {
        case Kind::Rational: return rat_.get_den() == 1;
        case Kind::Quadratic: return false;
        case Kind::Decimal: return lo_ == hi_ && lo_.get_den() == 1;
    }
    return false;
}

mpq_class Real::as_rational() const {
    if (kind_ != Kind::Rational) throw std::domain_error("not a rational RealSpec");
    return rat_;
}

Real Real::add_q(const mpq_class& v) const {
    switch (kind_) {
        case Kind::Rational: return rational(rat_ + v);
        case Kind::Quadratic:
            return make_quad(p_ * v.get_den() + v.get_num() * q_, r_ * v.get_den(), D_,
                             q_ * v.get_den());
        case Kind::Decimal: {
            Real x = make_interval(lo_ + v, hi_ + v, prec_bits_);
            return x;
        }
    }
    throw std::logic_error("unreachable");
}

Real Real::mul_q(const mpq_class& v) const {
    if (v == 0) return rational(0);
    switch (kind_) {
        case Kind::Rational: return rational(rat_ * v);
        case Kind::Quadratic:
            return make_quad(p_ * v.get_num(), r_ * v.get_num(), D_, q_ * v.get_den());
        case Kind::Decimal:
            if (v > 0) return make_interval(lo_ * v, hi_ * v, prec_bits_);
            return make_interval(hi_ * v, lo_ * v, prec_bits_);
    }
    throw std::logic_error("unreachable");
}

Real Real::neg() const {
    switch (kind_) {
        case Kind::Rational: return rational(-rat_);
        case Kind::Quadratic: return make_quad(-p_, -r_, D_, q_);
        case Kind::Decimal: return make_interval(-hi_, -lo_, prec_bits_);
    }
    throw std::logic_error("unreachable");
}

Real Real::reciprocal() const {
    switch (kind_) {
        case Kind::Rational:
            if (rat_ == 0) throw std::domain_error("reciprocal of zero");
            return rational(1 / rat_);
        case Kind::Quadratic:
            // 1/((p + r sqrt D)/q) = (q p - q r sqrt D)/(p^2 - r^2 D)
            return make_quad(q_ * p_, -(q_ * r_), D_, p_ * p_ - r_ * r_ * D_);
        case Kind::Decimal:
            if (lo_ > 0 || hi_ < 0)
                return make_interval(1 / hi_, 1 / lo_, prec_bits_);
            throw precision_exhausted("reciprocal: interval straddles zero");
    }
    throw std::logic_error("unreachable");
}

Real Real::add(const Real& other) const {
    if (kind_ == Kind::Rational) return other.add_q(rat_);
    if (other.kind_ == Kind::Rational) return add_q(other.rat_);
    if (kind_ == Kind::Quadratic && other.kind_ == Kind::Quadratic && D_ == other.D_)
        return make_quad(p_ * other.q_ + other.p_ * q_, r_ * other.q_ + other.r_ * q_, D_,
                         q_ * other.q_);
    mpq_class alo, ahi, blo, bhi;
    unsigned bits = std::min(prec_bits_, other.prec_bits_);
    enclosure(alo, ahi, bits);
    other.enclosure(blo, bhi, bits);
    return make_interval(alo + blo, ahi + bhi, bits);
}

Real Real::mul(const Real& other) const {
    if (kind_ == Kind::Rational) return other.mul_q(rat_);
    if (other.kind_ == Kind::Rational) return mul_q(other.rat_);
    if (kind_ == Kind::Quadratic && other.kind_ == Kind::Quadratic && D_ == other.D_)
        return make_quad(p_ * other.p_ + r_ * other.r_ * D_, p_ * other.r_ + r_ * other.p_,
                         D_, q_ * other.q_);
    mpq_class alo, ahi, blo, bhi;
    unsigned bits = std::min(prec_bits_, other.prec_bits_);
    enclosure(alo, ahi, bits);
    other.enclosure(blo, bhi, bits);
    mpq_class c[4] = {alo * blo, alo * bhi, ahi * blo, ahi * bhi};
    mpq_class lo = c[0], hi = c[0];
    for (int i = 1; i < 4; ++i) {
        if (c[i] < lo) lo = c[i];
        if (c[i] > hi) hi = c[i];
    }
    return make_interval(lo, hi, bits);
}

mpz_class Real::floor() const {
    switch (kind_) {
        case Kind::Rational: return mpq_floor(rat_);
        case Kind::Quadratic: {
            // floor((p + r sqrt D)/q) with q > 0: replace r sqrt D by its
            // integer floor; no integer can sit between the two numerators.
            mpz_class t;
            if (r_ > 0) {
                t = isqrt(r_ * r_ * D_);
            } else {
                t = -(isqrt(r_ * r_ * D_) + 1);
            }
            mpz_class res;
            mpz_class num = p_ + t;
            mpz_fdiv_q(res.get_mpz_t(), num.get_mpz_t(), q_.get_mpz_t());
            return res;
        }
        case Kind::Decimal: {
            mpz_class fl = mpq_floor(lo_), fh = mpq_floor(hi_);
            if (fl != fh)
                throw precision_exhausted("floor: decimal interval straddles an integer");
            return fl;
        }
    }
    throw std::logic_error("unreachable");
}

int Real::cmp_q(const mpq_class& v) const {
    switch (kind_) {
        case Kind::Rational: return ::cmp(rat_, v);
        case Kind::Quadratic:
            return sign_quad(p_ * v.get_den() - v.get_num() * q_, r_ * v.get_den(), D_);
        case Kind::Decimal:
            if (hi_ < v) return -1;
            if (lo_ > v) return 1;
            if (lo_ == v && hi_ == v) return 0;
            throw precision_exhausted("cmp: decimal interval contains the comparand");
    }
    throw std::logic_error("unreachable");
}

int Real::cmp(const Real& other) const {
    if (other.kind_ == Kind::Rational) return cmp_q(other.rat_);
    if (kind_ == Kind::Rational) return -other.cmp_q(rat_);
    if (kind_ == Kind::Quadratic && other.kind_ == Kind::Quadratic && D_ == other.D_)
        return sign_quad(p_ * other.q_ - other.p_ * q_, r_ * other.q_ - other.r_ * q_, D_);
    for (unsigned bits = 128; bits <= 4096; bits *= 2) {
        mpq_class alo, ahi, blo, bhi;
        enclosure(alo, ahi, bits);
        other.enclosure(blo, bhi, bits);
        if (ahi < blo) return -1;
        if (alo > bhi) return 1;
        bool fixed_a = (kind_ == Kind::Decimal);
        bool fixed_b = (other.kind_ == Kind::Decimal);
        if (fixed_a && fixed_b) break;  // intervals will not shrink
    }
    throw precision_exhausted("cmp: cannot separate values at available precision");
}

bool Real::is_zero() const {
    switch (kind_) {
        case Kind::Rational: return rat_ == 0;
        case Kind::Quadratic: return false;
        case Kind::Decimal: return lo_ == 0 && hi_ == 0;
    }
    return false;
}

void Real::enclosure(mpq_class& lo, mpq_class& hi, unsigned bits) const {
    switch (kind_) {
        case Kind::Rational:
            lo = rat_;
            hi = rat_;
            return;
        case Kind::Quadratic: {
            mpz_class two_k = 1;
            mpz_mul_2exp(two_k.get_mpz_t(), two_k.get_mpz_t(), bits);
            mpz_class scaled = D_;
            mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
            mpz_class s = isqrt(scaled);  // s/2^bits <= sqrt(D) < (s+1)/2^bits
            mpq_class s_lo(s, two_k), s_hi(s + 1, two_k);
            s_lo.canonicalize();
            s_hi.canonicalize();
            mpq_class t_lo, t_hi;
            if (r_ >= 0) {
                t_lo = mpq_class(r_) * s_lo;
                t_hi = mpq_class(r_) * s_hi;
            } else {
                t_lo = mpq_class(r_) * s_hi;
                t_hi = mpq_class(r_) * s_lo;
            }
            mpq_class qq(q_);
            lo = (mpq_class(p_) + t_lo) / qq;
            hi = (mpq_class(p_) + t_hi) / qq;
            lo.canonicalize();
            hi.canonicalize();
            return;
        }
        case Kind::Decimal:
            lo = lo_;
            hi = hi_;
            return;
    }
}

double Real::to_double() const { return to_dd().value(); }

dd Real::to_dd() const {
    mpq_class lo, hi;
    enclosure(lo, hi, 192);
    mpq_class mid = (lo + hi) / 2;
    double h = mpq_get_d(mid.get_mpq_t());
    mpq_class rem = mid - mpq_class(h);
    double l = mpq_get_d(rem.get_mpq_t());
    return {h, l};
}

std::string Real::str() const {
    switch (kind_) {
        case Kind::Rational:
            if (rat_.get_den() == 1) return "rat:" + rat_.get_num().get_str();
            return "rat:" + rat_.get_str();
        case Kind::Quadratic:
            if (p_ == 0 && r_ == 1 && q_ == 1) return "sqrt:" + D_.get_str();
            return "quad:" + p_.get_str() + "," + r_.get_str() + "," + D_.get_str() + "," +
                   q_.get_str();
        case Kind::Decimal:
            return "dec:" + (dec_str_.empty() ? lo_.get_str() + ".." + hi_.get_str()
                                              : dec_str_);
    }
    return "?";
}

Real Real::parse(const std::string& text) {
    auto starts = [&](const char* prefix) {
        return text.rfind(prefix, 0) == 0;
    };
    if (text == "phi") return golden_ratio();
    if (starts("rat:")) {
        mpq_class v;
        if (v.set_str(text.substr(4), 10) != 0)
            throw std::invalid_argument("bad rational: " + text);
        return rational(v);
    }
    if (starts("sqrt:")) {
        mpz_class D(text.substr(5));
        return quadratic(0, 1, D, 1);
    }
    if (starts("quad:")) {
        std::string body = text.substr(5);
        mpz_class part[4];
        size_t pos = 0;
        for (int i = 0; i < 4; ++i) {
            size_t comma = (i < 3) ? body.find(',', pos) : body.size();
            if (comma == std::string::npos)
                throw std::invalid_argument("quad: expects p,r,D,q in " + text);
            part[i] = mpz_class(body.substr(pos, comma - pos));
            pos = comma + 1;
        }
        return quadratic(part[0], part[1], part[2], part[3]);
    }
    if (starts("dec:")) {
        std::string body = text.substr(4);
        unsigned bits = 256;
        size_t at = body.find('@');
        if (at != std::string::npos) {
            bits = static_cast<unsigned>(std::stoul(body.substr(at + 1)));
            body = body.substr(0, at);
        }
        return decimal(body, bits);
    }
    // bare literals
    if (text.find('.') != std::string::npos) return decimal(text);
    if (!text.empty() &&
        text.find_first_not_of("+-0123456789", (text[0] == '+' || text[0] == '-') ? 1 : 0) ==
            std::string::npos) {
        mpq_class v;
        if (v.set_str(text, 10) == 0) return rational(v);
    }
    throw std::invalid_argument("cannot parse RealSpec: " + text);
}

}  // namespace beattykit
