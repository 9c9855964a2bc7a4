#include "beattykit/trigapprox.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace beattykit::trig {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double sawtooth(double x) {
    double f = x - std::floor(x);
    if (f >= 1.0) f -= 1.0;  // guard against floor rounding at huge x
    return f - 0.5;
}

std::complex<double> TrigPoly::coeff(int h) const {
    if (h == 0) return {c0, 0.0};
    int a = std::abs(h);
    if (a > degree()) return {0.0, 0.0};
    return h > 0 ? c[a - 1] : std::conj(c[a - 1]);
}

double TrigPoly::eval(double x) const {
    // c0 + 2*Re(sum_h c_h e(hx)), summed via the recurrence e((h+1)x) = e(hx)*e(x)
    double acc = c0;
    std::complex<double> w = std::polar(1.0, kTwoPi * (x - std::floor(x)));
    std::complex<double> e = w;
    for (const auto& ch : c) {
        acc += 2.0 * (ch * e).real();
        e *= w;
    }
    return acc;
}

TrigPoly vaaler_poly(int H) {
    if (H < 1) throw std::invalid_argument("vaaler_poly: H must be >= 1");
    TrigPoly poly;
    poly.c0 = 0.0;
    poly.c.resize(H);
    for (int h = 1; h <= H; ++h) {
        double t = static_cast<double>(h) / (H + 1);  // in (0, 1)
        double jhat = kPi * t * (1.0 - t) / std::tan(kPi * t) + t;
        // R(h) = -jhat / (2*pi*i*h) = i*jhat / (2*pi*h)
        poly.c[h - 1] = std::complex<double>(0.0, jhat / (kTwoPi * h));
    }
    return poly;
}

double vaaler_coeff_constant(const TrigPoly& poly) {
    double best = 0.0;
    for (int h = 1; h <= poly.degree(); ++h)
        best = std::max(best, std::abs(poly.c[h - 1]) * h);
    return best;
}

double fejer_envelope(double x, int H) {
    if (H < 1) throw std::invalid_argument("fejer_envelope: H must be >= 1");
    double n = H + 1.0;
    double f = x - std::floor(x);
    double s = std::sin(kPi * f);
    if (std::abs(s) < 1e-100) return 0.5;  // x at an integer
    double num = std::sin(kPi * n * f);  // squared below, so the parity sign is moot
    double ratio = num / s;
    return ratio * ratio / (2.0 * n * n);
}

int SmoothedIndicator::default_truncation(double delta) {
    return static_cast<int>(std::ceil(10.0 / delta));
}

SmoothedIndicator::SmoothedIndicator(double gamma, double delta, int J)
    : gamma_(gamma), delta_(delta), J_(J) {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::invalid_argument("SmoothedIndicator: gamma must lie in (0,1)");
    if (!(delta > 0.0 && delta < 0.125))
        throw std::invalid_argument("SmoothedIndicator: need 0 < delta < 1/8");
    if (delta > 0.5 * std::min(gamma, 1.0 - gamma))
        throw std::invalid_argument("SmoothedIndicator: need delta <= min(gamma,1-gamma)/2");
    if (J < 1) throw std::invalid_argument("SmoothedIndicator: J must be >= 1");
    poly_.c0 = gamma;
    poly_.c.resize(J);
    for (long j = 1; j <= J; ++j) poly_.c[j - 1] = coefficient(j);
}

double SmoothedIndicator::value(double x) const {
    double f = x - std::floor(x);
    if (f >= 1.0) f -= 1.0;
    // ramps centred at 0 and gamma, plateau 1 on [delta, gamma-delta]
    if (f < delta_) return (f + delta_) / (2.0 * delta_);
    if (f <= gamma_ - delta_) return 1.0;
    if (f < gamma_ + delta_) return (gamma_ + delta_ - f) / (2.0 * delta_);
    if (f <= 1.0 - delta_) return 0.0;
    return (f - (1.0 - delta_)) / (2.0 * delta_);
}

std::complex<double> SmoothedIndicator::coefficient(long j) const {
    if (j == 0) return {gamma_, 0.0};
    long a = std::labs(j);
    // hat(1_(0,gamma))(j) * sinc taper of the width-2delta box kernel
    double twopij = kTwoPi * a;
    std::complex<double> box =
        (std::complex<double>(1.0, 0.0) - std::polar(1.0, -twopij * gamma_)) /
        std::complex<double>(0.0, twopij);
    double taper = std::sin(twopij * delta_) / (twopij * delta_);
    std::complex<double> g = box * taper;
    return j > 0 ? g : std::conj(g);
}

}  // namespace beattykit::trig
