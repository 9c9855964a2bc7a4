#pragma once

#include <complex>
#include <vector>

namespace beattykit::trig {

// balanced fractional part x - [x] - 1/2, in [-1/2, 1/2)
double sawtooth(double x);

// Real-valued 1-periodic exponential polynomial c0 + sum_{1<=h<=H}
// (c_h e(hx) + conj(c_h) e(-hx)), with e(x) = exp(2*pi*i*x).
struct TrigPoly {
    double c0 = 0.0;
    std::vector<std::complex<double>> c;  // c[h-1] is the coefficient at +h

    int degree() const { return static_cast<int>(c.size()); }
    std::complex<double> coeff(int h) const;  // signed frequency, 0 allowed
    double eval(double x) const;
};

// Vaaler's approximating polynomial of degree H for the sawtooth.
// Coefficients R(h) = -j_hat(h/(H+1)) / (2*pi*i*h) with
// j_hat(t) = pi*t*(1-t)*cot(pi*t) + t; satisfies |R(h)| <= C/|h| and the
// Fejer-envelope sandwich checked by the test suite.
TrigPoly vaaler_poly(int H);

// max over h of |R(h)|*h for the polynomial above (the recorded C)
double vaaler_coeff_constant(const TrigPoly& poly);

// (1/(2H+2)) * sum_{|h|<=H} (1 - |h|/(H+1)) e(hx)  -- a scaled Fejer
// kernel, nonnegative, equal to 1/2 at integers.
double fejer_envelope(double x, int H);

// Trapezoidal mollification of the indicator of (0, gamma] with ramp
// half-width delta: equals the sharp indicator outside the delta
// neighbourhoods of 0 and gamma, with closed-form Fourier coefficients
// satisfying max(|g_j|,|h_j|) <= min(1/j, 1/(j^2 delta)).
class SmoothedIndicator {
public:
    SmoothedIndicator(double gamma, double delta, int J);

    double gamma() const { return gamma_; }
    double delta() const { return delta_; }
    int truncation() const { return J_; }

    // default truncation degree ceil(10/delta)
    static int default_truncation(double delta);

    double value(double x) const;           // exact piecewise evaluation
    std::complex<double> coefficient(long j) const;  // signed frequency
    const TrigPoly& poly() const { return poly_; }   // truncated Fourier series

private:
    double gamma_, delta_;
    int J_;
    TrigPoly poly_;
};

}  // namespace beattykit::trig
