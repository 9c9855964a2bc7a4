#pragma once

#include <complex>

namespace beattykit {

// Kahan-Neumaier compensated accumulator.  Sums here reach ~1e8 terms and
// the interesting quantities are small differences of large sums.
class KahanSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class KahanComplexSum {
public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    KahanSum re_, im_;
};

}  // namespace beattykit
