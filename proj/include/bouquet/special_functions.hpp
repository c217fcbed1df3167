#pragma once

#include "bouquet/scalar.hpp"

#include <complex>

namespace bouquet {

/// A Γ factor in the numerator sits on (or within 1e-8 of) a pole.
class PoleError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// Principal-branch log Γ(z) for complex z off the poles.
std::complex<double> log_gamma(std::complex<double> z);

/// True when z is a nonpositive integer.
bool is_gamma_pole(const GaussianRational& z);

/// Accumulates Π Γ(a)^{±1} in log form. A reciprocal Γ at a pole contributes an exact zero;
/// a numerator Γ at or near a pole raises PoleError.
class GammaProduct {
public:
    void multiply(const GaussianRational& argument);
    void divide(const GaussianRational& argument);
    void multiply_value(const std::complex<double>& factor);

    bool is_zero() const { return zero_; }
    std::complex<double> log_value() const { return log_; }
    std::complex<double> value() const;
    /// Real part of the value; the caller asserts the product is real.
    double real_value() const { return value().real(); }

private:
    std::complex<double> log_{0.0, 0.0};
    bool zero_ = false;
};

} // namespace bouquet
