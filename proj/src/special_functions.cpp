#include "bouquet/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace bouquet {

namespace {

constexpr double kPoleDistance = 1e-8;

// Lanczos approximation, g = 7, n = 9.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

std::complex<double> lanczos_log_gamma(std::complex<double> z)
{
    using std::numbers::pi;
    if (z.real() < 0.5) {
        // Reflection: Γ(z)Γ(1−z) = π / sin(πz).
        return std::log(pi) - std::log(std::sin(pi * z)) - lanczos_log_gamma(1.0 - z);
    }
    z -= 1.0;
    std::complex<double> x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i)
        x += kLanczos[i] / (z + static_cast<double>(i));
    const std::complex<double> t = z + 7.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

double distance_to_pole(const std::complex<double>& z)
{
    if (z.real() > 0.5)
        return std::abs(z.imag()) + 1.0;
    const double nearest = std::round(z.real());
    return std::abs(z - std::complex<double>(nearest, 0.0));
}

} // namespace

std::complex<double> log_gamma(std::complex<double> z)
{
    if (distance_to_pole(z) == 0.0)
        throw PoleError("log_gamma evaluated at a pole");
    if (z.imag() == 0.0) {
        int sign = 1;
        const double v = lgamma_r(z.real(), &sign);
        return {v, sign < 0 ? std::numbers::pi : 0.0};
    }
    return lanczos_log_gamma(z);
}

bool is_gamma_pole(const GaussianRational& z)
{
    return z.is_real() && is_integer(z.re) && sgn(z.re) <= 0;
}

void GammaProduct::multiply(const GaussianRational& argument)
{
    const std::complex<double> z = argument.to_complex();
    if (is_gamma_pole(argument) || distance_to_pole(z) < kPoleDistance)
        throw PoleError("Gamma factor at or near a pole: argument " + to_string(argument));
    log_ += log_gamma(z);
}

void GammaProduct::divide(const GaussianRational& argument)
{
    if (is_gamma_pole(argument)) {
        zero_ = true;
        return;
    }
    log_ -= log_gamma(argument.to_complex());
}

void GammaProduct::multiply_value(const std::complex<double>& factor)
{
    if (factor == 0.0) {
        zero_ = true;
        return;
    }
    log_ += std::log(factor);
}

std::complex<double> GammaProduct::value() const
{
    if (zero_)
        return 0.0;
    return std::exp(log_);
}

} // namespace bouquet
