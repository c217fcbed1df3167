#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bouquet {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised for malformed or out-of-domain input (CLI exit code 2).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A truncated computation could not reach the requested tolerance (CLI exit code 3).
class TailBudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact complex number with rational real and imaginary parts.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(long v) : re(v) {}
    GaussianRational(int v) : re(v) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return sgn(im) == 0; }
    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return Rational(re * re + im * im); }
    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b)
    {
        return {Rational(a.re + b.re), Rational(a.im + b.im)};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b)
    {
        return {Rational(a.re - b.re), Rational(a.im - b.im)};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b)
    {
        return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
    }
    GaussianRational operator-() const { return {Rational(-re), Rational(-im)}; }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re == b.re && a.im == b.im;
    }
};

/// Always "num/den", including "1/1" and "0/1".
std::string to_fraction_string(const Rational& q);

/// Accepts "p", "p/q", "-p/q" and finite decimals such as "0.25" or "-1.5e-3", all parsed exactly.
Rational parse_rational(std::string_view text);

/// Accepts a rational, or "a+bi" / "a-bi" / "bi" / "i" with rational a and b.
GaussianRational parse_gaussian(std::string_view text);

std::string to_string(const GaussianRational& z);

/// Exact value of a finite double.
Rational rational_from_double(double x);

/// %.17g formatting used for every real-domain value the tools emit.
std::string format_real(double x);

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

BigInt factorial(unsigned long n);
BigInt binomial(long n, long k);

/// True when q is an integer.
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace bouquet
