#include "bouquet/scalar.hpp"

#include <cmath>
#include <cstdio>

namespace bouquet {

std::string to_fraction_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

Rational parse_decimal(std::string_view text)
{
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = s.substr(e + 1);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (!all_digits(exp_part) || exp_part.size() > 6)
            throw InvalidInput("malformed exponent in number: " + std::string(text));
        exponent = std::stol(std::string(exp_part));
        if (exp_negative)
            exponent = -exponent;
        s = s.substr(0, e);
    }
    std::string digits;
    long fraction_digits = 0;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))
            || (int_part.empty() && frac_part.empty()))
            throw InvalidInput("malformed number: " + std::string(text));
        digits = std::string(int_part) + std::string(frac_part);
        fraction_digits = static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(s))
            throw InvalidInput("malformed number: " + std::string(text));
        digits = std::string(s);
    }
    Rational value(BigInt(digits, 10));
    long shift = exponent - fraction_digits;
    BigInt ten_power;
    mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0)
        value *= ten_power;
    else
        value /= ten_power;
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ')
        text.remove_suffix(1);
    if (text.empty())
        throw InvalidInput("empty rational");
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return parse_decimal(text);
    Rational num = parse_decimal(text.substr(0, slash));
    Rational den = parse_decimal(text.substr(slash + 1));
    if (sgn(den) == 0)
        throw InvalidInput("zero denominator: " + std::string(text));
    Rational q = num / den;
    q.canonicalize();
    return q;
}

GaussianRational parse_gaussian(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (c != ' ')
            s.push_back(c);
    if (s.empty())
        throw InvalidInput("empty complex number");
    if (s.back() != 'i')
        return GaussianRational(parse_rational(s));
    s.pop_back();
    // Split at the last sign that is not the leading one and not part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_of = [&](const std::string& part) -> Rational {
        if (part.empty() || part == "+")
            return Rational(1);
        if (part == "-")
            return Rational(-1);
        return parse_rational(part);
    };
    if (split == std::string::npos)
        return {Rational(0), imag_of(s)};
    return {parse_rational(s.substr(0, split)), imag_of(s.substr(split))};
}

std::string to_string(const GaussianRational& z)
{
    if (z.is_real())
        return to_fraction_string(z.re);
    std::string out = to_fraction_string(z.re);
    out += sgn(z.im) < 0 ? "-" : "+";
    out += to_fraction_string(abs(z.im)) + "i";
    return out;
}

Rational rational_from_double(double x)
{
    if (!std::isfinite(x))
        throw InvalidInput("non-finite number");
    Rational q(x);
    q.canonicalize();
    return q;
}

std::string format_real(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

BigInt factorial(unsigned long n)
{
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

} // namespace bouquet
