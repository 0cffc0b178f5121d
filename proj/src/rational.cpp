#include "centersvar/rational.hpp"

#include <cctype>
#include <cmath>

#include "centersvar/error.hpp"

namespace centersvar {

namespace {

bool valid_integer_text(std::string_view text) {
    if (text.empty()) return false;
    std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
    if (start == text.size()) return false;
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    return Integer(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num_text = text.substr(0, slash);
    std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer_text(num_text) || !valid_integer_text(den_text) || den_text.front() == '-' ||
        den_text.front() == '+') {
        fail(ErrorCode::InvalidInput, "malformed fraction string: '" + std::string(text) + "'");
    }
    Integer den = parse_integer(den_text);
    if (den == 0) fail(ErrorCode::InvalidInput, "zero denominator in '" + std::string(text) + "'");
    Rational value(parse_integer(num_text), den);
    value.canonicalize();
    return value;
}

std::string format_rational(const Rational& value) {
    Rational v = value;
    v.canonicalize();
    return v.get_str(10);
}

std::vector<Integer> primitive_integer_vector(std::span<const Rational> values) {
    Integer common_den = 1;
    for (const auto& v : values) {
        mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), v.get_den_mpz_t());
    }
    std::vector<Integer> out;
    out.reserve(values.size());
    Integer g = 0;
    for (const auto& v : values) {
        Integer scaled = v.get_num() * (common_den / v.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
        out.push_back(std::move(scaled));
    }
    if (g == 0) return {};
    int sign = 0;
    for (const auto& x : out) {
        if (sgn(x) != 0) {
            sign = sgn(x);
            break;
        }
    }
    if (sign < 0) g = -g;
    for (auto& x : out) x /= g;
    return out;
}

std::vector<Rational> primitive_scaled(std::span<const Rational> values) {
    auto ints = primitive_integer_vector(values);
    if (ints.empty()) return std::vector<Rational>(values.size(), Rational(0));
    return {ints.begin(), ints.end()};
}

double to_double(const Rational& value) { return value.get_d(); }

long double to_long_double(const Rational& value) {
    // Split to keep precision beyond double for large numerators/denominators.
    const Integer& num = value.get_num();
    const Integer& den = value.get_den();
    long exp_num = 0;
    if (sgn(num) == 0) return 0.0L;
    mpz_get_d_2exp(&exp_num, num.get_mpz_t());
    const long exp_den = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    // Refine the mantissas with the next bits so the quotient carries ~64 bits.
    auto mantissa64 = [](const Integer& x, long exp) {
        Integer shifted;
        if (exp > 64) {
            mpz_tdiv_q_2exp(shifted.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(exp - 64));
        } else {
            mpz_mul_2exp(shifted.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(64 - exp));
        }
        // shifted has at most 64 significant bits.
        Integer hi = shifted >> 32;
        Integer lo = shifted - (hi << 32);
        long double v = static_cast<long double>(hi.get_si()) * 4294967296.0L + static_cast<long double>(lo.get_ui());
        return v;
    };
    long double m1 = mantissa64(num, exp_num);
    long double m2 = mantissa64(den, exp_den);
    return std::ldexp(m1 / m2, static_cast<int>(exp_num - exp_den));
}

}  // namespace centersvar
