#include "pgnlab/rational.hpp"

#include <stdexcept>

namespace pgnlab {

Rational make_rational(Integer numerator, Integer denominator) {
    if (denominator == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rational q(std::move(numerator), std::move(denominator));
    q.canonicalize();
    return q;
}

Rational pow2(long exponent) {
    Integer shifted = 1;
    if (exponent >= 0) {
        shifted <<= static_cast<unsigned long>(exponent);
        return Rational(shifted);
    }
    shifted <<= static_cast<unsigned long>(-exponent);
    return make_rational(1, shifted);
}

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) {
        return std::nullopt;
    }
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty() || den.find('/') != std::string::npos) {
            return std::nullopt;
        }
        Integer d(den);
        if (d == 0) {
            return std::nullopt;
        }
        return make_rational(Integer(num), std::move(d));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string rational_to_string(const Rational& value) {
    return value.get_str();
}

double rational_to_double(const Rational& value) {
    return value.get_d();
}

Integer floor_to_integer(const Rational& value) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

Integer ceil_to_integer(const Rational& value) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

Integer isqrt_floor(const Integer& value) {
    if (value < 0) {
        throw std::domain_error("isqrt_floor of negative value");
    }
    Integer r;
    mpz_sqrt(r.get_mpz_t(), value.get_mpz_t());
    return r;
}

std::optional<Rational> exact_nth_root(const Rational& value, long n) {
    if (n <= 0) {
        throw std::invalid_argument("nth root with nonpositive n");
    }
    if (value < 0) {
        return std::nullopt;
    }
    Integer num, den;
    const int num_exact = mpz_root(num.get_mpz_t(), value.get_num_mpz_t(),
                                   static_cast<unsigned long>(n));
    const int den_exact = mpz_root(den.get_mpz_t(), value.get_den_mpz_t(),
                                   static_cast<unsigned long>(n));
    if (!num_exact || !den_exact) {
        return std::nullopt;
    }
    return make_rational(std::move(num), std::move(den));
}

}  // namespace pgnlab
