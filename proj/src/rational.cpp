#include "frieze/rational.hpp"

#include <cctype>

namespace frieze {

Rational rational_from_string(const std::string& text) {
    auto bad = [&](const char* why) {
        throw InvalidInput(std::string("bad rational \"") + text + "\": " + why);
    };
    if (text.empty()) bad("empty");
    auto check_int = [&](const std::string& s) {
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) bad("missing digits");
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) bad("not an integer");
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        check_int(text);
        return Rational(mpz_class(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    mpz_class d(den);
    if (d == 0) throw DivisionByZero("rational with zero denominator: " + text);
    Rational q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

Rational rational_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0) {
        if (exp < 0) throw DivisionByZero("0 raised to a negative power");
        return Rational(0);
    }
    unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    if (exp < 0) {
        mpz_swap(r.get_num_mpz_t(), r.get_den_mpz_t());
        r.canonicalize();  // fixes the sign of the denominator
    }
    return r;
}

std::size_t rational_bits(const Rational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

}  // namespace frieze
