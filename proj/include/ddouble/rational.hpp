#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace ddouble {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string rational_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rational_parse(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("bad rational: '" + s + "'");
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::optional<long> as_long(const Rational& q) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
    return q.get_num().get_si();
}

inline long lcm_long(long a, long b) {
    mpz_class g;
    mpz_lcm_ui(g.get_mpz_t(), mpz_class(a).get_mpz_t(), static_cast<unsigned long>(b));
    return g.get_si();
}

inline long gcd_long(long a, long b) {
    mpz_class g;
    mpz_gcd_ui(g.get_mpz_t(), mpz_class(a).get_mpz_t(), static_cast<unsigned long>(b));
    return g.get_si();
}

}  // namespace ddouble
