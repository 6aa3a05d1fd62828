#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "ddouble/rational.hpp"

namespace ddouble {

// Power-basis data for Q(zeta_n): the cyclotomic polynomial Phi_n and the
// reduction rows expressing zeta_n^e (0 <= e < n) on the basis
// {1, zeta, ..., zeta^{phi(n)-1}}.
struct CycBasis {
    long n = 1;
    long phi = 1;
    std::vector<Integer> min_poly;            // Phi_n, degree phi, monic
    std::vector<std::vector<Integer>> red;    // red[e][k], e in [0, n)
};

// Shared per-conductor basis cache (thread-safe, built on first use).
const CycBasis& cyc_basis(long n);

long euler_phi(long n);

// An exact element of Q(zeta_N), stored canonically on the power basis
// modulo Phi_N. Rational values normalize to conductor 1. Immutable value
// type; all operations are pure.
class CycNum {
  public:
    CycNum() : n_(1), c_(1, Rational(0)) {}
    CycNum(long v) : n_(1), c_(1, Rational(v)) {}
    // mpq_class two-argument construction is not canonical; fix that here
    CycNum(Rational v) : n_(1) {
        v.canonicalize();
        c_.assign(1, std::move(v));
    }

    // zeta_conductor^exponent (exponent taken mod conductor)
    static CycNum root(long conductor, long exponent);
    // value sum coeffs[e] * zeta_conductor^e, any length <= conductor
    static CycNum from_powers(long conductor, const std::vector<Rational>& coeffs);

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    // Multiplicative inverse via the extended Euclidean algorithm in Q[x]
    // modulo Phi_N. Throws std::domain_error on zero.
    CycNum inverse() const;
    CycNum operator/(const CycNum& o) const { return *this * o.inverse(); }

    // Galois action zeta -> zeta^j, gcd(j, N) = 1.
    CycNum galois(long j) const;
    // Complex conjugation zeta -> zeta^{-1}.
    CycNum conjugate() const { return galois(n_ - 1 + (n_ == 1)); }

    bool is_zero() const;
    bool is_rational() const { return n_ == 1; }
    std::optional<Rational> as_rational() const;
    std::optional<Integer> as_integer() const;

    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    // Re-express at a multiple of the current conductor (n_ | m).
    CycNum to_conductor(long m) const;

    // Floating approximation, for display only. The math core never uses it.
    std::complex<double> approx() const;
    std::string str() const;

  private:
    long n_;                   // conductor, >= 1
    std::vector<Rational> c_;  // size phi(n_), canonical

    static CycNum reduce(long conductor, std::vector<Rational> raw);
    void normalize_();
    friend int cyc_compare_common(const CycNum& a, const CycNum& b);
};

inline CycNum operator*(const Rational& q, const CycNum& z) { return CycNum(q) * z; }

// Deterministic total order for values brought to a common conductor
// (lex on coefficients at lcm of the two conductors). Used for canonical
// sorting of character tables; not a numeric order.
int cyc_compare_common(const CycNum& a, const CycNum& b);

// theta_a = zeta_n^a + zeta_n^{-a}, the dihedral character value.
inline CycNum cyc_theta(long n, long a) { return CycNum::root(n, a) + CycNum::root(n, -a); }

}  // namespace ddouble
