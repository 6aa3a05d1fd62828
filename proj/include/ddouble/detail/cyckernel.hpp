#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ddouble/cyclotomic.hpp"

namespace ddouble::detail {

inline Integer to_mpz(const Integer& v) { return v; }

inline Integer to_mpz(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Integer r(static_cast<unsigned long>(u >> 64));
    r <<= 64;
    r += static_cast<unsigned long>(u & 0xffffffffffffffffULL);
    return neg ? Integer(-r) : r;
}

inline void from_mpz(const Integer& v, Integer& out) { out = v; }

inline void from_mpz(const Integer& v, __int128& out) {
    Integer a = abs(v);
    Integer hi = a >> 64, lo = a - (hi << 64);
    if (!hi.fits_ulong_p()) throw std::overflow_error("value exceeds 128 bits");
    unsigned __int128 u = (static_cast<unsigned __int128>(hi.get_ui()) << 64) | lo.get_ui();
    if (u > (static_cast<unsigned __int128>(1) << 126)) throw std::overflow_error("value exceeds margin");
    out = static_cast<__int128>(u);
    if (v < 0) out = -out;
}

// Fixed-conductor arithmetic on integer coefficient vectors of length phi(n),
// the hot path behind the S-matrix and the fusion engines. Z is __int128 when
// precomputed magnitude bounds allow, mpz_class otherwise.
template <class Z>
struct CycKernel {
    long n = 1;
    long phi = 1;
    std::vector<std::vector<long>> red;  // x^e on the power basis, e in [0, n)
    double red_amp = 1.0;                // max L1 row norm (amplification bound)

    explicit CycKernel(long conductor) {
        const CycBasis& b = cyc_basis(conductor);
        n = b.n;
        phi = b.phi;
        red.assign(n, std::vector<long>(phi, 0));
        for (long e = 0; e < n; ++e) {
            double l1 = 0;
            for (long k = 0; k < phi; ++k) {
                if (!b.red[e][k].fits_slong_p())
                    throw std::overflow_error("cyclotomic reduction row exceeds long");
                red[e][k] = b.red[e][k].get_si();
                l1 += std::fabs(static_cast<double>(red[e][k]));
            }
            red_amp = std::max(red_amp, l1);
        }
    }

    void clear(Z* a) const {
        for (long k = 0; k < phi; ++k) a[k] = 0;
    }

    void add(Z* acc, const Z* a) const {
        for (long k = 0; k < phi; ++k) acc[k] += a[k];
    }

    void add_scaled(Z* acc, const Z* a, const Z& c) const {
        for (long k = 0; k < phi; ++k) acc[k] += a[k] * c;
    }

    // acc += zeta^e * c  (any exponent)
    void add_root(Z* acc, long e, const Z& c) const {
        e = ((e % n) + n) % n;
        if (e < phi) {
            acc[e] += c;
            return;
        }
        const auto& row = red[e];
        for (long k = 0; k < phi; ++k)
            if (row[k] != 0) acc[k] += c * Z(row[k]);
    }

    // out = a * b; scratch must hold 2*phi-1 entries; no aliasing
    void mul(const Z* a, const Z* b, Z* out, Z* scratch) const {
        long m = 2 * phi - 1;
        for (long k = 0; k < m; ++k) scratch[k] = 0;
        for (long i = 0; i < phi; ++i) {
            if (a[i] == 0) continue;
            for (long j = 0; j < phi; ++j) {
                if (b[j] == 0) continue;
                scratch[i + j] += a[i] * b[j];
            }
        }
        clear(out);
        fold(scratch, m, out);
    }

    // acc += a * b
    void mul_acc(Z* acc, const Z* a, const Z* b, Z* scratch) const {
        long m = 2 * phi - 1;
        for (long k = 0; k < m; ++k) scratch[k] = 0;
        for (long i = 0; i < phi; ++i) {
            if (a[i] == 0) continue;
            for (long j = 0; j < phi; ++j) {
                if (b[j] == 0) continue;
                scratch[i + j] += a[i] * b[j];
            }
        }
        fold(scratch, m, acc);
    }

    // acc += conv of raw exponent coefficients (length m)
    void fold(const Z* raw, long m, Z* acc) const {
        for (long e = 0; e < m; ++e) {
            if (raw[e] == 0) continue;
            long em = e % n;
            if (em < phi) {
                acc[em] += raw[e];
            } else {
                const auto& row = red[em];
                for (long k = 0; k < phi; ++k)
                    if (row[k] != 0) acc[k] += raw[e] * Z(row[k]);
            }
        }
    }

    // out = complex conjugate of a (zeta -> zeta^-1)
    void conj(const Z* a, Z* out) const {
        clear(out);
        for (long k = 0; k < phi; ++k)
            if (a[k] != 0) add_root(out, (n - k) % n, a[k]);
    }

    bool is_zero(const Z* a) const {
        for (long k = 0; k < phi; ++k)
            if (a[k] != 0) return false;
        return true;
    }

    // CycNum with integer coefficients (at a conductor dividing n) -> vector
    void from_cyc(const CycNum& z, Z* out) const {
        CycNum w = z.to_conductor(n);
        clear(out);
        const auto& c = w.coeffs();
        for (size_t k = 0; k < c.size(); ++k) {
            if (c[k].get_den() != 1)
                throw std::domain_error("cyc kernel: value is not an algebraic integer");
            from_mpz(c[k].get_num(), out[k]);
        }
    }

    // vector / denom -> CycNum
    CycNum to_cyc(const Z* a, const Integer& denom) const {
        std::vector<Rational> coeffs(phi);
        for (long k = 0; k < phi; ++k) {
            Rational q(to_mpz(a[k]), denom);
            q.canonicalize();
            coeffs[k] = q;
        }
        return CycNum::from_powers(n, coeffs);
    }

    double max_abs(const Z* a) const {
        double m = 0;
        for (long k = 0; k < phi; ++k) m = std::max(m, std::fabs(to_mpz(a[k]).get_d()));
        return m;
    }
};

// magnitude budget for the __int128 path, with headroom
inline bool fits_int128(double bound) { return bound < 1e36; }

}  // namespace ddouble::detail
