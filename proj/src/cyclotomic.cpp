#include "ddouble/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ddouble {

long euler_phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

using ZPoly = std::vector<Integer>;  // coefficient vector, index = degree

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    ZPoly out(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// exact division, remainder must vanish
ZPoly zp_divexact(ZPoly num, const ZPoly& den) {
    ZPoly q(num.size() - den.size() + 1, Integer(0));
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        Integer c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("cyclotomic: inexact polynomial division");
    return q;
}

// x^k - 1
ZPoly zp_xk_minus_1(long k) {
    ZPoly p(k + 1, Integer(0));
    p[0] = -1;
    p[k] = 1;
    return p;
}

int moebius(long n) {
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

// Phi_n as the Moebius product of (x^{n/d} - 1) factors.
ZPoly cyclotomic_poly(long n) {
    if (n == 1) return ZPoly{Integer(-1), Integer(1)};
    ZPoly num{Integer(1)}, den{Integer(1)};
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int mu = moebius(d);
        if (mu == 1)
            num = zp_mul(num, zp_xk_minus_1(n / d));
        else if (mu == -1)
            den = zp_mul(den, zp_xk_minus_1(n / d));
    }
    return zp_divexact(num, den);
}

CycBasis build_basis(long n) {
    CycBasis b;
    b.n = n;
    b.phi = euler_phi(n);
    b.min_poly = cyclotomic_poly(n);
    b.red.assign(n, std::vector<Integer>(b.phi, Integer(0)));
    for (long e = 0; e < std::min<long>(b.phi, n); ++e) b.red[e][e] = 1;
    if (n > b.phi) {
        // x^phi = -(c_0 + ... + c_{phi-1} x^{phi-1}); shift and substitute upward
        std::vector<Integer> cur(b.phi);
        for (long k = 0; k < b.phi; ++k) cur[k] = -b.min_poly[k];
        b.red[b.phi] = cur;
        for (long e = b.phi + 1; e < n; ++e) {
            std::vector<Integer> next(b.phi, Integer(0));
            Integer top = cur[b.phi - 1];
            for (long k = b.phi - 1; k > 0; --k) next[k] = cur[k - 1];
            if (top != 0)
                for (long k = 0; k < b.phi; ++k) next[k] -= top * b.min_poly[k];
            b.red[e] = next;
            cur = std::move(next);
        }
    }
    return b;
}

}  // namespace

const CycBasis& cyc_basis(long n) {
    if (n < 1) throw std::invalid_argument("conductor must be >= 1");
    static std::mutex mu;
    static std::map<long, CycBasis> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_basis(n)).first;
    return it->second;
}

// canonical coefficients at exactly this conductor (no rational downgrade,
// so arithmetic can align sizes); public entry points normalize afterwards
CycNum CycNum::reduce(long conductor, std::vector<Rational> raw) {
    const CycBasis& b = cyc_basis(conductor);
    std::vector<Rational> folded(conductor, Rational(0));
    for (size_t e = 0; e < raw.size(); ++e) {
        if (raw[e] != 0) folded[static_cast<long>(e) % conductor] += raw[e];
    }
    CycNum z;
    z.n_ = conductor;
    z.c_.assign(b.phi, Rational(0));
    for (long e = 0; e < conductor; ++e) {
        if (folded[e] == 0) continue;
        if (e < b.phi) {
            z.c_[e] += folded[e];
        } else {
            for (long k = 0; k < b.phi; ++k)
                if (b.red[e][k] != 0) z.c_[k] += folded[e] * Rational(b.red[e][k]);
        }
    }
    return z;
}

void CycNum::normalize_() {
    if (n_ == 1) return;
    for (size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0) return;
    Rational v = c_[0];
    n_ = 1;
    c_.assign(1, v);
}

CycNum CycNum::root(long conductor, long exponent) {
    if (conductor < 1) throw std::invalid_argument("conductor must be >= 1");
    long e = ((exponent % conductor) + conductor) % conductor;
    std::vector<Rational> raw(e + 1, Rational(0));
    raw[e] = 1;
    CycNum z = reduce(conductor, std::move(raw));
    z.normalize_();
    return z;
}

CycNum CycNum::from_powers(long conductor, const std::vector<Rational>& coeffs) {
    if (conductor < 1) throw std::invalid_argument("conductor must be >= 1");
    std::vector<Rational> canon = coeffs;
    for (auto& q : canon) q.canonicalize();
    CycNum z = reduce(conductor, std::move(canon));
    z.normalize_();
    return z;
}

CycNum CycNum::to_conductor(long m) const {
    if (m == n_) return *this;
    if (m < n_ || m % n_ != 0) throw std::invalid_argument("to_conductor: not a multiple");
    long f = m / n_;
    std::vector<Rational> raw(static_cast<size_t>(c_.size() - 1) * f + 1, Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) raw[k * f] = c_[k];
    return reduce(m, std::move(raw));
}

CycNum CycNum::operator+(const CycNum& o) const {
    long m = lcm_long(n_, o.n_);
    CycNum a = to_conductor(m), b = o.to_conductor(m);
    for (size_t k = 0; k < a.c_.size(); ++k) a.c_[k] += b.c_[k];
    a.normalize_();
    return a;
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator-() const {
    CycNum z = *this;
    for (auto& q : z.c_) q = -q;
    return z;
}

CycNum CycNum::operator*(const CycNum& o) const {
    long m = lcm_long(n_, o.n_);
    CycNum a = to_conductor(m), b = o.to_conductor(m);
    std::vector<Rational> raw(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            raw[i + j] += a.c_[i] * b.c_[j];
        }
    }
    CycNum z = reduce(m, std::move(raw));
    z.normalize_();
    return z;
}

bool CycNum::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

std::optional<Rational> CycNum::as_rational() const {
    if (n_ != 1) return std::nullopt;
    return c_[0];
}

std::optional<Integer> CycNum::as_integer() const {
    if (n_ != 1 || c_[0].get_den() != 1) return std::nullopt;
    return c_[0].get_num();
}

bool CycNum::operator==(const CycNum& o) const {
    if (n_ == o.n_) return c_ == o.c_;
    long m = lcm_long(n_, o.n_);
    return to_conductor(m).c_ == o.to_conductor(m).c_;
}

int cyc_compare_common(const CycNum& a, const CycNum& b) {
    long m = lcm_long(a.n_, b.n_);
    CycNum x = a.to_conductor(m), y = b.to_conductor(m);
    for (size_t k = 0; k < x.c_.size(); ++k) {
        int c = cmp(x.c_[k], y.c_[k]);
        if (c != 0) return c;
    }
    return 0;
}

CycNum CycNum::galois(long j) const {
    if (n_ == 1) return *this;
    j = ((j % n_) + n_) % n_;
    if (gcd_long(j, n_) != 1) throw std::invalid_argument("galois: exponent not coprime to conductor");
    std::vector<Rational> raw(n_, Rational(0));
    for (size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) raw[(k * j) % n_] += c_[k];
    CycNum z = reduce(n_, std::move(raw));
    z.normalize_();
    return z;
}

namespace {

using QPoly = std::vector<Rational>;

void qp_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("cyclotomic inverse of zero");
    if (n_ == 1) return CycNum(Rational(1) / c_[0]);
    // extended Euclid on (this, Phi_N) in Q[x]; Phi_N irreducible so the gcd
    // is a nonzero constant and u gives the inverse up to that constant
    const CycBasis& basis = cyc_basis(n_);
    QPoly r0(basis.min_poly.size());
    for (size_t k = 0; k < basis.min_poly.size(); ++k) r0[k] = Rational(basis.min_poly[k]);
    QPoly r1(c_.begin(), c_.end());
    qp_trim(r1);
    QPoly s0{};  // coefficient of `this` in r0 = Phi
    QPoly s1{Rational(1)};
    while (true) {
        if (r1.size() == 1) break;  // nonzero constant: done
        // quotient-free remainder step, tracking s
        QPoly q;  // quotient of r0 by r1
        QPoly rem = r0;
        q.assign(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, Rational(0));
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational c = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] += c;
            for (size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= c * r1[j];
            qp_trim(rem);
        }
        // s_new = s0 - q*s1
        QPoly snew = s0;
        if (!s1.empty()) {
            QPoly qs(q.size() + s1.size() - 1, Rational(0));
            for (size_t i = 0; i < q.size(); ++i)
                for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
            if (snew.size() < qs.size()) snew.resize(qs.size(), Rational(0));
            for (size_t i = 0; i < qs.size(); ++i) snew[i] -= qs[i];
            qp_trim(snew);
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
        if (r1.empty()) throw std::logic_error("cyclotomic inverse: unexpected zero remainder");
    }
    Rational unit = r1[0];
    std::vector<Rational> raw(s1.size(), Rational(0));
    for (size_t k = 0; k < s1.size(); ++k) raw[k] = s1[k] / unit;
    CycNum z = reduce(n_, std::move(raw));
    z.normalize_();
    return z;
}

std::complex<double> CycNum::approx() const {
    std::complex<double> acc(0.0, 0.0);
    const double tau = 6.283185307179586476925286766559;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        double co = c_[k].get_d();
        acc += co * std::polar(1.0, tau * static_cast<double>(k) / static_cast<double>(n_));
    }
    return acc;
}

std::string CycNum::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        Rational q = c_[k];
        if (first) {
            if (q < 0) os << "-";
        } else {
            os << (q < 0 ? " - " : " + ");
        }
        Rational a = abs(q);
        if (k == 0) {
            os << rational_str(a);
        } else {
            if (a != 1) os << rational_str(a) << "*";
            os << "z" << n_;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

}  // namespace ddouble
