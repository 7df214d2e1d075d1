#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <vector>

#include "hopforder/rational.hpp"

namespace hopf {

inline unsigned long euler_phi(unsigned long n) {
    if (n == 0) throw Error("euler_phi: n must be positive");
    unsigned long result = n;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace detail {

// Dense Z[x] helpers used to build the cyclotomic polynomials. Coefficient
// vectors are little-endian (index = degree) and trimmed.
inline void ztrim(std::vector<Integer>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division, valid when divisor is monic-up-to-sign and divides evenly.
inline std::vector<Integer> zdiv_exact(std::vector<Integer> num,
                                       const std::vector<Integer>& den) {
    ztrim(num);
    if (den.empty() || (den.back() != 1 && den.back() != -1))
        throw Error("zdiv_exact: divisor must have unit leading coefficient");
    std::vector<Integer> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    while (num.size() >= den.size() && !num.empty()) {
        const std::size_t shift = num.size() - den.size();
        Integer c = num.back() * den.back();  // den.back() in {1,-1}
        quot[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        ztrim(num);
    }
    if (!num.empty()) throw Error("zdiv_exact: division not exact");
    return quot;
}

}  // namespace detail

/// Coefficients of the N-th cyclotomic polynomial, little-endian, monic,
/// degree phi(N). Computed as (x^N - 1) / prod of lower cyclotomics.
inline const std::vector<Integer>& cyclotomic_polynomial(unsigned long n) {
    static std::map<unsigned long, std::vector<Integer>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Fill the cache bottom-up so recursion stays iterative.
    std::function<const std::vector<Integer>&(unsigned long)> get =
        [&](unsigned long k) -> const std::vector<Integer>& {
        auto found = cache.find(k);
        if (found != cache.end()) return found->second;
        if (k == 1) {
            return cache.emplace(1ul, std::vector<Integer>{-1, 1}).first->second;
        }
        std::vector<Integer> num(k + 1, 0);
        num[0] = -1;
        num[k] = 1;
        for (unsigned long d = 1; d < k; ++d) {
            if (k % d == 0) num = detail::zdiv_exact(std::move(num), get(d));
        }
        return cache.emplace(k, std::move(num)).first->second;
    };
    return get(n);
}

namespace detail {

// Per-conductor context: phi(N), Phi_N, and the reductions of x^k mod Phi_N
// for k = phi .. 2*phi-2, which is everything a product can reach.
struct CycContext {
    unsigned long n = 1;
    unsigned long phi = 1;
    std::vector<Integer> poly;
    std::vector<std::vector<Integer>> high_powers;  // high_powers[k-phi] = x^k mod Phi
};

inline std::vector<Integer> power_mod_phi(unsigned long k, unsigned long phi,
                                          const std::vector<Integer>& poly) {
    // x^k reduced mod the monic poly of degree phi; k handled iteratively.
    std::vector<Integer> cur(phi, 0);
    if (k < phi) {
        cur[k] = 1;
        return cur;
    }
    cur[phi - 1] = 1;
    for (unsigned long step = phi - 1; step < k; ++step) {
        // multiply by x
        Integer top = cur[phi - 1];
        for (unsigned long i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0) {
            for (unsigned long i = 0; i < phi; ++i) cur[i] -= top * poly[i];
        }
    }
    return cur;
}

inline const CycContext& cyc_context(unsigned long n) {
    static std::map<unsigned long, CycContext> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    CycContext ctx;
    ctx.n = n;
    ctx.phi = euler_phi(n);
    ctx.poly = cyclotomic_polynomial(n);
    ctx.high_powers.reserve(ctx.phi >= 1 ? ctx.phi - 1 : 0);
    for (unsigned long k = ctx.phi; k + 1 <= 2 * ctx.phi - 1; ++k)
        ctx.high_powers.push_back(power_mod_phi(k, ctx.phi, ctx.poly));
    return cache.emplace(n, std::move(ctx)).first->second;
}

}  // namespace detail

/// A root of unity zeta_N^k, stored as its exponent. Multiplication is
/// exponent addition mod N; characters and cocycle tables live here.
struct RootExponent {
    unsigned long conductor = 1;
    unsigned long exponent = 0;  // reduced mod conductor

    RootExponent() = default;
    RootExponent(long k, unsigned long n) : conductor(n) {
        if (n == 0) throw Error("RootExponent: conductor must be positive");
        long r = k % static_cast<long>(n);
        if (r < 0) r += static_cast<long>(n);
        exponent = static_cast<unsigned long>(r);
    }
    RootExponent operator*(const RootExponent& o) const {
        if (conductor != o.conductor) throw Error("RootExponent: conductor mismatch");
        return RootExponent(static_cast<long>((exponent + o.exponent) % conductor), conductor);
    }
    RootExponent inverse() const {
        return RootExponent(static_cast<long>((conductor - exponent) % conductor), conductor);
    }
    bool is_one() const { return exponent == 0; }
    bool operator==(const RootExponent& o) const = default;
};

/// Exact element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
/// The conductor is fixed at construction; arithmetic requires equal
/// conductors (lift first). Integrality over Z[zeta_N] is coordinatewise.
class CycNumber {
public:
    CycNumber() : n_(1), coeffs_(1, Rational(0)) {}

    explicit CycNumber(unsigned long n) : n_(check(n)), coeffs_(phi(), Rational(0)) {}

    CycNumber(const Rational& r, unsigned long n) : n_(check(n)), coeffs_(phi(), Rational(0)) {
        coeffs_[0] = r;
    }

    CycNumber(long v, unsigned long n) : CycNumber(Rational(v), n) {}

    static CycNumber root_of_unity(long k, unsigned long n) {
        RootExponent e(k, n);
        const auto& ctx = detail::cyc_context(n);
        auto red = detail::power_mod_phi(e.exponent, ctx.phi, ctx.poly);
        CycNumber out(n);
        for (unsigned long i = 0; i < ctx.phi; ++i) out.coeffs_[i] = Rational(red[i]);
        return out;
    }

    static CycNumber from_root(const RootExponent& e) {
        return root_of_unity(static_cast<long>(e.exponent), e.conductor);
    }

    unsigned long conductor() const { return n_; }
    unsigned long phi() const { return detail::cyc_context(n_).phi; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const Rational& c) { return c == 0; });
    }
    bool is_one() const {
        if (coeffs_[0] != 1) return false;
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }
    Rational rational_part() const {
        if (!is_rational()) throw Error("CycNumber: not rational");
        return coeffs_[0];
    }

    /// True iff the element lies in Z[zeta_N]. Sound and complete because
    /// Z[zeta_N] is the full ring of integers of Q(zeta_N).
    bool is_integral() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), is_integer);
    }

    CycNumber operator-() const {
        CycNumber out(n_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
        return out;
    }

    CycNumber& operator+=(const CycNumber& o) {
        require_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    CycNumber& operator-=(const CycNumber& o) {
        require_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }

    friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
    friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }

    friend CycNumber operator*(const CycNumber& a, const CycNumber& b) {
        a.require_same(b);
        const auto& ctx = detail::cyc_context(a.n_);
        const unsigned long d = ctx.phi;
        std::vector<Rational> conv(2 * d - 1, Rational(0));
        for (unsigned long i = 0; i < d; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (unsigned long j = 0; j < d; ++j) {
                if (b.coeffs_[j] == 0) continue;
                conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        CycNumber out(a.n_);
        for (unsigned long i = 0; i < d; ++i) out.coeffs_[i] = std::move(conv[i]);
        for (unsigned long k = d; k < 2 * d - 1; ++k) {
            if (conv[k] == 0) continue;
            const auto& row = ctx.high_powers[k - d];
            for (unsigned long i = 0; i < d; ++i) {
                if (row[i] != 0) out.coeffs_[i] += conv[k] * Rational(row[i]);
            }
        }
        return out;
    }

    CycNumber& operator*=(const CycNumber& o) { return *this = *this * o; }

    friend CycNumber operator*(const Rational& r, const CycNumber& a) {
        CycNumber out(a.n_);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out.coeffs_[i] = r * a.coeffs_[i];
        return out;
    }

    /// Multiplicative inverse via extended gcd of the coefficient polynomial
    /// with Phi_N over Q. Phi_N is irreducible, so the gcd is a unit.
    CycNumber inverse() const {
        if (is_zero()) throw Error("CycNumber: division by zero");
        const auto& ctx = detail::cyc_context(n_);
        // Extended Euclid on (a, Phi): track u with u*a = r (mod Phi).
        std::vector<Rational> r0(coeffs_), r1(ctx.poly.size());
        for (std::size_t i = 0; i < ctx.poly.size(); ++i) r1[i] = Rational(ctx.poly[i]);
        std::vector<Rational> u0{Rational(1)}, u1;  // empty = zero polynomial
        qtrim(r0);
        auto degree = [](const std::vector<Rational>& p) {
            return static_cast<long>(p.size()) - 1;
        };
        // Invariants: u0*a = r0, u1*a = r1 (mod Phi). Euclid steps keep them.
        // Start by swapping so r0 is the larger (Phi).
        std::swap(r0, r1);
        std::swap(u0, u1);
        while (!r1.empty() && degree(r1) > 0) {
            auto [q, rem] = qdivmod(r0, r1);
            auto unew = qsub(u0, qmul(q, u1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            u0 = std::move(u1);
            u1 = std::move(unew);
        }
        if (r1.empty()) throw Error("CycNumber: inverse failed (zero gcd)");
        const Rational c = r1[0];
        CycNumber out(n_);
        for (std::size_t i = 0; i < u1.size() && i < out.coeffs_.size(); ++i)
            out.coeffs_[i] = u1[i] / c;
        return out;
    }

    /// Same field element represented in Q(zeta_{Nprime}); requires N | Nprime.
    CycNumber lifted(unsigned long nprime) const {
        if (nprime % n_ != 0) throw Error("CycNumber: lift requires N | N'");
        if (nprime == n_) return *this;
        const unsigned long scale = nprime / n_;
        const auto& ctx = detail::cyc_context(nprime);
        CycNumber out(nprime);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            auto red = detail::power_mod_phi(i * scale, ctx.phi, ctx.poly);
            for (unsigned long j = 0; j < ctx.phi; ++j) {
                if (red[j] != 0) out.coeffs_[j] += coeffs_[i] * Rational(red[j]);
            }
        }
        return out;
    }

    bool operator==(const CycNumber& o) const {
        require_same(o);
        return coeffs_ == o.coeffs_;
    }
    bool operator!=(const CycNumber& o) const { return !(*this == o); }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (!first) os << " + ";
            os << coeffs_[i].get_str();
            if (i >= 1) os << "*z" << n_ << "^" << i;
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

private:
    static unsigned long check(unsigned long n) {
        if (n == 0) throw Error("CycNumber: conductor must be positive");
        return n;
    }
    void require_same(const CycNumber& o) const {
        if (n_ != o.n_) throw Error("CycNumber: conductor mismatch");
    }

    static void qtrim(std::vector<Rational>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    }
    static std::vector<Rational> qsub(std::vector<Rational> a, const std::vector<Rational>& b) {
        if (a.size() < b.size()) a.resize(b.size(), Rational(0));
        for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
        qtrim(a);
        return a;
    }
    static std::vector<Rational> qmul(const std::vector<Rational>& a,
                                      const std::vector<Rational>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        qtrim(out);
        return out;
    }
    static std::pair<std::vector<Rational>, std::vector<Rational>> qdivmod(
        std::vector<Rational> num, const std::vector<Rational>& den) {
        if (den.empty()) throw Error("poly division by zero");
        std::vector<Rational> quot;
        if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, Rational(0));
        while (num.size() >= den.size() && !num.empty()) {
            Rational c = num.back() / den.back();
            std::size_t shift = num.size() - den.size();
            quot[shift] = c;
            for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
            qtrim(num);
        }
        return {std::move(quot), std::move(num)};
    }

    unsigned long n_;
    std::vector<Rational> coeffs_;
};

inline CycNumber operator*(const CycNumber& a, const Rational& r) { return r * a; }

}  // namespace hopf
