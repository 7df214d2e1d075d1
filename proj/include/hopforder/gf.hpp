#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <vector>

#include "hopforder/rational.hpp"

namespace hopf {

/// Table-driven finite field F_{p^m}, built either as a prime field or as an
/// extension of another SmallField by the monic irreducible polynomial with
/// the least coefficient code. Elements are codes 0..q-1; an extension
/// element's code is its little-endian digit vector over the base field.
/// Instances are canonical and owned by a global registry, so raw pointers
/// to them stay valid for the process lifetime.
class SmallField {
public:
    unsigned characteristic() const { return p_; }
    unsigned size() const { return q_; }
    unsigned degree_over_base() const { return deg_; }
    const SmallField* base() const { return base_; }

    unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
    unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
    unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
    unsigned neg(unsigned a) const { return neg_[a]; }
    unsigned inv(unsigned a) const {
        if (a == 0) throw Error("SmallField: inverse of zero");
        return inv_[a];
    }
    unsigned pow(unsigned a, unsigned long e) const {
        unsigned acc = 1;
        for (unsigned long i = 0; i < e; ++i) acc = mul(acc, a);
        return acc;
    }

    unsigned digit(unsigned code, unsigned i) const {
        const unsigned b = base_ ? base_->size() : p_;
        for (unsigned k = 0; k < i; ++k) code /= b;
        return code % b;
    }

    unsigned from_digits(const std::vector<unsigned>& digits) const {
        const unsigned b = base_ ? base_->size() : p_;
        unsigned code = 0;
        for (std::size_t i = digits.size(); i-- > 0;) code = code * b + digits[i];
        return code;
    }

    /// Coordinates over the prime field, flattening the extension tower.
    std::vector<unsigned> prime_coords(unsigned code) const {
        if (!base_) return {code % p_};
        std::vector<unsigned> out;
        for (unsigned i = 0; i < deg_; ++i) {
            auto sub = base_->prime_coords(digit(code, i));
            out.insert(out.end(), sub.begin(), sub.end());
        }
        return out;
    }

    unsigned from_prime_coords(const std::vector<unsigned>& coords) const {
        if (!base_) return coords.at(0) % p_;
        const std::size_t chunk = coords.size() / deg_;
        std::vector<unsigned> digits(deg_);
        for (unsigned i = 0; i < deg_; ++i) {
            std::vector<unsigned> piece(coords.begin() + i * chunk, coords.begin() + (i + 1) * chunk);
            digits[i] = base_->from_prime_coords(piece);
        }
        return from_digits(digits);
    }

    unsigned prime_degree() const { return base_ ? deg_ * base_->prime_degree() : 1; }

    /// Tr_{this/base}(x) = sum of x^{|base|^i}; only valid for extensions.
    unsigned trace_to_base(unsigned x) const {
        if (!base_) throw Error("SmallField: trace needs an extension field");
        unsigned acc = 0;
        unsigned cur = x;
        for (unsigned i = 0; i < deg_; ++i) {
            acc = add(acc, cur);
            cur = pow(cur, base_->size());
        }
        // The trace lies in the base field: all higher digits vanish.
        for (unsigned i = 1; i < deg_; ++i)
            if (digit(acc, i) != 0) throw Error("SmallField: trace not in base field");
        return digit(acc, 0);
    }

    /// Generator of the multiplicative group with the least code.
    unsigned primitive_element() const {
        for (unsigned a = 1; a < q_; ++a) {
            unsigned ord = 1;
            unsigned cur = a;
            while (cur != 1) {
                cur = mul(cur, a);
                ++ord;
            }
            if (ord == q_ - 1) return a;
        }
        throw Error("SmallField: no primitive element");
    }

    const std::vector<unsigned>& irreducible() const { return irreducible_; }

    std::string str(unsigned code) const {
        std::ostringstream os;
        os << code;
        return os.str();
    }

    std::string describe() const {
        std::ostringstream os;
        if (!base_) {
            os << "F" << p_;
        } else {
            os << "F" << q_ << "=" << base_->describe() << "[x]/(";
            for (std::size_t i = 0; i < irreducible_.size(); ++i)
                os << (i ? "," : "") << irreducible_[i];
            os << ")";
        }
        return os.str();
    }

    static const SmallField& prime(unsigned p);
    static const SmallField& extension(const SmallField& base, unsigned degree);

private:
    SmallField() = default;

    static bool is_prime(unsigned p) {
        if (p < 2) return false;
        for (unsigned d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    void build_prime(unsigned p) {
        if (!is_prime(p)) throw Error("SmallField: characteristic must be prime");
        p_ = p;
        q_ = p;
        deg_ = 1;
        base_ = nullptr;
        fill_tables([&](unsigned a, unsigned b) { return (a + b) % p; },
                    [&](unsigned a, unsigned b) { return (a * b) % p; });
    }

    // Polynomials over the base field, little-endian digit vectors.
    using Poly = std::vector<unsigned>;

    static Poly ptrim(Poly f) {
        while (!f.empty() && f.back() == 0) f.pop_back();
        return f;
    }

    static Poly pmul(const SmallField& F, const Poly& a, const Poly& b) {
        if (a.empty() || b.empty()) return {};
        Poly out(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
        return ptrim(std::move(out));
    }

    static Poly pmod(const SmallField& F, Poly num, const Poly& den) {
        while (num.size() >= den.size() && !num.empty()) {
            unsigned c = F.mul(num.back(), F.inv(den.back()));
            std::size_t shift = num.size() - den.size();
            for (std::size_t i = 0; i < den.size(); ++i)
                num[shift + i] = F.sub(num[shift + i], F.mul(c, den[i]));
            num = ptrim(std::move(num));
        }
        return num;
    }

    static bool poly_irreducible(const SmallField& F, const Poly& f) {
        // Trial division by all monic polynomials of degree 1..deg/2.
        const unsigned deg = static_cast<unsigned>(f.size()) - 1;
        for (unsigned d = 1; 2 * d <= deg; ++d) {
            unsigned long count = 1;
            for (unsigned i = 0; i < d; ++i) count *= F.size();
            for (unsigned long code = 0; code < count; ++code) {
                Poly g(d + 1, 0);
                unsigned long c = code;
                for (unsigned i = 0; i < d; ++i) {
                    g[i] = static_cast<unsigned>(c % F.size());
                    c /= F.size();
                }
                g[d] = 1;
                if (pmod(F, f, g).empty()) return false;
            }
        }
        return true;
    }

    void build_extension(const SmallField& base, unsigned degree) {
        if (degree < 2) throw Error("SmallField: extension degree must be >= 2");
        p_ = base.characteristic();
        deg_ = degree;
        base_ = &base;
        q_ = 1;
        for (unsigned i = 0; i < degree; ++i) q_ *= base.size();

        // Least monic irreducible: enumerate lower-coefficient codes ascending.
        unsigned long count = 1;
        for (unsigned i = 0; i < degree; ++i) count *= base.size();
        bool found = false;
        for (unsigned long code = 0; code < count && !found; ++code) {
            Poly f(degree + 1, 0);
            unsigned long c = code;
            for (unsigned i = 0; i < degree; ++i) {
                f[i] = static_cast<unsigned>(c % base.size());
                c /= base.size();
            }
            f[degree] = 1;
            if (poly_irreducible(base, f)) {
                irreducible_ = f;
                found = true;
            }
        }
        if (!found) throw Error("SmallField: no irreducible polynomial found");

        auto decode = [&](unsigned code) {
            Poly f(degree);
            for (unsigned i = 0; i < degree; ++i) f[i] = digit_raw(code, i, base.size());
            return ptrim(std::move(f));
        };
        auto encode = [&](Poly f) {
            unsigned code = 0;
            f.resize(degree, 0);
            for (std::size_t i = degree; i-- > 0;) code = code * base.size() + f[i];
            return code;
        };
        fill_tables(
            [&](unsigned a, unsigned b) {
                Poly fa = decode(a), fb = decode(b);
                fa.resize(degree, 0);
                fb.resize(degree, 0);
                Poly out(degree);
                for (unsigned i = 0; i < degree; ++i) out[i] = base.add(fa[i], fb[i]);
                return encode(std::move(out));
            },
            [&](unsigned a, unsigned b) {
                return encode(pmod(base, pmul(base, decode(a), decode(b)), irreducible_));
            });
    }

    static unsigned digit_raw(unsigned code, unsigned i, unsigned b) {
        for (unsigned k = 0; k < i; ++k) code /= b;
        return code % b;
    }

    template <class Add, class Mul>
    void fill_tables(Add addf, Mul mulf) {
        add_.assign(static_cast<std::size_t>(q_) * q_, 0);
        mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);
        for (unsigned a = 0; a < q_; ++a)
            for (unsigned b = 0; b < q_; ++b) {
                add_[a * q_ + b] = addf(a, b);
                mul_[a * q_ + b] = mulf(a, b);
            }
        for (unsigned a = 0; a < q_; ++a)
            for (unsigned b = 0; b < q_; ++b) {
                if (add_[a * q_ + b] == 0) neg_[a] = b;
                if (mul_[a * q_ + b] == 1) inv_[a] = b;
            }
    }

    unsigned p_ = 2;
    unsigned q_ = 2;
    unsigned deg_ = 1;
    const SmallField* base_ = nullptr;
    std::vector<unsigned> irreducible_;
    std::vector<unsigned> add_, mul_, neg_, inv_;
};

inline const SmallField& SmallField::prime(unsigned p) {
    static std::map<unsigned, std::unique_ptr<SmallField>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(p);
    if (it == cache.end()) {
        auto f = std::unique_ptr<SmallField>(new SmallField());
        f->build_prime(p);
        it = cache.emplace(p, std::move(f)).first;
    }
    return *it->second;
}

inline const SmallField& SmallField::extension(const SmallField& base, unsigned degree) {
    static std::map<std::pair<const SmallField*, unsigned>, std::unique_ptr<SmallField>> cache;
    static std::mutex mtx;
    if (degree == 1) return base;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(&base, degree);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto f = std::unique_ptr<SmallField>(new SmallField());
        f->build_extension(base, degree);
        it = cache.emplace(key, std::move(f)).first;
    }
    return *it->second;
}

/// F_q for a prime power q = p^m, as a tower over F_p.
inline const SmallField& galois_field(unsigned q) {
    if (q < 2) throw Error("galois_field: q must be >= 2");
    unsigned p = 2;
    while (q % p != 0) ++p;
    unsigned m = 0;
    unsigned long cur = 1;
    while (cur < q) {
        cur *= p;
        ++m;
    }
    if (cur != q) throw Error("galois_field: not a prime power");
    const SmallField& fp = SmallField::prime(p);
    return m == 1 ? fp : SmallField::extension(fp, m);
}

}  // namespace hopf
