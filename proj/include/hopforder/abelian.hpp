#pragma once

#include <numeric>
#include <sstream>
#include <vector>

#include "hopforder/cyclotomic.hpp"

namespace hopf {

/// Finite abelian group presented by invariant factors d_1, ..., d_k (each
/// >= 2; the empty list is the trivial group). Elements are integer tuples
/// modulo (d_1, ..., d_k), written additively. Element indices enumerate
/// tuples in mixed-radix order with the first coordinate most significant.
class AbelianGroup {
public:
    using Elem = std::vector<unsigned>;

    AbelianGroup() = default;

    explicit AbelianGroup(std::vector<unsigned> factors) : factors_(std::move(factors)) {
        for (unsigned d : factors_)
            if (d < 2) throw Error("AbelianGroup: invariant factors must be >= 2");
        order_ = 1;
        for (unsigned d : factors_) order_ *= d;
    }

    const std::vector<unsigned>& factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    std::size_t order() const { return order_; }

    unsigned long exponent() const {
        unsigned long e = 1;
        for (unsigned d : factors_) e = std::lcm(e, static_cast<unsigned long>(d));
        return e;
    }

    Elem zero() const { return Elem(factors_.size(), 0); }

    bool is_zero(const Elem& a) const {
        for (unsigned x : a)
            if (x != 0) return false;
        return true;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem out(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = (a[i] + b[i]) % factors_[i];
        return out;
    }

    Elem neg(const Elem& a) const {
        Elem out(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = (factors_[i] - a[i]) % factors_[i];
        return out;
    }

    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

    Elem scale(long k, const Elem& a) const {
        Elem out(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            long r = (k * static_cast<long>(a[i])) % static_cast<long>(factors_[i]);
            if (r < 0) r += factors_[i];
            out[i] = static_cast<unsigned>(r);
        }
        return out;
    }

    unsigned elem_order(const Elem& a) const {
        unsigned ord = 1;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            unsigned d = factors_[i] / std::gcd(factors_[i], a[i] == 0 ? factors_[i] : a[i]);
            ord = std::lcm(ord, a[i] == 0 ? 1u : d);
        }
        return ord;
    }

    std::size_t index_of(const Elem& a) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + a[i];
        return idx;
    }

    Elem element(std::size_t idx) const {
        Elem out(factors_.size());
        for (std::size_t i = factors_.size(); i-- > 0;) {
            out[i] = static_cast<unsigned>(idx % factors_[i]);
            idx /= factors_[i];
        }
        return out;
    }

    std::string str(const Elem& a) const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
        os << ")";
        return os.str();
    }

    bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }

private:
    std::vector<unsigned> factors_;
    std::size_t order_ = 1;
};

/// The character group of A is abstractly A again; a character is stored as
/// an exponent tuple in the dual copy. Evaluation lands in mu_N for any
/// conductor N divisible by exponent(A).
inline AbelianGroup dual_group(const AbelianGroup& a) { return a; }

class Character {
public:
    Character() = default;

    Character(const AbelianGroup& grp, AbelianGroup::Elem exponents, unsigned long conductor)
        : grp_(grp), exps_(std::move(exponents)), conductor_(conductor) {
        if (conductor_ % grp_.exponent() != 0)
            throw Error("Character: conductor too small for group exponent");
    }

    const AbelianGroup& group() const { return grp_; }
    const AbelianGroup::Elem& exponents() const { return exps_; }
    unsigned long conductor() const { return conductor_; }

    bool is_trivial() const { return grp_.is_zero(exps_); }

    RootExponent eval(const AbelianGroup::Elem& m) const {
        unsigned long acc = 0;
        const auto& d = grp_.factors();
        for (std::size_t i = 0; i < d.size(); ++i) {
            unsigned long term = (conductor_ / d[i]) * exps_[i] % conductor_;
            acc = (acc + term * m[i]) % conductor_;
        }
        return RootExponent(static_cast<long>(acc), conductor_);
    }

    CycNumber value(const AbelianGroup::Elem& m) const { return CycNumber::from_root(eval(m)); }

    Character operator*(const Character& o) const {
        require_compatible(o);
        return Character(grp_, grp_.add(exps_, o.exps_), conductor_);
    }

    Character inverse() const { return Character(grp_, grp_.neg(exps_), conductor_); }

    bool operator==(const Character& o) const {
        return grp_ == o.grp_ && exps_ == o.exps_ && conductor_ == o.conductor_;
    }

private:
    void require_compatible(const Character& o) const {
        if (!(grp_ == o.grp_) || conductor_ != o.conductor_)
            throw Error("Character: incompatible characters");
    }

    AbelianGroup grp_;
    AbelianGroup::Elem exps_;
    unsigned long conductor_ = 1;
};

/// All characters of A at the given conductor, in dual-element index order.
inline std::vector<Character> all_characters(const AbelianGroup& a, unsigned long conductor) {
    std::vector<Character> out;
    out.reserve(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) out.emplace_back(a, a.element(i), conductor);
    return out;
}

}  // namespace hopf
