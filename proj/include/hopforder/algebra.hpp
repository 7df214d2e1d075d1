#pragma once

#include <array>
#include <map>

#include "hopforder/group.hpp"

namespace hopf {

/// Sparse element of the group algebra KG with exact cyclotomic
/// coefficients. Zero coefficients are never stored; the conductor is fixed
/// per element and must agree across operands.
class AlgElem {
public:
    AlgElem() = default;
    AlgElem(const FiniteGroup& g, unsigned long conductor) : g_(&g), n_(conductor) {}

    static AlgElem basis(const FiniteGroup& g, elt_t x, unsigned long conductor) {
        AlgElem out(g, conductor);
        out.terms_.emplace(x, CycNumber(Rational(1), conductor));
        return out;
    }

    static AlgElem unit(const FiniteGroup& g, unsigned long conductor) {
        return basis(g, g.identity(), conductor);
    }

    const FiniteGroup& group() const { return *g_; }
    unsigned long conductor() const { return n_; }
    const std::map<elt_t, CycNumber>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    CycNumber coeff(elt_t x) const {
        auto it = terms_.find(x);
        return it == terms_.end() ? CycNumber(n_) : it->second;
    }

    void add_term(elt_t x, const CycNumber& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(x, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    AlgElem& operator+=(const AlgElem& o) {
        require_compatible(o);
        for (const auto& [x, c] : o.terms_) add_term(x, c);
        return *this;
    }
    AlgElem& operator-=(const AlgElem& o) {
        require_compatible(o);
        for (const auto& [x, c] : o.terms_) add_term(x, -c);
        return *this;
    }
    friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
    friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }

    friend AlgElem operator*(const CycNumber& s, const AlgElem& a) {
        AlgElem out(*a.g_, a.n_);
        for (const auto& [x, c] : a.terms_) out.add_term(x, s * c);
        return out;
    }
    friend AlgElem operator*(const Rational& s, const AlgElem& a) {
        return CycNumber(s, a.n_) * a;
    }

    /// Bilinear extension of the group multiplication.
    friend AlgElem operator*(const AlgElem& a, const AlgElem& b) {
        a.require_compatible(b);
        AlgElem out(*a.g_, a.n_);
        for (const auto& [x, cx] : a.terms_)
            for (const auto& [y, cy] : b.terms_) out.add_term(a.g_->mul(x, y), cx * cy);
        return out;
    }
    AlgElem& operator*=(const AlgElem& o) { return *this = *this * o; }

    AlgElem conjugate_by(elt_t g) const {
        AlgElem out(*g_, n_);
        for (const auto& [x, c] : terms_) out.add_term(g_->conj(g, x), c);
        return out;
    }

    bool operator==(const AlgElem& o) const {
        require_compatible(o);
        return terms_ == o.terms_;
    }
    bool operator!=(const AlgElem& o) const { return !(*this == o); }

    std::string str() const {
        std::string out;
        for (const auto& [x, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.str() + ")*" + g_->label(x);
        }
        return out.empty() ? "0" : out;
    }

private:
    void require_compatible(const AlgElem& o) const {
        if (g_ != o.g_) throw Error("AlgElem: group mismatch");
        if (n_ != o.n_) throw Error("AlgElem: conductor mismatch");
    }

    const FiniteGroup* g_ = nullptr;
    unsigned long n_ = 1;
    std::map<elt_t, CycNumber> terms_;
};

/// Sparse element of KG (x) KG.
class TensorElem {
public:
    using Key = std::pair<elt_t, elt_t>;

    TensorElem() = default;
    TensorElem(const FiniteGroup& g, unsigned long conductor) : g_(&g), n_(conductor) {}

    static TensorElem unit(const FiniteGroup& g, unsigned long conductor) {
        TensorElem out(g, conductor);
        out.add_term(g.identity(), g.identity(), CycNumber(Rational(1), conductor));
        return out;
    }

    static TensorElem pure(const AlgElem& a, const AlgElem& b) {
        TensorElem out(a.group(), a.conductor());
        for (const auto& [x, cx] : a.terms())
            for (const auto& [y, cy] : b.terms()) out.add_term(x, y, cx * cy);
        return out;
    }

    const FiniteGroup& group() const { return *g_; }
    unsigned long conductor() const { return n_; }
    const std::map<Key, CycNumber>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(elt_t x, elt_t y, const CycNumber& c) {
        if (c.is_zero()) return;
        Key k{x, y};
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TensorElem& operator+=(const TensorElem& o) {
        require_compatible(o);
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    TensorElem& operator-=(const TensorElem& o) {
        require_compatible(o);
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
    friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }

    friend TensorElem operator*(const CycNumber& s, const TensorElem& t) {
        TensorElem out(*t.g_, t.n_);
        for (const auto& [k, c] : t.terms_) out.add_term(k.first, k.second, s * c);
        return out;
    }

    /// Componentwise algebra product in KG (x) KG.
    friend TensorElem operator*(const TensorElem& a, const TensorElem& b) {
        a.require_compatible(b);
        TensorElem out(*a.g_, a.n_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                out.add_term(a.g_->mul(ka.first, kb.first), a.g_->mul(ka.second, kb.second),
                             ca * cb);
        return out;
    }

    bool operator==(const TensorElem& o) const {
        require_compatible(o);
        return terms_ == o.terms_;
    }
    bool operator!=(const TensorElem& o) const { return !(*this == o); }

    /// Swap the two legs.
    TensorElem flipped() const {
        TensorElem out(*g_, n_);
        for (const auto& [k, c] : terms_) out.add_term(k.second, k.first, c);
        return out;
    }

    std::string str() const {
        std::string out;
        for (const auto& [k, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.str() + ")*" + g_->label(k.first) + "(x)" + g_->label(k.second);
        }
        return out.empty() ? "0" : out;
    }

private:
    void require_compatible(const TensorElem& o) const {
        if (g_ != o.g_) throw Error("TensorElem: group mismatch");
        if (n_ != o.n_) throw Error("TensorElem: conductor mismatch");
    }

    const FiniteGroup* g_ = nullptr;
    unsigned long n_ = 1;
    std::map<Key, CycNumber> terms_;
};

/// Sparse element of KG (x) KG (x) KG; just enough for the twist axioms.
class Tensor3Elem {
public:
    using Key = std::array<elt_t, 3>;

    Tensor3Elem() = default;
    Tensor3Elem(const FiniteGroup& g, unsigned long conductor) : g_(&g), n_(conductor) {}

    const std::map<Key, CycNumber>& terms() const { return terms_; }

    void add_term(const Key& k, const CycNumber& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Tensor3Elem operator*(const Tensor3Elem& a, const Tensor3Elem& b) {
        if (a.g_ != b.g_ || a.n_ != b.n_) throw Error("Tensor3Elem: mismatch");
        Tensor3Elem out(*a.g_, a.n_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                out.add_term({a.g_->mul(ka[0], kb[0]), a.g_->mul(ka[1], kb[1]),
                              a.g_->mul(ka[2], kb[2])},
                             ca * cb);
        return out;
    }

    bool operator==(const Tensor3Elem& o) const { return terms_ == o.terms_; }

    /// 1 (x) t and t (x) 1, and the two middle coproduct expansions
    /// (Delta (x) id)(t), (id (x) Delta)(t) for group-diagonal Delta.
    static Tensor3Elem one_tensor(const TensorElem& t) {
        Tensor3Elem out(t.group(), t.conductor());
        for (const auto& [k, c] : t.terms())
            out.add_term({t.group().identity(), k.first, k.second}, c);
        return out;
    }
    static Tensor3Elem tensor_one(const TensorElem& t) {
        Tensor3Elem out(t.group(), t.conductor());
        for (const auto& [k, c] : t.terms())
            out.add_term({k.first, k.second, t.group().identity()}, c);
        return out;
    }
    static Tensor3Elem coproduct_left(const TensorElem& t) {
        // (Delta (x) id): g (x) h -> g (x) g (x) h
        Tensor3Elem out(t.group(), t.conductor());
        for (const auto& [k, c] : t.terms()) out.add_term({k.first, k.first, k.second}, c);
        return out;
    }
    static Tensor3Elem coproduct_right(const TensorElem& t) {
        // (id (x) Delta): g (x) h -> g (x) h (x) h
        Tensor3Elem out(t.group(), t.conductor());
        for (const auto& [k, c] : t.terms()) out.add_term({k.first, k.second, k.second}, c);
        return out;
    }

private:
    const FiniteGroup* g_ = nullptr;
    unsigned long n_ = 1;
    std::map<Key, CycNumber> terms_;
};

// ---------------------------------------------------------------------------
// Hopf structure of KG.
// ---------------------------------------------------------------------------

/// Delta(g) = g (x) g, extended linearly.
inline TensorElem coproduct(const AlgElem& a) {
    TensorElem out(a.group(), a.conductor());
    for (const auto& [x, c] : a.terms()) out.add_term(x, x, c);
    return out;
}

/// epsilon(g) = 1, extended linearly.
inline CycNumber counit(const AlgElem& a) {
    CycNumber out(a.conductor());
    for (const auto& [x, c] : a.terms()) out += c;
    return out;
}

/// S(g) = g^{-1}, extended linearly.
inline AlgElem antipode(const AlgElem& a) {
    AlgElem out(a.group(), a.conductor());
    for (const auto& [x, c] : a.terms()) out.add_term(a.group().inv(x), c);
    return out;
}

/// m(S (x) id) Delta(a), which must equal epsilon(a) 1.
inline AlgElem antipode_convolution(const AlgElem& a) {
    AlgElem out(a.group(), a.conductor());
    for (const auto& [x, c] : a.terms())
        out.add_term(a.group().mul(a.group().inv(x), x), c);
    return out;
}

/// The primitive idempotent e_phi = (1/|M|) sum phi(m^{-1}) m of KM in KG.
inline AlgElem idempotent(const AbelianSubgroup& m, const Character& phi,
                          unsigned long conductor) {
    if (conductor % m.structure().exponent() != 0)
        throw Error("idempotent: conductor too small for subgroup exponent");
    if (phi.conductor() != conductor) throw Error("idempotent: character conductor mismatch");
    AlgElem out(m.group(), conductor);
    const Rational scale = make_rational(1, static_cast<long>(m.order()));
    for (elt_t x : m.elements()) {
        CycNumber v = CycNumber::from_root(phi.eval(m.tuple_of(x)).inverse());
        out.add_term(x, scale * v);
    }
    return out;
}

/// Restriction of a character of N to a subgroup L <= N.
inline Character restrict_character(const AbelianSubgroup& n, const AbelianSubgroup& l,
                                    const Character& nu) {
    const auto& factors = l.structure().factors();
    AbelianGroup::Elem exps(factors.size());
    const unsigned long cond = nu.conductor();
    for (std::size_t j = 0; j < factors.size(); ++j) {
        elt_t gen = l.basis()[j].first;
        if (!n.contains(gen)) throw Error("restrict_character: L is not inside N");
        unsigned long v = nu.eval(n.tuple_of(gen)).exponent;
        if (v * factors[j] % cond != 0)
            throw Error("restrict_character: value order exceeds factor");
        exps[j] = static_cast<unsigned>(v * factors[j] / cond % factors[j]);
    }
    return Character(l.structure(), exps, cond);
}

/// e_lambda^L as the sum of the e_nu^N with nu restricting to lambda,
/// together with the direct construction; both must agree.
struct RefinedIdempotent {
    AlgElem direct;
    AlgElem via_cover;
    bool consistent = false;
};

inline RefinedIdempotent refine_idempotent(const AbelianSubgroup& n, const AbelianSubgroup& l,
                                           const Character& lambda, unsigned long conductor) {
    RefinedIdempotent out;
    out.direct = idempotent(l, lambda, conductor);
    out.via_cover = AlgElem(l.group(), conductor);
    for (const auto& nu : n.characters(conductor)) {
        if (restrict_character(n, l, nu) == lambda) out.via_cover += idempotent(n, nu, conductor);
    }
    out.consistent = out.direct == out.via_cover;
    return out;
}

// ---------------------------------------------------------------------------
// Linear functionals on KG (characters of the algebra, evaluation maps).
// ---------------------------------------------------------------------------

/// A K-linear functional given densely by its values on the group basis.
class Functional {
public:
    Functional() = default;
    Functional(const FiniteGroup& g, unsigned long conductor)
        : g_(&g), n_(conductor), values_(g.order(), CycNumber(conductor)) {}

    static Functional counit_functional(const FiniteGroup& g, unsigned long conductor) {
        Functional out(g, conductor);
        for (auto& v : out.values_) v = CycNumber(Rational(1), conductor);
        return out;
    }

    /// The functional x -> chi(x) for a character chi of an abelian
    /// subgroup. Undefined off the subgroup; evaluation throws if the
    /// support leaves it.
    static Functional from_subgroup_character(const AbelianSubgroup& m, const Character& chi,
                                              unsigned long conductor) {
        Functional out(m.group(), conductor);
        out.defined_.assign(m.group().order(), 0);
        for (elt_t x : m.elements()) {
            out.values_[x] = CycNumber::from_root(chi.eval(m.tuple_of(x)));
            out.defined_[x] = 1;
        }
        out.partial_ = true;
        return out;
    }

    const FiniteGroup& group() const { return *g_; }
    unsigned long conductor() const { return n_; }

    void set_value(elt_t x, const CycNumber& v) { values_[x] = v; }
    const CycNumber& value(elt_t x) const {
        if (partial_ && !defined_[x]) throw Error("Functional: undefined on support element");
        return values_[x];
    }

    CycNumber eval(const AlgElem& a) const {
        CycNumber out(n_);
        for (const auto& [x, c] : a.terms()) out += value(x) * c;
        return out;
    }

    /// Contract one tensor leg: (f (x) id)(t) or (id (x) f)(t).
    AlgElem contract(const TensorElem& t, bool left_leg) const {
        AlgElem out(*g_, n_);
        for (const auto& [k, c] : t.terms()) {
            elt_t contracted = left_leg ? k.first : k.second;
            elt_t kept = left_leg ? k.second : k.first;
            out.add_term(kept, value(contracted) * c);
        }
        return out;
    }

private:
    const FiniteGroup* g_ = nullptr;
    unsigned long n_ = 1;
    std::vector<CycNumber> values_;
    std::vector<char> defined_;
    bool partial_ = false;
};

enum class Leg { left, right };

/// (f (x) id) or (id (x) f) applied to a tensor.
inline AlgElem apply_character_leg(const Functional& f, const TensorElem& t, Leg leg) {
    return f.contract(t, leg == Leg::left);
}

}  // namespace hopf
