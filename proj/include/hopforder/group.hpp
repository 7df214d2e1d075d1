#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <set>
#include <unordered_map>
#include <vector>

#include "hopforder/abelian.hpp"

namespace hopf {

using elt_t = std::uint32_t;

/// Finite group with a full multiplication table. Element enumeration is
/// fixed at construction and stable; identity and inverse tables are derived
/// and the group axioms are certified on the full table at desk scale.
class FiniteGroup {
public:
    FiniteGroup(std::vector<elt_t> mul_table, std::size_t order, std::vector<std::string> labels)
        : n_(order), mul_(std::move(mul_table)), labels_(std::move(labels)) {
        if (mul_.size() != n_ * n_) throw Error("FiniteGroup: bad table size");
        if (labels_.size() != n_) labels_.resize(n_, "?");
        for (elt_t x : mul_)
            if (x >= n_) throw Error("FiniteGroup: table entry out of range");
        find_identity();
        build_inverses();
        verify_axioms();
    }

    std::size_t order() const { return n_; }
    elt_t identity() const { return id_; }
    elt_t mul(elt_t a, elt_t b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
    elt_t inv(elt_t a) const { return inv_[a]; }
    elt_t conj(elt_t g, elt_t x) const { return mul(mul(g, x), inv(g)); }

    elt_t power(elt_t g, long k) const {
        elt_t base = k >= 0 ? g : inv(g);
        unsigned long e = k >= 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
        elt_t acc = id_;
        for (unsigned long i = 0; i < e; ++i) acc = mul(acc, base);
        return acc;
    }

    unsigned elem_order(elt_t g) const {
        unsigned ord = 1;
        elt_t cur = g;
        while (cur != id_) {
            cur = mul(cur, g);
            ++ord;
        }
        return ord;
    }

    unsigned long exponent() const {
        unsigned long e = 1;
        for (elt_t g = 0; g < n_; ++g) e = std::lcm(e, static_cast<unsigned long>(elem_order(g)));
        return e;
    }

    bool is_abelian() const {
        for (elt_t a = 0; a < n_; ++a)
            for (elt_t b = a + 1; b < n_; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    const std::string& label(elt_t g) const { return labels_[g]; }

private:
    void find_identity() {
        for (elt_t e = 0; e < n_; ++e) {
            bool ok = true;
            for (elt_t x = 0; x < n_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
            if (ok) {
                id_ = e;
                return;
            }
        }
        throw Error("FiniteGroup: no identity element");
    }

    void build_inverses() {
        inv_.assign(n_, 0);
        for (elt_t a = 0; a < n_; ++a) {
            bool found = false;
            for (elt_t b = 0; b < n_; ++b) {
                if (mul(a, b) == id_ && mul(b, a) == id_) {
                    inv_[a] = b;
                    found = true;
                    break;
                }
            }
            if (!found) throw Error("FiniteGroup: missing inverse");
        }
    }

    void verify_axioms() const {
        // Full associativity certificate; skipped above the desk-scale bound
        // where the table provably comes from an associative representation.
        if (n_ > 1024) return;
        for (elt_t a = 0; a < n_; ++a)
            for (elt_t b = 0; b < n_; ++b)
                for (elt_t c = 0; c < n_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw Error("FiniteGroup: associativity failure");
    }

    std::size_t n_;
    elt_t id_ = 0;
    std::vector<elt_t> mul_;
    std::vector<elt_t> inv_;
    std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Subgroup utilities. Subgroups are sorted element-index sets.
// ---------------------------------------------------------------------------

using EltSet = std::vector<elt_t>;  // sorted, unique

inline bool set_contains(const EltSet& s, elt_t g) {
    return std::binary_search(s.begin(), s.end(), g);
}

inline EltSet subgroup_closure(const FiniteGroup& g, EltSet gens) {
    std::set<elt_t> seen{g.identity()};
    std::deque<elt_t> queue{g.identity()};
    std::sort(gens.begin(), gens.end());
    while (!queue.empty()) {
        elt_t x = queue.front();
        queue.pop_front();
        for (elt_t s : gens) {
            elt_t y = g.mul(x, s);
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return EltSet(seen.begin(), seen.end());
}

inline bool is_subgroup(const FiniteGroup& g, const EltSet& s) {
    if (s.empty() || !set_contains(s, g.identity())) return false;
    for (elt_t a : s)
        for (elt_t b : s)
            if (!set_contains(s, g.mul(a, b))) return false;
    for (elt_t a : s)
        if (!set_contains(s, g.inv(a))) return false;
    return true;
}

inline bool is_normal(const FiniteGroup& g, const EltSet& s) {
    for (elt_t x = 0; x < g.order(); ++x)
        for (elt_t a : s)
            if (!set_contains(s, g.conj(x, a))) return false;
    return true;
}

inline EltSet centralizer(const FiniteGroup& g, const EltSet& s) {
    EltSet out;
    for (elt_t x = 0; x < g.order(); ++x) {
        bool central = true;
        for (elt_t a : s)
            if (g.mul(x, a) != g.mul(a, x)) {
                central = false;
                break;
            }
        if (central) out.push_back(x);
    }
    return out;
}

inline EltSet normal_closure(const FiniteGroup& g, const EltSet& gens) {
    EltSet conjugates;
    for (elt_t x = 0; x < g.order(); ++x)
        for (elt_t a : gens) conjugates.push_back(g.conj(x, a));
    std::sort(conjugates.begin(), conjugates.end());
    conjugates.erase(std::unique(conjugates.begin(), conjugates.end()), conjugates.end());
    return subgroup_closure(g, conjugates);
}

/// One representative per coset of a normal subgroup, identity first, the
/// rest by minimal element index in ascending order.
inline std::vector<elt_t> coset_representatives(const FiniteGroup& g, const EltSet& n) {
    if (!is_subgroup(g, n)) throw Error("coset_representatives: not a subgroup");
    if (!is_normal(g, n)) throw Error("coset_representatives: subgroup not normal");
    std::vector<char> assigned(g.order(), 0);
    std::vector<elt_t> reps;
    for (elt_t a : n) assigned[a] = 1;
    reps.push_back(g.identity());
    for (elt_t x = 0; x < g.order(); ++x) {
        if (assigned[x]) continue;
        reps.push_back(x);
        for (elt_t a : n) assigned[g.mul(a, x)] = 1;
    }
    return reps;
}

struct DoubleCosets {
    std::vector<elt_t> representatives;  // minimal element index of each cell
    std::vector<EltSet> cells;           // partition of G, aligned with reps
};

/// Double cosets M tau M of a subgroup, representatives chosen as the
/// minimal element index of each cell; the identity represents M 1 M.
inline DoubleCosets double_cosets(const FiniteGroup& g, const EltSet& m) {
    if (!is_subgroup(g, m)) throw Error("double_cosets: not a subgroup");
    DoubleCosets out;
    std::vector<char> assigned(g.order(), 0);
    for (elt_t x = 0; x < g.order(); ++x) {
        if (assigned[x]) continue;
        EltSet cell;
        for (elt_t a : m)
            for (elt_t b : m) {
                elt_t y = g.mul(g.mul(a, x), b);
                if (!assigned[y]) {
                    assigned[y] = 1;
                    cell.push_back(y);
                }
            }
        std::sort(cell.begin(), cell.end());
        // Minimal index, except the cell of M itself is represented by 1.
        out.representatives.push_back(set_contains(cell, g.identity()) ? g.identity()
                                                                       : cell.front());
        out.cells.push_back(std::move(cell));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Abelian subgroups carry an explicit independent generator basis, which
// identifies them with an invariant-factor AbelianGroup and makes their
// character theory available.
// ---------------------------------------------------------------------------

class AbelianSubgroup {
public:
    AbelianSubgroup() = default;  // empty shell, assign before use

    /// Build from any commuting generating set: enumerates the subgroup and
    /// extracts an independent basis (largest quotient order first, adjusted
    /// into the complement), then reorders so invariant factors ascend.
    AbelianSubgroup(const FiniteGroup& g, const EltSet& generators) : g_(&g) {
        EltSet elems = subgroup_closure(g, generators);
        for (elt_t a : generators)
            for (elt_t b : generators)
                if (g.mul(a, b) != g.mul(b, a))
                    throw Error("AbelianSubgroup: generators do not commute");
        extract_basis(elems);
        finish();
    }

    /// Build from a known independent basis (generator, order) list.
    static AbelianSubgroup from_basis(const FiniteGroup& g,
                                      std::vector<std::pair<elt_t, unsigned>> basis) {
        AbelianSubgroup out;
        out.g_ = &g;
        out.basis_ = std::move(basis);
        out.finish();
        return out;
    }

    const FiniteGroup& group() const { return *g_; }
    const AbelianGroup& structure() const { return abstract_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<std::pair<elt_t, unsigned>>& basis() const { return basis_; }

    bool contains(elt_t g) const { return to_tuple_.count(g) > 0; }

    AbelianGroup::Elem tuple_of(elt_t g) const {
        auto it = to_tuple_.find(g);
        if (it == to_tuple_.end()) throw Error("AbelianSubgroup: element not in subgroup");
        return abstract_.element(it->second);
    }

    elt_t element(const AbelianGroup::Elem& t) const { return elements_[abstract_.index_of(t)]; }
    elt_t element_at(std::size_t abstract_index) const { return elements_[abstract_index]; }

    /// Elements in abstract index order.
    const std::vector<elt_t>& elements() const { return elements_; }

    EltSet sorted_elements() const {
        EltSet out(elements_.begin(), elements_.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Characters of the subgroup at the given conductor, dual index order.
    std::vector<Character> characters(unsigned long conductor) const {
        return all_characters(abstract_, conductor);
    }

    CycNumber char_value(const Character& chi, elt_t g) const {
        return chi.value(tuple_of(g));
    }

private:
    void extract_basis(const EltSet& elems) {
        EltSet span{g_->identity()};
        std::vector<std::pair<elt_t, unsigned>> basis;
        while (span.size() < elems.size()) {
            // Element with the largest order in the quotient by the span.
            elt_t best = 0;
            unsigned best_ord = 0;
            for (elt_t x : elems) {
                if (set_contains(span, x)) continue;
                unsigned ord = 1;
                elt_t cur = x;
                while (!set_contains(span, cur)) {
                    cur = g_->mul(cur, x);
                    ++ord;
                }
                if (ord > best_ord) {
                    best_ord = ord;
                    best = x;
                }
            }
            // Adjust by a span element so the representative's actual order
            // equals its quotient order; one always exists.
            elt_t chosen = 0;
            bool found = false;
            for (elt_t s : span) {
                elt_t y = g_->mul(best, s);
                if (g_->power(y, static_cast<long>(best_ord)) == g_->identity()) {
                    chosen = y;
                    found = true;
                    break;
                }
            }
            if (!found) throw Error("AbelianSubgroup: basis adjustment failed");
            basis.emplace_back(chosen, best_ord);
            EltSet gens;
            gens.reserve(basis.size());
            for (auto& [b, o] : basis) gens.push_back(b);
            span = subgroup_closure(*g_, gens);
        }
        std::stable_sort(basis.begin(), basis.end(),
                         [](const auto& a, const auto& b) { return a.second < b.second; });
        basis_ = std::move(basis);
    }

    void finish() {
        std::vector<unsigned> factors;
        for (auto& [g, o] : basis_) factors.push_back(o);
        abstract_ = AbelianGroup(factors);
        elements_.assign(abstract_.order(), 0);
        for (std::size_t i = 0; i < abstract_.order(); ++i) {
            auto t = abstract_.element(i);
            elt_t prod = g_->identity();
            for (std::size_t j = 0; j < basis_.size(); ++j)
                prod = g_->mul(prod, g_->power(basis_[j].first, static_cast<long>(t[j])));
            elements_[i] = prod;
        }
        to_tuple_.clear();
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (!to_tuple_.emplace(elements_[i], i).second)
                throw Error("AbelianSubgroup: basis not independent");
        }
    }

    const FiniteGroup* g_ = nullptr;
    std::vector<std::pair<elt_t, unsigned>> basis_;
    AbelianGroup abstract_;
    std::vector<elt_t> elements_;
    std::unordered_map<elt_t, std::size_t> to_tuple_;
};

// ---------------------------------------------------------------------------
// Group actions on abelian groups (and their duals).
// ---------------------------------------------------------------------------

/// Action of a FiniteGroup on an AbelianGroup by automorphisms, stored as a
/// dense table. The action axioms are certified at construction.
class GroupAction {
public:
    GroupAction(const FiniteGroup& actor, AbelianGroup target,
                const std::function<AbelianGroup::Elem(elt_t, const AbelianGroup::Elem&)>& f)
        : actor_(&actor), target_(std::move(target)) {
        table_.assign(actor.order() * target_.order(), 0);
        for (elt_t q = 0; q < actor.order(); ++q)
            for (std::size_t i = 0; i < target_.order(); ++i)
                table_[q * target_.order() + i] =
                    static_cast<elt_t>(target_.index_of(f(q, target_.element(i))));
        verify();
    }

    const FiniteGroup& actor() const { return *actor_; }
    const AbelianGroup& target() const { return target_; }

    std::size_t apply_index(elt_t q, std::size_t i) const { return table_[q * target_.order() + i]; }

    AbelianGroup::Elem apply(elt_t q, const AbelianGroup::Elem& x) const {
        return target_.element(apply_index(q, target_.index_of(x)));
    }

    /// Elements of the target fixed by tau; always a subgroup of the target.
    std::vector<AbelianGroup::Elem> fixed_points(elt_t tau) const {
        std::vector<AbelianGroup::Elem> out;
        for (std::size_t i = 0; i < target_.order(); ++i)
            if (apply_index(tau, i) == i) out.push_back(target_.element(i));
        return out;
    }

    /// Kernel of the action: actor elements acting as the identity.
    EltSet kernel() const {
        EltSet out;
        for (elt_t q = 0; q < actor_->order(); ++q) {
            bool trivial = true;
            for (std::size_t i = 0; i < target_.order() && trivial; ++i)
                trivial = apply_index(q, i) == i;
            if (trivial) out.push_back(q);
        }
        return out;
    }

    bool is_faithful() const { return kernel().size() == 1; }

private:
    void verify() const {
        const std::size_t m = target_.order();
        for (std::size_t i = 0; i < m; ++i)
            if (apply_index(actor_->identity(), i) != i)
                throw Error("GroupAction: identity does not act trivially");
        for (elt_t a = 0; a < actor_->order(); ++a)
            for (elt_t b = 0; b < actor_->order(); ++b)
                for (std::size_t i = 0; i < m; ++i)
                    if (apply_index(actor_->mul(a, b), i) != apply_index(a, apply_index(b, i)))
                        throw Error("GroupAction: compatibility failure");
        // Automorphism check: each actor element preserves addition.
        for (elt_t a = 0; a < actor_->order(); ++a)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    auto sum = target_.index_of(target_.add(target_.element(i), target_.element(j)));
                    auto lhs = apply_index(a, sum);
                    auto rhs = target_.index_of(
                        target_.add(target_.element(apply_index(a, i)), target_.element(apply_index(a, j))));
                    if (lhs != rhs) throw Error("GroupAction: not by automorphisms");
                }
    }

    const FiniteGroup* actor_;
    AbelianGroup target_;
    std::vector<elt_t> table_;
};

/// Character tuple of the composite m -> chi(f(m)) where f is an
/// automorphism given elementwise; used to push actions to dual groups.
inline AbelianGroup::Elem pull_back_character(
    const AbelianGroup& a, const AbelianGroup::Elem& chi,
    const std::function<AbelianGroup::Elem(const AbelianGroup::Elem&)>& f) {
    const auto& d = a.factors();
    const unsigned long n = a.exponent();
    AbelianGroup::Elem out(d.size());
    Character c(a, chi, n);
    for (std::size_t j = 0; j < d.size(); ++j) {
        AbelianGroup::Elem gen = a.zero();
        gen[j] = 1;
        unsigned long v = c.eval(f(gen)).exponent;  // value = zeta_n^v on generator j
        if (v * d[j] % n != 0) throw Error("pull_back_character: value order exceeds factor");
        out[j] = static_cast<unsigned>(v * d[j] / n % d[j]);
    }
    return out;
}

/// The dual action of G on the characters of a normal abelian subgroup:
/// (g |> nu)(n) = nu(g^{-1} n g).
inline GroupAction dual_action(const FiniteGroup& g, const AbelianSubgroup& n) {
    if (!is_normal(g, n.sorted_elements())) throw Error("dual_action: subgroup not normal");
    AbelianGroup dual = dual_group(n.structure());
    return GroupAction(g, dual, [&](elt_t x, const AbelianGroup::Elem& chi) {
        return pull_back_character(n.structure(), chi, [&](const AbelianGroup::Elem& m) {
            return n.tuple_of(g.conj(g.inv(x), n.element(m)));
        });
    });
}

/// Dual of an abstract action of Q on A: (q |> chi)(a) = chi(q^{-1} |> a).
inline GroupAction dual_of_action(const GroupAction& act) {
    const AbelianGroup a = act.target();
    return GroupAction(act.actor(), dual_group(a), [&](elt_t q, const AbelianGroup::Elem& chi) {
        return pull_back_character(a, chi, [&](const AbelianGroup::Elem& m) {
            return act.apply(act.actor().inv(q), m);
        });
    });
}

// ---------------------------------------------------------------------------
// Semidirect products N x| Q with N abelian.
// ---------------------------------------------------------------------------

struct SemidirectGroup {
    std::shared_ptr<FiniteGroup> group;
    AbelianGroup n_structure;
    std::vector<std::pair<elt_t, unsigned>> n_basis;  // embedded N generators
    std::size_t n_order = 0;

    elt_t embed(std::size_t n_index, elt_t q) const { return static_cast<elt_t>(q * n_order + n_index); }
    std::size_t n_part(elt_t g) const { return g % n_order; }
    elt_t q_part(elt_t g) const { return static_cast<elt_t>(g / n_order); }

    AbelianSubgroup n_subgroup() const { return AbelianSubgroup::from_basis(*group, n_basis); }

    /// Coset representatives of N: the Q copy, identity first.
    std::vector<elt_t> q_representatives() const {
        std::vector<elt_t> out;
        out.reserve(group->order() / n_order);
        out.push_back(group->identity());
        for (elt_t q = 0; q < group->order() / n_order; ++q) {
            elt_t g = embed(n_structure.index_of(n_structure.zero()), q);
            if (g != group->identity()) out.push_back(g);
        }
        return out;
    }
};

/// (n1, q1)(n2, q2) = (n1 + q1 |> n2, q1 q2). Elements are indexed
/// q * |N| + n so N sits in the identity block and cosets are q-blocks.
inline SemidirectGroup semidirect_product(const AbelianGroup& n, const FiniteGroup& q,
                                          const GroupAction& act) {
    if (!(act.target() == n) || &act.actor() != &q)
        throw Error("semidirect_product: action does not match N and Q");
    const std::size_t nn = n.order(), nq = q.order();
    const std::size_t total = nn * nq;
    std::vector<elt_t> table(total * total);
    std::vector<std::string> labels(total);
    for (std::size_t g1 = 0; g1 < total; ++g1) {
        const std::size_t n1 = g1 % nn;
        const elt_t q1 = static_cast<elt_t>(g1 / nn);
        for (std::size_t g2 = 0; g2 < total; ++g2) {
            const std::size_t n2 = g2 % nn;
            const elt_t q2 = static_cast<elt_t>(g2 / nn);
            const std::size_t nprod =
                n.index_of(n.add(n.element(n1), n.element(act.apply_index(q1, n2))));
            table[g1 * total + g2] = static_cast<elt_t>(q.mul(q1, q2) * nn + nprod);
        }
        labels[g1] = "(" + n.str(n.element(n1)) + "," + q.label(q1) + ")";
    }
    SemidirectGroup out;
    out.group = std::make_shared<FiniteGroup>(std::move(table), total, std::move(labels));
    out.n_structure = n;
    out.n_order = nn;
    for (std::size_t j = 0; j < n.rank(); ++j) {
        auto gen = n.zero();
        gen[j] = 1;
        out.n_basis.emplace_back(out.embed(n.index_of(gen), q.identity()), n.factors()[j]);
    }
    return out;
}

/// Direct view of an abstract abelian group as a FiniteGroup.
inline std::shared_ptr<FiniteGroup> as_finite_group(const AbelianGroup& a) {
    const std::size_t n = a.order();
    std::vector<elt_t> table(n * n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            table[i * n + j] = static_cast<elt_t>(a.index_of(a.add(a.element(i), a.element(j))));
        labels[i] = a.str(a.element(i));
    }
    return std::make_shared<FiniteGroup>(std::move(table), n, std::move(labels));
}

inline GroupAction trivial_action(const FiniteGroup& q, const AbelianGroup& n) {
    return GroupAction(q, n, [](elt_t, const AbelianGroup::Elem& x) { return x; });
}

}  // namespace hopf
