#pragma once

#include <deque>
#include <map>
#include <sstream>

#include "hopforder/gf.hpp"
#include "hopforder/group.hpp"

namespace hopf {

/// Dense square matrix over a SmallField, row-major element codes.
struct GFMat {
    const SmallField* field = nullptr;
    unsigned d = 0;
    std::vector<unsigned> a;

    GFMat() = default;
    GFMat(const SmallField& f, unsigned dim) : field(&f), d(dim), a(dim * dim, 0) {}

    static GFMat identity(const SmallField& f, unsigned dim) {
        GFMat m(f, dim);
        for (unsigned i = 0; i < dim; ++i) m.at(i, i) = 1;
        return m;
    }

    unsigned& at(unsigned i, unsigned j) { return a[i * d + j]; }
    unsigned at(unsigned i, unsigned j) const { return a[i * d + j]; }

    GFMat mul(const GFMat& o) const {
        GFMat out(*field, d);
        for (unsigned i = 0; i < d; ++i)
            for (unsigned k = 0; k < d; ++k) {
                unsigned aik = at(i, k);
                if (aik == 0) continue;
                for (unsigned j = 0; j < d; ++j)
                    out.at(i, j) = field->add(out.at(i, j), field->mul(aik, o.at(k, j)));
            }
        return out;
    }

    GFMat transpose() const {
        GFMat out(*field, d);
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = 0; j < d; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    std::vector<unsigned> apply(const std::vector<unsigned>& v) const {
        std::vector<unsigned> out(d, 0);
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = 0; j < d; ++j)
                out[i] = field->add(out[i], field->mul(at(i, j), v[j]));
        return out;
    }

    unsigned det() const {
        GFMat m = *this;
        unsigned result = 1;
        for (unsigned col = 0; col < d; ++col) {
            unsigned pivot = col;
            while (pivot < d && m.at(pivot, col) == 0) ++pivot;
            if (pivot == d) return 0;
            if (pivot != col) {
                for (unsigned j = 0; j < d; ++j) std::swap(m.at(pivot, j), m.at(col, j));
                result = field->neg(result);
            }
            result = field->mul(result, m.at(col, col));
            unsigned inv = field->inv(m.at(col, col));
            for (unsigned r = col + 1; r < d; ++r) {
                unsigned factor = field->mul(m.at(r, col), inv);
                if (factor == 0) continue;
                for (unsigned j = col; j < d; ++j)
                    m.at(r, j) = field->sub(m.at(r, j), field->mul(factor, m.at(col, j)));
            }
        }
        return result;
    }

    GFMat inverse() const {
        GFMat m = *this;
        GFMat inv = identity(*field, d);
        for (unsigned col = 0; col < d; ++col) {
            unsigned pivot = col;
            while (pivot < d && m.at(pivot, col) == 0) ++pivot;
            if (pivot == d) throw Error("GFMat: singular matrix");
            if (pivot != col)
                for (unsigned j = 0; j < d; ++j) {
                    std::swap(m.at(pivot, j), m.at(col, j));
                    std::swap(inv.at(pivot, j), inv.at(col, j));
                }
            unsigned c = field->inv(m.at(col, col));
            for (unsigned j = 0; j < d; ++j) {
                m.at(col, j) = field->mul(c, m.at(col, j));
                inv.at(col, j) = field->mul(c, inv.at(col, j));
            }
            for (unsigned r = 0; r < d; ++r) {
                if (r == col || m.at(r, col) == 0) continue;
                unsigned factor = m.at(r, col);
                for (unsigned j = 0; j < d; ++j) {
                    m.at(r, j) = field->sub(m.at(r, j), field->mul(factor, m.at(col, j)));
                    inv.at(r, j) = field->sub(inv.at(r, j), field->mul(factor, inv.at(col, j)));
                }
            }
        }
        return inv;
    }

    bool operator==(const GFMat& o) const { return d == o.d && a == o.a; }
    bool operator<(const GFMat& o) const { return a < o.a; }

    std::string label() const {
        std::ostringstream os;
        os << "[";
        for (unsigned i = 0; i < d; ++i) {
            if (i) os << ";";
            for (unsigned j = 0; j < d; ++j) os << (j ? " " : "") << at(i, j);
        }
        os << "]";
        return os.str();
    }
};

/// A matrix group realized as a FiniteGroup plus the matrix of each element.
struct MatrixGroup {
    std::shared_ptr<FiniteGroup> group;
    std::vector<GFMat> elements;  // by group element index
    std::map<std::vector<unsigned>, elt_t> index;

    elt_t index_of(const GFMat& m) const {
        auto it = index.find(m.a);
        if (it == index.end()) throw Error("MatrixGroup: matrix not in group");
        return it->second;
    }
    bool contains(const GFMat& m) const { return index.count(m.a) > 0; }
};

/// Breadth-first closure of a generator list under multiplication, starting
/// from the identity and visiting generators in sorted order so the element
/// enumeration is deterministic. Exceeding the cap is a desk-scale error.
inline MatrixGroup matrix_group_closure(std::vector<GFMat> gens, std::size_t cap) {
    if (gens.empty()) throw Error("matrix_group_closure: no generators");
    const SmallField& f = *gens.front().field;
    const unsigned d = gens.front().d;
    for (const auto& g : gens) {
        if (g.field != &f || g.d != d) throw Error("matrix_group_closure: mixed generators");
        if (g.det() == 0) throw Error("matrix_group_closure: singular generator");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    MatrixGroup out;
    GFMat id = GFMat::identity(f, d);
    out.elements.push_back(id);
    out.index.emplace(id.a, 0);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            GFMat next = out.elements[i].mul(g);
            if (out.index.count(next.a)) continue;
            if (out.elements.size() >= cap)
                throw Error("matrix_group_closure: desk-scale cap exceeded");
            out.index.emplace(next.a, static_cast<elt_t>(out.elements.size()));
            queue.push_back(out.elements.size());
            out.elements.push_back(std::move(next));
        }
    }

    const std::size_t n = out.elements.size();
    std::vector<elt_t> table(n * n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = out.elements[i].label();
        for (std::size_t j = 0; j < n; ++j) {
            auto it = out.index.find(out.elements[i].mul(out.elements[j]).a);
            if (it == out.index.end()) throw Error("matrix_group_closure: not closed");
            table[i * n + j] = it->second;
        }
    }
    out.group = std::make_shared<FiniteGroup>(std::move(table), n, std::move(labels));
    return out;
}

// ---------------------------------------------------------------------------
// Generator sets for the classical families.
// ---------------------------------------------------------------------------

/// All elementary transvections Id + alpha E_ij, which generate SL_d(q).
inline std::vector<GFMat> sl_generators(const SmallField& f, unsigned d) {
    std::vector<GFMat> gens;
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) {
            if (i == j) continue;
            for (unsigned alpha = 1; alpha < f.size(); ++alpha) {
                GFMat m = GFMat::identity(f, d);
                m.at(i, j) = alpha;
                gens.push_back(std::move(m));
            }
        }
    return gens;
}

/// SL generators plus diag(mu, 1, ..., 1) for a primitive mu.
inline std::vector<GFMat> gl_generators(const SmallField& f, unsigned d) {
    auto gens = sl_generators(f, d);
    if (f.size() > 2) {
        GFMat m = GFMat::identity(f, d);
        m.at(0, 0) = f.primitive_element();
        gens.push_back(std::move(m));
    }
    return gens;
}

/// The standard symplectic form (0 Id; -Id 0) on F_q^{2n}.
inline GFMat symplectic_form(const SmallField& f, unsigned n) {
    GFMat j(f, 2 * n);
    for (unsigned i = 0; i < n; ++i) {
        j.at(i, n + i) = 1;
        j.at(n + i, i) = f.neg(1);
    }
    return j;
}

inline bool is_symplectic(const GFMat& m, const GFMat& form) {
    return m.transpose().mul(form).mul(m) == form;
}

/// Symplectic transvections x -> x + beta <x, v> v, which generate Sp_2n(q).
inline std::vector<GFMat> sp_generators(const SmallField& f, unsigned n) {
    const unsigned d = 2 * n;
    GFMat form = symplectic_form(f, n);
    std::vector<GFMat> gens;
    std::vector<unsigned> v(d, 0);
    const std::size_t total = [&] {
        std::size_t t = 1;
        for (unsigned i = 0; i < d; ++i) t *= f.size();
        return t;
    }();
    for (std::size_t code = 1; code < total; ++code) {
        std::size_t c = code;
        for (unsigned i = 0; i < d; ++i) {
            v[i] = static_cast<unsigned>(c % f.size());
            c /= f.size();
        }
        auto jv = form.apply(v);
        for (unsigned beta = 1; beta < f.size(); ++beta) {
            GFMat m = GFMat::identity(f, d);
            for (unsigned i = 0; i < d; ++i)
                for (unsigned j = 0; j < d; ++j)
                    m.at(i, j) = f.add(m.at(i, j), f.mul(beta, f.mul(v[i], jv[j])));
            if (!is_symplectic(m, form)) throw Error("sp_generators: transvection not symplectic");
            gens.push_back(std::move(m));
        }
    }
    return gens;
}

/// Permutation matrix over F_2 (or any field) for a permutation of 0..d-1.
inline GFMat permutation_matrix(const SmallField& f, const std::vector<unsigned>& perm) {
    GFMat m(f, static_cast<unsigned>(perm.size()));
    for (unsigned j = 0; j < perm.size(); ++j) m.at(perm[j], j) = 1;
    return m;
}

// ---------------------------------------------------------------------------
// The multiplication embedding F_{q^n} -> M_n(F_q) and its trace-orthogonal
// variant with symmetric images.
// ---------------------------------------------------------------------------

/// Matrix of multiplication by `a` on F_{q^n} in the given F_q-basis
/// (basis entries are extension-field codes).
inline GFMat multiplication_matrix(const SmallField& ext, const std::vector<unsigned>& basis,
                                   unsigned a) {
    const SmallField& base = *ext.base();
    const unsigned n = ext.degree_over_base();
    if (basis.size() != n) throw Error("multiplication_matrix: wrong basis size");
    // Change of basis: columns of B are the digit vectors of the basis.
    GFMat b(base, n);
    for (unsigned j = 0; j < n; ++j)
        for (unsigned i = 0; i < n; ++i) b.at(i, j) = ext.digit(basis[j], i);
    GFMat binv = b.inverse();
    GFMat out(base, n);
    for (unsigned j = 0; j < n; ++j) {
        unsigned prod = ext.mul(a, basis[j]);
        std::vector<unsigned> digits(n);
        for (unsigned i = 0; i < n; ++i) digits[i] = ext.digit(prod, i);
        auto coords = binv.apply(digits);
        for (unsigned i = 0; i < n; ++i) out.at(i, j) = coords[i];
    }
    return out;
}

/// The polynomial basis 1, theta, ..., theta^{n-1} of F_{q^n} over F_q.
inline std::vector<unsigned> polynomial_basis(const SmallField& ext) {
    const unsigned n = ext.degree_over_base();
    std::vector<unsigned> out(n);
    std::vector<unsigned> digits(n, 0);
    for (unsigned j = 0; j < n; ++j) {
        std::fill(digits.begin(), digits.end(), 0);
        digits[j] = 1;
        out[j] = ext.from_digits(digits);
    }
    return out;
}

/// An orthogonal basis for the trace form T(x, y) = Tr_{F_{q^n}/F_q}(xy),
/// found by backtracking over vectors with T(v, v) != 0. The form is
/// symmetric, non-degenerate, and not alternating, so a basis exists.
inline std::vector<unsigned> trace_orthogonal_basis(const SmallField& ext) {
    const SmallField& base = *ext.base();
    const unsigned n = ext.degree_over_base();
    if (n == 1) throw Error("trace_orthogonal_basis: needs a proper extension");
    auto tform = [&](unsigned x, unsigned y) { return ext.trace_to_base(ext.mul(x, y)); };

    // Enumerate a subspace (given by a spanning list) in deterministic order.
    std::function<bool(std::vector<unsigned>, std::vector<unsigned>&)> solve =
        [&](std::vector<unsigned> space, std::vector<unsigned>& acc) -> bool {
        if (space.empty()) return true;
        // All nonzero vectors of the span, by ascending combination code.
        std::vector<unsigned> span;
        std::size_t total = 1;
        for (std::size_t i = 0; i < space.size(); ++i) total *= base.size();
        for (std::size_t code = 1; code < total; ++code) {
            std::size_t c = code;
            unsigned v = 0;
            for (std::size_t i = 0; i < space.size(); ++i) {
                unsigned coef = static_cast<unsigned>(c % base.size());
                c /= base.size();
                if (coef != 0) {
                    // scalar * vector: lift the base scalar into ext
                    std::vector<unsigned> sc(ext.degree_over_base(), 0);
                    sc[0] = coef;
                    v = ext.add(v, ext.mul(ext.from_digits(sc), space[i]));
                }
            }
            if (v != 0) span.push_back(v);
        }
        std::sort(span.begin(), span.end());
        span.erase(std::unique(span.begin(), span.end()), span.end());
        for (unsigned v : span) {
            if (tform(v, v) == 0) continue;
            // Orthogonal complement of v inside the current space.
            std::vector<unsigned> comp;
            unsigned tvv_inv = base.inv(tform(v, v));
            for (unsigned u : space) {
                unsigned coef = base.mul(tform(u, v), tvv_inv);
                std::vector<unsigned> sc(ext.degree_over_base(), 0);
                sc[0] = coef;
                unsigned proj = ext.sub(u, ext.mul(ext.from_digits(sc), v));
                if (proj != 0) comp.push_back(proj);
            }
            // Reduce comp to an independent list over F_q via Gauss on digits.
            std::vector<std::vector<unsigned>> rows;
            std::vector<unsigned> kept;
            for (unsigned u : comp) {
                std::vector<unsigned> digits(n);
                for (unsigned i = 0; i < n; ++i) digits[i] = ext.digit(u, i);
                auto red = digits;
                for (const auto& r : rows) {
                    unsigned lead = 0;
                    while (lead < n && r[lead] == 0) ++lead;
                    if (lead < n && red[lead] != 0) {
                        unsigned factor = base.mul(red[lead], base.inv(r[lead]));
                        for (unsigned i = 0; i < n; ++i)
                            red[i] = base.sub(red[i], base.mul(factor, r[i]));
                    }
                }
                bool nonzero = std::any_of(red.begin(), red.end(), [](unsigned x) { return x != 0; });
                if (nonzero) {
                    rows.push_back(red);
                    kept.push_back(u);
                }
            }
            std::vector<unsigned> sub;
            if (solve(kept, sub)) {
                acc.clear();
                acc.push_back(v);
                acc.insert(acc.end(), sub.begin(), sub.end());
                return true;
            }
        }
        return false;
    };

    std::vector<unsigned> result;
    if (!solve(polynomial_basis(ext), result))
        throw Error("trace_orthogonal_basis: no orthogonal basis found");
    for (unsigned x : result)
        for (unsigned y : result)
            if (x != y && tform(x, y) != 0) throw Error("trace_orthogonal_basis: not orthogonal");
    return result;
}

}  // namespace hopf
