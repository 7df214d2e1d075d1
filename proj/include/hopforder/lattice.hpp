#pragma once

#include <thread>

#include "hopforder/twist.hpp"

namespace hopf {

namespace detail {

/// Deterministic parallel map: worker w handles indices congruent to w, so
/// results depend only on the index, never on scheduling.
template <class Fn>
void parallel_for(unsigned jobs, std::size_t count, Fn&& fn) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(count));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr first_error;
    std::mutex err_mtx;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mtx);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace detail

/// Incremental exact row echelon over K = Q(zeta_N) on sparse group-basis
/// vectors, tracking the transform back to inserted-vector coordinates.
/// Pivot rows are normalized monic; insertion order fixes all choices.
class EchelonSolver {
public:
    explicit EchelonSolver(unsigned long conductor) : n_(conductor) {}

    std::size_t rank() const { return rows_.size(); }

    /// If v is dependent on the inserted vectors, returns its coordinates
    /// over them (dense, by insertion index); otherwise inserts v.
    std::optional<std::vector<CycNumber>> insert(const AlgElem& v) {
        auto [residual, coords] = reduce(v);
        if (residual.is_zero()) return finish_coords(coords);
        Row row;
        row.pivot = residual.terms().begin()->first;
        CycNumber lead = residual.terms().begin()->second;
        CycNumber inv = lead.inverse();
        for (const auto& [g, c] : residual.terms()) row.entries.emplace(g, inv * c);
        // transform of the normalized row: inv * (e_k - sum coords)
        row.transform[inserted_] = inv;
        for (const auto& [j, c] : coords) {
            CycNumber scaled = inv * (-c);
            if (!scaled.is_zero()) row.transform.emplace(j, scaled);
        }
        pivot_row_.emplace(row.pivot, rows_.size());
        rows_.push_back(std::move(row));
        ++inserted_;
        return std::nullopt;
    }

    /// Coordinates of v over the inserted vectors, or nullopt if v is
    /// outside their span. Does not modify the solver.
    std::optional<std::vector<CycNumber>> coordinates(const AlgElem& v) const {
        auto [residual, coords] = reduce(v);
        if (!residual.is_zero()) return std::nullopt;
        return finish_coords(coords);
    }

    std::size_t inserted_count() const { return inserted_; }

private:
    struct Row {
        elt_t pivot = 0;
        std::map<elt_t, CycNumber> entries;              // monic at pivot
        std::map<std::size_t, CycNumber> transform;      // over inserted vectors
    };

    std::pair<AlgElem, std::map<std::size_t, CycNumber>> reduce(const AlgElem& v) const {
        AlgElem work = v;
        std::map<std::size_t, CycNumber> coords;
        while (!work.is_zero()) {
            elt_t lead = work.terms().begin()->first;
            auto it = pivot_row_.find(lead);
            if (it == pivot_row_.end()) break;
            const Row& row = rows_[it->second];
            CycNumber c = work.terms().begin()->second;
            for (const auto& [g, rc] : row.entries) work.add_term(g, -(c * rc));
            for (const auto& [j, tc] : row.transform) {
                auto [cit, inserted] = coords.emplace(j, c * tc);
                if (!inserted) cit->second += c * tc;
            }
        }
        return {std::move(work), std::move(coords)};
    }

    std::vector<CycNumber> finish_coords(const std::map<std::size_t, CycNumber>& coords) const {
        std::vector<CycNumber> out(inserted_, CycNumber(n_));
        for (const auto& [j, c] : coords)
            if (!c.is_zero()) out[j] = c;
        return out;
    }

    unsigned long n_;
    std::size_t inserted_ = 0;
    std::vector<Row> rows_;
    std::unordered_map<elt_t, std::size_t> pivot_row_;
};

// ---------------------------------------------------------------------------
// Lattices (R-orders given by a K-basis).
// ---------------------------------------------------------------------------

struct MembershipReport {
    std::string description;
    bool in_span = false;
    bool integral = false;
    std::vector<CycNumber> coordinates;
    std::optional<std::size_t> first_violation;
};

struct TensorMembershipReport {
    std::string description;
    bool in_span = false;
    bool integral = false;
    std::size_t nonzero_coordinates = 0;
    std::optional<std::pair<std::size_t, std::size_t>> first_violation;
};

/// An R-lattice inside a subspace of KG, given by a K-independent basis of
/// AlgElems. Membership reduces against a cached echelon form of the basis.
/// A full lattice (dim = |G|) is the spec's order case; smaller dimensions
/// arise as intersections with subalgebras.
class Lattice {
public:
    Lattice() = default;

    Lattice(const FiniteGroup& g, std::vector<AlgElem> basis, unsigned long conductor,
            bool require_full = true)
        : g_(&g), n_(conductor), basis_(std::move(basis)), solver_(conductor) {
        if (require_full && basis_.size() != g.order())
            throw Error("Lattice: basis size must equal |G|");
        for (const auto& b : basis_) {
            if (&b.group() != &g || b.conductor() != n_) throw Error("Lattice: mixed basis");
            if (solver_.insert(b)) throw Error("Lattice: basis is linearly dependent");
        }
    }

    const FiniteGroup& group() const { return *g_; }
    unsigned long conductor() const { return n_; }
    const std::vector<AlgElem>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }

    MembershipReport contains(const AlgElem& x) const {
        if (&x.group() != g_) throw Error("Lattice: group mismatch");
        MembershipReport rep;
        auto coords = solver_.coordinates(x);
        if (!coords) return rep;
        rep.in_span = true;
        rep.coordinates = std::move(*coords);
        rep.integral = true;
        for (std::size_t i = 0; i < rep.coordinates.size(); ++i) {
            if (!rep.coordinates[i].is_integral()) {
                rep.integral = false;
                rep.first_violation = i;
                rep.description = "coordinate " + std::to_string(i) + " = " +
                                  rep.coordinates[i].str() + " not integral";
                break;
            }
        }
        return rep;
    }

    /// Tensor membership leg by leg: solve the left legs, then for each
    /// resulting row solve the right leg. Never materializes dim^2 data
    /// beyond the nonzero coordinates.
    TensorMembershipReport tensor_contains(const TensorElem& t) const {
        if (&t.group() != g_) throw Error("Lattice: group mismatch");
        TensorMembershipReport rep;
        // group terms by right element
        std::map<elt_t, AlgElem> by_right;
        for (const auto& [k, c] : t.terms()) {
            auto it = by_right.find(k.second);
            if (it == by_right.end()) it = by_right.emplace(k.second, AlgElem(*g_, n_)).first;
            it->second.add_term(k.first, c);
        }
        // left-leg coordinates: rows i -> AlgElem in the right leg
        std::map<std::size_t, AlgElem> rows;
        for (const auto& [h, left] : by_right) {
            auto coords = solver_.coordinates(left);
            if (!coords) return rep;  // in_span = false
            for (std::size_t i = 0; i < coords->size(); ++i) {
                if ((*coords)[i].is_zero()) continue;
                auto it = rows.find(i);
                if (it == rows.end()) it = rows.emplace(i, AlgElem(*g_, n_)).first;
                it->second.add_term(h, (*coords)[i]);
            }
        }
        rep.in_span = true;
        rep.integral = true;
        for (const auto& [i, right] : rows) {
            auto coords = solver_.coordinates(right);
            if (!coords) {
                rep.in_span = false;
                rep.integral = false;
                return rep;
            }
            for (std::size_t j = 0; j < coords->size(); ++j) {
                if ((*coords)[j].is_zero()) continue;
                ++rep.nonzero_coordinates;
                if (!(*coords)[j].is_integral() && rep.integral) {
                    rep.integral = false;
                    rep.first_violation = {i, j};
                    rep.description = "tensor coordinate (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") = " + (*coords)[j].str() +
                                      " not integral";
                }
            }
        }
        return rep;
    }

    const EchelonSolver& solver() const { return solver_; }

private:
    const FiniteGroup* g_ = nullptr;
    unsigned long n_ = 1;
    std::vector<AlgElem> basis_;
    EchelonSolver solver_{1};
};

inline Lattice lattice_from_basis(const FiniteGroup& g, std::vector<AlgElem> basis,
                                  unsigned long conductor) {
    return Lattice(g, std::move(basis), conductor, /*require_full=*/true);
}

/// The standard order: R-span of {e_nu^N q} over a normal abelian subgroup
/// N and coset representatives q (identity first). Basis order is
/// representative-major, character-minor.
struct StandardOrder {
    Lattice lattice;
    AbelianSubgroup n;
    std::vector<elt_t> representatives;
    unsigned long conductor = 1;

    std::size_t basis_index(std::size_t rep_idx, std::size_t nu_idx) const {
        return rep_idx * n.order() + nu_idx;
    }
};

inline StandardOrder standard_order(const FiniteGroup& g, const AbelianSubgroup& n,
                                    unsigned long conductor) {
    if (!is_normal(g, n.sorted_elements())) throw Error("standard_order: N not normal");
    StandardOrder out;
    out.n = n;
    out.conductor = conductor;
    out.representatives = coset_representatives(g, n.sorted_elements());
    std::vector<AlgElem> basis;
    basis.reserve(g.order());
    auto chars = n.characters(conductor);
    std::vector<AlgElem> idems;
    idems.reserve(chars.size());
    for (const auto& nu : chars) idems.push_back(idempotent(n, nu, conductor));
    for (elt_t q : out.representatives)
        for (const auto& e : idems) basis.push_back(e * AlgElem::basis(g, q, conductor));
    out.lattice = Lattice(g, std::move(basis), conductor);
    return out;
}

// ---------------------------------------------------------------------------
// Hopf order verification.
// ---------------------------------------------------------------------------

struct HopfOrderCertificate {
    bool unit = false;
    bool product_closure = false;
    bool coproduct_closure = false;
    bool counit_integral = false;
    bool antipode_closure = false;
    bool twist_containment = true;  // vacuous when no twist is supplied
    std::string witness;

    bool pass() const {
        return unit && product_closure && coproduct_closure && counit_integral &&
               antipode_closure && twist_containment;
    }
};

/// Closure of the lattice under the (possibly twisted) Hopf operations,
/// checked on basis elements and basis pairs; R-linearity makes that
/// sufficient. With a twist, additionally J^{+-1} in X (x) X.
inline HopfOrderCertificate verify_hopf_order(const Lattice& x, const Twist* tw = nullptr,
                                              unsigned jobs = 1) {
    HopfOrderCertificate cert;
    const FiniteGroup& g = x.group();
    const unsigned long n = x.conductor();
    const std::size_t d = x.dim();
    if (d != g.order()) throw Error("verify_hopf_order: lattice is not full rank in KG");

    cert.unit = x.contains(AlgElem::unit(g, n)).integral;
    if (!cert.unit) cert.witness = "1 not in X";

    // products b_i b_j
    {
        std::vector<std::string> fail(d);
        detail::parallel_for(jobs, d, [&](std::size_t i) {
            for (std::size_t j = 0; j < d; ++j) {
                auto rep = x.contains(x.basis()[i] * x.basis()[j]);
                if (!rep.integral) {
                    fail[i] = "b" + std::to_string(i) + " * b" + std::to_string(j) + ": " +
                              rep.description;
                    return;
                }
            }
        });
        cert.product_closure = true;
        for (const auto& f : fail)
            if (!f.empty()) {
                cert.product_closure = false;
                if (cert.witness.empty()) cert.witness = f;
                break;
            }
    }

    // coproduct, counit, antipode per basis element
    {
        std::vector<std::string> fail(d);
        detail::parallel_for(jobs, d, [&](std::size_t i) {
            const AlgElem& b = x.basis()[i];
            TensorElem delta = tw ? twisted_coproduct(*tw, b) : coproduct(b);
            auto trep = x.tensor_contains(delta);
            if (!trep.integral) {
                fail[i] = "Delta(b" + std::to_string(i) + "): " + trep.description;
                return;
            }
            if (!counit(b).is_integral()) {
                fail[i] = "eps(b" + std::to_string(i) + ") not integral";
                return;
            }
            AlgElem s = tw ? twisted_antipode(*tw, b) : antipode(b);
            auto srep = x.contains(s);
            if (!srep.integral) {
                fail[i] = "S(b" + std::to_string(i) + "): " + srep.description;
                return;
            }
        });
        cert.coproduct_closure = cert.counit_integral = cert.antipode_closure = true;
        for (const auto& f : fail)
            if (!f.empty()) {
                if (f.find("Delta") == 0) cert.coproduct_closure = false;
                else if (f.find("eps") == 0) cert.counit_integral = false;
                else cert.antipode_closure = false;
                if (cert.witness.empty()) cert.witness = f;
            }
    }

    if (tw) {
        auto jrep = x.tensor_contains(tw->j);
        auto jinvrep = x.tensor_contains(tw->j_inv);
        cert.twist_containment = jrep.integral && jinvrep.integral;
        if (!cert.twist_containment && cert.witness.empty())
            cert.witness = "J or J^{-1} not in X (x) X: " +
                           (jrep.integral ? jinvrep.description : jrep.description);
    }
    return cert;
}

/// chi lies in the dual order X* iff chi(b_i) is integral on every basis
/// element.
inline bool character_integrality(const Lattice& x, const Functional& chi) {
    for (const auto& b : x.basis())
        if (!chi.eval(b).is_integral()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Minimal polynomials and element integrality.
// ---------------------------------------------------------------------------

/// Minimal polynomial of x as an algebra element (equivalently of left
/// multiplication by x): Krylov iteration from the unit, which is a cyclic
/// vector for K[x], so the first linear dependence is the minimal
/// polynomial. Little-endian coefficients, monic.
inline std::vector<CycNumber> min_poly(const AlgElem& x) {
    const unsigned long n = x.conductor();
    EchelonSolver solver(n);
    std::vector<AlgElem> powers;
    AlgElem cur = AlgElem::unit(x.group(), n);
    for (;;) {
        auto dep = solver.insert(cur);
        if (dep) {
            std::vector<CycNumber> mu(dep->size() + 1, CycNumber(n));
            for (std::size_t k = 0; k < dep->size(); ++k) mu[k] = -(*dep)[k];
            mu[dep->size()] = CycNumber(Rational(1), n);
            // certify mu(x) = 0 in the algebra
            AlgElem acc(x.group(), n);
            AlgElem pw = AlgElem::unit(x.group(), n);
            for (std::size_t k = 0; k < mu.size(); ++k) {
                acc += mu[k] * pw;
                if (k + 1 < mu.size()) pw *= x;
            }
            if (!acc.is_zero()) throw Error("min_poly: certificate failed");
            return mu;
        }
        powers.push_back(cur);
        cur = cur * x;
        if (powers.size() > x.group().order() + 1) throw Error("min_poly: no dependence found");
    }
}

/// x is integral over R iff its monic minimal polynomial has R-coefficients
/// (sound and complete since R is integrally closed in K).
inline bool is_integral_element(const AlgElem& x) {
    for (const auto& c : min_poly(x))
        if (!c.is_integral()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Exact intersection with a Hopf subalgebra.
// ---------------------------------------------------------------------------

namespace detail {

/// Kernel of an integer matrix (rows x cols) as a saturated Z-basis, via
/// column reduction with a companion identity.
inline std::vector<std::vector<Integer>> integer_kernel(std::vector<std::vector<Integer>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::vector<Integer>> comp(cols, std::vector<Integer>(cols, 0));
    for (std::size_t j = 0; j < cols; ++j) comp[j][j] = 1;
    std::vector<char> active(cols, 1);

    auto col_addmul = [&](std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t r = 0; r < rows; ++r) a[r][dst] += f * a[r][src];
        for (std::size_t r = 0; r < cols; ++r) comp[r][dst] += f * comp[r][src];
    };
    for (std::size_t r = 0; r < rows; ++r) {
        // Euclid across the active columns of row r.
        for (;;) {
            std::size_t nonzero = cols;
            std::size_t count = 0;
            for (std::size_t j = 0; j < cols; ++j) {
                if (!active[j] || a[r][j] == 0) continue;
                ++count;
                if (nonzero == cols || abs(a[r][j]) < abs(a[r][nonzero])) nonzero = j;
            }
            if (count <= 1) {
                if (count == 1) active[nonzero] = 0;
                break;
            }
            for (std::size_t j = 0; j < cols; ++j) {
                if (!active[j] || j == nonzero || a[r][j] == 0) continue;
                Integer f = a[r][j] / a[r][nonzero];
                col_addmul(j, nonzero, -f);
            }
        }
    }
    std::vector<std::vector<Integer>> kernel;
    for (std::size_t j = 0; j < cols; ++j) {
        if (!active[j]) continue;
        bool zero = true;
        for (std::size_t r = 0; r < rows; ++r)
            if (a[r][j] != 0) zero = false;
        if (!zero) throw Error("integer_kernel: reduction incomplete");
        std::vector<Integer> v(cols);
        for (std::size_t r = 0; r < cols; ++r) v[r] = comp[r][j];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace detail

/// X intersected with the Hopf subalgebra A spanned by the given set.
/// The spanning set is reduced to a K-basis a_1..a_k; closure of A under
/// product, coproduct, antipode and the unit is verified; the R-lattice
/// {c in K^k : sum c_j a_j in X} is computed exactly as a Z-lattice and an
/// R-basis extracted.
inline Lattice intersect_subalgebra(const Lattice& x, const std::vector<AlgElem>& spanning) {
    const FiniteGroup& g = x.group();
    const unsigned long n = x.conductor();
    const unsigned long phi = euler_phi(n);

    // independent K-basis of A
    EchelonSolver span(n);
    std::vector<AlgElem> abasis;
    for (const auto& a : spanning) {
        if (&a.group() != &g || a.conductor() != n) throw Error("intersect: mixed spanning set");
        if (!span.insert(a)) abasis.push_back(a);
    }
    const std::size_t k = abasis.size();
    if (k == 0) throw Error("intersect: empty subalgebra");

    // subalgebra closure checks
    {
        EchelonSolver check(n);
        for (const auto& a : abasis) check.insert(a);
        auto in_span = [&](const AlgElem& v) { return check.coordinates(v).has_value(); };
        if (!in_span(AlgElem::unit(g, n))) throw Error("intersect: A does not contain 1");
        for (const auto& a : abasis) {
            if (!in_span(antipode(a))) throw Error("intersect: A not closed under antipode");
            for (const auto& b : abasis)
                if (!in_span(a * b)) throw Error("intersect: A not closed under product");
            // coproduct closure leg by leg
            TensorElem delta = coproduct(a);
            std::map<elt_t, AlgElem> by_right;
            for (const auto& [key, c] : delta.terms()) {
                auto it = by_right.find(key.second);
                if (it == by_right.end()) it = by_right.emplace(key.second, AlgElem(g, n)).first;
                it->second.add_term(key.first, c);
            }
            std::map<std::size_t, AlgElem> rows;
            for (const auto& [h, left] : by_right) {
                auto coords = check.coordinates(left);
                if (!coords) throw Error("intersect: A not closed under coproduct");
                for (std::size_t i = 0; i < coords->size(); ++i) {
                    if ((*coords)[i].is_zero()) continue;
                    auto it = rows.find(i);
                    if (it == rows.end()) it = rows.emplace(i, AlgElem(g, n)).first;
                    it->second.add_term(h, (*coords)[i]);
                }
            }
            for (const auto& [i, right] : rows)
                if (!check.coordinates(right)) throw Error("intersect: A not closed under coproduct");
        }
    }

    // X-coordinates of the A-basis as a rational matrix: rows indexed by
    // (X-basis index, power-basis slot), columns by (A-basis index, slot).
    std::vector<std::vector<Rational>> m(x.dim() * phi, std::vector<Rational>(k * phi, Rational(0)));
    for (std::size_t j = 0; j < k; ++j) {
        for (unsigned long t = 0; t < phi; ++t) {
            AlgElem scaled = CycNumber::root_of_unity(static_cast<long>(t), n) * abasis[j];
            auto rep = x.contains(scaled);
            if (!rep.in_span) throw Error("intersect: A-basis element outside the span of X");
            const auto& coords = rep.coordinates;
            for (std::size_t i = 0; i < x.dim(); ++i)
                for (unsigned long s = 0; s < phi; ++s)
                    m[i * phi + s][j * phi + t] = coords[i].coeffs()[s];
        }
    }

    // common denominator and integer matrix
    Integer d = 1;
    for (const auto& row : m)
        for (const auto& e : row) d = lcm(d, e.get_den());
    std::vector<std::vector<Integer>> mi(m.size(), std::vector<Integer>(k * phi));
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m[r].size(); ++c) {
            Rational scaled = m[r][c] * Rational(d);
            mi[r][c] = scaled.get_num();
        }

    // denominator bound: |det| of an invertible kphi x kphi submatrix,
    // found by rational elimination with row pivoting.
    Integer det_bound;
    {
        std::vector<std::vector<Rational>> work = m;
        std::vector<std::size_t> pivot_rows;
        std::size_t col = 0;
        std::vector<char> used(work.size(), 0);
        Rational det(1);
        for (; col < k * phi; ++col) {
            std::size_t pr = work.size();
            for (std::size_t r = 0; r < work.size(); ++r)
                if (!used[r] && work[r][col] != 0) {
                    pr = r;
                    break;
                }
            if (pr == work.size()) throw Error("intersect: A-coordinates not full rank");
            used[pr] = 1;
            pivot_rows.push_back(pr);
            det *= work[pr][col];
            for (std::size_t r = 0; r < work.size(); ++r) {
                if (r == pr || work[r][col] == 0) continue;
                Rational f = work[r][col] / work[pr][col];
                for (std::size_t c2 = col; c2 < k * phi; ++c2) work[r][c2] -= f * work[pr][c2];
            }
        }
        // scale the rational det by d^{kphi} to bound the integer det
        Integer num = abs(det.get_num());
        Integer den = det.get_den();
        Integer dk = 1;
        for (std::size_t i = 0; i < k * phi; ++i) dk *= d;
        det_bound = num * dk / den;
        if (det_bound == 0) throw Error("intersect: zero determinant bound");
    }

    // Lattice {w integer : mi w = 0 mod d*det_bound}, via the kernel of
    // [mi | -dD I] projected to the w block; solutions are y = w / det_bound.
    Integer modulus = d * det_bound;
    const std::size_t wcols = k * phi, ucols = mi.size();
    std::vector<std::vector<Integer>> stacked(mi.size(), std::vector<Integer>(wcols + ucols, 0));
    for (std::size_t r = 0; r < mi.size(); ++r) {
        for (std::size_t c = 0; c < wcols; ++c) stacked[r][c] = mi[r][c];
        stacked[r][wcols + r] = -modulus;
    }
    auto kernel = detail::integer_kernel(std::move(stacked));

    // Z-generators of the intersection as elements of KG.
    std::vector<AlgElem> zgens;
    for (const auto& v : kernel) {
        AlgElem elem(g, n);
        for (std::size_t j = 0; j < k; ++j) {
            CycNumber cj(n);
            for (unsigned long t = 0; t < phi; ++t) {
                Rational coef = make_rational(v[j * phi + t], det_bound);
                cj += coef * CycNumber::root_of_unity(static_cast<long>(t), n);
            }
            elem += cj * abasis[j];
        }
        if (!elem.is_zero()) zgens.push_back(elem);
    }

    // Extract an R-basis: greedily take K-independent generators, then
    // certify that they R-span every generator.
    EchelonSolver pick(n);
    std::vector<AlgElem> rbasis;
    for (const auto& z : zgens) {
        if (rbasis.size() == k) break;
        if (!pick.insert(z)) rbasis.push_back(z);
    }
    if (rbasis.size() != k) throw Error("intersect: intersection has lower rank than A");
    Lattice result(g, rbasis, n, /*require_full=*/false);
    for (const auto& z : zgens) {
        if (!result.contains(z).integral)
            throw Error("intersect: intersection lattice is not free over the chosen basis");
    }
    return result;
}

}  // namespace hopf
