#include <catch2/catch_amalgamated.hpp>

#include "hopforder/lattice.hpp"
#include "hopforder/matrix_group.hpp"

using namespace hopf;

namespace {

struct SlInstance {
    MatrixGroup q;
    SemidirectGroup sd;
    AbelianSubgroup nsub, l, p;
    IsoCocycle ic;
    Twist tw;
    StandardOrder x;
    unsigned prime;
};

SlInstance make_sl_instance(unsigned q) {
    const SmallField& f = SmallField::prime(q);
    SlInstance out;
    out.prime = q;
    out.q = matrix_group_closure(sl_generators(f, 2), 200);
    AbelianGroup n({q, q});
    GroupAction act(*out.q.group, n, [&](elt_t qi, const AbelianGroup::Elem& v) {
        auto w = out.q.elements[qi].apply({v[0], v[1]});
        return AbelianGroup::Elem{w[0], w[1]};
    });
    out.sd = semidirect_product(n, *out.q.group, act);
    out.nsub = out.sd.n_subgroup();
    // L = span(v_1) inside N; P = upper unitriangular subgroup of Q
    out.l = AbelianSubgroup::from_basis(*out.sd.group,
                                        {{out.sd.embed(n.index_of({1, 0}), out.q.group->identity()), q}});
    GFMat pm = GFMat::identity(f, 2);
    pm.at(0, 1) = 1;
    out.p = AbelianSubgroup::from_basis(*out.sd.group,
                                        {{out.sd.embed(n.index_of({0, 0}), out.q.index_of(pm)), q}});
    out.ic = cocycle_from_iso(out.l, out.p, q);
    out.tw = build_twist(out.ic.m, out.ic.omega);
    out.x = standard_order(*out.sd.group, out.nsub, q);
    return out;
}

}  // namespace

TEST_CASE("lattice construction and membership") {
    auto inst = make_sl_instance(2);
    const auto& g = *inst.sd.group;

    SECTION("the group basis lattice RG has the identity coordinate map") {
        std::vector<AlgElem> basis;
        for (elt_t i = 0; i < g.order(); ++i) basis.push_back(AlgElem::basis(g, i, 2));
        auto rg = lattice_from_basis(g, basis, 2);
        for (elt_t i = 0; i < g.order(); ++i) {
            auto rep = rg.contains(AlgElem::basis(g, i, 2));
            REQUIRE(rep.integral);
            for (std::size_t j = 0; j < g.order(); ++j) {
                if (j == i)
                    REQUIRE(rep.coordinates[j].is_one());
                else
                    REQUIRE(rep.coordinates[j].is_zero());
            }
        }
    }
    SECTION("idempotent basis of KN has the character table as coordinates") {
        // coordinates of a group element n over {e_nu} are the values nu(n)
        auto chars = inst.nsub.characters(2);
        std::vector<AlgElem> eb;
        for (const auto& nu : chars) eb.push_back(idempotent(inst.nsub, nu, 2));
        // complete to a basis of KG with the non-N group elements
        std::vector<AlgElem> basis = eb;
        for (elt_t i = 0; i < g.order(); ++i)
            if (!inst.nsub.contains(i)) basis.push_back(AlgElem::basis(g, i, 2));
        auto lat = lattice_from_basis(g, basis, 2);
        for (elt_t x : inst.nsub.elements()) {
            auto rep = lat.contains(AlgElem::basis(g, x, 2));
            REQUIRE(rep.in_span);
            for (std::size_t j = 0; j < chars.size(); ++j)
                REQUIRE(rep.coordinates[j] ==
                        CycNumber::from_root(chars[j].eval(inst.nsub.tuple_of(x))));
        }
    }
    SECTION("dependent lists are rejected") {
        std::vector<AlgElem> basis;
        for (elt_t i = 0; i < g.order() - 1; ++i) basis.push_back(AlgElem::basis(g, i, 2));
        basis.push_back(AlgElem::basis(g, 0, 2) + AlgElem::basis(g, 1, 2));
        REQUIRE_THROWS_AS(lattice_from_basis(g, basis, 2), Error);
    }
}

TEST_CASE("standard orders") {
    auto inst = make_sl_instance(2);
    const auto& g = *inst.sd.group;

    REQUIRE(inst.x.lattice.dim() == 24);
    REQUIRE(inst.x.representatives.size() == 6);

    SECTION("basis elements and integral combinations are members") {
        for (const auto& b : inst.x.lattice.basis()) REQUIRE(inst.x.lattice.contains(b).integral);
        auto half = make_rational(1, 2) * inst.x.lattice.basis()[3];
        auto rep = inst.x.lattice.contains(half);
        REQUIRE(rep.in_span);
        REQUIRE_FALSE(rep.integral);
        REQUIRE(rep.first_violation.has_value());
    }
    SECTION("group elements expand integrally in the e_nu q basis") {
        for (elt_t x = 0; x < g.order(); ++x)
            REQUIRE(inst.x.lattice.contains(AlgElem::basis(g, x, 2)).integral);
    }
    SECTION("tensor membership") {
        const auto& lat = inst.x.lattice;
        auto t = TensorElem::pure(lat.basis()[2], lat.basis()[17]);
        REQUIRE(lat.tensor_contains(t).integral);
        auto bad = CycNumber(make_rational(1, 2), 2) * t;
        auto rep = lat.tensor_contains(bad);
        REQUIRE(rep.in_span);
        REQUIRE_FALSE(rep.integral);
        REQUIRE(rep.first_violation.has_value());
        REQUIRE(lat.tensor_contains(inst.tw.j).integral);
        REQUIRE(lat.tensor_contains(inst.tw.j_inv).integral);
    }
}

TEST_CASE("Hopf order verification") {
    auto inst = make_sl_instance(2);
    const auto& g = *inst.sd.group;

    SECTION("RG is an untwisted Hopf order") {
        std::vector<AlgElem> basis;
        for (elt_t i = 0; i < g.order(); ++i) basis.push_back(AlgElem::basis(g, i, 2));
        auto rg = lattice_from_basis(g, basis, 2);
        auto cert = verify_hopf_order(rg);
        REQUIRE(cert.pass());
    }
    SECTION("RG fails twist containment for a nontrivial twist") {
        std::vector<AlgElem> basis;
        for (elt_t i = 0; i < g.order(); ++i) basis.push_back(AlgElem::basis(g, i, 2));
        auto rg = lattice_from_basis(g, basis, 2);
        auto cert = verify_hopf_order(rg, &inst.tw);
        REQUIRE_FALSE(cert.twist_containment);
        REQUIRE_FALSE(cert.pass());
    }
    SECTION("the standard order is a Hopf order of the twisted algebra") {
        auto cert = verify_hopf_order(inst.x.lattice, &inst.tw);
        CAPTURE(cert.witness);
        REQUIRE(cert.unit);
        REQUIRE(cert.product_closure);
        REQUIRE(cert.coproduct_closure);
        REQUIRE(cert.counit_integral);
        REQUIRE(cert.antipode_closure);
        REQUIRE(cert.twist_containment);
    }
    SECTION("parallel verification is deterministic") {
        auto cert1 = verify_hopf_order(inst.x.lattice, &inst.tw, 1);
        auto cert4 = verify_hopf_order(inst.x.lattice, &inst.tw, 4);
        REQUIRE(cert1.pass() == cert4.pass());
        REQUIRE(cert1.witness == cert4.witness);
    }
    SECTION("scaling one basis idempotent breaks closure") {
        auto basis = inst.x.lattice.basis();
        basis[1] = make_rational(2, 1) * basis[1];  // 2 e_nu for one nu != eps
        auto scaled = lattice_from_basis(g, basis, 2);
        auto cert = verify_hopf_order(scaled, &inst.tw);
        REQUIRE_FALSE(cert.pass());
    }
}

TEST_CASE("character integrality against the dual order") {
    auto inst = make_sl_instance(2);
    const auto& g = *inst.sd.group;

    SECTION("the counit lies in the dual of any Hopf order") {
        REQUIRE(character_integrality(inst.x.lattice, Functional::counit_functional(g, 2)));
    }
    SECTION("regular trace over |G|") {
        // tr L_x / |G| takes the value (coefficient of 1 in x); on RG all
        // values are integral, on the standard order e_eps has value 1/|N|
        Functional reg(g, 2);
        for (elt_t i = 0; i < g.order(); ++i)
            reg.set_value(i, CycNumber(i == g.identity() ? 1 : 0, 2));
        std::vector<AlgElem> basis;
        for (elt_t i = 0; i < g.order(); ++i) basis.push_back(AlgElem::basis(g, i, 2));
        REQUIRE(character_integrality(lattice_from_basis(g, basis, 2), reg));
        REQUIRE_FALSE(character_integrality(inst.x.lattice, reg));
    }
}

TEST_CASE("minimal polynomials") {
    auto inst = make_sl_instance(2);
    const auto& g = *inst.sd.group;

    SECTION("group elements satisfy x^n - 1") {
        for (elt_t x : {elt_t(3), elt_t(7), elt_t(11)}) {
            auto mu = min_poly(AlgElem::basis(g, x, 2));
            REQUIRE(mu.size() == g.elem_order(x) + 1);
            for (const auto& c : mu) REQUIRE(c.is_integral());
            REQUIRE(is_integral_element(AlgElem::basis(g, x, 2)));
        }
    }
    SECTION("idempotents satisfy x^2 - x") {
        auto e = idempotent(inst.nsub, inst.nsub.characters(2)[1], 2);
        auto mu = min_poly(e);
        REQUIRE(mu.size() == 3);
        REQUIRE(mu[0].is_zero());
        REQUIRE(mu[1] == CycNumber(-1, 2));
        REQUIRE(mu[2].is_one());
        REQUIRE(is_integral_element(e));
    }
    SECTION("a scaled idempotent is not integral") {
        auto e = idempotent(inst.nsub, inst.nsub.characters(2)[1], 2);
        auto x = make_rational(1, 2) * e;
        REQUIRE_FALSE(is_integral_element(x));
    }
    SECTION("membership in a verified order implies integrality") {
        for (const auto& b : inst.x.lattice.basis()) REQUIRE(is_integral_element(b));
    }
}

TEST_CASE("intersection with Hopf subalgebras") {
    auto inst = make_sl_instance(2);
    const auto& g = *inst.sd.group;

    SECTION("A = KG returns X itself") {
        std::vector<AlgElem> span;
        for (elt_t i = 0; i < g.order(); ++i) span.push_back(AlgElem::basis(g, i, 2));
        auto inter = intersect_subalgebra(inst.x.lattice, span);
        REQUIRE(inter.dim() == g.order());
        for (const auto& b : inter.basis()) REQUIRE(inst.x.lattice.contains(b).integral);
        for (const auto& b : inst.x.lattice.basis()) REQUIRE(inter.contains(b).integral);
    }
    SECTION("A = KN gives the span of the e_nu") {
        std::vector<AlgElem> span;
        for (elt_t x : inst.nsub.elements()) span.push_back(AlgElem::basis(g, x, 2));
        auto inter = intersect_subalgebra(inst.x.lattice, span);
        REQUIRE(inter.dim() == 4);
        for (const auto& nu : inst.nsub.characters(2))
            REQUIRE(inter.contains(idempotent(inst.nsub, nu, 2)).integral);
        // 1/2 (1 + n) is in the rational span but not in the intersection
        auto e = make_rational(1, 2) *
                 (AlgElem::unit(g, 2) + AlgElem::basis(g, inst.nsub.element({1, 0}), 2));
        // that element *is* an idempotent combination: e = e_00 + e_01 in
        // suitable labels, so pick a genuinely non-integral one instead
        auto bad = make_rational(1, 3) * AlgElem::unit(g, 2);
        REQUIRE(inter.contains(e).integral);
        REQUIRE_FALSE(inter.contains(bad).integral);
    }
    SECTION("A = K 1 gives R 1") {
        auto inter = intersect_subalgebra(inst.x.lattice, {AlgElem::unit(g, 2)});
        REQUIRE(inter.dim() == 1);
        auto rep = inter.contains(AlgElem::unit(g, 2));
        REQUIRE(rep.integral);
        REQUIRE_FALSE(inter.contains(make_rational(1, 2) * AlgElem::unit(g, 2)).integral);
        REQUIRE_FALSE(inter.contains(AlgElem::basis(g, 14, 2)).in_span);
    }
    SECTION("non-subalgebras are rejected") {
        // the span of a single non-idempotent group element (no unit)
        REQUIRE_THROWS_AS(intersect_subalgebra(inst.x.lattice, {AlgElem::basis(g, 14, 2)}),
                          Error);
    }
}

TEST_CASE("standard order over F3 (conductor 3)") {
    auto inst = make_sl_instance(3);
    REQUIRE(inst.sd.group->order() == 216);
    REQUIRE(inst.x.lattice.dim() == 216);
    // spot-check membership and the twist containment
    REQUIRE(inst.x.lattice.contains(AlgElem::unit(*inst.sd.group, 3)).integral);
    REQUIRE(inst.x.lattice.tensor_contains(inst.tw.j).integral);
    REQUIRE(inst.x.lattice.tensor_contains(inst.tw.j_inv).integral);
}
