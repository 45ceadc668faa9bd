#include <doctest.h>

#include "qtgc/instances.hpp"

using namespace qtgc;

TEST_CASE("trivial builders validate for several grading groups") {
    CHECK(build_trivial(FinGroup::cyclic(1)).validated);
    CHECK(build_trivial(FinGroup::cyclic(2)).validated);
    CHECK(build_trivial(FinGroup::symmetric3()).validated);
}

TEST_CASE("graded line over Z2 with the sign cocycle") {
    CocycleTable w = cocycle_cyclic_root(2);
    CHECK(w.at(1, 1, 1) == Scalar::from_int(w.field, -1));
    CHECK(w.at(1, 1, 0).is_one());

    QuasiTuraevCoalgebra h = build_graded_line(FinGroup::cyclic(2), w);
    CHECK(h.validated);
    // q at the nontrivial degree is forced to -1
    CHECK(h.q_at(1)[0] == Scalar::from_int(h.field(), -1));
    CHECK(h.q_at(0)[0].is_one());
}

TEST_CASE("graded line over Z4 with the root-of-unity cocycle") {
    CocycleTable w = cocycle_cyclic_root(4); // order-8 field
    QuasiTuraevCoalgebra h = build_graded_line(FinGroup::cyclic(4), w);
    CHECK(h.validated);
    CHECK(h.field()->order() == 8);
}

TEST_CASE("cocycle pre-checks reject bad tables") {
    FinGroup z2 = FinGroup::cyclic(2);
    Field f = CycloField::cyclotomic(4);

    CocycleTable not_normalized = cocycle_trivial(z2, f);
    not_normalized.values[static_cast<std::size_t>((1 * 2 + 0) * 2 + 1)] =
        Scalar::from_int(f, -1); // omega(g, 1, g)
    CHECK_THROWS_AS(build_graded_line(z2, not_normalized), NotNormalized);

    CocycleTable not_cocycle = cocycle_trivial(z2, f);
    not_cocycle.values[static_cast<std::size_t>((1 * 2 + 1) * 2 + 0)] =
        Scalar::from_int(f, -1); // omega(g, g, 1): normalized in the middle slot
    CHECK_THROWS_AS(build_graded_line(z2, not_cocycle), NotACocycle);
}

TEST_CASE("graded line with the trivial cocycle equals the trivial instance") {
    FinGroup z2 = FinGroup::cyclic(2);
    Field f = CycloField::cyclotomic(4);
    QuasiTuraevCoalgebra a = build_graded_line(z2, cocycle_trivial(z2, f));
    QuasiTuraevCoalgebra b = build_trivial(z2, f);
    CHECK(a.structurally_equal(b));
}

TEST_CASE("constant group-algebra families validate") {
    CHECK(build_constant_hopf(FinGroup::cyclic(2), FinGroup::cyclic(2)).validated);
    CHECK(build_constant_hopf(FinGroup::symmetric3(), FinGroup::cyclic(2)).validated);
    QuasiTuraevCoalgebra h = build_constant_hopf(FinGroup::cyclic(2), FinGroup::symmetric3());
    CHECK(h.validated);
    CHECK(h.dim(0) == 6);
}

TEST_CASE("twisted duals solve the antipode data") {
    FinGroup z1 = FinGroup::cyclic(1);
    FinGroup z2 = FinGroup::cyclic(2);

    // trivial cocycle: the dual group algebra
    QuasiTuraevCoalgebra plain = build_twisted_dual(z1, z2, cocycle_trivial(z2, CycloField::rationals()));
    CHECK(plain.validated);
    CHECK(plain.q_at(0) == Vec(2, Scalar::one(plain.field())));

    // sign cocycle on Z2: q picks up omega(g, g^{-1}, g)^{-1}
    QuasiTuraevCoalgebra tw = build_twisted_dual(z1, z2, cocycle_cyclic_root(2, 2));
    CHECK(tw.validated);
    CHECK(tw.q_at(0)[1] == Scalar::from_int(tw.field(), -1));

    // order-4 case over the 4th cyclotomic field
    QuasiTuraevCoalgebra t4 = build_twisted_dual(z2, FinGroup::cyclic(4), cocycle_cyclic_root(4, 4));
    CHECK(t4.validated);
    CHECK(t4.dim(0) == 4);
}

TEST_CASE("builtin module lists") {
    // trivial instance: the unit plus one scalar module per degree
    {
        QuasiTuraevCoalgebra h = build_trivial(FinGroup::cyclic(2));
        auto mods = builtin_yd_examples(h);
        REQUIRE(mods.size() == 2);
        CHECK(mods[0].name == "unit");
        CHECK(mods[1].degree == 1);
    }
    // graded line over Z2: scalar coactions from the fourth roots of unity
    {
        QuasiTuraevCoalgebra h = build_graded_line(FinGroup::cyclic(2), cocycle_cyclic_root(2));
        auto mods = builtin_yd_examples(h);
        REQUIRE(mods.size() == 4);
        // degree 0 carries chi(g) in {1, -1}; degree 1 carries chi(g) in {zeta, -zeta}
        const Field& f = h.field();
        CHECK(mods[1].degree == 0);
        CHECK(mods[1].coaction_at(1).entry(0, 0) == Scalar::from_int(f, -1));
        CHECK(mods[2].degree == 1);
        CHECK(mods[2].coaction_at(1).entry(0, 0) == Scalar::zeta_pow(f, 1));
        CHECK(mods[3].degree == 1);
        CHECK(mods[3].coaction_at(1).entry(0, 0) == -Scalar::zeta_pow(f, 1));
    }
    // graded line over Z4: solutions exist exactly in degrees 0 and 2,
    // four characters each (chi(1)^4 must be the inverse fourth root at the
    // module's degree), the unit among them
    {
        QuasiTuraevCoalgebra h = build_graded_line(FinGroup::cyclic(4), cocycle_cyclic_root(4));
        auto mods = builtin_yd_examples(h);
        REQUIRE(mods.size() == 8);
        long deg0 = 0, deg2 = 0;
        const Field& f = h.field();
        for (const auto& m : mods) {
            if (m.degree == 0)
                ++deg0;
            if (m.degree == 2)
                ++deg2;
            Scalar chi1 = m.coaction_at(1).entry(0, 0);
            Scalar fourth = chi1 * chi1 * chi1 * chi1;
            CHECK(fourth == Scalar::zeta_pow(f, -2 * m.degree));
        }
        CHECK(deg0 == 4);
        CHECK(deg2 == 4);
    }
    // group-algebra instance: the adjoint module appears and validates
    {
        QuasiTuraevCoalgebra h = build_constant_hopf(FinGroup::cyclic(2), FinGroup::cyclic(2));
        auto mods = builtin_yd_examples(h);
        REQUIRE(mods.size() == 2);
        CHECK(mods[1].name == "adjoint");
        CHECK(mods[1].dim == 2);
        CHECK(validate_yd(h, mods[1]).passed());
    }
}

TEST_CASE("builders are deterministic") {
    QuasiTuraevCoalgebra a = build_graded_line(FinGroup::cyclic(2), cocycle_cyclic_root(2));
    QuasiTuraevCoalgebra b = build_graded_line(FinGroup::cyclic(2), cocycle_cyclic_root(2));
    CHECK(a.structurally_equal(b));
}

TEST_CASE("named builders for the command line") {
    CHECK(named_group("z2").order() == 2);
    CHECK(named_group("s3").order() == 6);
    CHECK(named_group("z2xz3").order() == 6);
    CHECK_THROWS(named_group("q8"));

    QuasiTuraevCoalgebra h = build_named("graded_line", {{"pi", "z2"}});
    CHECK(h.validated);
    CHECK_THROWS(build_named("nope", {}));
    CHECK_THROWS(build_named("trivial", {}));
}
