#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "bdsa/crosscheck.hpp"
#include "bdsa/oracle.hpp"
#include "bdsa/props.hpp"
#include "bdsa/relgen.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bdsa;

TEST_CASE("pair system atom census") {
    // Loop with an empty J: one diagonal atom plus one defect atom.
    Instance f1 = fixtures::with_empty_j(fixtures::kLoop);
    PrimeInstance p1 = to_generalized(f1);
    REQUIRE(p1.instance.atom_count() == 2);
    CHECK(!p1.tags[0].defect);
    CHECK(p1.tags[1].defect);
    CHECK(p1.tags[1].base == 0);
    CHECK(p1.instance.universe().name(1) == "a_dft");
    // The class equation routes the defect copy alongside the diagonal one.
    CHECK(p1.instance.action(0).images[0] ==
          (Element::atom(0) | Element::atom(1)));
    CHECK(p1.instance.action(0).images[1] == Element{});
    CHECK(p1.instance.regular_top() == Element::atom(0));

    // Default J: no defect atoms, and the pair system is the instance itself.
    PrimeInstance p1d = to_generalized(fixtures::loop());
    CHECK(p1d.instance.atom_count() == 1);
    CHECK(p1d.instance == fixtures::loop());

    // Arrow with an empty J: only the regular atom gets a defect copy.
    Instance f3 = fixtures::with_empty_j(fixtures::kArrow);
    PrimeInstance p3 = to_generalized(f3);
    REQUIRE(p3.instance.atom_count() == 3);
    CHECK(p3.tags[2].defect);
    CHECK(p3.tags[2].base == 0);
}

TEST_CASE("pair system matches the literal pair model") {
    for (const char* text : {fixtures::kLoop, fixtures::kO2, fixtures::kArrow,
                             fixtures::kTwoLoops, fixtures::kLoopExit}) {
        for (bool shrink : {false, true}) {
            Instance inst = shrink ? fixtures::with_empty_j(text) : parse_instance(text);
            CHECK(prime_model_matches(inst, to_generalized(inst)));
        }
    }
    for (uint64_t seed = 1; seed <= 200; ++seed) {
        Instance inst = corpus_instance(seed);
        if (inst.atom_count() > 3) continue;
        CHECK(prime_model_matches(inst, to_generalized(inst)));
    }
}

TEST_CASE("pair system invariants on the corpus") {
    for (uint64_t seed = 1; seed <= 150; ++seed) {
        Instance inst = corpus_instance(seed);
        PrimeInstance prime = to_generalized(inst);
        // Regular part = diagonal copy of the regular part of the base.
        Element expected;
        for (int a = 0; a < inst.atom_count(); ++a)
            if (inst.regular_top().test(a)) expected |= Element::atom(a);
        CHECK(prime.instance.regular_top() == expected);
        CHECK(prime.instance.j_top() == prime.instance.regular_top());
        // Defect atoms are dead.
        for (size_t i = 0; i < prime.tags.size(); ++i)
            if (prime.tags[i].defect)
                for (int l = 0; l < prime.instance.label_count(); ++l)
                    CHECK(prime.instance.apply_label(l, Element::atom(static_cast<int>(i))).empty());
        // J equal to the regular ideal reproduces the instance.
        if (inst.j_top() == inst.regular_top()) CHECK(prime.instance == inst);
    }
}

TEST_CASE("condition L transfer") {
    // With the full J the transfer is verbatim.
    for (const char* text : {fixtures::kLoop, fixtures::kO2, fixtures::kArrow,
                             fixtures::kTwoLoops, fixtures::kLoopExit}) {
        LPreservation p = check_L_preservation(parse_instance(text));
        CHECK(p.base_holds == p.prime_holds);
    }

    // The pair system sees exactly the exit-free cycles whose trajectory
    // stays inside J (THEORY.md: transfer law). A loop hidden by an empty J
    // disappears from the pair system, so the verbatim comparison breaks.
    LPreservation hidden = check_L_preservation(fixtures::with_empty_j(fixtures::kLoop));
    CHECK(!hidden.base_holds);
    CHECK(hidden.prime_holds);

    LPreservation o2 = check_L_preservation(fixtures::with_empty_j(fixtures::kO2));
    CHECK(o2.base_holds);
    CHECK(o2.prime_holds);
    LPreservation f5 = check_L_preservation(fixtures::with_empty_j(fixtures::kLoopExit));
    CHECK(f5.base_holds);
    CHECK(f5.prime_holds);

    // The J-confined form transfers on the whole corpus.
    for (uint64_t seed = 1; seed <= 300; ++seed) {
        Instance inst = corpus_instance(seed);
        bool confined = !find_cycle_no_exit(inst, inst.j_top()).has_value();
        CHECK(confined == check_condition_L(to_generalized(inst).instance).holds);
    }
}
