#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "bdsa/crosscheck.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bdsa;

namespace {

Element rand_elem(std::mt19937_64& rng, const AtomUniverse& u) {
    return Element{static_cast<uint32_t>(rng() & u.full().bits)};
}

}  // namespace

TEST_CASE("element literals parse and render") {
    AtomUniverse u({"a", "b"});
    CHECK(parse_element(u, "{a}") == Element::atom(0));
    CHECK(parse_element(u, "{}") == Element{});
    CHECK(parse_element(u, "{a,b}") == (Element::atom(0) | Element::atom(1)));
    CHECK(parse_element(u, "{ a , b }") == (Element::atom(0) | Element::atom(1)));
    CHECK(parse_element(u, "{a b}") == (Element::atom(0) | Element::atom(1)));
    CHECK(render_element(u, parse_element(u, "{ b , a }")) == "{a,b}");

    CHECK_THROWS_WITH_AS(parse_element(u, "{a,c}"), doctest::Contains("UnknownAtom c"), Error);
    CHECK_THROWS_AS(parse_element(u, "a}"), Error);
    CHECK_THROWS_AS(parse_element(u, "{a,}"), Error);
    CHECK_THROWS_AS(parse_element(u, "{a} x"), Error);

    // Round trip over every element of a mid-size universe.
    AtomUniverse u5({"a", "b", "c", "d", "e"});
    for (uint32_t bits = 0; bits <= u5.full().bits; ++bits) {
        Element e{bits};
        CHECK(parse_element(u5, render_element(u5, e)) == e);
    }
}

TEST_CASE("lattice laws on random elements") {
    AtomUniverse u({"a", "b", "c", "d", "e", "f", "g"});
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        Element a = rand_elem(rng, u), b = rand_elem(rng, u), c = rand_elem(rng, u);
        CHECK((a & (b | c)) == ((a & b) | (a & c)));
        CHECK((a | (b & c)) == ((a | b) & (a | c)));
        CHECK((c - (a | b)) == ((c - a) & (c - b)));
        CHECK((c - (a & b)) == ((c - a) | (c - b)));
        CHECK(((a - b) & b).empty());
        CHECK(((a - b) | (a & b)) == a);
        CHECK((a & b).subset_of(a));
        bool le = a.subset_of(b);
        CHECK(le == ((a & b) == a));
    }
}

TEST_CASE("dualize_action") {
    AtomUniverse u({"a", "b"});

    // Arrow: a maps to {b}.
    Action arrow = dualize_action(u, {Element::atom(1), Element{}});
    CHECK(arrow.dual[1] == 0);
    CHECK(arrow.dual[0] == -1);

    // One image covering both atoms.
    Action wide = dualize_action(u, {Element::atom(0) | Element::atom(1), Element{}});
    CHECK(wide.dual[0] == 0);
    CHECK(wide.dual[1] == 0);

    // Overlapping images are rejected.
    CHECK_THROWS_WITH_AS(dualize_action(u, {Element::atom(1), Element::atom(1)}),
                         doctest::Contains("NotDisjoint"), Error);
}

TEST_CASE("dual map reconstructs the action on every element") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
        AtomUniverse u(names);
        // Random disjoint image table via a random partial map.
        std::vector<Element> images(n);
        for (int b = 0; b < n; ++b)
            if (rng() % 2) images[rng() % n] |= Element::atom(b);
        Action act = dualize_action(u, images);
        for (uint32_t bits = 0; bits <= u.full().bits; ++bits) {
            Element via_preimage;
            for (int b = 0; b < n; ++b)
                if (act.dual[b] >= 0 && Element{bits}.test(act.dual[b]))
                    via_preimage |= Element::atom(b);
            Element via_union;
            for (int a = 0; a < n; ++a)
                if (Element{bits}.test(a)) via_union |= images[a];
            CHECK(via_preimage == via_union);
        }
    }
}

TEST_CASE("quotient_map") {
    AtomUniverse u({"a", "b"});
    QuotientContext ctx{Element::atom(1)};
    CHECK(quotient_map(ctx, parse_element(u, "{a,b}")) == parse_element(u, "{a}"));
    CHECK(quotient_map(ctx, parse_element(u, "{b}")) == Element{});
    CHECK(quotient_map(QuotientContext{Element{}}, parse_element(u, "{a}")) ==
          parse_element(u, "{a}"));

    // The induced map is a Boolean homomorphism; exhaustive on 6 atoms.
    AtomUniverse u6({"a", "b", "c", "d", "e", "f"});
    QuotientContext q{parse_element(u6, "{b,d,f}")};
    for (uint32_t x = 0; x <= u6.full().bits; ++x)
        for (uint32_t y = 0; y <= u6.full().bits; ++y) {
            Element a{x}, b{y};
            CHECK(quotient_map(q, a | b) == (quotient_map(q, a) | quotient_map(q, b)));
            CHECK(quotient_map(q, a & b) == (quotient_map(q, a) & quotient_map(q, b)));
            CHECK(quotient_map(q, a - b) == (quotient_map(q, a) - quotient_map(q, b)));
        }
}

TEST_CASE("build_instance defaults and validation") {
    Instance loop = fixtures::loop();
    CHECK(loop.ideal_top(0) == fixtures::elem(loop, "{a}"));
    CHECK(loop.j_top() == fixtures::elem(loop, "{a}"));
    CHECK(loop.regular_top() == fixtures::elem(loop, "{a}"));

    CHECK_THROWS_WITH_AS(
        parse_instance("atoms a b\nlabels x\nact x a = {b}\nideal x = {a}\n"),
        doctest::Contains("IdealTooSmall"), Error);

    Instance f4 = parse_instance(std::string(fixtures::kTwoLoops) + "J = {a,b}\n");
    CHECK(f4.j_top() == fixtures::elem(f4, "{a,b}"));

    CHECK_THROWS_WITH_AS(parse_instance(std::string(fixtures::kLoopExit) + "J = {b}\n"),
                         doctest::Contains("JNotRegular"), Error);
    CHECK_THROWS_WITH_AS(parse_instance("atoms a b\nlabels x\nact x a = {b}\nact x b = {b}\n"),
                         doctest::Contains("NotDisjoint"), Error);
}

TEST_CASE("instance file parsing errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_instance("atoms a b\nlabels x\nact x a = {a,c}\n"),
                         doctest::Contains("line 3: UnknownAtom c"), Error);
    CHECK_THROWS_WITH_AS(parse_instance("atoms a\nlabels x\nact y a = {a}\n"),
                         doctest::Contains("line 3: UnknownLabel y"), Error);
    // Declaration lines may come in either order; act lines need both.
    CHECK(parse_instance("labels x\natoms a\nact x a = {a}\n") == fixtures::loop());
    CHECK_THROWS_AS(parse_instance("act x a = {a}\natoms a\nlabels x\n"), Error);
    CHECK_THROWS_AS(parse_instance("atoms a\nlabels x\nact x a = {a}\nact x a = {}\n"), Error);
    CHECK_THROWS_AS(parse_instance("atoms a\n"), Error);

    // Degenerate universe and comments parse fine.
    Instance degenerate = parse_instance("# empty\natoms\nlabels\n");
    CHECK(degenerate.atom_count() == 0);
    CHECK(degenerate.label_count() == 0);
}

TEST_CASE("apply_word") {
    Instance f5 = fixtures::loop_exit();
    Element a = fixtures::elem(f5, "{a}");
    std::vector<int> xy{0, 1}, yx{1, 0};
    CHECK(f5.apply_word(xy, a) == fixtures::elem(f5, "{b}"));
    CHECK(f5.apply_word(yx, a) == Element{});
    CHECK(f5.apply_word(std::vector<int>{}, a) == a);
}

TEST_CASE("apply_word is a homomorphism and composes") {
    std::mt19937_64 rng(23);
    Instance inst = corpus_instance(17);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> beta, gamma;
        for (uint64_t i = rng() % 5; i > 0; --i)
            beta.push_back(static_cast<int>(rng() % inst.label_count()));
        for (uint64_t i = rng() % 5; i > 0; --i)
            gamma.push_back(static_cast<int>(rng() % inst.label_count()));
        Element a = rand_elem(rng, inst.universe());
        Element b = rand_elem(rng, inst.universe());

        CHECK(inst.apply_word(beta, a | b) == (inst.apply_word(beta, a) | inst.apply_word(beta, b)));
        CHECK(inst.apply_word(beta, a & b) == (inst.apply_word(beta, a) & inst.apply_word(beta, b)));
        CHECK(inst.apply_word(beta, a - b) == (inst.apply_word(beta, a) - inst.apply_word(beta, b)));

        std::vector<int> joined = beta;
        joined.insert(joined.end(), gamma.begin(), gamma.end());
        CHECK(inst.apply_word(joined, a) == inst.apply_word(gamma, inst.apply_word(beta, a)));
    }
}

TEST_CASE("delta and regular top") {
    Instance f5 = fixtures::loop_exit();
    CHECK(f5.delta(fixtures::elem(f5, "{a}")) == std::vector<int>{0, 1});
    CHECK(f5.delta(fixtures::elem(f5, "{b}")).empty());
    CHECK(f5.delta(Element{}).empty());
    CHECK(f5.regular_top() == fixtures::elem(f5, "{a}"));

    Instance f2 = fixtures::o2();
    CHECK(f2.regular_top() == fixtures::elem(f2, "{a}"));

    Instance degenerate = parse_instance("atoms\nlabels x\n");
    CHECK(degenerate.regular_top() == Element{});
}

TEST_CASE("semigroup closure") {
    MapSemigroup f1 = semigroup_closure(fixtures::loop());
    REQUIRE(f1.members.size() == 2);
    CHECK(f1.members[0].witness.empty());
    CHECK(f1.members[1].map.to == std::vector<int8_t>{0});

    MapSemigroup f3 = semigroup_closure(fixtures::arrow());
    REQUIRE(f3.members.size() == 3);
    CHECK(f3.members[1].map.to == std::vector<int8_t>{-1, 0});
    CHECK(f3.members[2].map.to == std::vector<int8_t>{-1, -1});

    MapSemigroup f4 = semigroup_closure(fixtures::two_loops());
    REQUIRE(f4.members.size() == 4);
    CHECK(f4.members[1].map.to == std::vector<int8_t>{0, -1});
    CHECK(f4.members[2].map.to == std::vector<int8_t>{-1, 1});
    CHECK(f4.members[3].map.to == std::vector<int8_t>{-1, -1});
}

TEST_CASE("semigroup witnesses recompute and bound holds") {
    for (uint64_t seed : {3u, 14u, 59u, 80u}) {
        Instance inst = corpus_instance(seed);
        MapSemigroup sg = semigroup_closure(inst);
        size_t bound = 1;
        for (int i = 0; i < inst.atom_count(); ++i) bound *= inst.atom_count() + 1;
        CHECK(sg.members.size() <= bound + 1);
        for (const auto& m : sg.members) {
            PartialMap f = PartialMap::identity(inst.atom_count());
            for (int l : m.witness) {
                PartialMap g;
                g.to.assign(inst.action(l).dual.begin(), inst.action(l).dual.end());
                f = f.compose_after(g);
            }
            CHECK(f == m.map);
            // The Cayley edges agree with composition.
            for (int l = 0; l < inst.label_count(); ++l) {
                PartialMap g;
                g.to.assign(inst.action(l).dual.begin(), inst.action(l).dual.end());
                CHECK(sg.members[m.next[l]].map == m.map.compose_after(g));
            }
        }
    }
}

TEST_CASE("render and reparse is the identity") {
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        Instance inst = corpus_instance(seed);
        Instance back = parse_instance(render_instance(inst));
        CHECK(inst == back);
    }
    Instance f5 = fixtures::with_empty_j(fixtures::kLoopExit);
    CHECK(parse_instance(render_instance(f5)) == f5);
}
