#include <doctest.h>

#include <sstream>

#include "support/oracle.hpp"

using namespace bcond;
using namespace bcond::testsupport;

namespace {

Proposition parse_on(const ModelPtr& m, const std::string& text) {
    return canonicalize(parse_expression(text, m->frame()), m);
}

} // namespace

TEST_CASE("canonicalization respects the connectives") {
    Rng rng(31415);
    for (int round = 0; round < 300; ++round) {
        int n = 2 + round % 3;
        Mode mode = round % 2 ? Mode::super : Mode::hyper;
        ModelPtr model = random_model(rng, n, mode);
        bool with_not = mode == Mode::super;

        std::string e1 = random_expr_text(rng, model->frame(), 3, with_not);
        std::string e2 = random_expr_text(rng, model->frame(), 3, with_not);

        Proposition p1 = parse_on(model, e1);
        Proposition p2 = parse_on(model, e2);
        CHECK(parse_on(model, "(" + e1 + ")|(" + e2 + ")") == (p1 | p2));
        CHECK(parse_on(model, "(" + e1 + ")&(" + e2 + ")") == (p1 & p2));
        if (with_not)
            CHECK(parse_on(model, "!(" + e1 + ")") == p1.complement());

        // Equality is about the canonical form, not the spelling.
        CHECK(parse_on(model, "(" + e2 + ")|(" + e1 + ")") == (p1 | p2));
    }
}

TEST_CASE("De Morgan under complemented models") {
    Rng rng(27182);
    for (int round = 0; round < 200; ++round) {
        ModelPtr model = random_model(rng, 2 + round % 3, Mode::super);
        std::vector<Proposition> lattice = full_lattice(model);
        Proposition p = random_nonempty_lattice_prop(rng, lattice);
        Proposition q = random_nonempty_lattice_prop(rng, lattice);
        CHECK((p | q).complement() == (p.complement() & q.complement()));
        CHECK((p & q).complement() == (p.complement() | q.complement()));
    }
}

TEST_CASE("rendering round-trips") {
    Rng rng(16180);
    for (int round = 0; round < 200; ++round) {
        int n = 2 + round % 3;
        ModelPtr model = random_model(rng, n, round % 2 ? Mode::super : Mode::hyper);
        std::vector<Proposition> lattice = full_lattice(model);
        for (int k = 0; k < 5; ++k) {
            Proposition p = random_nonempty_lattice_prop(rng, lattice);
            CHECK(parse_on(model, render(p)) == p);
        }
        CHECK(parse_on(model, render(model->full())) == model->full());
    }

    // Arbitrary region subsets, not just lattice members.
    for (int round = 0; round < 100; ++round) {
        ModelPtr model = random_model(rng, 4, Mode::super);
        std::vector<MintermMask> regions = model->universe().regions();
        std::uniform_int_distribution<std::uint32_t> bits(
            1, (std::uint32_t(1) << std::min<std::size_t>(regions.size(), 15)) - 1);
        RegionSet r(4);
        std::uint32_t pick = bits(rng);
        for (std::size_t b = 0; b < regions.size() && b < 15; ++b)
            if ((pick >> b) & 1u)
                r.set(regions[b]);
        Proposition p = model->proposition(std::move(r));
        CHECK(parse_on(model, render(p)) == p);
    }
}

TEST_CASE("class partition holds on enumerated lattices") {
    auto failure = partition_suite();
    CHECK_MESSAGE(!failure, failure.value_or(""));
}

TEST_CASE("reconstruction test matches closure membership") {
    auto failure = reconstruction_suite();
    CHECK_MESSAGE(!failure, failure.value_or(""));
}

TEST_CASE("quantitative conditioning conserves total mass") {
    auto failure = sum_to_one_suite(1000);
    CHECK_MESSAGE(!failure, failure.value_or(""));
}

TEST_CASE("prudent qualitative conditioning conserves the raw index sum") {
    auto failure = qbcr1_conservation_suite(400);
    CHECK_MESSAGE(!failure, failure.value_or(""));
}

TEST_CASE("uniform-split leakage stays within the floor bound") {
    auto failure = qbcr2_leakage_suite(400);
    CHECK_MESSAGE(!failure, failure.value_or(""));
}

TEST_CASE("dempster conditioning of Bayesian priors is Bayes") {
    auto failure = bayes_agreement_suite(400);
    CHECK_MESSAGE(!failure, failure.value_or(""));
}

TEST_CASE("per-focal rules match the enumeration oracles") {
    auto failure = oracle_agreement_suite(200);
    CHECK_MESSAGE(!failure, failure.value_or(""));
}

TEST_CASE("identity when the prior already sits inside the event") {
    Rng rng(99887);
    for (int round = 0; round < 200; ++round) {
        Mode mode = round % 2 ? Mode::super : Mode::hyper;
        ModelPtr model = random_model(rng, 2 + round % 2, mode);
        std::vector<Proposition> lattice = full_lattice(model);
        Proposition event = random_nonempty_lattice_prop(rng, lattice);

        std::vector<Proposition> inside;
        for (const Proposition& p : lattice)
            if (p.is_subset_of(event))
                inside.push_back(p);

        Bba prior = random_bba(rng, model, inside);
        CHECK(same_masses(scr_condition(prior, event), prior));
        CHECK(same_masses(bcr17_condition(prior, event), prior));

        LabelScale scale(6);
        Qbba qprior = random_exact_qbba(rng, model, inside, scale);
        CHECK(same_masses(qbcr1_condition(qprior, event), qprior));
        CHECK(same_masses(qbcr2_condition(qprior, event), qprior));
    }
}
