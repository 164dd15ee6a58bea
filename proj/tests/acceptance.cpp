// Acceptance suite: every criterion prints one PASS/FAIL line; the process
// exits with the number of failures. Quantitative comparisons are exact
// (rational arithmetic, tolerance zero); qualitative comparisons are label
// equality.

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "bcond/scenario.hpp"
#include "support/oracle.hpp"

using namespace bcond;
using testsupport::Rng;

namespace {

std::string scenario_path(const char* name) {
    return std::string(BCOND_SCENARIO_DIR) + "/" + name;
}

Proposition parse_on(const ModelPtr& m, const char* text) {
    return canonicalize(parse_expression(text, m->frame()), m);
}

std::optional<std::string> expect_bba(const Bba& got,
                                      std::initializer_list<std::pair<const char*, Rational>> want) {
    const ModelPtr& model = got.model();
    if (got.masses().size() != want.size())
        return "expected " + std::to_string(want.size()) + " focals, got " +
               std::to_string(got.masses().size());
    for (const auto& [text, value] : want) {
        Proposition p = parse_on(model, text);
        auto it = got.masses().find(p);
        if (it == got.masses().end())
            return std::string("missing mass on ") + text;
        if (it->second != value)
            return std::string(text) + " carries " + format_rational(it->second) +
                   ", expected " + format_rational(value);
    }
    return std::nullopt;
}

std::optional<std::string> expect_qbba(const Qbba& got,
                                       std::initializer_list<std::pair<const char*, int>> want) {
    const ModelPtr& model = got.model();
    if (got.masses().size() != want.size())
        return "expected " + std::to_string(want.size()) + " focals, got " +
               std::to_string(got.masses().size());
    for (const auto& [text, index] : want) {
        Proposition p = parse_on(model, text);
        Label l = got.at(p);
        if (l.index() != index)
            return std::string(text) + " carries " + to_string(l) + ", expected L" +
                   std::to_string(index);
    }
    return std::nullopt;
}

std::optional<std::string> expect_qbcr(const char* file, RuleKind rule,
                                       std::initializer_list<std::pair<const char*, int>> want,
                                       bool require_exact_norm) {
    Scenario s = load_scenario(scenario_path(file));
    if (s.rule != rule)
        return std::string(file) + " does not use the expected rule";
    Qbba out = std::get<Qbba>(apply_rule(s));
    if (auto fail = expect_qbba(out, want))
        return std::string(file) + ": " + *fail;
    if (require_exact_norm && !quasi_norm_status(out).exact)
        return std::string(file) + ": result is not exactly quasi-normalized (raw " +
               std::to_string(out.raw_index_sum()) + ")";
    return std::nullopt;
}

struct Criterion {
    std::string id;
    std::string description;
    std::function<std::optional<std::string>()> run;
};

} // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({"1", "proportional conditioning on the worked three-hypothesis prior", [] {
        Scenario s = load_scenario(scenario_path("bcr17.scn"));
        Bba out = std::get<Bba>(apply_rule(s));
        return expect_bba(out, {{"t2", Rational(13, 40)},
                                {"t3", Rational(9, 20)},
                                {"t2|t3", Rational(9, 40)}});
    }});

    criteria.push_back({"2", "dempster conditioning on the same prior, conflict 1/5", [] {
        Scenario s = load_scenario(scenario_path("scr.scn"));
        Bba out = std::get<Bba>(apply_rule(s));
        if (auto fail = expect_bba(out, {{"t2", Rational(1, 4)},
                                         {"t3", Rational(1, 4)},
                                         {"t2|t3", Rational(1, 2)}}))
            return fail;
        Bba point(s.model);
        point.add(conditioning_event(s), 1);
        CombineResult r = dempster_combine(*s.bba, point);
        if (r.conflict != Rational(1, 5))
            return std::optional<std::string>("conflict K = " + format_rational(r.conflict) +
                                              ", expected 1/5");
        return std::optional<std::string>();
    }});

    criteria.push_back({"3", "overlapping zones, truth in A|B (both qualitative rules)", [] {
        if (auto fail = expect_qbcr("ex1_qbcr1.scn", RuleKind::qbcr1,
                                    {{"B&D", 4}, {"A|B", 1}, {"A", 1}}, true))
            return fail;
        return expect_qbcr("ex1_qbcr2.scn", RuleKind::qbcr2, {{"B&D", 4}, {"A", 2}}, true);
    }});

    criteria.push_back({"4", "bombed zone touching only B; then fully separated", [] {
        if (auto fail = expect_qbcr("ex2_case1_qbcr1.scn", RuleKind::qbcr1,
                                    {{"A&!D", 1}, {"C&!D", 1}, {"!D", 4}}, false))
            return fail;
        if (auto fail = expect_qbcr("ex2_case1_qbcr2.scn", RuleKind::qbcr2,
                                    {{"A&!D", 3}, {"C&!D", 3}}, false))
            return fail;
        if (auto fail = expect_qbcr("ex2_case2_qbcr1.scn", RuleKind::qbcr1,
                                    {{"A", 1}, {"C", 1}, {"A|B|C", 4}}, false))
            return fail;
        return expect_qbcr("ex2_case2_qbcr2.scn", RuleKind::qbcr2, {{"A", 3}, {"C", 3}}, false);
    }});

    criteria.push_back({"5", "uneven prior, bombed zone D (both cases)", [] {
        if (auto fail = expect_qbcr("ex3_case1_qbcr1.scn", RuleKind::qbcr1,
                                    {{"A&!D", 1}, {"C&!D", 3}, {"!D", 2}}, false))
            return fail;
        if (auto fail = expect_qbcr("ex3_case1_qbcr2.scn", RuleKind::qbcr2,
                                    {{"A&!D", 1}, {"C&!D", 3}, {"!D", 2}}, false))
            return fail;
        if (auto fail = expect_qbcr("ex3_case2_qbcr1.scn", RuleKind::qbcr1,
                                    {{"A", 1}, {"C", 3}, {"A|B|C", 2}}, false))
            return fail;
        return expect_qbcr("ex3_case2_qbcr2.scn", RuleKind::qbcr2, {{"A", 2}, {"C", 4}}, false);
    }});

    criteria.push_back({"6", "prior with complement support (both cases)", [] {
        if (auto fail = expect_qbcr("ex4_case1_qbcr1.scn", RuleKind::qbcr1,
                                    {{"A&!D", 1}, {"C&!D", 3}, {"!D", 2}}, false))
            return fail;
        if (auto fail = expect_qbcr("ex4_case1_qbcr2.scn", RuleKind::qbcr2,
                                    {{"A&!D", 1}, {"C&!D", 5}}, false))
            return fail;
        if (auto fail = expect_qbcr("ex4_case2_qbcr1.scn", RuleKind::qbcr1,
                                    {{"A", 1}, {"C", 3}, {"A|B|C", 2}}, false))
            return fail;
        return expect_qbcr("ex4_case2_qbcr2.scn", RuleKind::qbcr2, {{"A", 2}, {"C", 4}}, false);
    }});

    criteria.push_back({"7", "49-cell addition and multiplication tables", [] {
        const int add[7][7] = {
            {0, 1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6, 6}, {2, 3, 4, 5, 6, 6, 6},
            {3, 4, 5, 6, 6, 6, 6}, {4, 5, 6, 6, 6, 6, 6}, {5, 6, 6, 6, 6, 6, 6},
            {6, 6, 6, 6, 6, 6, 6}};
        const int mul[7][7] = {
            {0, 0, 0, 0, 0, 0, 0}, {0, 1, 1, 1, 1, 1, 1}, {0, 1, 2, 2, 2, 2, 2},
            {0, 1, 2, 3, 3, 3, 3}, {0, 1, 2, 3, 4, 4, 4}, {0, 1, 2, 3, 4, 5, 5},
            {0, 1, 2, 3, 4, 5, 6}};
        LabelScale scale(6);
        for (int i = 0; i <= 6; ++i) {
            for (int j = 0; j <= 6; ++j) {
                if ((Label(i, scale) + Label(j, scale)).index() != add[i][j])
                    return std::optional<std::string>("L" + std::to_string(i) + " + L" +
                                                      std::to_string(j) + " is off the table");
                if ((Label(i, scale) * Label(j, scale)).index() != mul[i][j])
                    return std::optional<std::string>("L" + std::to_string(i) + " x L" +
                                                      std::to_string(j) + " is off the table");
            }
        }
        return std::optional<std::string>();
    }});

    criteria.push_back({"8a", "class partition over enumerated lattices",
                        [] { return testsupport::partition_suite(); }});
    criteria.push_back({"8b", "reconstruction test vs closure membership",
                        [] { return testsupport::reconstruction_suite(); }});
    criteria.push_back({"8c", "quantitative outputs sum to 1 (1000 random scenarios)",
                        [] { return testsupport::sum_to_one_suite(1000); }});
    criteria.push_back({"8d", "prudent rule conserves the raw index sum",
                        [] { return testsupport::qbcr1_conservation_suite(400); }});
    criteria.push_back({"8e", "uniform-split leakage stays within the floor bound",
                        [] { return testsupport::qbcr2_leakage_suite(400); }});
    criteria.push_back({"8f", "dempster conditioning of Bayesian priors is Bayes",
                        [] { return testsupport::bayes_agreement_suite(400); }});
    criteria.push_back({"8g", "per-focal rules equal the enumeration oracles",
                        [] { return testsupport::oracle_agreement_suite(200); }});

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::optional<std::string> fail;
        try {
            fail = c.run();
        } catch (const std::exception& e) {
            fail = std::string("exception: ") + e.what();
        }
        if (fail) {
            ++failures;
            std::cout << "FAIL " << c.id << "  " << c.description << ": " << *fail << "\n";
        } else {
            std::cout << "PASS " << c.id << "  " << c.description << "\n";
        }
    }
    return failures;
}
