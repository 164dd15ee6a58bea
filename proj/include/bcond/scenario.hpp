#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "bcond/conditioning.hpp"
#include "bcond/decomposition.hpp"
#include "bcond/expression.hpp"
#include "bcond/mass.hpp"

namespace bcond {

enum class RuleKind { scr, bcr17, qbcr1, qbcr2 };

const char* to_string(RuleKind rule) noexcept;

// One self-contained problem: frame, constraints, a prior mass table, and
// (for the condition/decompose commands) the conditioning expression and rule.
//
// File format, line oriented, '#' starts a comment:
//   frame: A B C D
//   labels: 6                      # top label index; required with qmass
//   mode: hyper | super            # default hyper
//   model: shafer | free | empty: <expr>[, <expr>...]   # empty list may
//                                  # continue on following lines
//   qmass:                         # or mass: for rational masses
//     A = L1
//     C|D = L1
//   condition: !D
//   rule: qbcr1                    # scr | bcr17 | qbcr1 | qbcr2
struct Scenario {
    ModelPtr model;
    std::optional<LabelScale> scale;
    std::optional<Expression> condition;
    std::optional<RuleKind> rule;
    std::optional<Bba> bba;
    std::optional<Qbba> qbba;

    bool quantitative() const noexcept { return bba.has_value(); }
};

Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::string& path);

// Canonicalizes the conditioning expression and rejects an event that is
// empty under the model ("problem impossible").
Proposition conditioning_event(const Scenario& s);

// Applies the scenario's rule; requires condition and rule sections.
std::variant<Bba, Qbba> apply_rule(const Scenario& s);

enum class ReportFormat { text, tsv };

// Reports are deterministic: rows sorted by rendered name, rationals in
// lowest terms, identical inputs give byte-identical output.
std::string run_condition(const Scenario& s, ReportFormat format, bool decimals = false);
std::string run_decompose(const Scenario& s, ReportFormat format);
std::string run_check(const Scenario& s);
std::string run_combine(const Scenario& a, const Scenario& b, ReportFormat format,
                        bool decimals = false);

} // namespace bcond
