#pragma once

#include <map>

#include "bcond/label.hpp"
#include "bcond/proposition.hpp"
#include "bcond/rational.hpp"

namespace bcond {

// Quantitative belief assignment: exact nonnegative rational mass per
// canonical nonempty proposition. Entries with the same canonical form
// accumulate; zero-mass entries are dropped. Whether the total is 1 is a
// validation question, not a construction invariant.
class Bba {
public:
    explicit Bba(ModelPtr model) : model_(std::move(model)) {}

    // Throws on model mismatch, negative mass, or mass on an empty proposition.
    void add(const Proposition& p, const Rational& mass);

    const std::map<Proposition, Rational, PropLess>& masses() const noexcept { return masses_; }
    const ModelPtr& model() const noexcept { return model_; }

    Rational total() const;
    std::vector<Proposition> focals() const;

private:
    ModelPtr model_;
    std::map<Proposition, Rational, PropLess> masses_;
};

// Qualitative belief assignment: a label per canonical nonempty proposition,
// all on one scale. Unlisted propositions implicitly carry L0; accumulation
// uses clamped label addition.
class Qbba {
public:
    Qbba(ModelPtr model, LabelScale scale) : model_(std::move(model)), scale_(scale) {}

    void add(const Proposition& p, const Label& mass);

    const std::map<Proposition, Label, PropLess>& masses() const noexcept { return masses_; }
    const ModelPtr& model() const noexcept { return model_; }
    LabelScale scale() const noexcept { return scale_; }

    Label at(const Proposition& p) const;  // L0 when absent
    std::vector<Proposition> focals() const;
    long long raw_index_sum() const;

private:
    ModelPtr model_;
    LabelScale scale_;
    std::map<Proposition, Label, PropLess> masses_;
};

struct QuasiNormStatus {
    Label clamped_sum;
    long long raw_index_sum;
    bool exact;       // raw index sum equals the top index
    bool clamped_ok;  // clamped sum reaches L_max (implied by exact)
};

QuasiNormStatus quasi_norm_status(const Qbba& qm);

struct BbaDiagnostics {
    Rational sum;
    bool sum_ok;  // exactly 1
};

BbaDiagnostics validate_bba(const Bba& m);

// Hard errors (mass on an empty or constraint-violating proposition) are
// thrown at insertion; validation reports the rest.
struct QbbaDiagnostics {
    QuasiNormStatus quasi_norm;
};

QbbaDiagnostics validate_qbba(const Qbba& qm);

} // namespace bcond
