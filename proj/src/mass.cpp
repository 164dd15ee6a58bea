#include "bcond/mass.hpp"

namespace bcond {

void Bba::add(const Proposition& p, const Rational& mass) {
    if (p.model() != model_)
        throw model_mismatch_error("mass entry belongs to a different model");
    if (mass < 0)
        throw validation_error("negative mass");
    if (p.is_empty())
        throw validation_error("mass assigned to an empty proposition");
    if (mass == 0)
        return;
    auto [it, inserted] = masses_.emplace(p, mass);
    if (!inserted)
        it->second += mass;
}

Rational Bba::total() const {
    Rational sum = 0;
    for (const auto& [p, m] : masses_)
        sum += m;
    return sum;
}

std::vector<Proposition> Bba::focals() const {
    std::vector<Proposition> out;
    out.reserve(masses_.size());
    for (const auto& [p, m] : masses_)
        out.push_back(p);
    return out;
}

void Qbba::add(const Proposition& p, const Label& mass) {
    if (p.model() != model_)
        throw model_mismatch_error("mass entry belongs to a different model");
    if (mass.scale() != scale_)
        throw scale_mismatch_error("label from a different scale");
    if (p.is_empty())
        throw validation_error("mass assigned to an empty proposition");
    if (mass.is_min())
        return;
    auto [it, inserted] = masses_.emplace(p, mass);
    if (!inserted)
        it->second = it->second + mass;
}

Label Qbba::at(const Proposition& p) const {
    auto it = masses_.find(p);
    return it == masses_.end() ? Label(0, scale_) : it->second;
}

std::vector<Proposition> Qbba::focals() const {
    std::vector<Proposition> out;
    out.reserve(masses_.size());
    for (const auto& [p, l] : masses_)
        out.push_back(p);
    return out;
}

long long Qbba::raw_index_sum() const {
    long long sum = 0;
    for (const auto& [p, l] : masses_)
        sum += l.index();
    return sum;
}

QuasiNormStatus quasi_norm_status(const Qbba& qm) {
    LabelScale scale = qm.scale();
    Label clamped(0, scale);
    long long raw = 0;
    for (const auto& [p, l] : qm.masses()) {
        clamped = clamped + l;
        raw += l.index();
    }
    bool exact = raw == scale.max_index();
    return QuasiNormStatus{clamped, raw, exact, clamped.is_max()};
}

BbaDiagnostics validate_bba(const Bba& m) {
    Rational sum = m.total();
    return BbaDiagnostics{sum, sum == 1};
}

QbbaDiagnostics validate_qbba(const Qbba& qm) {
    return QbbaDiagnostics{quasi_norm_status(qm)};
}

} // namespace bcond
