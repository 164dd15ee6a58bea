#include "bcond/conditioning.hpp"

#include <algorithm>

namespace bcond {

namespace {

void require_nonempty_event(const Proposition& event) {
    if (event.is_empty())
        throw impossible_problem_error("conditioning event is empty under model");
}

} // namespace

CombineResult dempster_combine(const Bba& m1, const Bba& m2) {
    if (m1.model() != m2.model())
        throw model_mismatch_error("combining masses over different models");

    std::map<Proposition, Rational, PropLess> pending;
    Rational conflict = 0;
    for (const auto& [y, my] : m1.masses()) {
        for (const auto& [z, mz] : m2.masses()) {
            Rational prod = my * mz;
            Proposition x = y & z;
            if (x.is_empty()) {
                conflict += prod;
            } else {
                auto [it, inserted] = pending.emplace(x, prod);
                if (!inserted)
                    it->second += prod;
            }
        }
    }

    if (conflict == 1)
        throw total_conflict_error("total conflict: the sources agree on nothing");

    Rational norm = Rational(1) - conflict;
    Bba out(m1.model());
    for (const auto& [x, v] : pending)
        out.add(x, v / norm);
    return CombineResult{std::move(out), std::move(conflict)};
}

Bba scr_condition(const Bba& m, const Proposition& event) {
    require_nonempty_event(event);
    Bba point(m.model());
    point.add(event, 1);
    return dempster_combine(m, point).combined;
}

Bba bcr17_condition(const Bba& m, const Proposition& event) {
    require_nonempty_event(event);

    std::vector<std::pair<Proposition, Rational>> inside;   // focals within the event
    std::vector<std::pair<Proposition, Rational>> outside;
    Rational inside_total = 0;
    for (const auto& [y, my] : m.masses()) {
        if (y.is_subset_of(event)) {
            inside.emplace_back(y, my);
            inside_total += my;
        } else {
            outside.emplace_back(y, my);
        }
    }

    // Totally wrong prior: nothing inside the event, so the event itself
    // takes everything.
    if (inside_total == 0) {
        Bba out(m.model());
        out.add(event, 1);
        return out;
    }

    // Mass with no foothold in the event is spread over every inner focal
    // proportionally, folded into a single scaling factor.
    Rational disjoint_total = 0;
    for (const auto& [w, mw] : outside)
        if (!w.intersects(event))
            disjoint_total += mw;
    Rational scale = (inside_total + disjoint_total) / inside_total;

    Bba out(m.model());
    for (const auto& [x, mx] : inside) {
        Rational coeff = scale;
        for (const auto& [w, mw] : outside) {
            if (!x.is_subset_of(w))
                continue;
            Rational support = 0;
            for (const auto& [y, my] : inside)
                if (y.is_subset_of(w))
                    support += my;
            if (support != 0)
                coeff += mw / support;
        }
        out.add(x, mx * coeff);
    }

    // No inner focal inside W: W's mass falls to the largest part of the
    // event still inside W, which is W ∩ A.
    for (const auto& [w, mw] : outside) {
        if (!w.intersects(event))
            continue;
        bool has_support = false;
        for (const auto& [y, my] : inside) {
            if (y.is_subset_of(w)) {
                has_support = true;
                break;
            }
        }
        if (!has_support)
            out.add(w & event, mw);
    }
    return out;
}

Qbba qbcr1_condition(const Qbba& qm, const Proposition& event) {
    require_nonempty_event(event);
    if (qm.model() != event.model())
        throw model_mismatch_error("conditioning event from a different model");

    Qbba out(qm.model(), qm.scale());
    for (const auto& [y, l] : qm.masses()) {
        if (y.is_subset_of(event)) {
            out.add(y, l);
            continue;
        }
        Proposition kept = y & event;
        out.add(kept.is_empty() ? event : kept, l);
    }
    return out;
}

Qbba qbcr2_condition(const Qbba& qm, const Proposition& event, Qbcr2Diag* diag) {
    require_nonempty_event(event);
    if (qm.model() != event.model())
        throw model_mismatch_error("conditioning event from a different model");

    std::vector<Proposition> targets;  // prior focals within the event
    for (const auto& [z, l] : qm.masses())
        if (z.is_subset_of(event))
            targets.push_back(z);
    int q_f = static_cast<int>(targets.size());

    Qbcr2Diag local;
    local.focal_subset_count = q_f;
    bool split_happened = false;

    Qbba out(qm.model(), qm.scale());
    for (const auto& [y, l] : qm.masses()) {
        if (y.is_subset_of(event)) {
            out.add(y, l);
            continue;
        }
        Proposition kept = y & event;
        if (!kept.is_empty()) {
            out.add(kept, l);
        } else if (q_f > 0) {
            Label share = l / q_f;
            for (const Proposition& z : targets)
                out.add(z, share);
            local.floor_loss += l.index() - static_cast<long long>(q_f) * share.index();
            split_happened = true;
        } else {
            out.add(event, l);
        }
    }

    if (split_happened)
        local.event_received_share =
            std::any_of(targets.begin(), targets.end(),
                        [&](const Proposition& z) { return z == event; });
    if (diag)
        *diag = local;
    return out;
}

} // namespace bcond
