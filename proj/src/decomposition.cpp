#include "bcond/decomposition.hpp"

#include <algorithm>

namespace bcond {

const char* to_string(DecompositionClass c) noexcept {
    switch (c) {
    case DecompositionClass::d1: return "D1";
    case DecompositionClass::d2: return "D2";
    case DecompositionClass::d3: return "D3";
    }
    return "?";
}

bool generated_by(const Proposition& y, const std::vector<int>& generator_atoms) {
    const ModelPtr& model = y.model();
    int n = model->frame().size();

    std::vector<RegionSet> atom_regions;
    atom_regions.reserve(generator_atoms.size());
    for (int a : generator_atoms)
        atom_regions.push_back(model->atom(a).regions());

    // The smallest generated superset of y: for each region, the intersection
    // of every generator atom containing it. y is generated iff that union
    // collapses back onto y.
    RegionSet rebuilt(n);
    for (MintermMask m : y.regions().regions()) {
        RegionSet term(n);
        bool covered = false;
        for (const RegionSet& atom : atom_regions) {
            if (!atom.test(m))
                continue;
            if (!covered) {
                term = atom;
                covered = true;
            } else {
                term &= atom;
            }
        }
        if (!covered)
            return false;
        rebuilt |= term;
    }
    return rebuilt == y.regions();
}

DecompositionContext::DecompositionContext(Proposition event, std::vector<int> event_atoms)
    : event_(std::move(event)), event_atoms_(std::move(event_atoms)) {
    if (event_.is_empty())
        throw impossible_problem_error("conditioning event is empty under model");
    std::sort(event_atoms_.begin(), event_atoms_.end());
    event_atoms_.erase(std::unique(event_atoms_.begin(), event_atoms_.end()),
                       event_atoms_.end());
    for (int i = 0; i < event_.model()->frame().size(); ++i)
        if (!std::binary_search(event_atoms_.begin(), event_atoms_.end(), i))
            outside_atoms_.push_back(i);
}

DecompositionContext DecompositionContext::from_expression(const Expression& expr,
                                                           const ModelPtr& model) {
    return DecompositionContext(canonicalize(expr, model), expr.atoms());
}

DecompositionClass DecompositionContext::classify(const Proposition& y) const {
    if (y.model() != event_.model())
        throw model_mismatch_error("classification under a different model");
    if (y.is_empty())
        throw validation_error("the empty proposition has no decomposition class");

    if (y.is_subset_of(event_))
        return DecompositionClass::d1;

    if (event_.model()->mode() == Mode::super) {
        if (!y.intersects(event_))
            return DecompositionClass::d2;
    } else if (generated_by(y, outside_atoms_)) {
        return DecompositionClass::d2;
    }
    return DecompositionClass::d3;
}

std::map<Proposition, DecompositionClass, PropLess>
DecompositionContext::decompose(const std::vector<Proposition>& focals) const {
    std::map<Proposition, DecompositionClass, PropLess> out;
    for (const Proposition& f : focals)
        out.emplace(f, classify(f));
    return out;
}

std::set<Proposition, PropLess> enumerate_closure(const std::vector<int>& generator_atoms,
                                                  const ModelPtr& model) {
    if (generator_atoms.size() > 5)
        throw capacity_error("closure enumeration is limited to 5 generator atoms");

    std::set<Proposition, PropLess> closure;
    for (int a : generator_atoms) {
        Proposition p = model->atom(a);
        if (!p.is_empty())
            closure.insert(p);
    }

    std::vector<Proposition> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
        std::vector<Proposition> fresh;
        std::vector<Proposition> all(closure.begin(), closure.end());
        for (const Proposition& a : frontier) {
            for (const Proposition& b : all) {
                for (Proposition c : {a | b, a & b}) {
                    if (c.is_empty())
                        continue;
                    if (closure.insert(c).second)
                        fresh.push_back(std::move(c));
                }
            }
        }
        frontier = std::move(fresh);
    }
    return closure;
}

} // namespace bcond
