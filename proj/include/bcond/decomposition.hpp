#pragma once

#include <map>
#include <set>
#include <vector>

#include "bcond/expression.hpp"
#include "bcond/proposition.hpp"

namespace bcond {

// The three-way split of the nonempty propositions induced by a conditioning
// event A:
//   D1 — parts of A;
//   D2 — hyper: generated by the atoms outside s(A) under union/intersection;
//        super: parts of the complement of A;
//   D3 — everything else.
enum class DecompositionClass { d1, d2, d3 };

const char* to_string(DecompositionClass c) noexcept;

// Reconstruction test: is y a union/intersection combination of the given
// atoms under its model? Each region of y must be covered by the intersection
// of exactly the generator atoms containing it, and those intersections must
// add up to y again. Equivalent to membership in the generated sub-lattice,
// linear in |regions| * |atoms| instead of Dedekind-exponential.
bool generated_by(const Proposition& y, const std::vector<int>& generator_atoms);

class DecompositionContext {
public:
    // event must be nonempty; event_atoms is the syntactic atom set s(A) of
    // the event's source expression (unused in super mode).
    DecompositionContext(Proposition event, std::vector<int> event_atoms);

    static DecompositionContext from_expression(const Expression& expr, const ModelPtr& model);

    const Proposition& event() const noexcept { return event_; }
    const ModelPtr& model() const noexcept { return event_.model(); }
    const std::vector<int>& event_atoms() const noexcept { return event_atoms_; }
    const std::vector<int>& outside_atoms() const noexcept { return outside_atoms_; }

    DecompositionClass classify(const Proposition& y) const;

    std::map<Proposition, DecompositionClass, PropLess>
    decompose(const std::vector<Proposition>& focals) const;

private:
    Proposition event_;
    std::vector<int> event_atoms_;
    std::vector<int> outside_atoms_;  // frame atoms minus s(A)
};

// Fixpoint closure of the atom propositions under pairwise union and
// intersection, canonical, empty excluded. Dedekind growth limits the
// generator count to 5. Used as the reference oracle for generated_by.
std::set<Proposition, PropLess> enumerate_closure(const std::vector<int>& generator_atoms,
                                                  const ModelPtr& model);

} // namespace bcond
