#pragma once

#include <utility>

#include "bcond/mass.hpp"

namespace bcond {

struct CombineResult {
    Bba combined;
    Rational conflict;  // K, the mass on empty intersections
};

// Dempster's rule: m12(X) = sum over Y ∩ Z = X of m1(Y) m2(Z) / (1 - K).
// Throws total_conflict_error when K = 1.
CombineResult dempster_combine(const Bba& m1, const Bba& m2);

// Conditioning by combining with the point mass on the event.
Bba scr_condition(const Bba& m, const Proposition& event);

// Proportional-redistribution conditioning. Mass outside the event moves to
// its parts: proportionally onto the prior focals inside W when any exist,
// onto W ∩ A when W still meets the event, and spread over all focals inside
// the event otherwise. When no prior mass lies inside the event at all the
// result is the point mass on the event.
Bba bcr17_condition(const Bba& m, const Proposition& event);

// Prudent qualitative conditioning: each focal Y outside the event transfers
// to Y ∩ A, falling back to A itself when the intersection is empty.
Qbba qbcr1_condition(const Qbba& qm, const Proposition& event);

struct Qbcr2Diag {
    int focal_subset_count = 0;        // targets of the uniform split
    long long floor_loss = 0;          // index units lost to floor division
    bool event_received_share = false; // the event itself was a split target
};

// Like qbcr1 but the fallback splits the mass uniformly (floor scalar
// division) over the prior focals contained in the event; the split counts
// and any floor loss are reported through diag, never repaired.
Qbba qbcr2_condition(const Qbba& qm, const Proposition& event, Qbcr2Diag* diag = nullptr);

} // namespace bcond
