#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "bcond/proposition.hpp"

namespace bcond {

namespace {

// Frame order on atom subsets: compare the ascending atom-index sequences
// lexicographically, shorter prefix first.
bool frame_order_less(MintermMask a, MintermMask b) {
    while (a && b) {
        int ia = std::countr_zero(a);
        int ib = std::countr_zero(b);
        if (ia != ib)
            return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

std::string conjunction(MintermMask atoms, const Frame& frame) {
    std::string out;
    for (int i = 0; i < frame.size(); ++i) {
        if (!((atoms >> i) & 1u))
            continue;
        if (!out.empty())
            out += '&';
        out += frame.atom_name(i);
    }
    return out;
}

// Every region spelled out in full: atoms inside the region positive, the
// rest negated.
std::string minterm_fallback(const Proposition& p) {
    const Frame& frame = p.model()->frame();
    std::vector<MintermMask> regions = p.regions().regions();
    std::sort(regions.begin(), regions.end(), frame_order_less);

    std::string out;
    for (MintermMask m : regions) {
        if (!out.empty())
            out += '|';
        for (int i = 0; i < frame.size(); ++i) {
            if (i > 0)
                out += '&';
            if (!((m >> i) & 1u))
                out += '!';
            out += frame.atom_name(i);
        }
    }
    return out;
}

} // namespace

std::string render(const Proposition& p) {
    if (p.is_empty())
        return "∅";

    const Model& model = *p.model();
    int n = model.frame().size();
    MintermMask all = static_cast<MintermMask>((std::uint32_t(1) << n) - 1);
    std::vector<MintermMask> universe = model.universe().regions();

    // Candidate terms: intersections of atom subsets whose canonical region
    // set is nonempty and contained in p.
    struct Candidate {
        MintermMask atoms;
        RegionSet covers;
    };
    std::vector<Candidate> candidates;
    for (MintermMask s = 1; s <= all; ++s) {
        RegionSet covers(n);
        bool inside = true;
        for (MintermMask m : universe) {
            if ((m & s) != s)
                continue;
            if (!p.regions().test(m)) {
                inside = false;
                break;
            }
            covers.set(m);
        }
        if (inside && !covers.none())
            candidates.push_back({s, std::move(covers)});
    }

    RegionSet coverable(n);
    for (const auto& c : candidates)
        coverable |= c.covers;
    if (!p.regions().is_subset_of(coverable))
        return minterm_fallback(p);

    RegionSet uncovered = p.regions();
    std::vector<MintermMask> terms;
    while (!uncovered.none()) {
        const Candidate* best = nullptr;
        int best_gain = 0;
        for (const auto& c : candidates) {
            int gain = (c.covers & uncovered).count();
            if (gain == 0)
                continue;
            bool better =
                !best || gain > best_gain ||
                (gain == best_gain &&
                 (std::popcount(c.atoms) < std::popcount(best->atoms) ||
                  (std::popcount(c.atoms) == std::popcount(best->atoms) &&
                   frame_order_less(c.atoms, best->atoms))));
            if (better) {
                best = &c;
                best_gain = gain;
            }
        }
        terms.push_back(best->atoms);
        uncovered.subtract(best->covers);
    }

    std::sort(terms.begin(), terms.end(), frame_order_less);
    std::string out;
    for (MintermMask t : terms) {
        if (!out.empty())
            out += '|';
        out += conjunction(t, model.frame());
    }
    return out;
}

} // namespace bcond
