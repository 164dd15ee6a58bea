#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bcond/errors.hpp"

namespace bcond {

// A Venn region is identified by the exact set of atoms containing it, packed
// as a bitmask over atom indices. Valid regions are 1 .. 2^n - 1: every region
// lies inside at least one atom, so the union of all atoms is the universe.
using MintermMask = std::uint32_t;

constexpr int kMaxAtoms = 16;

class Frame {
public:
    explicit Frame(std::vector<std::string> atoms);

    int size() const noexcept { return static_cast<int>(atoms_.size()); }
    const std::string& atom_name(int index) const { return atoms_.at(index); }
    const std::vector<std::string>& atoms() const noexcept { return atoms_; }

    // -1 if the name is not an atom of this frame.
    int index_of(std::string_view name) const noexcept;

    static bool valid_atom_name(std::string_view name) noexcept;

private:
    std::vector<std::string> atoms_;
};

// hyper: propositions are built from atoms with union and intersection only.
// super: complement is additionally available (full Boolean algebra).
enum class Mode { hyper, super };

const char* to_string(Mode mode) noexcept;

// A set of Venn regions over a fixed frame, one bit per region mask. Bit
// position equals the region's mask value; bit 0 is never set.
class RegionSet {
public:
    explicit RegionSet(int atom_count);

    int atom_count() const noexcept { return atom_count_; }

    bool test(MintermMask m) const noexcept {
        return (words_[m >> 6] >> (m & 63)) & 1u;
    }
    void set(MintermMask m) noexcept { words_[m >> 6] |= std::uint64_t(1) << (m & 63); }
    void reset(MintermMask m) noexcept { words_[m >> 6] &= ~(std::uint64_t(1) << (m & 63)); }

    RegionSet& operator|=(const RegionSet& o) noexcept;
    RegionSet& operator&=(const RegionSet& o) noexcept;
    RegionSet& subtract(const RegionSet& o) noexcept;  // this \ o

    friend RegionSet operator|(RegionSet a, const RegionSet& b) { return a |= b; }
    friend RegionSet operator&(RegionSet a, const RegionSet& b) { return a &= b; }

    bool none() const noexcept;
    int count() const noexcept;
    bool is_subset_of(const RegionSet& o) const noexcept;
    bool intersects(const RegionSet& o) const noexcept;

    std::vector<MintermMask> regions() const;  // set bits, ascending

    friend bool operator==(const RegionSet& a, const RegionSet& b) noexcept {
        return a.words_ == b.words_;
    }
    friend bool operator!=(const RegionSet& a, const RegionSet& b) noexcept { return !(a == b); }
    friend bool operator<(const RegionSet& a, const RegionSet& b) noexcept {
        return a.words_ < b.words_;
    }

    // Big-endian hex of the bit block, leading zeros stripped, "0x" prefix.
    std::string to_hex() const;

private:
    int atom_count_;
    std::vector<std::uint64_t> words_;
};

class Model;
using ModelPtr = std::shared_ptr<const Model>;

// An immutable value: a canonical set of nonempty Venn regions under one model.
// Two propositions are equal exactly when they share the model object and the
// region set; set operations require the same model.
class Proposition {
public:
    const RegionSet& regions() const noexcept { return regions_; }
    const ModelPtr& model() const noexcept { return model_; }

    bool is_empty() const noexcept { return regions_.none(); }

    bool is_subset_of(const Proposition& other) const;
    bool intersects(const Proposition& other) const;

    friend Proposition operator|(const Proposition& a, const Proposition& b);
    friend Proposition operator&(const Proposition& a, const Proposition& b);

    // Relative complement against the nonempty regions; super mode only.
    Proposition complement() const;

    friend bool operator==(const Proposition& a, const Proposition& b) noexcept {
        return a.model_ == b.model_ && a.regions_ == b.regions_;
    }
    friend bool operator!=(const Proposition& a, const Proposition& b) noexcept {
        return !(a == b);
    }

private:
    friend class Model;
    Proposition(ModelPtr model, RegionSet regions)
        : model_(std::move(model)), regions_(std::move(regions)) {}

    ModelPtr model_;
    RegionSet regions_;
};

// Deterministic strict ordering by region set; use only within one model.
struct PropLess {
    bool operator()(const Proposition& a, const Proposition& b) const noexcept {
        return a.regions() < b.regions();
    }
};

// A frame plus its integrity constraints: the set of Venn regions declared
// empty. Immutable once built; propositions keep a shared reference to it.
class Model : public std::enable_shared_from_this<Model> {
public:
    static ModelPtr make(Frame frame, Mode mode,
                         const std::vector<MintermMask>& empty_minterms = {});

    // All atoms pairwise disjoint: every region with two or more atoms is empty.
    static ModelPtr shafer(Frame frame, Mode mode = Mode::hyper);

    const Frame& frame() const noexcept { return frame_; }
    Mode mode() const noexcept { return mode_; }
    const RegionSet& empty_regions() const noexcept { return empty_; }
    const RegionSet& universe() const noexcept { return universe_; }  // nonempty regions

    Proposition atom(int index) const;
    Proposition atom(std::string_view name) const;
    Proposition empty_prop() const;
    Proposition full() const;  // union of all atoms = all nonempty regions

    // Canonicalizes: regions declared empty are dropped.
    Proposition proposition(RegionSet regions) const;

private:
    Model(Frame frame, Mode mode, RegionSet empty, RegionSet universe);

    Frame frame_;
    Mode mode_;
    RegionSet empty_;
    RegionSet universe_;
};

// Deterministic minimal positive rendering: a union of atom-intersection terms
// covering the region set, chosen greedily (most regions covered, then fewest
// atoms, then frame order). When no complement-free cover exists the fallback
// spells each region as a full conjunction with '!' on the excluded atoms.
// The empty proposition renders as "∅".
std::string render(const Proposition& p);

} // namespace bcond
