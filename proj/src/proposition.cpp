#include "bcond/proposition.hpp"

#include <bit>
#include <cctype>
#include <unordered_set>

namespace bcond {

// --- Frame ---------------------------------------------------------------

bool Frame::valid_atom_name(std::string_view name) noexcept {
    if (name.empty())
        return false;
    auto head = static_cast<unsigned char>(name[0]);
    if (!std::isalpha(head) && name[0] != '_')
        return false;
    for (char c : name.substr(1)) {
        auto u = static_cast<unsigned char>(c);
        if (!std::isalnum(u) && c != '_')
            return false;
    }
    return true;
}

Frame::Frame(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty())
        throw validation_error("a frame needs at least one atom");
    if (static_cast<int>(atoms_.size()) > kMaxAtoms)
        throw capacity_error("frames are limited to " + std::to_string(kMaxAtoms) + " atoms");
    std::unordered_set<std::string_view> seen;
    for (const auto& a : atoms_) {
        if (!valid_atom_name(a))
            throw validation_error("bad atom name '" + a + "'");
        if (!seen.insert(a).second)
            throw validation_error("duplicate atom '" + a + "'");
    }
}

int Frame::index_of(std::string_view name) const noexcept {
    for (int i = 0; i < size(); ++i)
        if (atoms_[static_cast<std::size_t>(i)] == name)
            return i;
    return -1;
}

const char* to_string(Mode mode) noexcept {
    return mode == Mode::hyper ? "hyper" : "super";
}

// --- RegionSet -------------------------------------------------------------

RegionSet::RegionSet(int atom_count) : atom_count_(atom_count) {
    std::size_t bits = std::size_t(1) << atom_count;
    words_.assign((bits + 63) / 64, 0);
}

RegionSet& RegionSet::operator|=(const RegionSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= o.words_[i];
    return *this;
}

RegionSet& RegionSet::operator&=(const RegionSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= o.words_[i];
    return *this;
}

RegionSet& RegionSet::subtract(const RegionSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~o.words_[i];
    return *this;
}

bool RegionSet::none() const noexcept {
    for (auto w : words_)
        if (w)
            return false;
    return true;
}

int RegionSet::count() const noexcept {
    int total = 0;
    for (auto w : words_)
        total += std::popcount(w);
    return total;
}

bool RegionSet::is_subset_of(const RegionSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i])
            return false;
    return true;
}

bool RegionSet::intersects(const RegionSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i])
            return true;
    return false;
}

std::vector<MintermMask> RegionSet::regions() const {
    std::vector<MintermMask> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w) {
            int bit = std::countr_zero(w);
            out.push_back(static_cast<MintermMask>(wi * 64 + static_cast<std::size_t>(bit)));
            w &= w - 1;
        }
    }
    return out;
}

std::string RegionSet::to_hex() const {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    bool started = false;
    for (std::size_t i = words_.size(); i-- > 0;) {
        for (int shift = 60; shift >= 0; shift -= 4) {
            int nibble = static_cast<int>((words_[i] >> shift) & 0xf);
            if (!started && nibble == 0)
                continue;
            started = true;
            out += digits[nibble];
        }
    }
    if (!started)
        out = "0";
    return "0x" + out;
}

// --- Proposition -----------------------------------------------------------

namespace {

void require_same_model(const Proposition& a, const Proposition& b) {
    if (a.model() != b.model())
        throw model_mismatch_error("propositions belong to different models");
}

} // namespace

bool Proposition::is_subset_of(const Proposition& other) const {
    require_same_model(*this, other);
    return regions_.is_subset_of(other.regions_);
}

bool Proposition::intersects(const Proposition& other) const {
    require_same_model(*this, other);
    return regions_.intersects(other.regions_);
}

Proposition operator|(const Proposition& a, const Proposition& b) {
    require_same_model(a, b);
    return Proposition(a.model_, a.regions_ | b.regions_);
}

Proposition operator&(const Proposition& a, const Proposition& b) {
    require_same_model(a, b);
    return Proposition(a.model_, a.regions_ & b.regions_);
}

Proposition Proposition::complement() const {
    if (model_->mode() != Mode::super)
        throw mode_error("complement requires a super (Boolean) model");
    RegionSet r = model_->universe();
    r.subtract(regions_);
    return Proposition(model_, std::move(r));
}

// --- Model -----------------------------------------------------------------

Model::Model(Frame frame, Mode mode, RegionSet empty, RegionSet universe)
    : frame_(std::move(frame)), mode_(mode), empty_(std::move(empty)),
      universe_(std::move(universe)) {}

ModelPtr Model::make(Frame frame, Mode mode, const std::vector<MintermMask>& empty_minterms) {
    int n = frame.size();
    MintermMask all = static_cast<MintermMask>((std::uint32_t(1) << n) - 1);

    RegionSet empty(n);
    for (MintermMask m : empty_minterms) {
        if (m == 0 || m > all)
            throw validation_error("empty-minterm mask out of range");
        empty.set(m);
    }

    RegionSet universe(n);
    for (MintermMask m = 1; m <= all; ++m)
        if (!empty.test(m))
            universe.set(m);
    if (universe.none())
        throw validation_error("all Venn regions are declared empty; the frame itself is empty");

    return ModelPtr(new Model(std::move(frame), mode, std::move(empty), std::move(universe)));
}

ModelPtr Model::shafer(Frame frame, Mode mode) {
    int n = frame.size();
    MintermMask all = static_cast<MintermMask>((std::uint32_t(1) << n) - 1);
    std::vector<MintermMask> empties;
    for (MintermMask m = 1; m <= all; ++m)
        if (std::popcount(m) >= 2)
            empties.push_back(m);
    return make(std::move(frame), mode, empties);
}

Proposition Model::atom(int index) const {
    if (index < 0 || index >= frame_.size())
        throw validation_error("atom index out of range");
    int n = frame_.size();
    MintermMask all = static_cast<MintermMask>((std::uint32_t(1) << n) - 1);
    RegionSet r(n);
    for (MintermMask m = 1; m <= all; ++m)
        if ((m >> index) & 1u)
            r.set(m);
    r &= universe_;
    return Proposition(shared_from_this(), std::move(r));
}

Proposition Model::atom(std::string_view name) const {
    int index = frame_.index_of(name);
    if (index < 0)
        throw validation_error("unknown atom '" + std::string(name) + "'");
    return atom(index);
}

Proposition Model::empty_prop() const {
    return Proposition(shared_from_this(), RegionSet(frame_.size()));
}

Proposition Model::full() const {
    return Proposition(shared_from_this(), universe_);
}

Proposition Model::proposition(RegionSet regions) const {
    if (regions.atom_count() != frame_.size())
        throw validation_error("region set built for a different frame size");
    regions &= universe_;
    return Proposition(shared_from_this(), std::move(regions));
}

} // namespace bcond
