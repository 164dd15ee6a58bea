#pragma once

#include <span>
#include <string>
#include <string_view>

#include "bcond/errors.hpp"
#include "bcond/rational.hpp"

namespace bcond {

// An ordered vocabulary of linguistic values L_0 .. L_max. Only the index of
// the top label matters for the arithmetic; the words themselves live with the
// user.
class LabelScale {
public:
    explicit LabelScale(int max_index) : max_index_(max_index) {
        if (max_index < 1)
            throw validation_error("label scale needs at least L0 and L1 (max index >= 1)");
    }

    int max_index() const noexcept { return max_index_; }

    friend bool operator==(LabelScale a, LabelScale b) noexcept {
        return a.max_index_ == b.max_index_;
    }
    friend bool operator!=(LabelScale a, LabelScale b) noexcept { return !(a == b); }

private:
    int max_index_;
};

class Label {
public:
    Label(int index, LabelScale scale) : index_(index), scale_(scale) {
        if (index < 0 || index > scale.max_index())
            throw validation_error("label index " + std::to_string(index) +
                                   " outside scale 0.." + std::to_string(scale.max_index()));
    }

    int index() const noexcept { return index_; }
    LabelScale scale() const noexcept { return scale_; }
    bool is_min() const noexcept { return index_ == 0; }
    bool is_max() const noexcept { return index_ == scale_.max_index(); }

    // Value equality; labels on different scales are simply never equal.
    friend bool operator==(const Label& a, const Label& b) noexcept {
        return a.scale_ == b.scale_ && a.index_ == b.index_;
    }
    friend bool operator!=(const Label& a, const Label& b) noexcept { return !(a == b); }

    // The total order; defined only within one scale.
    friend bool operator<(const Label& a, const Label& b) {
        require_same_scale(a, b, "order");
        return a.index_ < b.index_;
    }

    // Clamped addition: L_i + L_j = L_{i+j}, saturating at L_max.
    friend Label operator+(const Label& a, const Label& b) {
        require_same_scale(a, b, "add");
        int max = a.scale_.max_index();
        int sum = a.index_ + b.index_;
        return Label(sum > max ? max : sum, a.scale_);
    }

    // L_i x L_j = L_min{i,j}.
    friend Label operator*(const Label& a, const Label& b) {
        require_same_scale(a, b, "multiply");
        return Label(a.index_ < b.index_ ? a.index_ : b.index_, a.scale_);
    }

    // Scalar division, floor: L_i / j = L_[i/j].
    friend Label operator/(const Label& a, int j) {
        if (j <= 0)
            throw validation_error("label scalar division requires a positive divisor");
        return Label(a.index_ / j, a.scale_);
    }

private:
    static void require_same_scale(const Label& a, const Label& b, const char* op) {
        if (a.scale_ != b.scale_)
            throw scale_mismatch_error(std::string("cannot ") + op +
                                       " labels from different scales");
    }

    int index_;
    LabelScale scale_;
};

struct LabelFold {
    Label clamped;            // fold of clamped additions
    long long raw_index_sum;  // unclamped integer sum, for normalization diagnostics
};

// Clamped left fold over a nonempty sequence, all on one scale.
LabelFold sum_labels(std::span<const Label> labels);

// Equidistant-scale embedding into [0, 1]: L_i -> i / max_index, exact.
inline Rational to_unit(const Label& l) {
    return Rational(l.index(), l.scale().max_index());
}

std::string to_string(const Label& l);               // "L4"
Label parse_label(std::string_view text, LabelScale scale);

} // namespace bcond
