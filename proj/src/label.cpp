#include "bcond/label.hpp"

#include <cctype>

namespace bcond {

LabelFold sum_labels(std::span<const Label> labels) {
    if (labels.empty())
        throw validation_error("label sum over an empty collection");
    Label acc = labels[0];
    long long raw = labels[0].index();
    for (std::size_t i = 1; i < labels.size(); ++i) {
        acc = acc + labels[i];
        raw += labels[i].index();
    }
    return LabelFold{acc, raw};
}

std::string to_string(const Label& l) {
    return "L" + std::to_string(l.index());
}

Label parse_label(std::string_view text, LabelScale scale) {
    if (text.size() < 2 || (text[0] != 'L' && text[0] != 'l'))
        throw validation_error("bad label '" + std::string(text) + "', expected L<k>");
    int index = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw validation_error("bad label '" + std::string(text) + "', expected L<k>");
        index = index * 10 + (text[i] - '0');
        if (index > scale.max_index())
            throw validation_error("label '" + std::string(text) + "' above the scale top L" +
                                   std::to_string(scale.max_index()));
    }
    return Label(index, scale);
}

} // namespace bcond
