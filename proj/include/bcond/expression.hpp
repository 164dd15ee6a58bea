#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bcond/proposition.hpp"

namespace bcond {

// Grammar:
//   expr   := term ('|' term)*
//   term   := factor ('&' factor)*
//   factor := '!' factor | '(' expr ')' | atom
// '!' binds tightest, then '&', then '|'. Atoms are identifiers.
enum class ExprKind { atom, join, meet, negate };

struct ExprNode {
    ExprKind kind;
    int atom = -1;         // atom index for ExprKind::atom
    std::size_t pos = 0;   // source offset of the node's first token
    std::unique_ptr<ExprNode> left;
    std::unique_ptr<ExprNode> right;  // null for negate
};

class Expression {
public:
    const ExprNode& root() const noexcept { return *root_; }
    const std::string& source() const noexcept { return source_; }

    // Atom indices occurring syntactically, sorted, unique. Canonicalization
    // may eliminate an atom semantically; this set never changes.
    const std::vector<int>& atoms() const noexcept { return atoms_; }

    bool has_complement() const noexcept { return has_complement_; }
    int frame_size() const noexcept { return frame_size_; }

private:
    friend Expression parse_expression(std::string_view, const Frame&);
    Expression() = default;

    std::shared_ptr<const ExprNode> root_;
    std::string source_;
    std::vector<int> atoms_;
    bool has_complement_ = false;
    int frame_size_ = 0;
};

// Throws parse_error with the offending offset on syntax errors and unknown
// atoms. Complement is accepted here; mode enforcement happens when the
// expression is canonicalized against a model.
Expression parse_expression(std::string_view text, const Frame& frame);

// Evaluates the tree over the Venn regions and drops regions the model
// declares empty. Complement nodes under a hyper model raise mode_error.
Proposition canonicalize(const Expression& expr, const ModelPtr& model);

} // namespace bcond
