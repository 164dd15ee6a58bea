#include "bcond/expression.hpp"

#include <algorithm>
#include <cctype>

namespace bcond {

namespace {

class Parser {
public:
    Parser(std::string_view text, const Frame& frame) : text_(text), frame_(frame) {}

    std::unique_ptr<ExprNode> parse() {
        auto root = parse_union();
        skip_ws();
        if (pos_ < text_.size())
            fail("unexpected trailing input");
        return root;
    }

    const std::vector<int>& atoms() const { return atoms_; }
    bool saw_complement() const { return saw_complement_; }

private:
    std::unique_ptr<ExprNode> parse_union() {
        auto node = parse_intersection();
        while (peek() == '|') {
            std::size_t at = pos_;
            ++pos_;
            auto rhs = parse_intersection();
            auto parent = std::make_unique<ExprNode>();
            parent->kind = ExprKind::join;
            parent->pos = at;
            parent->left = std::move(node);
            parent->right = std::move(rhs);
            node = std::move(parent);
        }
        return node;
    }

    std::unique_ptr<ExprNode> parse_intersection() {
        auto node = parse_factor();
        while (peek() == '&') {
            std::size_t at = pos_;
            ++pos_;
            auto rhs = parse_factor();
            auto parent = std::make_unique<ExprNode>();
            parent->kind = ExprKind::meet;
            parent->pos = at;
            parent->left = std::move(node);
            parent->right = std::move(rhs);
            node = std::move(parent);
        }
        return node;
    }

    std::unique_ptr<ExprNode> parse_factor() {
        char c = peek();
        if (c == '!') {
            std::size_t at = pos_;
            ++pos_;
            saw_complement_ = true;
            auto node = std::make_unique<ExprNode>();
            node->kind = ExprKind::negate;
            node->pos = at;
            node->left = parse_factor();
            return node;
        }
        if (c == '(') {
            ++pos_;
            auto node = parse_union();
            if (peek() != ')')
                fail("expected ')'");
            ++pos_;
            return node;
        }
        return parse_atom();
    }

    std::unique_ptr<ExprNode> parse_atom() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= text_.size())
            fail("expected an atom or '('");
        char head = text_[pos_];
        if (!std::isalpha(static_cast<unsigned char>(head)) && head != '_')
            fail("expected an atom or '('");
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                ++pos_;
            else
                break;
        }
        std::string_view name = text_.substr(start, pos_ - start);
        int index = frame_.index_of(name);
        if (index < 0)
            throw parse_error("unknown atom '" + std::string(name) + "'", start);
        if (!std::binary_search(atoms_.begin(), atoms_.end(), index))
            atoms_.insert(std::lower_bound(atoms_.begin(), atoms_.end(), index), index);
        auto node = std::make_unique<ExprNode>();
        node->kind = ExprKind::atom;
        node->atom = index;
        node->pos = start;
        return node;
    }

    // Returns the next significant character without consuming it; '\0' at end.
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw parse_error(what, pos_);
    }

    std::string_view text_;
    const Frame& frame_;
    std::size_t pos_ = 0;
    std::vector<int> atoms_;
    bool saw_complement_ = false;
};

RegionSet evaluate(const ExprNode& node, const Model& model) {
    switch (node.kind) {
    case ExprKind::atom: {
        int n = model.frame().size();
        MintermMask all = static_cast<MintermMask>((std::uint32_t(1) << n) - 1);
        RegionSet r(n);
        for (MintermMask m = 1; m <= all; ++m)
            if ((m >> node.atom) & 1u)
                r.set(m);
        r &= model.universe();
        return r;
    }
    case ExprKind::join: {
        RegionSet l = evaluate(*node.left, model);
        return l |= evaluate(*node.right, model);
    }
    case ExprKind::meet: {
        RegionSet l = evaluate(*node.left, model);
        return l &= evaluate(*node.right, model);
    }
    case ExprKind::negate: {
        if (model.mode() != Mode::super)
            throw mode_error("complement at offset " + std::to_string(node.pos) +
                             " requires a super (Boolean) model");
        RegionSet r = model.universe();
        r.subtract(evaluate(*node.left, model));
        return r;
    }
    }
    throw error("corrupt expression node");
}

} // namespace

Expression parse_expression(std::string_view text, const Frame& frame) {
    std::size_t significant = 0;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            ++significant;
    if (significant == 0)
        throw parse_error("empty expression", 0);

    Parser parser(text, frame);
    auto root = parser.parse();

    Expression expr;
    expr.root_ = std::shared_ptr<const ExprNode>(root.release());
    expr.source_ = std::string(text);
    expr.atoms_ = parser.atoms();
    expr.has_complement_ = parser.saw_complement();
    expr.frame_size_ = frame.size();
    return expr;
}

Proposition canonicalize(const Expression& expr, const ModelPtr& model) {
    if (expr.frame_size() != model->frame().size())
        throw model_mismatch_error("expression was parsed against a different frame");
    return model->proposition(evaluate(expr.root(), *model));
}

} // namespace bcond
