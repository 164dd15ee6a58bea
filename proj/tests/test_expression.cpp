#include <doctest.h>

#include "bcond/expression.hpp"

using namespace bcond;

namespace {

Frame abcd() { return Frame({"A", "B", "C", "D"}); }

} // namespace

TEST_CASE("precedence: & binds tighter than |") {
    Expression e = parse_expression("A|B&C", abcd());
    const ExprNode& root = e.root();
    REQUIRE(root.kind == ExprKind::join);
    CHECK(root.left->kind == ExprKind::atom);
    CHECK(root.left->atom == 0);
    REQUIRE(root.right->kind == ExprKind::meet);
    CHECK(root.right->left->atom == 1);
    CHECK(root.right->right->atom == 2);
}

TEST_CASE("complement and parentheses") {
    Expression e = parse_expression("!(D)", abcd());
    REQUIRE(e.root().kind == ExprKind::negate);
    CHECK(e.root().left->kind == ExprKind::atom);
    CHECK(e.root().left->atom == 3);
    CHECK(e.has_complement());

    Expression nested = parse_expression("!!A", abcd());
    CHECK(nested.root().kind == ExprKind::negate);
    CHECK(nested.root().left->kind == ExprKind::negate);
}

TEST_CASE("syntactic atom set") {
    Expression e = parse_expression("A | (C & A)", abcd());
    CHECK(e.atoms() == std::vector<int>{0, 2});
    CHECK_FALSE(e.has_complement());
}

TEST_CASE("error offsets") {
    auto offset_of = [](const char* text) {
        try {
            parse_expression(text, abcd());
        } catch (const parse_error& e) {
            return e.offset();
        }
        return std::size_t(-1);
    };
    CHECK(offset_of("A |") == 3);
    CHECK(offset_of("A & | B") == 4);
    CHECK(offset_of("(A") == 2);
    CHECK(offset_of("A B") == 2);
    CHECK(offset_of("A|X") == 2);  // unknown atom
    CHECK(offset_of("") == 0);
    CHECK(offset_of("   ") == 0);
}

TEST_CASE("whitespace is insignificant") {
    Frame f = abcd();
    ModelPtr m = Model::make(f, Mode::hyper);
    CHECK(canonicalize(parse_expression(" A  |\tB ", f), m) ==
          canonicalize(parse_expression("A|B", f), m));
}

TEST_CASE("expressions stick to their frame") {
    Expression e = parse_expression("A|B", abcd());
    ModelPtr other = Model::make(Frame({"A", "B"}), Mode::hyper);
    CHECK_THROWS_AS(canonicalize(e, other), model_mismatch_error);
}
