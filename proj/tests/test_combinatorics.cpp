#include "helpers.hpp"

#include <set>

#include <dlrev/combinatorics.hpp>

using namespace dlrev;
using testing::code_of;

namespace {

MultiPoly var(const std::string &name) { return MultiPoly::variable(name); }

// Independent membership test: every proper prefix weighs >= -k.
bool prefix_condition(const Word &w, long k)
{
    long acc = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        acc += w[i] - 1;
        if (acc < -k) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("words of [x^k] Q_n")
{
    CHECK(enum_words(3, 0) == std::vector<Word>{{1, 1, 0}, {2, 0, 0}});
    CHECK(enum_words(1, 0) == std::vector<Word>{{0}});
    CHECK(enum_words(2, 1) == std::vector<Word>{{0, 0}});
    CHECK(word_weight({2, 0, 0}) == -1);
    CHECK(word_monomial({2, 0, 0}) == var("s0").pow(2) * var("s2"));

    for (std::size_t n = 1; n <= 7; ++n) {
        for (std::size_t k = 0; k < n; ++k) {
            const auto weighted = enum_weighted_words(n, k);
            std::vector<Word> filtered;
            for (const auto &w : weighted) {
                CHECK(word_weight(w) == -static_cast<long>(k) - 1);
                if (prefix_condition(w, static_cast<long>(k))) {
                    filtered.push_back(w);
                }
            }
            CHECK(enum_words(n, k) == filtered);
            for (const auto &w : filtered) {
                CHECK(in_q_coefficient(w));
                CHECK(is_luk_word(w) == (k == 0));
            }
        }
    }
}

TEST_CASE("coefficient polynomials from words")
{
    CHECK(word_coefficient_oracle(3, 2) == var("s0").pow(3));
    CHECK(word_coefficient_oracle(3, 1) == Rational(2) * var("s0").pow(2) * var("s1"));
    CHECK(word_coefficient_oracle(3, 0) == var("s0") * var("s1").pow(2) + var("s0").pow(2) * var("s2"));
}

TEST_CASE("factorization into Lukasiewicz words")
{
    CHECK(factorize_luk({0, 3, 0, 0, 1, 0}) == std::vector<Word>{{0}, {3, 0, 0, 1, 0}});
    CHECK(factorize_luk({1, 2, 0, 0, 3, 0, 0, 0}) == std::vector<Word>{{1, 2, 0, 0}, {3, 0, 0, 0}});
    for (const auto &w : enum_words(5, 2)) {
        const auto parts = factorize_luk(w);
        CHECK(parts.size() == 3);
        Word joined;
        for (const auto &p : parts) {
            CHECK(is_luk_word(p));
            joined.insert(joined.end(), p.begin(), p.end());
        }
        CHECK(joined == w);
    }
    CHECK(code_of([] { factorize_luk({0, 2, 0}); }) == ErrorCode::NotFactorizable);
    CHECK(code_of([] { factorize_luk({}); }) == ErrorCode::NotFactorizable);
}

TEST_CASE("cyclic rearrangements")
{
    const Word w{0, 0, 1, 2, 0, 0, 3, 0};
    const auto first = cyclic_bijection(1, w);
    CHECK(first.position == 3);
    CHECK(first.product == Word{3, 0, 0, 0, 1, 2, 0, 0});
    const auto second = cyclic_bijection(2, w);
    CHECK(second.position == 7);
    CHECK(second.product == Word{1, 2, 0, 0, 3, 0, 0, 0});
    CHECK(cyclic_bijection_inverse(second) == std::make_pair(std::size_t{2}, w));
    CHECK(code_of([&] { cyclic_bijection(3, w); }) == ErrorCode::IndexOutOfRange);
    CHECK(code_of([] { cyclic_bijection(1, {1, 1}); }) == ErrorCode::ValidationError);

    // k = 0: exactly one rotation of each word of weight -1 is a Lukasiewicz word.
    std::mt19937 rng(50);
    for (int trial = 0; trial < 30; ++trial) {
        const auto words = enum_weighted_words(6, 0);
        const Word &u = words[std::uniform_int_distribution<std::size_t>(0, words.size() - 1)(rng)];
        const auto starts = valid_rotations(u);
        REQUIRE(starts.size() == 1);
        CHECK(is_luk_word(rotate_word(u, starts[0])));
    }
}

TEST_CASE("plane trees and parenthesizations")
{
    const Word w{2, 0, 1, 2, 2, 0, 0, 0};
    CHECK(word_to_parens(w) == "(())()(()(()))");
    CHECK(parens_to_word("(())()(()(()))") == w);
    CHECK(word_to_parens({0}).empty());
    CHECK(parens_to_word("") == Word{0});
    CHECK(code_of([] { parens_to_word("(()"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parens_to_word("a"); }) == ErrorCode::ParseError);

    const auto t = word_to_tree(w);
    CHECK(t.size() == 8);
    CHECK(tree_to_word(t) == w);
    CHECK(encode(mirror(mirror(t))) == encode(t));

    const std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42, 132};
    for (std::size_t n = 0; n < catalan.size(); ++n) {
        CHECK(enum_plane_trees(n).size() == catalan[n]);
        CHECK(enum_binary_trees(n).size() == catalan[n]);
    }
    CHECK(encode(BinaryTree::node(BinaryTree::leaf(), BinaryTree::leaf())) == "NLL");
}

TEST_CASE("contractions of binary trees")
{
    const auto b = BinaryTree::node(BinaryTree::node(BinaryTree::leaf(), BinaryTree::leaf()), BinaryTree::leaf());
    CHECK(b.internal_nodes() == 2);
    CHECK(contract_left(b).size() == 3);
    CHECK(contract_left_inverse(contract_left(b)) == b);
    CHECK(contract_right_inverse(contract_right(b)) == b);
    CHECK(encode(contract_left(b)) != encode(contract_right(b)));
    for (std::size_t n = 0; n <= 5; ++n) {
        for (const auto &tree : enum_binary_trees(n)) {
            CHECK(mirror(contract_right(tree)) == contract_left(mirror(tree)));
            CHECK(iota_right(iota_right(tree)) == tree);
        }
    }
    CHECK(code_of([] { dihedral_orbits(11, TreeSide::Binary); }) == ErrorCode::InstanceTooLarge);
    const auto report = dihedral_orbits(3, TreeSide::Binary);
    CHECK(report.elements == 5);
    std::size_t total = 0;
    for (const auto &orbit : report.orbits) {
        total += orbit.size();
    }
    CHECK(total == 5);
}

TEST_CASE("Motzkin paths")
{
    const auto paths = enum_motzkin(3);
    CHECK(paths.size() == 4);
    MultiPoly sum;
    for (const auto &p : paths) {
        CHECK(is_motzkin(p));
        sum += motzkin_weight(p);
    }
    const auto p0 = var("p0"), p1 = var("p1"), q0 = var("q0");
    CHECK(sum == p0.pow(3) + Rational(2) * p0 * q0 + p1 * q0);
    CHECK(enum_motzkin(0) == std::vector<MotzkinPath>{{}});
    CHECK_FALSE(is_motzkin({1, 1, -1}));
    CHECK_FALSE(is_motzkin({-1, 1}));

    // U U D L U L U D D D U D L L U U D U D D after a level step: six prime factors.
    const MotzkinPath long_path{0, 1, 1, -1, 0, 1, 0, 1, -1, -1, -1, 1, -1, 0, 0, 1, 1, -1, 1, -1, -1};
    REQUIRE(long_path.size() == 21);
    REQUIRE(is_motzkin(long_path));
    const auto factors = motzkin_prime_factorize(long_path);
    CHECK(factors.size() == 6);
    MotzkinPath joined;
    for (const auto &f : factors) {
        joined.insert(joined.end(), f.begin(), f.end());
    }
    CHECK(joined == long_path);
    const auto expected = p0.pow(3) * p1 * var("p2") * q0.pow(3) * var("q1").pow(4) * var("q2");
    CHECK(motzkin_weight(long_path) == expected);
    CHECK(code_of([] { motzkin_prime_factorize({1, 1}); }) == ErrorCode::ValidationError);
}

TEST_CASE("LGV oracle on small instances")
{
    const JFraction<Rational> jf{Rational(2), {Rational(1), Rational(3), Rational(-1)}, {Rational(5), Rational(7)}};
    // k = 0: a single path from -a to b has total length a + b.
    for (std::size_t a = 0; a <= 2; ++a) {
        for (std::size_t b = 0; b <= 2; ++b) {
            Rational sum(0);
            for (const auto &p : enum_motzkin(a + b)) {
                sum += motzkin_weight(p, jf);
            }
            CHECK(lgv_minor_oracle(jf, {a}, {b}) == jf.d0 * sum);
        }
    }
    // Intersecting systems cancel under the sign-reversing swap, so the
    // non-intersecting sum is the whole signed sum.
    CHECK(lgv_minor_oracle(jf, {0, 1}, {0, 1}, LgvMode::Intersecting) == Rational(0));
    CHECK(lgv_minor_oracle(jf, {0, 1}, {0, 1}, LgvMode::All) == lgv_minor_oracle(jf, {0, 1}, {0, 1}));
    CHECK(lgv_minor_oracle(jf, {0, 1}, {0, 1}) == principal_minor_product(jf, 1));
    CHECK(code_of([&] { lgv_minor_oracle(jf, {0, 1, 2, 3}, {0, 1, 2, 3}); }) == ErrorCode::InstanceTooLarge);
    CHECK(code_of([&] { lgv_minor_oracle(jf, {0, 5}, {0, 1}); }) == ErrorCode::InstanceTooLarge);
}

TEST_CASE("series of Lukasiewicz words without s1")
{
    const auto r = reduced_luk_series(6);
    const auto s0 = var("s0"), s2 = var("s2"), s3 = var("s3");
    CHECK(r[0].is_zero());
    CHECK(r[1] == s0);
    CHECK(r[2].is_zero());
    CHECK(r[3] == s0.pow(2) * s2);
    CHECK(r[4] == s0.pow(3) * s3);
    CHECK(reduced_word_series_check(7));
    CHECK(code_of([] { reduced_word_series_check(1); }) == ErrorCode::BadRange);
}
