#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <dlrev/multipoly.hpp>
#include <dlrev/series.hpp>
#include <dlrev/transforms.hpp>

namespace dlrev {

// Letter i stands for s_i and weighs i - 1.
using Word = std::vector<int>;

long word_weight(const Word &w);
// Commutative image s_{i_1} ... s_{i_n} over letters prefix<i>.
MultiPoly word_monomial(const Word &w, const std::string &prefix = "s");

// Words of length n and weight -(k+1) whose prefixes of length h < n all
// weigh >= -k; their monomials make up [x^k] Q_n. Lexicographic order.
std::vector<Word> enum_words(std::size_t n, std::size_t k);
// Words of length n and weight -(k+1), without prefix condition.
std::vector<Word> enum_weighted_words(std::size_t n, std::size_t k);

bool is_luk_word(const Word &w);
// Whether w belongs to [x^k] Q_n for k = -weight - 1.
bool in_q_coefficient(const Word &w);

// Unique splitting of a word of [x^k] Q_n into k+1 Lukasiewicz words.
std::vector<Word> factorize_luk(const Word &w);

Word rotate_word(const Word &w, std::size_t start);

struct CyclicImage {
    std::size_t position; // n', 1-based place of the first letter of the source word
    Word product;         // the rearrangement lying in [x^k] Q_n
};

// (k', w) -> (n', luk): luk is the cyclic rearrangement of w in [x^k] Q_n
// whose k'-th Lukasiewicz factor contains the first letter of w.
CyclicImage cyclic_bijection(std::size_t k_prime, const Word &w);
// Inverse map; returns (k', w).
std::pair<std::size_t, Word> cyclic_bijection_inverse(const CyclicImage &image);
// All rotations of w that lie in [x^k] Q_n, as distinct start offsets.
std::vector<std::size_t> valid_rotations(const Word &w);

struct PlaneTree {
    std::vector<PlaneTree> children;

    std::size_t size() const;
    friend bool operator==(const PlaneTree &, const PlaneTree &) = default;
};

// Every node has zero or two children (left, right).
struct BinaryTree {
    std::vector<BinaryTree> children;

    static BinaryTree leaf() { return {}; }
    static BinaryTree node(BinaryTree left, BinaryTree right);
    bool is_leaf() const { return children.empty(); }
    const BinaryTree &left() const { return children.at(0); }
    const BinaryTree &right() const { return children.at(1); }
    std::size_t internal_nodes() const;
    friend bool operator==(const BinaryTree &, const BinaryTree &) = default;
};

PlaneTree word_to_tree(const Word &w);
// Preorder sequence of valences.
Word tree_to_word(const PlaneTree &t);

// s_k -> k opening parentheses and one closing one, last s_0 dropped.
std::string word_to_parens(const Word &w);
Word parens_to_word(const std::string &s);

// Canonical text keys: nested parentheses for plane trees, preorder
// N (internal node) / L (leaf) strings for binary trees.
std::string encode(const PlaneTree &t);
std::string encode(const BinaryTree &b);

std::vector<PlaneTree> enum_plane_trees(std::size_t n);   // n + 1 vertices
std::vector<BinaryTree> enum_binary_trees(std::size_t n); // n internal nodes

PlaneTree mirror(const PlaneTree &t);
BinaryTree mirror(const BinaryTree &b);

// Contraction of all left (resp. right) edges.
PlaneTree contract_left(const BinaryTree &b);
PlaneTree contract_right(const BinaryTree &b);
BinaryTree contract_left_inverse(const PlaneTree &t);
BinaryTree contract_right_inverse(const PlaneTree &t);

BinaryTree iota_right(const BinaryTree &b);
BinaryTree iota_left(const BinaryTree &b);
PlaneTree iota_right(const PlaneTree &t);
PlaneTree iota_left(const PlaneTree &t);

enum class TreeSide { Binary, Plane };

struct OrbitReport {
    std::size_t elements = 0;
    std::vector<std::vector<std::string>> orbits; // encoded trees
    std::size_t fixed_right = 0;
    std::size_t fixed_left = 0;
};

OrbitReport dihedral_orbits(std::size_t n, TreeSide side);

// Steps +1 (up), 0 (level), -1 (down).
using MotzkinPath = std::vector<int>;

bool is_motzkin(const MotzkinPath &path);
std::vector<MotzkinPath> enum_motzkin(std::size_t n);
// Product of p<h> for levels at height h and q<h> for descents from h+1.
MultiPoly motzkin_weight(const MotzkinPath &path);
// Same weight evaluated at a J-fraction (zero beyond its depth), without d0.
Rational motzkin_weight(const MotzkinPath &path, const JFraction<Rational> &jf);
std::vector<MotzkinPath> motzkin_prime_factorize(const MotzkinPath &path);

enum class LgvMode { NonIntersecting, Intersecting, All };

// d0^{k+1} times the signed sum over permutations sigma and path systems
// from (-alpha_i, 0) to (beta_sigma(i), 0), restricted by mode. Only
// k <= 2 and indices <= 4 are accepted.
Rational lgv_minor_oracle(const JFraction<Rational> &jf, const std::vector<std::size_t> &alpha,
                          const std::vector<std::size_t> &beta, LgvMode mode = LgvMode::NonIntersecting);

// Sum of the commutative images of enum_words(n, k).
MultiPoly word_coefficient_oracle(std::size_t n, std::size_t k);

// Generating series of Lukasiewicz words without letter 1, modulo t^order.
PolySeries reduced_luk_series(std::size_t order);
// q(t) = q_{s1=0}(t / (1 - t s1)) over letters s0.., modulo t^order.
bool reduced_word_series_check(std::size_t order);

} // namespace dlrev
