#include <dlrev/combinatorics.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace dlrev {

long word_weight(const Word &w)
{
    long total = 0;
    for (int i : w) {
        total += i - 1;
    }
    return total;
}

MultiPoly word_monomial(const Word &w, const std::string &prefix)
{
    std::map<std::string, std::uint32_t> powers;
    for (int i : w) {
        ++powers[prefix + std::to_string(i)];
    }
    return MultiPoly::monomial(Rational(1), powers);
}

namespace {

void grow_words(std::size_t n, long k, bool prefix_condition, Word &cur, long weight, std::vector<Word> &out)
{
    const std::size_t h = cur.size();
    if (h == n) {
        if (weight == -(k + 1)) {
            out.push_back(cur);
        }
        return;
    }
    const long remaining = static_cast<long>(n - h);
    // The remaining letters each weigh at least -1.
    if (weight - remaining > -(k + 1)) {
        return;
    }
    for (long i = 0;; ++i) {
        const long next = weight + i - 1;
        if (next - (remaining - 1) > -(k + 1)) {
            break;
        }
        if (prefix_condition && h + 1 < n && next < -k) {
            continue;
        }
        cur.push_back(static_cast<int>(i));
        grow_words(n, k, prefix_condition, cur, next, out);
        cur.pop_back();
    }
}

std::vector<std::size_t> factor_lengths(const Word &w)
{
    std::vector<std::size_t> lengths;
    long weight = 0;
    long target = -1;
    std::size_t start = 0;
    for (std::size_t h = 0; h < w.size(); ++h) {
        weight += w[h] - 1;
        if (weight == target) {
            lengths.push_back(h + 1 - start);
            start = h + 1;
            --target;
        }
    }
    return lengths;
}

} // namespace

std::vector<Word> enum_words(std::size_t n, std::size_t k)
{
    std::vector<Word> out;
    if (n == 0) {
        return out;
    }
    Word cur;
    grow_words(n, static_cast<long>(k), true, cur, 0, out);
    return out;
}

std::vector<Word> enum_weighted_words(std::size_t n, std::size_t k)
{
    std::vector<Word> out;
    if (n == 0) {
        return out;
    }
    Word cur;
    grow_words(n, static_cast<long>(k), false, cur, 0, out);
    return out;
}

bool in_q_coefficient(const Word &w)
{
    if (w.empty()) {
        return false;
    }
    const long total = word_weight(w);
    if (total > -1) {
        return false;
    }
    const long k = -total - 1;
    long weight = 0;
    for (std::size_t h = 0; h + 1 < w.size(); ++h) {
        if (w[h] < 0) {
            return false;
        }
        weight += w[h] - 1;
        if (weight < -k) {
            return false;
        }
    }
    return w.back() >= 0;
}

bool is_luk_word(const Word &w)
{
    return in_q_coefficient(w) && word_weight(w) == -1;
}

std::vector<Word> factorize_luk(const Word &w)
{
    if (!in_q_coefficient(w)) {
        throw Error(ErrorCode::NotFactorizable, "word violates the prefix condition or has weight >= 0");
    }
    std::vector<Word> out;
    auto it = w.begin();
    for (std::size_t len : factor_lengths(w)) {
        out.emplace_back(it, it + static_cast<long>(len));
        it += static_cast<long>(len);
    }
    return out;
}

Word rotate_word(const Word &w, std::size_t start)
{
    Word r;
    r.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        r.push_back(w[(start + i) % w.size()]);
    }
    return r;
}

std::vector<std::size_t> valid_rotations(const Word &w)
{
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < w.size(); ++r) {
        if (in_q_coefficient(rotate_word(w, r))) {
            out.push_back(r);
        }
    }
    return out;
}

namespace {

std::size_t factor_index_of(const Word &luk, std::size_t pos)
{
    std::size_t end = 0;
    std::size_t idx = 0;
    for (std::size_t len : factor_lengths(luk)) {
        end += len;
        if (pos < end) {
            return idx;
        }
        ++idx;
    }
    throw Error(ErrorCode::IndexOutOfRange, "position past the last factor");
}

} // namespace

CyclicImage cyclic_bijection(std::size_t k_prime, const Word &w)
{
    const long total = word_weight(w);
    if (w.empty() || total > -1 || std::any_of(w.begin(), w.end(), [](int i) { return i < 0; })) {
        throw Error(ErrorCode::ValidationError, "need a nonempty word of negative weight");
    }
    const auto k = static_cast<std::size_t>(-total - 1);
    if (k_prime < 1 || k_prime > k + 1) {
        throw Error(ErrorCode::IndexOutOfRange, "k' must lie in 1..k+1");
    }
    const std::size_t n = w.size();
    for (std::size_t r : valid_rotations(w)) {
        Word luk = rotate_word(w, r);
        const std::size_t pos = (n - r) % n;
        if (factor_index_of(luk, pos) == k_prime - 1) {
            return {pos + 1, std::move(luk)};
        }
    }
    throw Error(ErrorCode::ValidationError, "internal: no cyclic rearrangement found");
}

std::pair<std::size_t, Word> cyclic_bijection_inverse(const CyclicImage &image)
{
    if (!in_q_coefficient(image.product)) {
        throw Error(ErrorCode::NotFactorizable, "image is not a product of Lukasiewicz words");
    }
    if (image.position < 1 || image.position > image.product.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "n' must lie in 1..n");
    }
    const std::size_t pos = image.position - 1;
    return {factor_index_of(image.product, pos) + 1, rotate_word(image.product, pos)};
}

std::size_t PlaneTree::size() const
{
    std::size_t total = 1;
    for (const auto &c : children) {
        total += c.size();
    }
    return total;
}

BinaryTree BinaryTree::node(BinaryTree left, BinaryTree right)
{
    BinaryTree b;
    b.children.reserve(2);
    b.children.push_back(std::move(left));
    b.children.push_back(std::move(right));
    return b;
}

std::size_t BinaryTree::internal_nodes() const
{
    if (is_leaf()) {
        return 0;
    }
    return 1 + left().internal_nodes() + right().internal_nodes();
}

namespace {

PlaneTree parse_tree(const Word &w, std::size_t &pos)
{
    PlaneTree t;
    const int degree = w[pos++];
    for (int i = 0; i < degree; ++i) {
        t.children.push_back(parse_tree(w, pos));
    }
    return t;
}

void preorder(const PlaneTree &t, Word &out)
{
    out.push_back(static_cast<int>(t.children.size()));
    for (const auto &c : t.children) {
        preorder(c, out);
    }
}

} // namespace

PlaneTree word_to_tree(const Word &w)
{
    if (!is_luk_word(w)) {
        throw Error(ErrorCode::ValidationError, "not a Lukasiewicz word");
    }
    std::size_t pos = 0;
    return parse_tree(w, pos);
}

Word tree_to_word(const PlaneTree &t)
{
    Word out;
    preorder(t, out);
    return out;
}

std::string word_to_parens(const Word &w)
{
    if (!is_luk_word(w)) {
        throw Error(ErrorCode::ValidationError, "not a Lukasiewicz word");
    }
    std::string s;
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
        s.append(static_cast<std::size_t>(w[j]), '(');
        s.push_back(')');
    }
    return s;
}

Word parens_to_word(const std::string &s)
{
    Word w;
    int opens = 0;
    long depth = 0;
    for (char c : s) {
        if (c == '(') {
            ++opens;
            ++depth;
        } else if (c == ')') {
            w.push_back(opens);
            opens = 0;
            if (--depth < 0) {
                throw Error(ErrorCode::ParseError, "unbalanced parentheses");
            }
        } else {
            throw Error(ErrorCode::ParseError, std::string("unexpected character '") + c + "'");
        }
    }
    if (depth != 0 || opens != 0) {
        throw Error(ErrorCode::ParseError, "unbalanced parentheses");
    }
    w.push_back(0);
    return w;
}

std::string encode(const PlaneTree &t)
{
    std::string s = "(";
    for (const auto &c : t.children) {
        s += encode(c);
    }
    return s + ")";
}

std::string encode(const BinaryTree &b)
{
    if (b.is_leaf()) {
        return "L";
    }
    return "N" + encode(b.left()) + encode(b.right());
}

std::vector<PlaneTree> enum_plane_trees(std::size_t n)
{
    std::vector<PlaneTree> out;
    for (const auto &w : enum_words(n + 1, 0)) {
        out.push_back(word_to_tree(w));
    }
    return out;
}

std::vector<BinaryTree> enum_binary_trees(std::size_t n)
{
    std::vector<std::vector<BinaryTree>> by_size(n + 1);
    by_size[0].push_back(BinaryTree::leaf());
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t l = 0; l < m; ++l) {
            for (const auto &a : by_size[l]) {
                for (const auto &b : by_size[m - 1 - l]) {
                    by_size[m].push_back(BinaryTree::node(a, b));
                }
            }
        }
    }
    return by_size[n];
}

PlaneTree mirror(const PlaneTree &t)
{
    PlaneTree m;
    for (auto it = t.children.rbegin(); it != t.children.rend(); ++it) {
        m.children.push_back(mirror(*it));
    }
    return m;
}

BinaryTree mirror(const BinaryTree &b)
{
    if (b.is_leaf()) {
        return b;
    }
    return BinaryTree::node(mirror(b.right()), mirror(b.left()));
}

// A left chain hangs its right subtrees, deepest chain node leftmost.
PlaneTree contract_left(const BinaryTree &b)
{
    PlaneTree t;
    for (const BinaryTree *v = &b; !v->is_leaf(); v = &v->left()) {
        t.children.push_back(contract_left(v->right()));
    }
    std::reverse(t.children.begin(), t.children.end());
    return t;
}

// A right chain hangs its left subtrees, topmost chain node leftmost.
PlaneTree contract_right(const BinaryTree &b)
{
    PlaneTree t;
    for (const BinaryTree *v = &b; !v->is_leaf(); v = &v->right()) {
        t.children.push_back(contract_right(v->left()));
    }
    return t;
}

BinaryTree contract_left_inverse(const PlaneTree &t)
{
    BinaryTree b = BinaryTree::leaf();
    for (const auto &c : t.children) {
        b = BinaryTree::node(std::move(b), contract_left_inverse(c));
    }
    return b;
}

BinaryTree contract_right_inverse(const PlaneTree &t)
{
    BinaryTree b = BinaryTree::leaf();
    for (auto it = t.children.rbegin(); it != t.children.rend(); ++it) {
        b = BinaryTree::node(contract_right_inverse(*it), std::move(b));
    }
    return b;
}

BinaryTree iota_right(const BinaryTree &b) { return contract_right_inverse(mirror(contract_right(b))); }
BinaryTree iota_left(const BinaryTree &b) { return contract_left_inverse(mirror(contract_left(b))); }
PlaneTree iota_right(const PlaneTree &t) { return contract_right(mirror(contract_right_inverse(t))); }
PlaneTree iota_left(const PlaneTree &t) { return contract_left(mirror(contract_left_inverse(t))); }

namespace {

template <typename T>
OrbitReport orbits_of(const std::vector<T> &elements)
{
    OrbitReport report;
    report.elements = elements.size();
    std::map<std::string, T> by_key;
    for (const auto &e : elements) {
        by_key.emplace(encode(e), e);
    }
    std::set<std::string> seen;
    for (const auto &e : elements) {
        const std::string key = encode(e);
        if (encode(iota_right(e)) == key) {
            ++report.fixed_right;
        }
        if (encode(iota_left(e)) == key) {
            ++report.fixed_left;
        }
        if (seen.count(key)) {
            continue;
        }
        std::vector<std::string> orbit;
        std::deque<T> queue{e};
        seen.insert(key);
        while (!queue.empty()) {
            T cur = std::move(queue.front());
            queue.pop_front();
            orbit.push_back(encode(cur));
            for (T next : {iota_right(cur), iota_left(cur)}) {
                if (seen.insert(encode(next)).second) {
                    queue.push_back(std::move(next));
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        report.orbits.push_back(std::move(orbit));
    }
    return report;
}

} // namespace

OrbitReport dihedral_orbits(std::size_t n, TreeSide side)
{
    if (n > 10) {
        throw Error(ErrorCode::InstanceTooLarge, "orbit enumeration is limited to n <= 10");
    }
    if (side == TreeSide::Binary) {
        return orbits_of(enum_binary_trees(n));
    }
    return orbits_of(enum_plane_trees(n));
}

bool is_motzkin(const MotzkinPath &path)
{
    long h = 0;
    for (int s : path) {
        if (s < -1 || s > 1) {
            return false;
        }
        h += s;
        if (h < 0) {
            return false;
        }
    }
    return h == 0;
}

namespace {

void grow_motzkin(std::size_t n, MotzkinPath &cur, long h, std::vector<MotzkinPath> &out)
{
    if (cur.size() == n) {
        out.push_back(cur);
        return;
    }
    const long remaining = static_cast<long>(n - cur.size());
    for (int s : {1, 0, -1}) {
        const long next = h + s;
        if (next < 0 || next > remaining - 1) {
            continue;
        }
        cur.push_back(s);
        grow_motzkin(n, cur, next, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<MotzkinPath> enum_motzkin(std::size_t n)
{
    std::vector<MotzkinPath> out;
    MotzkinPath cur;
    grow_motzkin(n, cur, 0, out);
    return out;
}

MultiPoly motzkin_weight(const MotzkinPath &path)
{
    if (!is_motzkin(path)) {
        throw Error(ErrorCode::ValidationError, "not a Motzkin path");
    }
    std::map<std::string, std::uint32_t> powers;
    long h = 0;
    for (int s : path) {
        if (s == 0) {
            ++powers["p" + std::to_string(h)];
        } else if (s == -1) {
            ++powers["q" + std::to_string(h - 1)];
        }
        h += s;
    }
    return MultiPoly::monomial(Rational(1), powers);
}

Rational motzkin_weight(const MotzkinPath &path, const JFraction<Rational> &jf)
{
    Rational w(1);
    long h = 0;
    for (int s : path) {
        if (s == 0) {
            if (static_cast<std::size_t>(h) >= jf.p.size()) {
                return Rational(0);
            }
            w *= jf.p[static_cast<std::size_t>(h)];
        } else if (s == -1) {
            if (static_cast<std::size_t>(h - 1) >= jf.q.size()) {
                return Rational(0);
            }
            w *= jf.q[static_cast<std::size_t>(h - 1)];
        }
        h += s;
    }
    return w;
}

std::vector<MotzkinPath> motzkin_prime_factorize(const MotzkinPath &path)
{
    if (!is_motzkin(path)) {
        throw Error(ErrorCode::ValidationError, "not a Motzkin path");
    }
    std::vector<MotzkinPath> out;
    MotzkinPath cur;
    long h = 0;
    for (int s : path) {
        cur.push_back(s);
        h += s;
        if (h == 0) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    return out;
}

namespace {

using Vertex = std::pair<long, long>;

struct Placed {
    std::vector<Vertex> vertices;
    Rational weight;
};

std::vector<Placed> paths_between(std::size_t alpha, std::size_t beta, const JFraction<Rational> &jf)
{
    std::vector<Placed> out;
    for (const auto &p : enum_motzkin(alpha + beta)) {
        Rational w = motzkin_weight(p, jf);
        if (w.is_zero()) {
            continue;
        }
        Placed placed{{}, std::move(w)};
        long x = -static_cast<long>(alpha);
        long h = 0;
        placed.vertices.emplace_back(x, h);
        for (int s : p) {
            ++x;
            h += s;
            placed.vertices.emplace_back(x, h);
        }
        out.push_back(std::move(placed));
    }
    return out;
}

} // namespace

Rational lgv_minor_oracle(const JFraction<Rational> &jf, const std::vector<std::size_t> &alpha,
                          const std::vector<std::size_t> &beta, LgvMode mode)
{
    if (alpha.empty() || alpha.size() != beta.size()) {
        throw Error(ErrorCode::ValidationError, "need k+1 row and k+1 column indices");
    }
    const std::size_t m = alpha.size();
    if (m > 3 || *std::max_element(alpha.begin(), alpha.end()) > 4 || *std::max_element(beta.begin(), beta.end()) > 4) {
        throw Error(ErrorCode::InstanceTooLarge, "path enumeration is limited to k <= 2 and indices <= 4");
    }
    for (std::size_t i = 1; i < m; ++i) {
        if (alpha[i] <= alpha[i - 1] || beta[i] <= beta[i - 1]) {
            throw Error(ErrorCode::ValidationError, "indices must be strictly increasing");
        }
    }
    std::vector<std::vector<std::vector<Placed>>> paths(m, std::vector<std::vector<Placed>>(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            paths[i][j] = paths_between(alpha[i], beta[j], jf);
        }
    }
    std::vector<std::size_t> sigma(m);
    for (std::size_t i = 0; i < m; ++i) {
        sigma[i] = i;
    }
    Rational total;
    do {
        long inversions = 0;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                inversions += sigma[i] > sigma[j] ? 1 : 0;
            }
        }
        Rational sum;
        std::multiset<Vertex> used;
        std::function<void(std::size_t, const Rational &)> place = [&](std::size_t i, const Rational &w) {
            if (i == m) {
                bool clash = false;
                for (auto it = used.begin(); it != used.end(); it = used.upper_bound(*it)) {
                    if (used.count(*it) > 1) {
                        clash = true;
                        break;
                    }
                }
                if (mode == LgvMode::All || (mode == LgvMode::Intersecting) == clash) {
                    sum += w;
                }
                return;
            }
            for (const auto &p : paths[i][sigma[i]]) {
                if (mode == LgvMode::NonIntersecting
                    && std::any_of(p.vertices.begin(), p.vertices.end(),
                                   [&used](const Vertex &v) { return used.count(v) > 0; })) {
                    continue;
                }
                for (const auto &v : p.vertices) {
                    used.insert(v);
                }
                place(i + 1, w * p.weight);
                for (const auto &v : p.vertices) {
                    used.erase(used.find(v));
                }
            }
        };
        place(0, Rational(1));
        total += inversions % 2 == 0 ? sum : -sum;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total * jf.d0.pow(static_cast<long>(m));
}

MultiPoly word_coefficient_oracle(std::size_t n, std::size_t k)
{
    MultiPoly acc;
    for (const auto &w : enum_words(n, k)) {
        acc += word_monomial(w);
    }
    return acc;
}

PolySeries reduced_luk_series(std::size_t order)
{
    std::vector<MultiPoly> c(order);
    for (std::size_t n = 1; n < order; ++n) {
        for (const auto &w : enum_words(n, 0)) {
            if (std::find(w.begin(), w.end(), 1) == w.end()) {
                c[n] += word_monomial(w);
            }
        }
    }
    return PolySeries(std::move(c));
}

bool reduced_word_series_check(std::size_t order)
{
    if (order < 2) {
        throw Error(ErrorCode::BadRange, "order must be >= 2");
    }
    const auto q = q_series(dl_build(symbolic_series("s", order - 1), order - 1));
    const auto reduced = reduced_luk_series(order);
    const MultiPoly s1 = MultiPoly::variable("s1");
    std::vector<MultiPoly> inner(order);
    MultiPoly power(1);
    for (std::size_t j = 1; j < order; ++j) {
        inner[j] = power;
        power *= s1;
    }
    const bool specialization = specialize(q, "s1", MultiPoly(0)) == reduced;
    return specialization && compose(reduced, PolySeries(std::move(inner))) == q;
}

} // namespace dlrev
