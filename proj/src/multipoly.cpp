#include <dlrev/multipoly.hpp>

#include <algorithm>
#include <iterator>

#include <dlrev/error.hpp>

namespace dlrev {

std::vector<std::string> merge_variables(const std::vector<std::string> &a, const std::vector<std::string> &b)
{
    if (a == b) {
        return a;
    }
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

MultiPoly::MultiPoly(const Rational &c)
{
    if (!c.is_zero()) {
        terms_.emplace(Monomial{}, c);
    }
}

MultiPoly::MultiPoly(std::vector<std::string> vars, TermMap terms) : vars_(std::move(vars)), terms_(std::move(terms))
{
    normalize();
}

MultiPoly MultiPoly::variable(const std::string &name)
{
    return MultiPoly({name}, TermMap{{Monomial{1}, Rational(1)}});
}

MultiPoly MultiPoly::monomial(const Rational &coeff, const std::map<std::string, std::uint32_t> &powers)
{
    std::vector<std::string> vars;
    Monomial m;
    for (const auto &[name, e] : powers) {
        vars.push_back(name);
        m.push_back(e);
    }
    TermMap t;
    if (!coeff.is_zero()) {
        t.emplace(std::move(m), coeff);
    }
    return MultiPoly(std::move(vars), std::move(t));
}

void MultiPoly::normalize()
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
    std::vector<bool> used(vars_.size(), false);
    for (const auto &[m, c] : terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] != 0) {
                used[i] = true;
            }
        }
    }
    if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) {
        return;
    }
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (used[i]) {
            vars.push_back(vars_[i]);
        }
    }
    TermMap terms;
    for (auto &[m, c] : terms_) {
        Monomial mm;
        mm.reserve(vars.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (used[i]) {
                mm.push_back(m[i]);
            }
        }
        terms.emplace(std::move(mm), std::move(c));
    }
    vars_ = std::move(vars);
    terms_ = std::move(terms);
}

MultiPoly::TermMap MultiPoly::lifted(const std::vector<std::string> &vars) const
{
    if (vars == vars_) {
        return terms_;
    }
    std::vector<std::size_t> slot(vars_.size());
    for (std::size_t i = 0, j = 0; i < vars_.size(); ++i) {
        while (vars[j] != vars_[i]) {
            ++j;
        }
        slot[i] = j;
    }
    TermMap out;
    for (const auto &[m, c] : terms_) {
        Monomial mm(vars.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            mm[slot[i]] = m[i];
        }
        out.emplace(std::move(mm), c);
    }
    return out;
}

Rational MultiPoly::constant_term() const
{
    if (terms_.empty()) {
        return Rational(0);
    }
    auto it = terms_.begin();
    for (auto e : it->first) {
        if (e != 0) {
            return Rational(0);
        }
    }
    return it->second;
}

long MultiPoly::total_degree() const
{
    long best = -1;
    for (const auto &[m, c] : terms_) {
        long d = 0;
        for (auto e : m) {
            d += e;
        }
        best = std::max(best, d);
    }
    return best;
}

long MultiPoly::degree_in(const std::string &var) const
{
    if (terms_.empty()) {
        return -1;
    }
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) {
        return 0;
    }
    auto idx = static_cast<std::size_t>(it - vars_.begin());
    long best = 0;
    for (const auto &[m, c] : terms_) {
        best = std::max(best, static_cast<long>(m[idx]));
    }
    return best;
}

bool MultiPoly::depends_on(const std::string &var) const
{
    return std::binary_search(vars_.begin(), vars_.end(), var);
}

MultiPoly MultiPoly::coefficient(const std::string &var, std::uint32_t k) const
{
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) {
        return k == 0 ? *this : MultiPoly();
    }
    auto idx = static_cast<std::size_t>(it - vars_.begin());
    TermMap out;
    for (const auto &[m, c] : terms_) {
        if (m[idx] == k) {
            Monomial mm = m;
            mm[idx] = 0;
            out.emplace(std::move(mm), c);
        }
    }
    return MultiPoly(vars_, std::move(out));
}

MultiPoly MultiPoly::derivative(const std::string &var) const
{
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) {
        return MultiPoly();
    }
    auto idx = static_cast<std::size_t>(it - vars_.begin());
    TermMap out;
    for (const auto &[m, c] : terms_) {
        if (m[idx] == 0) {
            continue;
        }
        Monomial mm = m;
        mm[idx] -= 1;
        out.emplace(std::move(mm), c * Rational(static_cast<long>(m[idx])));
    }
    return MultiPoly(vars_, std::move(out));
}

MultiPoly MultiPoly::substitute(const std::string &var, const MultiPoly &value) const
{
    long deg = degree_in(var);
    if (deg <= 0) {
        return *this;
    }
    // Horner in var over the coefficient polynomials.
    MultiPoly acc = coefficient(var, static_cast<std::uint32_t>(deg));
    for (long k = deg - 1; k >= 0; --k) {
        acc = acc * value + coefficient(var, static_cast<std::uint32_t>(k));
    }
    return acc;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational> &assignment) const
{
    std::vector<const Rational *> vals;
    vals.reserve(vars_.size());
    for (const auto &v : vars_) {
        auto it = assignment.find(v);
        if (it == assignment.end()) {
            throw Error(ErrorCode::MissingVariable, "no value for variable '" + v + "'");
        }
        vals.push_back(&it->second);
    }
    Rational sum;
    for (const auto &[m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] != 0) {
                t *= vals[i]->pow(m[i]);
            }
        }
        sum += t;
    }
    return sum;
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o)
{
    if (o.terms_.empty()) {
        return *this;
    }
    auto vars = merge_variables(vars_, o.vars_);
    if (vars != vars_) {
        terms_ = lifted(vars);
        vars_ = vars;
    }
    TermMap rhs_store;
    if (o.vars_ != vars_) {
        rhs_store = o.lifted(vars_);
    }
    const auto &rhs = o.vars_ == vars_ ? o.terms_ : rhs_store;
    for (const auto &[m, c] : rhs) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }
    normalize();
    return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o)
{
    return *this += -o;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return MultiPoly();
    }
    auto vars = merge_variables(a.vars_, b.vars_);
    MultiPoly::TermMap lhs_store, rhs_store;
    if (a.vars_ != vars) {
        lhs_store = a.lifted(vars);
    }
    if (b.vars_ != vars) {
        rhs_store = b.lifted(vars);
    }
    const auto &lhs = a.vars_ == vars ? a.terms_ : lhs_store;
    const auto &rhs = b.vars_ == vars ? b.terms_ : rhs_store;
    MultiPoly::TermMap out;
    MultiPoly::Monomial m(vars.size());
    for (const auto &[ma, ca] : lhs) {
        for (const auto &[mb, cb] : rhs) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                m[i] = ma[i] + mb[i];
            }
            auto [it, inserted] = out.try_emplace(m, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
            }
        }
    }
    return MultiPoly(std::move(vars), std::move(out));
}

MultiPoly &MultiPoly::operator*=(const MultiPoly &o)
{
    *this = *this * o;
    return *this;
}

MultiPoly &MultiPoly::operator*=(const Rational &c)
{
    if (c.is_zero()) {
        vars_.clear();
        terms_.clear();
        return *this;
    }
    for (auto &[m, v] : terms_) {
        v *= c;
    }
    return *this;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto &[m, v] : r.terms_) {
        v = -v;
    }
    return r;
}

MultiPoly MultiPoly::pow(std::uint32_t exponent) const
{
    MultiPoly result(Rational(1));
    MultiPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[m, c] = *it;
        bool has_vars = std::any_of(m.begin(), m.end(), [](auto e) { return e != 0; });
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            out += c.sign() < 0 ? "-" : "";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        std::string factors;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) {
                continue;
            }
            if (!factors.empty()) {
                factors += "*";
            }
            factors += vars_[i];
            if (m[i] > 1) {
                factors += "^" + std::to_string(m[i]);
            }
        }
        if (!has_vars) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += factors;
        } else {
            out += mag.to_string() + "*" + factors;
        }
    }
    return out;
}

MultiPoly exact_div(const MultiPoly &a, const MultiPoly &b)
{
    if (b.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    }
    if (b.is_constant()) {
        return a / b.constant_term();
    }
    // Multivariate division in lex order: when b | a every leading term of
    // the running remainder is a monomial multiple of lt(b).
    const auto &[lb_mono_raw, lb_coeff] = *b.terms().rbegin();
    MultiPoly rem = a;
    MultiPoly quot;
    // Leading monomial of b expressed over the merged variables.
    std::map<std::string, std::uint32_t> lb_powers;
    for (std::size_t i = 0; i < b.variables().size(); ++i) {
        if (lb_mono_raw[i] != 0) {
            lb_powers[b.variables()[i]] = lb_mono_raw[i];
        }
    }
    const Rational lb_inv = lb_coeff.inverse();
    while (!rem.is_zero()) {
        // Lex order on globally sorted names is unaffected by absent
        // variables, so the largest key of rem's map is its leading term.
        const auto &[lr_mono, lr_coeff] = *rem.terms().rbegin();
        std::map<std::string, std::uint32_t> q_powers;
        std::map<std::string, std::uint32_t> r_powers;
        for (std::size_t i = 0; i < rem.variables().size(); ++i) {
            if (lr_mono[i] != 0) {
                r_powers[rem.variables()[i]] = lr_mono[i];
            }
        }
        for (const auto &[v, e] : lb_powers) {
            auto it = r_powers.find(v);
            if (it == r_powers.end() || it->second < e) {
                throw Error(ErrorCode::NotExactDivision, "divisor does not divide dividend");
            }
        }
        for (const auto &[v, e] : r_powers) {
            auto it = lb_powers.find(v);
            std::uint32_t sub = it == lb_powers.end() ? 0 : it->second;
            if (e > sub) {
                q_powers[v] = e - sub;
            }
        }
        MultiPoly t = MultiPoly::monomial(lr_coeff * lb_inv, q_powers);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

} // namespace dlrev
