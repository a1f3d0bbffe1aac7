#include <dlrev/verify.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <dlrev/combinatorics.hpp>
#include <dlrev/interp_group.hpp>
#include <dlrev/reversion.hpp>
#include <dlrev/series.hpp>
#include <dlrev/transforms.hpp>

namespace dlrev {

bool SuiteReport::passed() const { return failures() == 0 && !checks.empty(); }

std::size_t SuiteReport::failures() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check &c) { return !c.passed; }));
}

namespace {

using Rng = std::mt19937;

Rational random_rational(Rng &rng)
{
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 6);
    return Rational(num(rng), den(rng));
}

Rational random_nonzero(Rng &rng)
{
    for (;;) {
        Rational r = random_rational(rng);
        if (!r.is_zero()) {
            return r;
        }
    }
}

std::vector<Rational> random_sequence(Rng &rng, std::size_t len, bool nonzero_head)
{
    std::vector<Rational> v;
    v.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        v.push_back(i == 0 && nonzero_head ? random_nonzero(rng) : random_rational(rng));
    }
    return v;
}

// p_0 = 0 and a nonzero p_1.
RationalSeries random_diffeo(Rng &rng, std::size_t order, bool tangent)
{
    auto c = random_sequence(rng, order, false);
    c[0] = Rational(0);
    c[1] = tangent ? Rational(1) : random_nonzero(rng);
    return RationalSeries(std::move(c));
}

RationalSeries random_unit(Rng &rng, std::size_t order)
{
    auto c = random_sequence(rng, order, false);
    c[0] = Rational(1);
    return RationalSeries(std::move(c));
}

JFraction<Rational> random_jfraction(Rng &rng, std::size_t depth)
{
    JFraction<Rational> jf;
    jf.d0 = random_nonzero(rng);
    for (std::size_t h = 0; h <= depth; ++h) {
        jf.p.push_back(random_rational(rng));
        if (h < depth) {
            jf.q.push_back(random_nonzero(rng));
        }
    }
    return jf;
}

RationalSeries exp_series(const Rational &c, std::size_t order)
{
    std::vector<Rational> v;
    for (std::size_t n = 0; n < order; ++n) {
        v.push_back(c.pow(static_cast<long>(n)) / factorial(static_cast<long>(n)));
    }
    return RationalSeries(std::move(v));
}

Rational catalan(long n) { return binomial(2 * n, n) / Rational(n + 1); }

class Recorder {
public:
    explicit Recorder(SuiteReport &report) : report_(report) {}

    void expect(const std::string &name, bool ok, const std::string &detail = "")
    {
        report_.checks.push_back({name, ok, ok ? "" : detail});
    }

    // Runs body; exceptions become failures of the named check.
    void run(const std::string &name, const std::function<void()> &body)
    {
        try {
            body();
        } catch (const std::exception &e) {
            report_.checks.push_back({name, false, std::string("exception: ") + e.what()});
        }
    }

private:
    SuiteReport &report_;
};

template <typename T>
std::string show(const T &v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

void suite_reversion(Recorder &rec, const VerifyOptions &opt)
{
    const std::size_t order = opt.order.value_or(31);
    rec.run("x/(1+x)", [&] {
        const auto p = RationalSeries::x(order) * invert(RationalSeries::from_polynomial({1, 1}, order));
        const auto q = revert(p);
        bool ok = q[0].is_zero();
        for (std::size_t n = 1; n < order; ++n) {
            ok = ok && q[n] == Rational(1);
        }
        rec.expect("revert(x/(1+x)) has all coefficients 1 to x^" + std::to_string(order - 1), ok);
    });
    rec.run("x e^-x", [&] {
        const std::size_t n_max = 20;
        const auto q = revert(RationalSeries::x(n_max + 1) * exp_series(Rational(-1), n_max + 1));
        bool ok = true;
        std::string bad;
        for (long n = 1; n <= static_cast<long>(n_max); ++n) {
            const Rational want = Rational(n).pow(n - 1) / factorial(n);
            if (!(q[static_cast<std::size_t>(n)] == want)) {
                ok = false;
                bad = "n=" + std::to_string(n);
            }
        }
        rec.expect("revert(x e^-x) = sum n^(n-1)/n! x^n, n <= 20", ok, bad);
    });
    rec.run("x e^-x^2", [&] {
        const std::size_t j_max = 9;
        const std::size_t order = 2 * j_max + 2;
        std::vector<Rational> c(order);
        for (std::size_t j = 0; 2 * j + 1 < order; ++j) {
            c[2 * j + 1] = Rational(j % 2 == 0 ? 1 : -1) / factorial(static_cast<long>(j));
        }
        const auto q = revert(RationalSeries(std::move(c)));
        bool ok = true;
        for (long j = 0; j <= static_cast<long>(j_max); ++j) {
            const Rational want = Rational(2 * j + 1).pow(j - 1) / factorial(j);
            ok = ok && q[static_cast<std::size_t>(2 * j + 1)] == want && q[static_cast<std::size_t>(2 * j)].is_zero();
        }
        rec.expect("revert(x e^-x^2) = sum (2j+1)^(j-1)/j! x^(2j+1), j <= 9", ok);
    });
}

void suite_sin2(Recorder &rec, const VerifyOptions &opt)
{
    const std::size_t j_max = opt.order.value_or(12);
    const std::size_t order = j_max + 1;
    rec.run("sin^2", [&] {
        std::vector<Rational> sine(2 * order);
        for (std::size_t m = 0; 2 * m + 1 < sine.size(); ++m) {
            sine[2 * m + 1] = Rational(m % 2 == 0 ? 1 : -1) / factorial(static_cast<long>(2 * m + 1));
        }
        const RationalSeries s(std::move(sine));
        const auto sq = s * s;
        std::vector<Rational> pc(order);
        bool odd_vanish = true;
        for (std::size_t i = 0; i < order; ++i) {
            pc[i] = sq[2 * i];
            odd_vanish = odd_vanish && sq[2 * i + 1].is_zero();
        }
        rec.expect("sin^2 x is even", odd_vanish);
        const auto q = revert(RationalSeries(std::move(pc)));
        bool ok = true;
        for (long j = 1; j <= static_cast<long>(j_max); ++j) {
            const Rational want = Rational(2).pow(2 * j - 1) / (Rational(j * j) * binomial(2 * j, j));
            ok = ok && q[static_cast<std::size_t>(j)] == want;
        }
        rec.expect("reversion coefficients 2^(2j-1)/(j^2 C(2j,j)), j <= " + std::to_string(j_max), ok);
        const auto d1 = derivative(q);
        const auto d2 = derivative(d1);
        const auto lhs = RationalSeries::from_polynomial({0, -1, 1}, d2.order()) * d2
                         + RationalSeries::from_polynomial({Rational(-1, 2), 1}, d2.order()) * truncate(d1, d2.order())
                         + RationalSeries::constant(Rational(1, 2), d2.order());
        const std::size_t check = std::min<std::size_t>(10, lhs.order());
        rec.expect("(x^2-x)q'' + (x-1/2)q' + 1/2 = 0 mod x^" + std::to_string(check),
                   lhs.valuation() >= check, "valuation " + std::to_string(lhs.valuation()));
    });
}

void suite_thm2(Recorder &rec, const VerifyOptions &opt)
{
    const std::size_t order = opt.order.value_or(20);
    Rng rng(opt.seed);
    for (int trial = 0; trial < 20; ++trial) {
        const std::string name = "random s #" + std::to_string(trial);
        rec.run(name, [&] {
            const RationalSeries s(random_sequence(rng, order, true));
            const auto via_dl = q_series(dl_build(s, order - 1));
            const auto via_newton = revert(truncate(shift_up(invert(s), 1), order));
            std::vector<Rational> c(order);
            for (std::size_t n = 1; n < order; ++n) {
                c[n] = lagrange_coeff(s, n, 0);
            }
            const RationalSeries via_lagrange(std::move(c));
            rec.expect(name + ": DL sequence = Newton reversion of x/s = Lagrange formula",
                       via_dl == via_newton && via_dl == via_lagrange);
        });
    }
}

void suite_thm1(Recorder &rec, const VerifyOptions &opt)
{
    const std::size_t n_max = opt.order.value_or(12);
    Rng rng(opt.seed + 1);
    for (int trial = 0; trial < 5; ++trial) {
        const std::string name = "random p #" + std::to_string(trial);
        rec.run(name, [&] {
            const auto p = random_diffeo(rng, n_max + 1, false);
            bool ok = true;
            std::string bad;
            for (std::size_t n = 1; n <= n_max; ++n) {
                for (std::size_t k = 1; k <= n; ++k) {
                    const auto [lhs, rhs] = lagrange_burmann_check(p, n, k);
                    if (!(lhs == rhs)) {
                        ok = false;
                        bad = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                    }
                }
            }
            rec.expect(name + ": n[x^n]q^k = k[x^(n-k)](x/p)^n for 1 <= k <= n <= " + std::to_string(n_max), ok, bad);
        });
    }
}

void suite_thm4(Recorder &rec, const VerifyOptions &opt)
{
    const std::size_t order = opt.order.value_or(10);
    rec.run("symbolic generating series", [&] {
        const auto dl = dl_build(symbolic_series("s", order), order);
        const auto [lhs, rhs] = full_generating_series(dl);
        rec.expect("sum Q_n(x) t^n = q/(1-xq) mod t^" + std::to_string(order + 1) + " over s0..s"
                       + std::to_string(order - 1),
                   lhs == rhs);
    });
    rec.run("word oracle", [&] {
        const std::size_t n_max = std::min<std::size_t>(order, 8);
        const auto dl = dl_build(symbolic_series("s", n_max), n_max);
        const auto q = to_poly_series(q_series(dl));
        bool ok = true;
        std::string bad;
        for (std::size_t n = 1; n <= n_max; ++n) {
            auto power = q;
            for (std::size_t k = 0; k < n; ++k) {
                if (k > 0) {
                    power = power * q;
                }
                const MultiPoly words = word_coefficient_oracle(n, k);
                if (!(words == dl.Q(n)[k]) || !(words == power[n])) {
                    ok = false;
                    bad = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                }
            }
        }
        rec.expect("words = [x^k]Q_n = [t^n]q^(k+1) for n <= " + std::to_string(n_max), ok, bad);
    });
}

void suite_exp(Recorder &rec, const VerifyOptions &opt)
{
    const long n_max = static_cast<long>(opt.order.value_or(15));
    rec.run("e^x", [&] {
        const auto dl = dl_build(exp_series(Rational(1), static_cast<std::size_t>(n_max)), static_cast<std::size_t>(n_max));
        bool poly_ok = true;
        bool at_one = true;
        bool at_zero = true;
        for (long n = 1; n <= n_max; ++n) {
            const auto &p = dl.P(static_cast<std::size_t>(n));
            Rational sum;
            for (long j = 0; j < n; ++j) {
                const Rational want = Rational(n - j) * Rational(n).pow(j) / (factorial(j) * Rational(n));
                poly_ok = poly_ok && p[static_cast<std::size_t>(j)] == want;
                sum += p[static_cast<std::size_t>(j)];
            }
            at_one = at_one && sum == Rational(n).pow(n) / factorial(n);
            at_zero = at_zero && dl.Q_at_zero(static_cast<std::size_t>(n)) == Rational(n).pow(n - 2) / factorial(n - 1);
        }
        rec.expect("P_n(x) = (1/n) sum (n-j)(nx)^j/j!", poly_ok);
        rec.expect("P_n(1) = n^n/n!", at_one);
        rec.expect("Q_n(0) = n^(n-2)/(n-1)!", at_zero);
    });
    rec.run("identity", [&] {
        bool ok = true;
        for (long n = 3; n <= 12; ++n) {
            for (long k = 2; k < n; ++k) {
                ok = ok && exp_identity_check(n, k);
            }
        }
        rec.expect("(k+1)(n-k)n^(n-2-k) = k sum C(n-k,n-m) m^(m-1-k)(n-m)^(n-m-1), 1<k<n<=12", ok);
    });
}

void suite_prop52(Recorder &rec, const VerifyOptions &opt)
{
    const std::size_t order = opt.order.value_or(16);
    Rng rng(opt.seed + 2);
    auto element = [&] { return GroupElement<Rational>(random_unit(rng, order), random_diffeo(rng, order, true)); };
    rec.run("group axioms", [&] {
        const auto e = GroupElement<Rational>::neutral(order);
        bool assoc = true;
        bool neutral = true;
        bool inverse = true;
        for (int trial = 0; trial < 4; ++trial) {
            const auto a = element();
            const auto b = element();
            const auto c = element();
            assoc = assoc && group_mul(group_mul(a, b), c) == group_mul(a, group_mul(b, c));
            neutral = neutral && group_mul(a, e) == a && group_mul(e, a) == a;
            const auto ai = group_inv(a);
            inverse = inverse && group_mul(a, ai) == e && group_mul(ai, a) == e;
        }
        rec.expect("associativity mod x^" + std::to_string(order), assoc);
        rec.expect("neutral element", neutral);
        rec.expect("inverse (1/(A o alpha^<-1>), alpha^<-1>) is two-sided", inverse);
    });
    for (const Rational &tau : {Rational(0), Rational(1), Rational(1, 2), Rational(-1), Rational(3)}) {
        const std::string name = "SG(" + tau.to_string() + ")";
        rec.run(name, [&] {
            const auto g = sg_element(random_unit(rng, order), tau);
            const auto h = sg_element(random_unit(rng, order), tau);
            rec.expect(name + " closed under products and inverses",
                       in_sg(group_mul(g, h), tau) && in_sg(group_inv(g), tau));
        });
    }
    rec.run("deformation", [&] {
        const auto a = random_unit(rng, order);
        rec.expect("F_0 = 1/A", deform_inversion_reversion(a, Rational(0)) == invert(a));
        const auto f1 = deform_inversion_reversion(a, Rational(1));
        const auto xa = shift_up(a, 1);
        rec.expect("x F_1 = (xA)^<-1>", truncate(shift_up(f1, 1), order) == truncate(revert(xa), order));
        bool same = true;
        for (const Rational &tau : {Rational(1), Rational(1, 2), Rational(-1), Rational(3)}) {
            same = same && deform_inversion_reversion(a, tau) == deform_inversion_reversion_via_group(a, tau);
        }
        rec.expect("F_tau agrees with the SG(tau) route", same);
        rec.expect("G_0 = 1/A", deform_derivative_variant(a, Rational(0)) == invert(a));
        const auto g1 = deform_derivative_variant(a, Rational(1));
        rec.expect("int_0 G_1 = (int_0 A)^<-1>",
                   truncate(integrate(g1), order) == truncate(revert(integrate(a)), order));
    });
}

void suite_thm5i(Recorder &rec, const VerifyOptions &opt)
{
    const std::size_t n_max = opt.order.value_or(5);
    const std::size_t k_max = 4;
    Rng rng(opt.seed + 3);
    for (int trial = 0; trial < 10; ++trial) {
        const std::string name = "random a #" + std::to_string(trial);
        rec.run(name, [&] {
            const auto a = random_sequence(rng, k_max + 2 * n_max - 1, true);
            bool ok = true;
            std::string bad;
            for (std::size_t k = 0; k <= k_max; ++k) {
                for (std::size_t n = 1; n <= n_max; ++n) {
                    const long deg = laymangen_degree_check(a, k, n);
                    if (deg > static_cast<long>(k)) {
                        ok = false;
                        bad = "k=" + std::to_string(k) + " n=" + std::to_string(n) + " deg=" + std::to_string(deg);
                    }
                }
            }
            rec.expect(name + ": deg_x det(I_{i+j+k}(x)) <= k for k <= 4, n <= " + std::to_string(n_max), ok, bad);
        });
    }
}

void suite_thm5ii(Recorder &rec, const VerifyOptions &opt)
{
    const std::size_t n_max = opt.order.value_or(4);
    for (std::size_t n = 1; n <= n_max; ++n) {
        const std::string name = "n=" + std::to_string(n);
        rec.run(name, [&] {
            rec.expect("d/ds1 det(Q_{1+i+j}(x)), " + name + ", vanishes", laymangen_s1_check(n));
        });
    }
}

void suite_dodgson(Recorder &rec, const VerifyOptions &opt)
{
    const std::size_t n_max = opt.order.value_or(6);
    Rng rng(opt.seed + 4);
    for (int trial = 0; trial < 3; ++trial) {
        const std::string name = "random sequence #" + std::to_string(trial);
        rec.run(name, [&] {
            const auto a = random_sequence(rng, 2 * n_max - 1, true);
            const auto base = hankel_transform(a, 0, n_max);
            RationalSeries cur(a);
            bool inv_ok = true;
            for (int m = 1; m <= 3; ++m) {
                cur = inverse_transform(cur);
                inv_ok = inv_ok && hankel_transform(cur.coeffs(), 0, n_max) == base;
            }
            rec.expect(name + ": Hankel transform fixed by I, I^2, I^3", inv_ok);
            const Rational x = random_nonzero(rng);
            const auto b = binomial_transform(a, x);
            rec.expect(name + ": Hankel transform fixed by the binomial transform (x=" + x.to_string() + ")",
                       hankel_transform(b, 0, n_max) == base
                           && binomial_transform_gf(RationalSeries(a), x).coeffs() == b);
            const auto longer = random_sequence(rng, 2 + 2 * n_max, true);
            rec.expect(name + ": Dodgson condensation", dodgson_check(longer, 2, n_max).holds);
            rec.expect(name + ": condensed transform = direct determinants",
                       hankel_transform_fast(a, n_max) == base);
        });
    }
    rec.run("symbolic Dodgson", [&] {
        const auto s = symbolic_series("a", 7);
        const auto report = dodgson_check(s.coeffs(), 2, 2);
        rec.expect("Dodgson identity over a0..a6, k <= 2, n <= 2", report.holds && report.checked == 4);
        rec.expect("symbolic condensation = direct determinants",
                   hankel_transform_condensed(s.coeffs(), 3) == hankel_transform(s.coeffs(), 0, 3));
    });
}

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t size, std::size_t max_index)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
        if (cur.size() == size) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i <= max_index; ++i) {
            cur.push_back(i);
            grow(i + 1);
            cur.pop_back();
        }
    };
    grow(0);
    return out;
}

void suite_lgv(Recorder &rec, const VerifyOptions &opt)
{
    const std::size_t max_index = opt.order.value_or(3);
    Rng rng(opt.seed + 5);
    rec.run("LGV", [&] {
        const auto jf = random_jfraction(rng, 4);
        const auto d = jfraction_contract(jf, 2 * max_index + 1);
        bool ok = true;
        std::size_t checked = 0;
        std::string bad;
        for (std::size_t k = 0; k <= 2; ++k) {
            for (const auto &alpha : increasing_tuples(k + 1, max_index)) {
                for (const auto &beta : increasing_tuples(k + 1, max_index)) {
                    Matrix<Rational> m(k + 1, k + 1);
                    for (std::size_t i = 0; i <= k; ++i) {
                        for (std::size_t j = 0; j <= k; ++j) {
                            m(i, j) = d[alpha[i] + beta[j]];
                        }
                    }
                    ++checked;
                    if (!(det_fraction_free(m) == lgv_minor_oracle(jf, alpha, beta))) {
                        ok = false;
                        bad = "k=" + std::to_string(k);
                    }
                }
            }
        }
        rec.expect("non-intersecting path sums = Hankel minors (" + std::to_string(checked) + " minors)", ok, bad);
        rec.expect("intersecting configurations cancel",
                   lgv_minor_oracle(jf, {0, 1}, {0, 1}, LgvMode::Intersecting).is_zero()
                       && lgv_minor_oracle(jf, {0, 2, 3}, {1, 2, 3}, LgvMode::Intersecting).is_zero());
    });
}

void suite_thm8(Recorder &rec, const VerifyOptions &opt)
{
    const std::size_t depth = opt.order.value_or(6);
    Rng rng(opt.seed + 6);
    for (int trial = 0; trial < 3; ++trial) {
        const std::string name = "random series #" + std::to_string(trial);
        rec.run(name, [&] {
            const RationalSeries d(random_sequence(rng, 2 * depth + 2, true));
            const auto jf = jfraction_expand(d, depth);
            rec.expect(name + ": J-fraction round trip at depth " + std::to_string(depth),
                       jfraction_contract(jf, d.order()) == d && jf.depth() == depth);
        });
    }
    rec.run("Motzkin sums", [&] {
        bool ok = true;
        for (std::size_t m : {std::size_t{2}, std::size_t{4}}) {
            const auto jf = random_jfraction(rng, m);
            const auto d = jfraction_contract(jf, 9);
            for (std::size_t n = 0; n <= 8; ++n) {
                Rational sum;
                for (const auto &path : enum_motzkin(n)) {
                    sum += motzkin_weight(path, jf);
                }
                ok = ok && sum * jf.d0 == d[n];
            }
        }
        rec.expect("weighted Motzkin path sums = contracted coefficients, lengths <= 8", ok);
        const auto paths = enum_motzkin(3);
        MultiPoly sym;
        for (const auto &p : paths) {
            sym += motzkin_weight(p);
        }
        const auto p0 = MultiPoly::variable("p0");
        const auto q0 = MultiPoly::variable("q0");
        rec.expect("symbolic length-3 sum p0^3 + 2 p0 q0 + p1 q0",
                   sym == p0.pow(3) + MultiPoly(2) * p0 * q0 + MultiPoly::variable("p1") * q0);
    });
    rec.run("principal minors", [&] {
        const auto jf = random_jfraction(rng, 5);
        const auto d = jfraction_contract(jf, 12);
        bool ok = true;
        bool invariant = true;
        for (std::size_t k = 0; k <= 4; ++k) {
            const Rational direct = hankel_det(d.coeffs(), 0, k + 1);
            ok = ok && direct == principal_minor_product(jf, k);
            for (std::size_t h = 0; h < jf.p.size(); ++h) {
                auto moved = jf;
                moved.p[h] += random_nonzero(rng);
                const auto d2 = jfraction_contract(moved, 12);
                invariant = invariant && hankel_det(d2.coeffs(), 0, k + 1) == direct
                            && principal_minor_product(moved, k) == direct;
            }
        }
        rec.expect("d0^(k+1) q(0)^k ... q(k-1) = det H(k+1), k <= 4", ok);
        rec.expect("principal minors do not move when any p(h) is perturbed", invariant);
    });
    suite_lgv(rec, opt.order ? VerifyOptions{std::nullopt, opt.seed} : opt);
}

void suite_prop72(Recorder &rec, const VerifyOptions &opt)
{
    const std::size_t order = opt.order.value_or(10);
    rec.run("reduced words", [&] {
        const auto red = reduced_luk_series(6);
        const auto s = [](int i) { return MultiPoly::variable("s" + std::to_string(i)); };
        const std::vector<MultiPoly> want{MultiPoly(0),
                                          s(0),
                                          MultiPoly(0),
                                          s(0).pow(2) * s(2),
                                          s(0).pow(3) * s(3),
                                          s(0).pow(4) * s(4) + MultiPoly(2) * s(0).pow(3) * s(2).pow(2)};
        rec.expect("q_{s1=0} = s0 u + s0^2 s2 u^3 + s0^3 s3 u^4 + (s0^4 s4 + 2 s0^3 s2^2) u^5 + ...",
                   red.coeffs() == want);
        rec.expect("q(t) = q_{s1=0}(t/(1-t s1)) mod t^" + std::to_string(order), reduced_word_series_check(order));
    });
}

void suite_bijections(Recorder &rec, const VerifyOptions &opt)
{
    const std::size_t n_max = opt.order.value_or(8);
    rec.run("counts", [&] {
        bool luk = true;
        for (long n = 1; n <= 12; ++n) {
            luk = luk && Rational(static_cast<long>(enum_words(static_cast<std::size_t>(n), 0).size())) == catalan(n - 1);
        }
        rec.expect("Lukasiewicz words of length n: Catalan(n-1), n <= 12", luk);
        std::vector<std::size_t> motzkin;
        for (std::size_t n = 0; n <= 6; ++n) {
            motzkin.push_back(enum_motzkin(n).size());
        }
        rec.expect("Motzkin paths: 1, 1, 2, 4, 9, 21, 51", motzkin == std::vector<std::size_t>{1, 1, 2, 4, 9, 21, 51});
    });
    rec.run("words and trees", [&] {
        bool tree_ok = true;
        bool parens_ok = true;
        for (std::size_t n = 0; n <= n_max; ++n) {
            std::set<std::string> seen;
            for (const auto &w : enum_words(n + 1, 0)) {
                const auto t = word_to_tree(w);
                tree_ok = tree_ok && tree_to_word(t) == w && t.size() == n + 1
                          && t.children.size() == static_cast<std::size_t>(w[0]);
                const auto p = word_to_parens(w);
                parens_ok = parens_ok && parens_to_word(p) == w && p.size() == 2 * n && seen.insert(p).second;
            }
            for (const auto &t : enum_plane_trees(n)) {
                tree_ok = tree_ok && word_to_tree(tree_to_word(t)) == t;
            }
        }
        rec.expect("word <-> tree round trips, trees with <= " + std::to_string(n_max + 1) + " vertices", tree_ok);
        rec.expect("word <-> parentheses round trips and is injective", parens_ok);
    });
    rec.run("cyclic lemma", [&] {
        bool ok = true;
        std::string bad;
        for (std::size_t n = 1; n <= 7; ++n) {
            for (std::size_t k = 0; k <= 2 && k < n; ++k) {
                const auto words = enum_weighted_words(n, k);
                const auto products = enum_words(n, k);
                const std::set<Word> product_set(products.begin(), products.end());
                std::set<std::pair<std::size_t, Word>> images;
                for (const auto &w : words) {
                    for (std::size_t kp = 1; kp <= k + 1; ++kp) {
                        const auto img = cyclic_bijection(kp, w);
                        const auto back = cyclic_bijection_inverse(img);
                        if (!product_set.count(img.product) || back.first != kp || back.second != w) {
                            ok = false;
                            bad = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                        }
                        images.emplace(img.position, img.product);
                    }
                    if (valid_rotations(w).size() != k + 1) {
                        ok = false;
                    }
                }
                if (images.size() != (k + 1) * words.size() || images.size() != n * products.size()) {
                    ok = false;
                    bad = "cardinality n=" + std::to_string(n) + " k=" + std::to_string(k);
                }
            }
        }
        rec.expect("cyclic bijection {1..k+1} x words <-> {1..n} x products, n <= 7, k <= 2", ok, bad);
        const Word w{0, 0, 1, 2, 0, 0, 3, 0};
        std::set<Word> found;
        for (std::size_t r : valid_rotations(w)) {
            found.insert(rotate_word(w, r));
        }
        rec.expect("s0s0s1s2s0s0s3s0: only s1s2s0s0s3s0s0s0 and s3s0s0s0s1s2s0s0 lie in [x^1]Q_8",
                   found == std::set<Word>{{1, 2, 0, 0, 3, 0, 0, 0}, {3, 0, 0, 0, 1, 2, 0, 0}});
        rec.expect("s0s3s0s0s1s0 factors as s0 . s3s0s0s1s0",
                   factorize_luk({0, 3, 0, 0, 1, 0}) == std::vector<Word>{{0}, {3, 0, 0, 1, 0}});
    });
    rec.run("binary trees", [&] {
        bool bij = true;
        bool mirror_ok = true;
        bool involution = true;
        for (std::size_t n = 0; n <= 6; ++n) {
            std::set<std::string> left;
            std::set<std::string> right;
            const auto trees = enum_binary_trees(n);
            for (const auto &b : trees) {
                const auto cl = contract_left(b);
                const auto cr = contract_right(b);
                left.insert(encode(cl));
                right.insert(encode(cr));
                bij = bij && cl.size() == n + 1 && contract_left_inverse(cl) == b && contract_right_inverse(cr) == b;
                mirror_ok = mirror_ok && mirror(cr) == contract_left(mirror(b));
                involution = involution && iota_right(iota_right(b)) == b && iota_left(iota_left(b)) == b;
            }
            bij = bij && Rational(static_cast<long>(trees.size())) == catalan(static_cast<long>(n))
                  && left.size() == trees.size() && right.size() == trees.size();
            for (const auto &t : enum_plane_trees(n)) {
                involution = involution && iota_right(iota_right(t)) == t && iota_left(iota_left(t)) == t;
            }
        }
        rec.expect("C_L and C_R are bijections B_n -> T_n, n <= 6", bij);
        rec.expect("mirror(C_R(B)) = C_L(mirror(B)), n <= 6", mirror_ok);
        rec.expect("iota_R, iota_L are involutions, n <= 6", involution);
    });
    rec.run("fixed points", [&] {
        bool binary_ok = true;
        bool plane_ok = true;
        for (long n = 0; n <= 7; ++n) {
            const auto b = dihedral_orbits(static_cast<std::size_t>(n), TreeSide::Binary);
            const Rational symmetric_plane = binomial(n, n / 2);
            binary_ok = binary_ok && Rational(static_cast<long>(b.fixed_right)) == symmetric_plane
                        && Rational(static_cast<long>(b.fixed_left)) == symmetric_plane;
            const auto t = dihedral_orbits(static_cast<std::size_t>(n), TreeSide::Plane);
            const Rational symmetric_binary = n == 0 ? Rational(1) : (n % 2 == 1 ? catalan((n - 1) / 2) : Rational(0));
            plane_ok = plane_ok && Rational(static_cast<long>(t.fixed_right)) == symmetric_binary
                       && Rational(static_cast<long>(t.fixed_left)) == symmetric_binary;
        }
        rec.expect("fixed points of iota_R, iota_L on B_n: C(n, floor(n/2)), n <= 7", binary_ok);
        rec.expect("fixed points of the plane-tree involutions: Catalan(m) for n = 2m+1, 0 for even n > 0", plane_ok);
    });
    suite_prop72(rec, opt.order ? VerifyOptions{std::nullopt, opt.seed} : opt);
}

void suite_interp(Recorder &rec, const VerifyOptions &opt)
{
    const std::size_t n_max = opt.order.value_or(8);
    rec.run("symbolic C_n", [&] {
        const auto a = [](int i) { return MultiPoly::variable("a" + std::to_string(i)); };
        const PolySeries f(std::vector<MultiPoly>{MultiPoly(0), MultiPoly(1), a(2), a(3), a(4)});
        const auto c = compose_iterate_interpolate(f, 4);
        const auto x = MultiPoly::variable("x");
        const MultiPoly one(1);
        rec.expect("C_1 = 1", c[0] == one);
        rec.expect("C_2 = a2 x", c[1] == a(2) * x);
        rec.expect("C_3 = (a2^2 (x-1) + a3) x", c[2] == (a(2).pow(2) * (x - one) + a(3)) * x);
        const MultiPoly c4 = (((MultiPoly(2) * x - MultiPoly(3)) * a(2).pow(3) + MultiPoly(5) * a(2) * a(3)) * (x - one)
                              + MultiPoly(2) * a(4))
                             * x / Rational(2);
        rec.expect("C_4 = (((2x-3) a2^3 + 5 a2 a3)(x-1) + 2 a4) x / 2", c[3] == c4);
    });
    Rng rng(opt.seed + 7);
    rec.run("extrapolation", [&] {
        bool ok = true;
        for (int trial = 0; trial < 3; ++trial) {
            const auto f = random_diffeo(rng, n_max + 1, true);
            const auto c = compose_iterate_interpolate(f, n_max);
            for (std::size_t n = 1; n <= n_max; ++n) {
                for (std::size_t m : {n, n + 1}) {
                    const Rational at = c[n - 1].evaluate({{"x", Rational(static_cast<long>(m))}});
                    ok = ok && at == compose_power(f, m)[n];
                }
            }
        }
        rec.expect("C_n(n), C_n(n+1) match the true iterates, n <= " + std::to_string(n_max), ok);
    });
    rec.run("composition matrix", [&] {
        bool ok = true;
        for (int trial = 0; trial < 5; ++trial) {
            const auto f = random_diffeo(rng, 7, false);
            const auto g = random_diffeo(rng, 7, false);
            ok = ok && composition_matrix(compose(f, g), 6) == composition_matrix(f, 6) * composition_matrix(g, 6);
        }
        rec.expect("M(f o g) = M(f) M(g), size 6", ok);
    });
}

using SuiteFn = void (*)(Recorder &, const VerifyOptions &);

void suite_thm5(Recorder &rec, const VerifyOptions &opt)
{
    suite_thm5i(rec, opt);
    suite_thm5ii(rec, opt.order ? VerifyOptions{std::nullopt, opt.seed} : opt);
}

const std::map<std::string, SuiteFn, std::less<>> &registry()
{
    static const std::map<std::string, SuiteFn, std::less<>> suites{
        {"reversion", suite_reversion}, {"sin2", suite_sin2},       {"thm2", suite_thm2},
        {"thm3", suite_thm2},           {"thm1", suite_thm1},       {"thm4", suite_thm4},
        {"exp", suite_exp},             {"prop52", suite_prop52},   {"thm5", suite_thm5},
        {"thm5i", suite_thm5i},         {"thm5ii", suite_thm5ii},   {"dodgson", suite_dodgson},
        {"thm8", suite_thm8},           {"lgv", suite_lgv},         {"bijections", suite_bijections},
        {"prop72", suite_prop72},       {"interp", suite_interp},
    };
    return suites;
}

} // namespace

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto &[name, fn] : registry()) {
            v.push_back(name);
        }
        v.push_back("all");
        return v;
    }();
    return names;
}

const std::vector<Criterion> &acceptance_criteria()
{
    static const std::vector<Criterion> criteria{
        {1, "reversion", "reversion closed forms", 1},
        {2, "sin2", "sin^2 reversion and its differential equation", 1},
        {3, "thm2", "DL sequence, Newton and Lagrange agree", 5},
        {4, "thm1", "Lagrange-Buermann identity", 0},
        {5, "thm4", "generating series of Q_n and word oracle", 30},
        {6, "exp", "e^x closed forms and identity", 0},
        {7, "prop52", "special group and its deformations", 0},
        {8, "thm5", "Hankel degree bound and s1-independence", 60},
        {9, "dodgson", "Hankel invariances and condensation", 0},
        {10, "thm8", "J-fractions, Motzkin paths, minors", 60},
        {11, "bijections", "Lukasiewicz words, trees, cyclic lemma", 120},
        {12, "interp", "interpolated iterates and composition matrices", 0},
    };
    return criteria;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions &options)
{
    SuiteReport report;
    report.suite = std::string(name);
    const auto start = std::chrono::steady_clock::now();
    if (name == "all") {
        for (const auto &c : acceptance_criteria()) {
            auto sub = run_suite(c.suite, options);
            for (auto &check : sub.checks) {
                check.name = c.suite + ": " + check.name;
                report.checks.push_back(std::move(check));
            }
        }
    } else {
        const auto it = registry().find(name);
        if (it == registry().end()) {
            throw Error(ErrorCode::ValidationError, "unknown suite '" + std::string(name) + "'");
        }
        Recorder rec(report);
        it->second(rec, options);
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace dlrev
