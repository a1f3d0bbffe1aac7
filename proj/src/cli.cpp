#include <dlrev/cli.hpp>

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include <dlrev/combinatorics.hpp>
#include <dlrev/interp_group.hpp>
#include <dlrev/json_io.hpp>
#include <dlrev/reversion.hpp>
#include <dlrev/transforms.hpp>
#include <dlrev/verify.hpp>

namespace dlrev {

namespace {

struct Args {
    std::string format = "json";
    std::string coeffs;
    std::string seq;
    std::string jf;
    std::string tau = "0";
    std::string x = "1";
    std::string variant = "inversion";
    std::string kind;
    std::string suite = "all";
    std::size_t order = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t shift = 0;
    bool weights = false;
    bool orbits = false;
};

// A JSON array is an exact polynomial and may be viewed at any order; a
// series object is known only to its stated order.
RationalSeries read_series(const std::string &text, std::size_t order)
{
    const Json j = parse_json_text(text);
    if (j.is_array()) {
        auto c = parse_rational_list(j);
        if (c.empty() && order == 0) {
            throw Error(ErrorCode::EmptyCoefficients, "no coefficients given");
        }
        const std::size_t n = order == 0 ? c.size() : order;
        return RationalSeries::from_polynomial(c, n);
    }
    auto s = parse_series(j);
    return order == 0 ? s : truncate(s, order);
}

std::vector<Rational> read_sequence(const std::string &text)
{
    auto v = parse_rational_list(parse_json_text(text));
    if (v.empty()) {
        throw Error(ErrorCode::EmptyCoefficients, "empty sequence");
    }
    return v;
}

void emit_list(std::ostream &out, const std::string &format, const Json &list)
{
    if (format == "json") {
        out << list.dump() << '\n';
        return;
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
        out << i << ',' << (list[i].is_string() ? list[i].get<std::string>() : list[i].dump()) << '\n';
    }
}

std::string poly_text(const MultiPoly &p) { return p.to_string(); }

int cmd_revert(const Args &a, std::ostream &out)
{
    emit_list(out, a.format, to_json(revert(read_series(a.coeffs, a.order)).coeffs()));
    return 0;
}

int cmd_dl(const Args &a, std::ostream &out)
{
    if (a.n == 0) {
        throw Error(ErrorCode::BadRange, "--n must be >= 1");
    }
    const auto dl = dl_build(read_series(a.coeffs, a.n), a.n);
    if (a.format == "json") {
        Json p = Json::array();
        Json q = Json::array();
        for (std::size_t m = 1; m <= a.n; ++m) {
            p.push_back(to_json(dl.P(m)));
            q.push_back(to_json(dl.Q(m)));
        }
        out << Json{{"P", p}, {"Q", q}}.dump() << '\n';
        return 0;
    }
    out << "n,j,P,Q\n";
    for (std::size_t m = 1; m <= a.n; ++m) {
        for (std::size_t j = 0; j < m; ++j) {
            out << m << ',' << j << ',' << dl.P(m)[j] << ',' << dl.Q(m)[j] << '\n';
        }
    }
    return 0;
}

int cmd_qser(const Args &a, std::ostream &out)
{
    if (a.order < 2) {
        throw Error(ErrorCode::BadRange, "--order must be >= 2");
    }
    const auto dl = dl_build(read_series(a.coeffs, a.order - 1), a.order - 1);
    emit_list(out, a.format, to_json(q_series(dl).coeffs()));
    return 0;
}

int cmd_interp(const Args &a, std::ostream &out)
{
    const auto series = read_series(a.coeffs, a.order);
    const Rational tau = Rational::parse(a.tau);
    const auto f = a.variant == "derivative" ? deform_derivative_variant(series, tau)
                                             : deform_inversion_reversion(series, tau);
    emit_list(out, a.format, to_json(f.coeffs()));
    return 0;
}

int cmd_hankel(const Args &a, std::ostream &out)
{
    emit_list(out, a.format, to_json(hankel_transform(read_sequence(a.seq), a.shift, a.n)));
    return 0;
}

int cmd_jfrac(const Args &a, std::ostream &out)
{
    if (!a.jf.empty()) {
        const auto jf = parse_jfraction(parse_json_text(a.jf));
        const std::size_t order = a.order == 0 ? 2 * jf.depth() + 2 : a.order;
        emit_list(out, a.format, to_json(jfraction_contract(jf, order).coeffs()));
        return 0;
    }
    if (a.coeffs.empty()) {
        throw Error(ErrorCode::ValidationError, "jfrac needs --coeffs (expand) or --jf (contract)");
    }
    const auto jf = jfraction_expand(read_series(a.coeffs, 0), a.n);
    if (a.format == "json") {
        out << to_json(jf).dump() << '\n';
        return 0;
    }
    out << "d0,0," << jf.d0 << '\n';
    for (std::size_t h = 0; h < jf.p.size(); ++h) {
        out << "p," << h << ',' << jf.p[h] << '\n';
    }
    for (std::size_t h = 0; h < jf.q.size(); ++h) {
        out << "q," << h << ',' << jf.q[h] << '\n';
    }
    return 0;
}

int cmd_transform(const Args &a, std::ostream &out)
{
    const RationalSeries s(read_sequence(a.seq));
    if (a.kind == "inverse") {
        auto cur = s;
        for (std::size_t m = 0; m < std::max<std::size_t>(a.n, 1); ++m) {
            cur = inverse_transform(cur);
        }
        emit_list(out, a.format, to_json(cur.coeffs()));
    } else if (a.kind == "binomial") {
        emit_list(out, a.format, to_json(binomial_transform(s.coeffs(), Rational::parse(a.x))));
    } else {
        const auto it = inverse_transform_iterate(s, "x");
        if (a.format == "json") {
            out << to_json(it.coeffs()).dump() << '\n';
        } else {
            for (std::size_t i = 0; i < it.order(); ++i) {
                out << i << ',' << poly_text(it[i]) << '\n';
            }
        }
    }
    return 0;
}

Json orbit_json(const OrbitReport &r)
{
    return Json{{"elements", r.elements},
                {"orbits", r.orbits},
                {"fixed_right", r.fixed_right},
                {"fixed_left", r.fixed_left}};
}

int cmd_enum(const Args &a, std::ostream &out)
{
    const bool csv = a.format == "csv";
    auto csv_row = [&out](const std::vector<int> &v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            out << (i ? "," : "") << v[i];
        }
        out << '\n';
    };
    if (a.kind == "luka") {
        const auto words = enum_words(a.n, a.k);
        if (csv) {
            std::for_each(words.begin(), words.end(), csv_row);
        } else {
            out << Json(words).dump() << '\n';
        }
    } else if (a.kind == "motzkin") {
        const auto paths = enum_motzkin(a.n);
        if (csv) {
            for (const auto &p : paths) {
                if (a.weights) {
                    out << motzkin_weight(p) << ',';
                }
                csv_row(p);
            }
        } else if (a.weights) {
            Json list = Json::array();
            for (const auto &p : paths) {
                list.push_back(Json{{"path", p}, {"weight", to_json(motzkin_weight(p))}});
            }
            out << list.dump() << '\n';
        } else {
            out << Json(paths).dump() << '\n';
        }
    } else {
        if (a.orbits) {
            const auto b = dihedral_orbits(a.n, TreeSide::Binary);
            const auto t = dihedral_orbits(a.n, TreeSide::Plane);
            if (csv) {
                out << "side,elements,orbits,fixed_right,fixed_left\n";
                out << "binary," << b.elements << ',' << b.orbits.size() << ',' << b.fixed_right << ','
                    << b.fixed_left << '\n';
                out << "plane," << t.elements << ',' << t.orbits.size() << ',' << t.fixed_right << ','
                    << t.fixed_left << '\n';
            } else {
                out << Json{{"binary", orbit_json(b)}, {"plane", orbit_json(t)}}.dump() << '\n';
            }
        } else {
            Json list = Json::array();
            for (const auto &t : enum_plane_trees(a.n)) {
                list.push_back(encode(t));
            }
            emit_list(out, a.format, list);
        }
    }
    return 0;
}

int cmd_verify(const Args &a, std::ostream &out)
{
    VerifyOptions opt;
    if (a.order > 0) {
        opt.order = a.order;
    }
    const auto report = run_suite(a.suite, opt);
    if (a.format == "json") {
        Json checks = Json::array();
        for (const auto &c : report.checks) {
            Json item{{"name", c.name}, {"passed", c.passed}};
            if (!c.detail.empty()) {
                item["detail"] = c.detail;
            }
            checks.push_back(item);
        }
        out << Json{{"suite", report.suite},
                    {"passed", report.passed()},
                    {"seconds", report.seconds},
                    {"checks", checks}}
                   .dump()
            << '\n';
    } else {
        out << "check,passed\n";
        for (const auto &c : report.checks) {
            out << '"' << c.name << "\"," << (c.passed ? "true" : "false") << '\n';
        }
    }
    return report.passed() ? 0 : 1;
}

void error_json(std::ostream &err, std::string_view name, const std::string &message)
{
    err << Json{{"error", std::string(name)}, {"message", message}}.dump() << '\n';
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact formal power series reversion, Hankel transforms and their combinatorics", "dlrev"};
    app.require_subcommand(1);
    Args a;

    auto format = [&a](CLI::App *sub) {
        sub->add_option("--format", a.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    };
    auto coeffs = [&a](CLI::App *sub, bool required) {
        auto *o = sub->add_option("--coeffs", a.coeffs, "Series as a JSON array or {\"order\",\"coeffs\"} object");
        if (required) {
            o->required();
        }
    };

    auto *revert_cmd = app.add_subcommand("revert", "Compositional inverse by Newton iteration");
    coeffs(revert_cmd, true);
    revert_cmd->add_option("--order", a.order, "Truncation order (defaults to the input's)");
    format(revert_cmd);

    auto *dl_cmd = app.add_subcommand("dl", "Truncation polynomials P_1..P_n and mirrors Q_1..Q_n");
    coeffs(dl_cmd, true);
    dl_cmd->add_option("--n", a.n, "Largest index")->required();
    format(dl_cmd);

    auto *qser_cmd = app.add_subcommand("qser", "q(t) = sum Q_n(0) t^n, the reversion of x/s");
    coeffs(qser_cmd, true);
    qser_cmd->add_option("--order", a.order, "q is returned modulo t^order")->required();
    format(qser_cmd);

    auto *interp_cmd = app.add_subcommand("interp", "Deformation between inversion (tau=0) and reversion (tau=1)");
    coeffs(interp_cmd, true);
    interp_cmd->add_option("--tau", a.tau, "Rational parameter");
    interp_cmd->add_option("--order", a.order, "Truncation order");
    interp_cmd->add_option("--variant", a.variant, "inversion or derivative")
        ->check(CLI::IsMember({"inversion", "derivative"}));
    format(interp_cmd);

    auto *hankel_cmd = app.add_subcommand("hankel", "Hankel transform det H_shift(1..n)");
    hankel_cmd->add_option("--seq", a.seq, "JSON array of rationals")->required();
    hankel_cmd->add_option("--shift", a.shift, "Index shift k");
    hankel_cmd->add_option("--n", a.n, "Largest determinant size")->required();
    format(hankel_cmd);

    auto *jfrac_cmd = app.add_subcommand("jfrac", "J-fraction expansion (--coeffs) or contraction (--jf)");
    coeffs(jfrac_cmd, false);
    jfrac_cmd->add_option("--n", a.n, "Depth of the expansion");
    jfrac_cmd->add_option("--jf", a.jf, "J-fraction {\"d0\",\"p\",\"q\"} to contract");
    jfrac_cmd->add_option("--order", a.order, "Order of the contracted series");
    format(jfrac_cmd);

    auto *transform_cmd = app.add_subcommand("transform", "Inverse, binomial or continuous inverse transform");
    transform_cmd->add_option("kind", a.kind, "inverse, binomial or iterate")
        ->required()
        ->check(CLI::IsMember({"inverse", "binomial", "iterate"}));
    transform_cmd->add_option("--seq", a.seq, "JSON array of rationals")->required();
    transform_cmd->add_option("--x", a.x, "Rational parameter of the binomial transform");
    transform_cmd->add_option("--n", a.n, "Number of inverse transforms to apply");
    format(transform_cmd);

    auto *enum_cmd = app.add_subcommand("enum", "Enumerate Lukasiewicz words, Motzkin paths or plane trees");
    enum_cmd->add_option("kind", a.kind, "luka, motzkin or trees")
        ->required()
        ->check(CLI::IsMember({"luka", "motzkin", "trees"}));
    enum_cmd->add_option("--n", a.n, "Word length, path length, or number of tree edges")->required();
    enum_cmd->add_option("--k", a.k, "Words of [x^k]Q_n (luka only)");
    enum_cmd->add_flag("--weights", a.weights, "Attach path weights (motzkin)");
    enum_cmd->add_flag("--orbits", a.orbits, "Orbits of the two involutions (trees)");
    format(enum_cmd);

    auto *verify_cmd = app.add_subcommand("verify", "Run a named verification suite");
    verify_cmd->add_option("--suite", a.suite, "Suite name")->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--order", a.order, "Overrides the suite's main size parameter");
    format(verify_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        error_json(err, error_name(ErrorCode::ParseError), e.what());
        return 2;
    }

    try {
        if (revert_cmd->parsed()) {
            return cmd_revert(a, out);
        }
        if (dl_cmd->parsed()) {
            return cmd_dl(a, out);
        }
        if (qser_cmd->parsed()) {
            return cmd_qser(a, out);
        }
        if (interp_cmd->parsed()) {
            return cmd_interp(a, out);
        }
        if (hankel_cmd->parsed()) {
            return cmd_hankel(a, out);
        }
        if (jfrac_cmd->parsed()) {
            return cmd_jfrac(a, out);
        }
        if (transform_cmd->parsed()) {
            return cmd_transform(a, out);
        }
        if (enum_cmd->parsed()) {
            return cmd_enum(a, out);
        }
        return cmd_verify(a, out);
    } catch (const Error &e) {
        error_json(err, error_name(e.code()), e.what());
        return 2;
    } catch (const std::exception &e) {
        error_json(err, "InternalError", e.what());
        return 1;
    }
}

} // namespace dlrev
