#include "cli.hpp"

#include "matrix_document.hpp"

#include "qtexp/covering.hpp"
#include "qtexp/expm_structured.hpp"
#include "qtexp/oracle.hpp"
#include "qtexp/smalllin.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qtexp::cli {

namespace {

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string fmt(cplx v)
{
    if (v.imag() == 0.0) {
        return fmt(v.real());
    }
    const std::string im = fmt(std::abs(v.imag()));
    return fmt(v.real()) + (v.imag() < 0 ? "-" : "+") + im + "i";
}

std::string fmt_vec(const Quaternion& q)
{
    return "[" + fmt(q.x) + ", " + fmt(q.y) + ", " + fmt(q.z) + "]";
}

template <std::size_t M>
std::string fmt_list(const std::array<cplx, M>& v)
{
    std::string out = "[";
    for (std::size_t k = 0; k < M; ++k) {
        out += (k ? ", " : "") + fmt(v[k]);
    }
    return out + "]";
}

// "key=value" pairs for every parameter of a class instance.
struct Describe {
    std::string operator()(const SkewSymmetric& c) const { return "p=" + fmt_vec(c.p) + " q=" + fmt_vec(c.q); }
    std::string operator()(const Perskewsymmetric& c) const
    {
        return "p=" + fmt_vec(c.p) + " alpha=" + fmt(c.alpha) + " q=" + fmt_vec(c.q) + " beta=" + fmt(c.beta);
    }
    std::string operator()(const SkewHamiltonian& c) const
    {
        return "b=" + fmt(c.b) + " p=" + fmt_vec(c.p) + " c=" + fmt(c.c) + " d=" + fmt(c.d);
    }
    std::string operator()(const JordanClass& c) const
    {
        return "a=" + fmt(c.a) + " v=" + fmt_vec(c.v) + " b=" + fmt(c.b) + " c=" + fmt(c.c);
    }
    std::string operator()(const LieClass& c) const
    {
        return "p=" + fmt_vec(c.p) + " a=" + fmt(c.a) + " q=" + fmt_vec(c.q) + " b=" + fmt(c.b);
    }
    std::string operator()(const HamSymPersym& c) const
    {
        return "beta=" + fmt(c.beta) + " gamma=" + fmt(c.gamma) + " delta=" + fmt(c.delta);
    }
    std::string operator()(const SymToeplitzTridiag& c) const { return "a=" + fmt(c.a) + " b=" + fmt(c.b); }
    std::string operator()(const SymToeplitzS13Zero& c) const
    {
        return "a=" + fmt(c.a) + " b=" + fmt(c.b) + " c=" + fmt(c.c);
    }
    std::string operator()(const SpecialNormal& c) const
    {
        return "a=" + fmt(c.a) + " s=" + fmt_vec(c.s) + " t_hat=" + fmt_vec(c.t_hat) + " t=" + fmt_vec(c.t)
            + " sym_left=" + fmt_vec(c.sym_left);
    }
    std::string operator()(const BisymmetricRS& c) const
    {
        return "a=" + fmt(c.a) + " epsilon=" + fmt(c.epsilon) + " alpha=" + fmt(c.alpha) + " beta=" + fmt(c.beta)
            + " gamma=" + fmt(c.gamma) + " delta=" + fmt(c.delta);
    }
    std::string operator()(const SymmetricGeneral& c) const
    {
        return "a=" + fmt(c.a) + " p=" + fmt_vec(c.p) + " q=" + fmt_vec(c.q) + " r=" + fmt_vec(c.r);
    }
    std::string operator()(const ComplexSO4& c) const
    {
        return "left=" + fmt_list(c.left) + " right=" + fmt_list(c.right);
    }
    std::string operator()(const ComplexPerskew& c) const
    {
        return "p=" + fmt_list(c.p) + " alpha=" + fmt(c.alpha) + " q=" + fmt_list(c.q) + " beta=" + fmt(c.beta);
    }
};

template <typename T, std::size_t N>
void print_matrix(std::ostream& out, const SquareMatrix<T, N>& m)
{
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = 0; c < N; ++c) {
            std::string cell = fmt(m(r, c));
            out << (c ? "  " : "") << std::string(cell.size() < 13 ? 13 - cell.size() : 0, ' ') << cell;
        }
        out << '\n';
    }
}

std::string read_input(const std::string& source, bool inline_text)
{
    if (inline_text) {
        return source;
    }
    std::ostringstream buf;
    if (source == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(source);
    if (!in) {
        throw ParseError("cannot open '" + source + "'");
    }
    buf << in.rdbuf();
    return buf.str();
}

// Covering algebras of matching dimension that contain A.
template <std::size_t N>
std::vector<CoveringAlgebra> containing_algebras(const SquareMatrix<double, N>& a, double tol)
{
    std::vector<CoveringAlgebra> out;
    for (CoveringAlgebra alg : covering_algebras()) {
        if (static_cast<std::size_t>(covering_info(alg).dimension) == N && defining_residual(alg, a) <= tol) {
            out.push_back(alg);
        }
    }
    return out;
}

template <typename M>
void inject_fault([[maybe_unused]] M& value)
{
#ifdef QTEXP_FAULT_INJECT
    value(0, 0) += 1e-6;
#endif
}

struct Route {
    std::string name;
    double residual;
};

// Exponential of A by one named route; dimension-generic.
struct Computed {
    std::string route;
    MatrixDocument value;
};

Computed compute_expm(const MatrixDocument& doc, const std::string& method, double tol)
{
    if (method.rfind("covering:", 0) == 0) {
        const std::string alg_name = method.substr(9);
        const auto alg = parse_covering(alg_name);
        if (!alg) {
            throw ParseError("unknown covering algebra '" + alg_name + "'");
        }
        if (doc.complex) {
            throw ParseError("covering routes take real matrices");
        }
        if (doc.n == 4) {
            return {method, make_document(exp_via_covering(*alg, real_matrix<4>(doc), tol), "")};
        }
        if (doc.n == 3) {
            return {method, make_document(exp_via_covering(*alg, real_matrix<3>(doc), tol), "")};
        }
        throw ParseError(alg_name + " does not act on " + std::to_string(doc.n) + "x" + std::to_string(doc.n)
            + " matrices");
    }

    const ExpMethod parsed = [&] {
        try {
            return ExpMethod::parse(method);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }();

    if (doc.n == 4) {
        if (doc.complex) {
            const ExpResultC r = expm_auto(complex_matrix<4>(doc), parsed, false, tol);
            return {r.route, make_document(r.value, "")};
        }
        const ExpResult r = expm_auto(real_matrix<4>(doc), parsed, false, tol);
        return {r.route, make_document(r.value, "")};
    }
    if (parsed.kind == ExpMethod::Kind::forced) {
        throw ParseError("structure classes are 4x4; got a " + std::to_string(doc.n) + "x" + std::to_string(doc.n)
            + " matrix");
    }
    if (doc.n == 3) {
        if (doc.complex) {
            return {"oracle", make_document(expm_series(complex_matrix<3>(doc)), "")};
        }
        const Mat3 a = real_matrix<3>(doc);
        const auto algs = containing_algebras(a, tol);
        if (parsed.kind == ExpMethod::Kind::automatic && !algs.empty()) {
            return {"covering:" + covering_info(algs.front()).name,
                make_document(exp_via_covering(algs.front(), a, tol), "")};
        }
        return {"oracle", make_document(expm_series(a), "")};
    }
    if (parsed.kind == ExpMethod::Kind::oracle) {
        return doc.complex ? Computed{"oracle", make_document(expm_series(complex_matrix<2>(doc)), "")}
                           : Computed{"oracle", make_document(expm_series(real_matrix<2>(doc)), "")};
    }
    return doc.complex ? Computed{"expm2", make_document(expm2(complex_matrix<2>(doc)), "")}
                       : Computed{"expm2", make_document(expm2(real_matrix<2>(doc)), "")};
}

template <typename T, std::size_t N>
SquareMatrix<T, N> as_matrix(const MatrixDocument& doc)
{
    if constexpr (is_complex_v<T>) {
        return complex_matrix<N>(doc);
    } else {
        return real_matrix<N>(doc);
    }
}

template <typename T, std::size_t N>
std::vector<Route> verify_routes(const MatrixDocument& doc, bool all_routes, double tol)
{
    const SquareMatrix<T, N> a = as_matrix<T, N>(doc);
    const SquareMatrix<T, N> reference = expm_series(a);
    std::vector<Route> routes;
    const auto add = [&](const std::string& name, SquareMatrix<T, N> value) {
        inject_fault(value);
        routes.push_back({name, rel_error(value, reference)});
    };

    if (!all_routes) {
        const Computed c = compute_expm(doc, "auto", tol);
        if (c.route != "oracle") {
            add(c.route, as_matrix<T, N>(c.value));
        }
    } else {
        if constexpr (N == 4) {
            for (const auto& cls : classify(a, tol)) {
                if constexpr (is_complex_v<T>) {
                    add(class_name(cls), exp_closed_form_complex(cls));
                } else {
                    add(class_name(cls), exp_closed_form(cls));
                }
            }
        }
        if constexpr (N >= 3 && !is_complex_v<T>) {
            for (CoveringAlgebra alg : containing_algebras(a, tol)) {
                add("covering:" + covering_info(alg).name, exp_via_covering(alg, a, tol));
            }
        }
        if constexpr (N == 2) {
            add("expm2", expm2(a));
        }
    }
    routes.push_back({"oracle", 0.0});
    return routes;
}

std::vector<Route> verify_dispatch(const MatrixDocument& doc, bool all_routes, double tol)
{
    switch (doc.n) {
    case 2:
        return doc.complex ? verify_routes<cplx, 2>(doc, all_routes, tol) : verify_routes<double, 2>(doc, all_routes, tol);
    case 3:
        return doc.complex ? verify_routes<cplx, 3>(doc, all_routes, tol) : verify_routes<double, 3>(doc, all_routes, tol);
    default:
        return doc.complex ? verify_routes<cplx, 4>(doc, all_routes, tol) : verify_routes<double, 4>(doc, all_routes, tol);
    }
}

void print_document(std::ostream& out, const MatrixDocument& doc)
{
    switch (doc.n) {
    case 2:
        doc.complex ? print_matrix(out, complex_matrix<2>(doc)) : print_matrix(out, real_matrix<2>(doc));
        break;
    case 3:
        doc.complex ? print_matrix(out, complex_matrix<3>(doc)) : print_matrix(out, real_matrix<3>(doc));
        break;
    default:
        doc.complex ? print_matrix(out, complex_matrix<4>(doc)) : print_matrix(out, real_matrix<4>(doc));
        break;
    }
}

int cmd_classify(const MatrixDocument& doc, double tol, std::ostream& out)
{
    int matches = 0;
    if (doc.n == 4) {
        const auto found = doc.complex ? classify(complex_matrix<4>(doc), tol) : classify(real_matrix<4>(doc), tol);
        for (const auto& cls : found) {
            out << class_name(cls) << "  " << std::visit(Describe{}, cls) << '\n';
            ++matches;
        }
    }
    if (!doc.complex && doc.n >= 3) {
        const auto algs = doc.n == 4 ? containing_algebras(real_matrix<4>(doc), tol)
                                     : containing_algebras(real_matrix<3>(doc), tol);
        for (CoveringAlgebra alg : algs) {
            out << "covering:" << covering_info(alg).name << '\n';
            ++matches;
        }
    }
    if (matches == 0) {
        out << "no structure class matched\n";
    }
    return kOk;
}

int cmd_expm(const MatrixDocument& doc, const std::string& method, double tol, bool json, std::ostream& out)
{
    Computed c = compute_expm(doc, method, tol);
    if (json) {
        c.value.label = doc.label.empty() ? "expm" : "expm(" + doc.label + ")";
        c.value.route = c.route;
        out << to_json(c.value) << '\n';
        return kOk;
    }
    out << "route: " << c.route << '\n';
    print_document(out, c.value);
    return kOk;
}

int cmd_verify(const MatrixDocument& doc, bool all_routes, double tol, std::ostream& out, std::ostream& err)
{
    const auto routes = verify_dispatch(doc, all_routes, tol);
    std::size_t width = 5;
    for (const auto& r : routes) {
        width = std::max(width, r.name.size());
    }
    out << "route" << std::string(width - 5 + 2, ' ') << "residual\n";
    int failures = 0;
    for (const auto& r : routes) {
        out << r.name << std::string(width - r.name.size() + 2, ' ');
        if (r.name == "oracle") {
            out << "reference\n";
            continue;
        }
        const bool ok = r.residual <= kVerifyTol;
        out << fmt(r.residual) << (ok ? "  ok" : "  FAIL") << '\n';
        if (!ok) {
            ++failures;
            err << "verify: route " << r.name << " differs from the series oracle by " << fmt(r.residual)
                << " (limit " << fmt(kVerifyTol) << ")\n";
        }
    }
    return failures == 0 ? kOk : kResidualFailure;
}

int cmd_rep(const MatrixDocument& doc, std::ostream& out)
{
    if (doc.n != 4) {
        throw ParseError("rep needs a 4x4 matrix, got " + std::to_string(doc.n) + "x" + std::to_string(doc.n));
    }
    const HxHElementC u = from_matrix(complex_matrix<4>(doc));
    for (Unit a : kUnits) {
        for (Unit b : kUnits) {
            out << label(a) << "(x)" << label(b) << "  " << fmt(u(a, b)) << '\n';
        }
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Closed-form exponentials of structured 4x4 matrices"};
    app.name("qtexp-cli");
    app.require_subcommand(1);

    std::string input;
    bool inline_text = false;
    double tol = kDefaultClassifyTol;
    std::string method = "auto";
    bool json = false;
    bool all_routes = false;

    const auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "Matrix file ('-' for stdin)")->required();
        sub->add_flag("--inline", inline_text, "Treat INPUT as the matrix text itself");
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "List the structure classes the matrix belongs to");
    add_input(classify_cmd);
    classify_cmd->add_option("--tol", tol, "Relative membership tolerance");

    CLI::App* expm_cmd = app.add_subcommand("expm", "Exponentiate the matrix");
    add_input(expm_cmd);
    expm_cmd->add_option("--method", method, "auto | <class> | oracle | covering:<algebra>");
    expm_cmd->add_option("--tol", tol, "Relative membership tolerance");
    expm_cmd->add_flag("--json", json, "Write the result as a JSON matrix document");

    CLI::App* verify_cmd = app.add_subcommand("verify", "Compare closed-form routes with the series oracle");
    add_input(verify_cmd);
    verify_cmd->add_flag("--all-routes", all_routes, "Check every applicable route, not just the automatic one");
    verify_cmd->add_option("--tol", tol, "Relative membership tolerance");

    CLI::App* rep_cmd = app.add_subcommand("rep", "Print the 16 H (x) H coefficients");
    add_input(rep_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kBadInput;
    }

    try {
        if (!(tol > 0.0)) {
            throw ParseError("--tol must be positive");
        }
        const MatrixDocument doc = parse_document(read_input(input, inline_text));
        if (*classify_cmd) {
            return cmd_classify(doc, tol, out);
        }
        if (*expm_cmd) {
            return cmd_expm(doc, method, tol, json, out);
        }
        if (*verify_cmd) {
            return cmd_verify(doc, all_routes, tol, out, err);
        }
        return cmd_rep(doc, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kBadInput;
    } catch (const ForcedClassMismatch& e) {
        err << "class mismatch: " << e.what() << '\n';
        return kNotInClass;
    } catch (const NotInAlgebra& e) {
        err << "not in algebra: " << e.what() << '\n';
        return kNotInClass;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::overflow_error& e) {
        err << "overflow: " << e.what() << '\n';
        return kBadInput;
    }
}

} // namespace qtexp::cli
