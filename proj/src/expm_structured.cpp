#include "qtexp/expm_structured.hpp"

#include "qtexp/oracle.hpp"
#include "qtexp/smalllin.hpp"

#include <cmath>

namespace qtexp {

namespace {

const HxHElement kUnit = HxHElement::unit();
const HxHElement kR4 = HxHElement::basis(Unit::j, Unit::i);

// cosh/sinh pair of a group X with X^2 = mu: (cosh X, sinh X / X) as scalars.
struct HyperbolicPair {
    double cosh_part;
    double sinh_over;
};

HyperbolicPair hyperbolic(const HxHElement& x)
{
    const auto mu = scalar_square(x);
    if (!mu) {
        throw std::logic_error("hyperbolic: element does not square to a scalar");
    }
    return {phi_c(-*mu), phi_s(-*mu)};
}

Quaternion from_span(const std::array<Unit, 2>& span, double c0, double c1)
{
    std::array<double, 4> c{};
    c[static_cast<std::size_t>(index_of(span[0]))] = c0;
    c[static_cast<std::size_t>(index_of(span[1]))] = c1;
    return {0.0, c[1], c[2], c[3]};
}

} // namespace

template <typename T>
BasicHxH<T> exp_group(const BasicHxH<T>& u)
{
    const auto mu = scalar_square(u);
    if (!mu) {
        throw std::logic_error("exp_group: element does not square to a scalar multiple of 1 (x) 1");
    }
    return BasicHxH<T>::unit() * phi_c(-*mu) + u * phi_s(-*mu);
}

template HxHElement exp_group(const HxHElement&);
template HxHElementC exp_group(const HxHElementC&);

Mat4 exp_skew_symmetric(const Quaternion& p, const Quaternion& q)
{
    return to_matrix(HxHElement::tensor(quat_exp(p.pure_part()), quat_exp(q.pure_part())));
}

Mat4 exp_perskewsymmetric(const Perskewsymmetric& cls)
{
    const auto [first, second] = groups(cls);
    return to_matrix(exp_group(first) * exp_group(second));
}

Mat4 exp_skew_hamiltonian(const SkewHamiltonian& cls)
{
    const HxHElement u = jordan_part(skew_hamiltonian_layout(), cls.p, cls.c, cls.d);
    return std::exp(cls.b) * to_matrix(exp_group(u));
}

Mat4 exp_jordan(const JordanClass& cls)
{
    const HxHElement u = jordan_part(jordan_layout(cls.k), cls.v, cls.b, cls.c);
    return std::exp(cls.a) * to_matrix(exp_group(u));
}

Mat4 exp_lie(const LieClass& cls)
{
    const auto [first, second] = groups(cls);
    return to_matrix(exp_group(first) * exp_group(second));
}

Mat4 exp_ham_sym_persym(const HamSymPersym& cls)
{
    const HxHElement x = HxHElement::basis(Unit::j, Unit::i, cls.beta);
    const HxHElement yz = HxHElement::basis(Unit::i, Unit::k, cls.gamma) + HxHElement::basis(Unit::k, Unit::k, cls.delta);
    return to_matrix(exp_group(x) * exp_group(yz));
}

Mat4 exp_sym_toeplitz_tridiag(const SymToeplitzTridiag& cls)
{
    const HxHElement y = HxHElement::basis(Unit::j, Unit::i, cls.b / 2.0);
    const HxHElement zw = HxHElement::basis(Unit::i, Unit::j, cls.b / 2.0) + HxHElement::basis(Unit::k, Unit::j, cls.b);
    return std::exp(cls.a) * to_matrix(exp_group(y) * exp_group(zw));
}

Mat4 exp_sym_toeplitz_s13(const SymToeplitzS13Zero& cls)
{
    const HxHElement y = HxHElement::basis(Unit::j, Unit::i, (cls.b + cls.c) / 2.0);
    const HxHElement zw
        = HxHElement::basis(Unit::i, Unit::j, (cls.b - cls.c) / 2.0) + HxHElement::basis(Unit::k, Unit::j, cls.b);
    return std::exp(cls.a) * to_matrix(exp_group(y) * exp_group(zw));
}

Mat4 exp_special_normal(const SpecialNormal& cls)
{
    const HxHElement sym = HxHElement::tensor(cls.sym_left.pure_part(), cls.t_hat.pure_part());
    const HxHElement rotation = HxHElement::tensor(quat_exp(cls.s.pure_part()), quat_exp(cls.t.pure_part()));
    return std::exp(cls.a) * to_matrix(exp_group(sym) * rotation);
}

Mat4 exp_bisymmetric_rs(const BisymmetricRS& cls)
{
    const HxHElement x = HxHElement::basis(Unit::j, Unit::i, cls.epsilon);
    const HxHElement y
        = HxHElement::tensor(Quaternion::pure(cls.alpha, 0.0, cls.beta), Quaternion::pure(0.0, cls.gamma, cls.delta));
    const HyperbolicPair hx = hyperbolic(x);
    const HyperbolicPair hy = hyperbolic(y);

    const HxHElement cosh_s = kUnit * (hx.cosh_part * hy.cosh_part) + (x * y) * (hx.sinh_over * hy.sinh_over);
    const HxHElement sinh_s = x * (hx.sinh_over * hy.cosh_part) + y * (hy.sinh_over * hx.cosh_part);
    const HxHElement shifted = kUnit * std::cosh(cls.a) + kR4 * std::sinh(cls.a);
    return to_matrix(shifted * (cosh_s + kR4 * sinh_s));
}

Mat4 exp_symmetric_general(const SymmetricGeneral& cls)
{
    Mat3 block;
    const std::array<Quaternion, 3> cols{cls.p, cls.q, cls.r};
    for (std::size_t c = 0; c < 3; ++c) {
        const Vec3 v = cols[c].vec();
        for (std::size_t r = 0; r < 3; ++r) {
            block(r, c) = v[r];
        }
    }
    const Svd3 svd = svd3(block);
    HxHElement product = kUnit;
    for (std::size_t n = 0; n < 3; ++n) {
        const double sigma = svd.sigma[n];
        const HxHElement term = HxHElement::tensor(Quaternion::pure(column(svd.u, n)), Quaternion::pure(column(svd.v, n)));
        product = product * (kUnit * std::cosh(sigma) + term * std::sinh(sigma));
    }
    return std::exp(cls.a) * to_matrix(product);
}

Mat4 exp_bisymmetric_reduced(double a, double b, const Quaternion& p, const Quaternion& q)
{
    // Rows over {i, k}, columns over {j, k}.
    const Mat2 block = Mat2::from_rows({p.x, q.x, p.z, q.z});
    const SymEig2 gram = sym_eig2(block.transpose() * block);
    HxHElement product = kUnit * std::cosh(b) + kR4 * std::sinh(b);
    for (std::size_t n = 0; n < 2; ++n) {
        const double vx = gram.vectors(0, n);
        const double vy = gram.vectors(1, n);
        const double ux = block(0, 0) * vx + block(0, 1) * vy;
        const double uy = block(1, 0) * vx + block(1, 1) * vy;
        const double sigma = std::hypot(ux, uy);
        if (sigma == 0.0) {
            continue;
        }
        const HxHElement term = HxHElement::tensor(from_span({Unit::i, Unit::k}, ux / sigma, uy / sigma),
            from_span({Unit::j, Unit::k}, vx, vy));
        product = product * (kUnit * std::cosh(sigma) + term * std::sinh(sigma));
    }
    return std::exp(a) * to_matrix(product);
}

Mat4C exp_so4_complex(const ComplexSO4& cls)
{
    HxHElementC left;
    HxHElementC right;
    for (std::size_t n = 0; n < 3; ++n) {
        left(kPureUnits[n], Unit::one) = cls.left[n];
        right(Unit::one, kPureUnits[n]) = cls.right[n];
    }
    return to_matrix(exp_group(left) * exp_group(right));
}

Mat4C exp_p4_complex(const ComplexPerskew& cls)
{
    const auto [first, second] = groups(cls);
    return to_matrix(exp_group(first) * exp_group(second));
}

Mat4 exp_closed_form(const StructureClass& cls)
{
    struct Visitor {
        Mat4 operator()(const SkewSymmetric& c) const { return exp_skew_symmetric(c.p, c.q); }
        Mat4 operator()(const SkewHamiltonian& c) const { return exp_skew_hamiltonian(c); }
        Mat4 operator()(const Perskewsymmetric& c) const { return exp_perskewsymmetric(c); }
        Mat4 operator()(const LieClass& c) const { return exp_lie(c); }
        Mat4 operator()(const JordanClass& c) const { return exp_jordan(c); }
        Mat4 operator()(const HamSymPersym& c) const { return exp_ham_sym_persym(c); }
        Mat4 operator()(const SymToeplitzTridiag& c) const { return exp_sym_toeplitz_tridiag(c); }
        Mat4 operator()(const SymToeplitzS13Zero& c) const { return exp_sym_toeplitz_s13(c); }
        Mat4 operator()(const SpecialNormal& c) const { return exp_special_normal(c); }
        Mat4 operator()(const BisymmetricRS& c) const { return exp_bisymmetric_rs(c); }
        Mat4 operator()(const SymmetricGeneral& c) const { return exp_symmetric_general(c); }
        Mat4 operator()(const ComplexSO4&) const { throw std::invalid_argument("exp_closed_form: complex class"); }
        Mat4 operator()(const ComplexPerskew&) const { throw std::invalid_argument("exp_closed_form: complex class"); }
    };
    return std::visit(Visitor{}, cls);
}

Mat4C exp_closed_form_complex(const StructureClass& cls)
{
    if (const auto* so4 = std::get_if<ComplexSO4>(&cls)) {
        return exp_so4_complex(*so4);
    }
    if (const auto* p4 = std::get_if<ComplexPerskew>(&cls)) {
        return exp_p4_complex(*p4);
    }
    return complexify(exp_closed_form(cls));
}

SkewMinimalPoly minimal_poly_skewT(const Quaternion& s, const Quaternion& t, double tol)
{
    const double ns = pure_norm(s);
    const double nt = pure_norm(t);
    const double s2 = ns * ns;
    const double t2 = nt * nt;
    SkewMinimalPoly out;
    out.quartic = {1.0, 0.0, 2.0 * (s2 + t2), 0.0, (s2 - t2) * (s2 - t2)};

    const double scale = ns + nt;
    const bool s_zero = ns <= tol * scale;
    const bool t_zero = nt <= tol * scale;
    if (scale == 0.0) {
        out.degree = 1;
        out.minimal = {1.0, 0.0};
    } else if (s_zero || t_zero) {
        // T^2 + |T-part|^2 I.
        out.degree = 2;
        out.minimal = {1.0, 0.0, s2 + t2};
    } else if (std::abs(ns - nt) <= tol * scale) {
        // Eigenvalues +-2i|s| and a double zero.
        out.degree = 3;
        out.minimal = {1.0, 0.0, 2.0 * (s2 + t2), 0.0};
    } else {
        out.degree = 4;
        out.minimal.assign(out.quartic.begin(), out.quartic.end());
    }
    return out;
}

ForcedClassMismatch::ForcedClassMismatch(std::string class_name, double residual)
    : std::runtime_error("matrix is not in class " + class_name + " (relative residual "
          + std::to_string(residual) + ")")
    , class_name_(std::move(class_name))
    , residual_(residual)
{
}

ExpMethod ExpMethod::parse(std::string_view text)
{
    if (text == "auto") {
        return {Kind::automatic, {}};
    }
    if (text == "oracle") {
        return {Kind::oracle, {}};
    }
    if (class_priority(text) < 0) {
        throw std::invalid_argument("unknown method '" + std::string(text) + "'");
    }
    return {Kind::forced, std::string(text)};
}

namespace {

template <typename M>
BasicExpResult<M> expm_dispatch(const M& a, const ExpMethod& method, bool verify, double tol)
{
    constexpr bool complex_input = std::is_same_v<M, Mat4C>;
    const auto closed_form = [](const StructureClass& cls) {
        if constexpr (complex_input) {
            return exp_closed_form_complex(cls);
        } else {
            return exp_closed_form(cls);
        }
    };

    BasicExpResult<M> out;
    switch (method.kind) {
    case ExpMethod::Kind::oracle:
        out.value = expm_series(a);
        out.route = "oracle";
        break;
    case ExpMethod::Kind::forced: {
        const MatchResult match = match_class(a, method.class_name, tol);
        if (!match.match) {
            throw ForcedClassMismatch(method.class_name, match.residual);
        }
        out.value = closed_form(*match.match);
        out.route = method.class_name;
        break;
    }
    case ExpMethod::Kind::automatic: {
        const auto classes = classify(a, tol);
        if (classes.empty()) {
            out.value = expm_series(a);
            out.route = "oracle";
        } else {
            out.value = closed_form(classes.front());
            out.route = class_name(classes.front());
        }
        break;
    }
    }
    if (verify) {
        out.residual = rel_error(out.value, expm_series(a));
    }
    return out;
}

} // namespace

ExpResult expm_auto(const Mat4& a, const ExpMethod& method, bool verify, double tol)
{
    return expm_dispatch(a, method, verify, tol);
}

ExpResultC expm_auto(const Mat4C& a, const ExpMethod& method, bool verify, double tol)
{
    return expm_dispatch(a, method, verify, tol);
}

} // namespace qtexp
