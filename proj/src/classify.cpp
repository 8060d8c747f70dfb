#include "qtexp/classify.hpp"

#include "qtexp/smalllin.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qtexp {

namespace {

Quaternion column_of(const HxHElement& u, Unit right)
{
    return Quaternion::pure(u(Unit::i, right), u(Unit::j, right), u(Unit::k, right));
}

Quaternion row_of(const HxHElement& u, Unit left)
{
    return Quaternion::pure(u(left, Unit::i), u(left, Unit::j), u(left, Unit::k));
}

Quaternion from_span(const std::array<Unit, 2>& span, const std::array<double, 2>& coords)
{
    std::array<double, 4> c{};
    c[static_cast<std::size_t>(index_of(span[0]))] = coords[0];
    c[static_cast<std::size_t>(index_of(span[1]))] = coords[1];
    return {0.0, c[1], c[2], c[3]};
}

template <typename T>
void read_paired(const BasicHxH<T>& u, const PairedLayout& layout, std::array<T, 2>& p, T& x, std::array<T, 2>& q,
    T& y)
{
    for (std::size_t n = 0; n < 2; ++n) {
        p[n] = u(layout.p_span[n], layout.p_right);
        q[n] = u(layout.q_left, layout.q_span[n]);
    }
    x = u(layout.x_left, Unit::one);
    y = u(Unit::one, layout.y_right);
}

Perskewsymmetric extract_perskew(const HxHElement& u)
{
    const auto& layout = perskew_layout();
    std::array<double, 2> p{};
    std::array<double, 2> q{};
    Perskewsymmetric out;
    read_paired(u, layout, p, out.alpha, q, out.beta);
    out.p = from_span(layout.p_span, p);
    out.q = from_span(layout.q_span, q);
    return out;
}

LieClass extract_lie(const HxHElement& u, int k)
{
    const auto& layout = lie_layout(k);
    std::array<double, 2> p{};
    std::array<double, 2> q{};
    double x = 0.0;
    double y = 0.0;
    read_paired(u, layout, p, x, q, y);
    LieClass out;
    out.k = k;
    out.p = from_span(layout.p_span, p);
    out.q = from_span(layout.q_span, q);
    out.a = layout.a_is_x ? x : y;
    out.b = layout.a_is_x ? y : x;
    return out;
}

JordanClass extract_jordan(const HxHElement& u, int k)
{
    const auto& layout = jordan_layout(k);
    JordanClass out;
    out.k = k;
    out.a = u(Unit::one, Unit::one);
    out.v = layout.vector_left ? column_of(u, layout.fixed) : row_of(u, layout.fixed);
    const auto slot = [&](std::size_t n) {
        return layout.slots_right ? u(Unit::one, layout.slots[n]) : u(layout.slots[n], Unit::one);
    };
    out.b = slot(0);
    out.c = slot(1);
    return out;
}

SkewHamiltonian extract_skew_hamiltonian(const HxHElement& u)
{
    return {u(Unit::one, Unit::one), column_of(u, Unit::j), u(Unit::one, Unit::i), u(Unit::one, Unit::k)};
}

SymToeplitzTridiag extract_tridiag(const Mat4& m)
{
    return {m.trace() / 4.0, (m(0, 1) + m(1, 2) + m(2, 3) + m(1, 0) + m(2, 1) + m(3, 2)) / 6.0};
}

SymToeplitzS13Zero extract_s13(const Mat4& m)
{
    return {m.trace() / 4.0, (m(0, 1) + m(1, 2) + m(2, 3) + m(1, 0) + m(2, 1) + m(3, 2)) / 6.0,
        (m(0, 3) + m(3, 0)) / 2.0};
}

BisymmetricRS extract_bisymmetric(const HxHElement& u)
{
    const HxHElement s = HxHElement::basis(Unit::j, Unit::i) * u;
    BisymmetricRS out;
    out.a = s(Unit::one, Unit::one);
    out.epsilon = s(Unit::j, Unit::i);
    // Rank-one fit of the (i,k) x (j,k) block.
    const Mat2 block = Mat2::from_rows({s(Unit::i, Unit::j), s(Unit::i, Unit::k), s(Unit::k, Unit::j), s(Unit::k, Unit::k)});
    const SymEig2 gram = sym_eig2(block.transpose() * block);
    const double sigma = std::sqrt(std::max(gram.values[0], 0.0));
    if (sigma == 0.0) {
        return out;
    }
    const double vx = gram.vectors(0, 0);
    const double vy = gram.vectors(1, 0);
    out.alpha = (block(0, 0) * vx + block(0, 1) * vy) / sigma;
    out.beta = (block(1, 0) * vx + block(1, 1) * vy) / sigma;
    out.gamma = sigma * vx;
    out.delta = sigma * vy;
    return out;
}

SymmetricGeneral symmetric_from(const HxHElement& u)
{
    return {u(Unit::one, Unit::one), column_of(u, Unit::i), column_of(u, Unit::j), column_of(u, Unit::k)};
}

double relative_residual(const Mat4& a, const Mat4& rebuilt)
{
    const double scale = a.frobenius_norm();
    const double diff = (a - rebuilt).frobenius_norm();
    if (scale == 0.0) {
        return diff == 0.0 ? 0.0 : INFINITY;
    }
    return diff / scale;
}

double relative_residual(const Mat4C& a, const Mat4C& rebuilt)
{
    const double scale = a.frobenius_norm();
    const double diff = (a - rebuilt).frobenius_norm();
    if (scale == 0.0) {
        return diff == 0.0 ? 0.0 : INFINITY;
    }
    return diff / scale;
}

MatchResult accept_if_close(const Mat4& a, const StructureClass& candidate, double tol)
{
    MatchResult out;
    out.residual = relative_residual(a, reconstruct(candidate));
    if (out.residual <= tol) {
        out.match = candidate;
    }
    return out;
}

std::optional<StructureClass> extract_by_name(const Mat4& a, const HxHElement& u, std::string_view name, double tol,
    double& side_residual)
{
    side_residual = 0.0;
    if (name == "SkewSymmetric") {
        return SkewSymmetric{column_of(u, Unit::one), row_of(u, Unit::one)};
    }
    if (name == "SkewHamiltonian") {
        return extract_skew_hamiltonian(u);
    }
    if (name == "Perskewsymmetric") {
        return extract_perskew(u);
    }
    if (name.starts_with("Lie") && name.size() == 4) {
        return extract_lie(u, name[3] - '0');
    }
    if (name.starts_with("Jordan") && name.size() == 7) {
        return extract_jordan(u, name[6] - '0');
    }
    if (name == "HamSymPersym") {
        return HamSymPersym{u(Unit::j, Unit::i), u(Unit::i, Unit::k), u(Unit::k, Unit::k)};
    }
    if (name == "SymToeplitzTridiag") {
        return extract_tridiag(a);
    }
    if (name == "SymToeplitzS13Zero") {
        return extract_s13(a);
    }
    if (name == "SpecialNormal") {
        auto sn = extract_special_normal(a, tol);
        if (!sn) {
            side_residual = INFINITY;
            return std::nullopt;
        }
        return *sn;
    }
    if (name == "BisymmetricRS") {
        return extract_bisymmetric(u);
    }
    if (name == "SymmetricGeneral") {
        return symmetric_from(u);
    }
    return std::nullopt;
}

bool is_real_family(std::string_view name) { return name != "ComplexSO4" && name != "ComplexPerskew"; }

} // namespace

MatchResult match_class(const Mat4& a, std::string_view name, double tol)
{
    if (!(tol > 0.0)) {
        throw std::invalid_argument("classify: tol must be positive");
    }
    if (class_priority(name) < 0) {
        throw std::invalid_argument("unknown structure class '" + std::string(name) + "'");
    }
    if (!is_real_family(name)) {
        return match_class(complexify(a), name, tol);
    }
    const HxHElement u = from_matrix(a);
    double side = 0.0;
    const auto candidate = extract_by_name(a, u, name, tol, side);
    if (!candidate) {
        return {std::nullopt, side};
    }
    return accept_if_close(a, *candidate, tol);
}

MatchResult match_class(const Mat4C& a, std::string_view name, double tol)
{
    if (!(tol > 0.0)) {
        throw std::invalid_argument("classify: tol must be positive");
    }
    if (class_priority(name) < 0) {
        throw std::invalid_argument("unknown structure class '" + std::string(name) + "'");
    }
    if (is_real_family(name)) {
        // Real families only accept matrices that are real to within tol.
        const double imag = imag_part(a).frobenius_norm();
        const double scale = a.frobenius_norm();
        if (imag > tol * scale) {
            return {std::nullopt, scale == 0.0 ? 0.0 : imag / scale};
        }
        return match_class(real_part(a), name, tol);
    }
    const HxHElementC u = from_matrix(a);
    StructureClass candidate;
    if (name == "ComplexSO4") {
        ComplexSO4 c;
        for (std::size_t n = 0; n < 3; ++n) {
            c.left[n] = u(kPureUnits[n], Unit::one);
            c.right[n] = u(Unit::one, kPureUnits[n]);
        }
        candidate = c;
    } else {
        ComplexPerskew c;
        read_paired(u, perskew_layout(), c.p, c.alpha, c.q, c.beta);
        candidate = c;
    }
    MatchResult out;
    out.residual = relative_residual(a, reconstruct_complex(candidate));
    if (out.residual <= tol) {
        out.match = candidate;
    }
    return out;
}

std::vector<StructureClass> classify(const Mat4& a, double tol)
{
    std::vector<StructureClass> found;
    for (const auto& name : class_names()) {
        if (!is_real_family(name)) {
            continue;
        }
        auto result = match_class(a, name, tol);
        if (result.match) {
            found.push_back(std::move(*result.match));
        }
    }
    return found;
}

std::vector<StructureClass> classify(const Mat4C& a, double tol)
{
    std::vector<StructureClass> found;
    for (const char* name : {"ComplexSO4", "ComplexPerskew"}) {
        auto result = match_class(a, name, tol);
        if (result.match) {
            found.push_back(std::move(*result.match));
        }
    }
    return found;
}

SymmetricGeneral extract_symmetric_rep(const Mat4& a, double tol)
{
    if ((a - a.transpose()).frobenius_norm() > tol * a.frobenius_norm()) {
        throw std::invalid_argument("extract_symmetric_rep: matrix is not symmetric");
    }
    return symmetric_from(from_matrix(0.5 * (a + a.transpose())));
}

std::optional<SpecialNormal> extract_special_normal(const Mat4& a, double tol)
{
    const double scale = a.frobenius_norm();
    const Mat4 sym = 0.5 * (a + a.transpose());
    const Mat4 skew = 0.5 * (a - a.transpose());
    if (commutator(sym, skew).frobenius_norm() > tol * scale * scale) {
        return std::nullopt;
    }
    const HxHElement u = from_matrix(a);
    SpecialNormal out;
    out.a = u(Unit::one, Unit::one);
    out.s = column_of(u, Unit::one);
    out.t = row_of(u, Unit::one);
    const double ns = pure_norm(out.s);
    const double nt = pure_norm(out.t);
    if (!(std::abs(ns - nt) > tol * (ns + nt))) {
        return std::nullopt;
    }

    // [p | q | r], column c holding the coefficients of (.) (x) e_c.
    const std::array<Quaternion, 3> cols{column_of(u, Unit::i), column_of(u, Unit::j), column_of(u, Unit::k)};
    const double floor = tol * scale;
    if (ns > floor) {
        // Every column is parallel to s: the symmetric part is s (x) t_hat.
        out.sym_left = out.s;
        const Vec3 sv = out.s.vec();
        out.t_hat = Quaternion::pure(dot(cols[0].vec(), sv) / (ns * ns), dot(cols[1].vec(), sv) / (ns * ns),
            dot(cols[2].vec(), sv) / (ns * ns));
    } else {
        // s = 0: the symmetric part is x (x) t with x = [p|q|r] t / |t|^2.
        const Vec3 tv = out.t.vec();
        Vec3 x{};
        for (std::size_t c = 0; c < 3; ++c) {
            for (std::size_t r = 0; r < 3; ++r) {
                x[r] += cols[c].vec()[r] * tv[c] / (nt * nt);
            }
        }
        out.s = Quaternion{};
        out.sym_left = Quaternion::pure(x);
        out.t_hat = out.t;
    }
    if (relative_residual(a, to_matrix(representation(out))) > tol) {
        return std::nullopt;
    }
    return out;
}

} // namespace qtexp
