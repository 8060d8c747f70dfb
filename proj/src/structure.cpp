#include "qtexp/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtexp {

namespace {

using U = Unit;

// Lie-type classes. k=1 uses i (x) 1 for the b term and k=4 takes p from
// span{i, j}; with those choices every class is closed under commutators and
// preserves a split-signature symmetric form.
const std::array<PairedLayout, 8> kLieLayouts{{
    {U::i, {U::j, U::k}, U::i, U::i, {U::j, U::k}, U::i, false},
    {U::j, {U::i, U::k}, U::j, U::j, {U::i, U::k}, U::j, true},
    {U::k, {U::i, U::j}, U::k, U::k, {U::i, U::j}, U::k, true},
    {U::i, {U::i, U::j}, U::k, U::k, {U::j, U::k}, U::i, true},
    {U::j, {U::i, U::j}, U::k, U::k, {U::i, U::k}, U::j, true},
    {U::j, {U::j, U::k}, U::i, U::i, {U::i, U::k}, U::j, false},
    {U::k, {U::j, U::k}, U::i, U::i, {U::i, U::j}, U::k, true},
    {U::k, {U::i, U::k}, U::j, U::j, {U::i, U::j}, U::k, true},
}};

const PairedLayout kPerskewLayout{U::i, {U::i, U::k}, U::j, U::j, {U::j, U::k}, U::i, true};

const std::array<JordanLayout, 5> kJordanLayouts{{
    {true, U::k, true, {U::i, U::j}},
    {true, U::i, true, {U::j, U::k}},
    {false, U::i, false, {U::j, U::k}},
    {false, U::j, false, {U::i, U::k}},
    {false, U::k, false, {U::i, U::j}},
}};

const JordanLayout kSkewHamiltonianLayout{true, U::j, true, {U::i, U::k}};

std::array<double, 2> span_coords(const Quaternion& v, const std::array<Unit, 2>& span)
{
    return {v[index_of(span[0])], v[index_of(span[1])]};
}

} // namespace

const std::vector<std::string>& class_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out{"SkewSymmetric", "SkewHamiltonian", "Perskewsymmetric"};
        for (int k = 1; k <= 8; ++k) {
            out.push_back("Lie" + std::to_string(k));
        }
        for (int k = 1; k <= 5; ++k) {
            out.push_back("Jordan" + std::to_string(k));
        }
        for (const char* n : {"HamSymPersym", "SymToeplitzTridiag", "SymToeplitzS13Zero", "SpecialNormal",
                 "BisymmetricRS", "SymmetricGeneral", "ComplexSO4", "ComplexPerskew"}) {
            out.emplace_back(n);
        }
        return out;
    }();
    return names;
}

int class_priority(std::string_view name)
{
    const auto& names = class_names();
    const auto it = std::find(names.begin(), names.end(), name);
    return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

std::string class_name(const StructureClass& cls)
{
    struct Namer {
        std::string operator()(const SkewSymmetric&) const { return "SkewSymmetric"; }
        std::string operator()(const SkewHamiltonian&) const { return "SkewHamiltonian"; }
        std::string operator()(const Perskewsymmetric&) const { return "Perskewsymmetric"; }
        std::string operator()(const LieClass& c) const { return "Lie" + std::to_string(c.k); }
        std::string operator()(const JordanClass& c) const { return "Jordan" + std::to_string(c.k); }
        std::string operator()(const HamSymPersym&) const { return "HamSymPersym"; }
        std::string operator()(const SymToeplitzTridiag&) const { return "SymToeplitzTridiag"; }
        std::string operator()(const SymToeplitzS13Zero&) const { return "SymToeplitzS13Zero"; }
        std::string operator()(const SpecialNormal&) const { return "SpecialNormal"; }
        std::string operator()(const BisymmetricRS&) const { return "BisymmetricRS"; }
        std::string operator()(const SymmetricGeneral&) const { return "SymmetricGeneral"; }
        std::string operator()(const ComplexSO4&) const { return "ComplexSO4"; }
        std::string operator()(const ComplexPerskew&) const { return "ComplexPerskew"; }
    };
    return std::visit(Namer{}, cls);
}

bool is_complex_class(const StructureClass& cls)
{
    return std::holds_alternative<ComplexSO4>(cls) || std::holds_alternative<ComplexPerskew>(cls);
}

const PairedLayout& lie_layout(int k)
{
    if (k < 1 || k > 8) {
        throw std::out_of_range("lie_layout: k must be in 1..8");
    }
    return kLieLayouts[static_cast<std::size_t>(k - 1)];
}

const PairedLayout& perskew_layout() { return kPerskewLayout; }

const JordanLayout& jordan_layout(int k)
{
    if (k < 1 || k > 5) {
        throw std::out_of_range("jordan_layout: k must be in 1..5");
    }
    return kJordanLayouts[static_cast<std::size_t>(k - 1)];
}

const JordanLayout& skew_hamiltonian_layout() { return kSkewHamiltonianLayout; }

template <typename T>
std::pair<BasicHxH<T>, BasicHxH<T>> paired_groups(const PairedLayout& layout, const std::array<T, 2>& p, T x,
    const std::array<T, 2>& q, T y)
{
    BasicHxH<T> first;
    BasicHxH<T> second;
    for (std::size_t n = 0; n < 2; ++n) {
        first(layout.p_span[n], layout.p_right) += p[n];
        second(layout.q_left, layout.q_span[n]) += q[n];
    }
    first(layout.x_left, Unit::one) += x;
    second(Unit::one, layout.y_right) += y;
    return {first, second};
}

template std::pair<HxHElement, HxHElement> paired_groups(const PairedLayout&, const std::array<double, 2>&, double,
    const std::array<double, 2>&, double);
template std::pair<HxHElementC, HxHElementC> paired_groups(const PairedLayout&, const std::array<cplx, 2>&, cplx,
    const std::array<cplx, 2>&, cplx);

HxHElement jordan_part(const JordanLayout& layout, const Quaternion& v, double b, double c)
{
    HxHElement u;
    for (Unit e : kPureUnits) {
        if (layout.vector_left) {
            u(e, layout.fixed) += v[index_of(e)];
        } else {
            u(layout.fixed, e) += v[index_of(e)];
        }
    }
    const std::array<double, 2> coeffs{b, c};
    for (std::size_t n = 0; n < 2; ++n) {
        if (layout.slots_right) {
            u(Unit::one, layout.slots[n]) += coeffs[n];
        } else {
            u(layout.slots[n], Unit::one) += coeffs[n];
        }
    }
    return u;
}

std::pair<HxHElement, HxHElement> groups(const Perskewsymmetric& cls)
{
    const auto& layout = perskew_layout();
    return paired_groups(layout, span_coords(cls.p, layout.p_span), cls.alpha, span_coords(cls.q, layout.q_span),
        cls.beta);
}

std::pair<HxHElement, HxHElement> groups(const LieClass& cls)
{
    const auto& layout = lie_layout(cls.k);
    const double x = layout.a_is_x ? cls.a : cls.b;
    const double y = layout.a_is_x ? cls.b : cls.a;
    return paired_groups(layout, span_coords(cls.p, layout.p_span), x, span_coords(cls.q, layout.q_span), y);
}

std::pair<HxHElementC, HxHElementC> groups(const ComplexPerskew& cls)
{
    return paired_groups(perskew_layout(), cls.p, cls.alpha, cls.q, cls.beta);
}

HxHElement representation(const SkewSymmetric& cls)
{
    return HxHElement::tensor(cls.p.pure_part(), Quaternion::one())
        + HxHElement::tensor(Quaternion::one(), cls.q.pure_part());
}

HxHElement representation(const Perskewsymmetric& cls)
{
    const auto [first, second] = groups(cls);
    return first + second;
}

HxHElement representation(const SkewHamiltonian& cls)
{
    return HxHElement::basis(Unit::one, Unit::one, cls.b)
        + jordan_part(skew_hamiltonian_layout(), cls.p, cls.c, cls.d);
}

HxHElement representation(const JordanClass& cls)
{
    return HxHElement::basis(Unit::one, Unit::one, cls.a) + jordan_part(jordan_layout(cls.k), cls.v, cls.b, cls.c);
}

HxHElement representation(const LieClass& cls)
{
    const auto [first, second] = groups(cls);
    return first + second;
}

HxHElement representation(const HamSymPersym& cls)
{
    HxHElement u;
    u(Unit::j, Unit::i) = cls.beta;
    u(Unit::i, Unit::k) = cls.gamma;
    u(Unit::k, Unit::k) = cls.delta;
    return u;
}

HxHElement representation(const SymToeplitzTridiag& cls)
{
    HxHElement u;
    u(Unit::one, Unit::one) = cls.a;
    u(Unit::j, Unit::i) = cls.b / 2.0;
    u(Unit::i, Unit::j) = cls.b / 2.0;
    u(Unit::k, Unit::j) = cls.b;
    return u;
}

HxHElement representation(const SymToeplitzS13Zero& cls)
{
    HxHElement u;
    u(Unit::one, Unit::one) = cls.a;
    u(Unit::j, Unit::i) = (cls.b + cls.c) / 2.0;
    u(Unit::i, Unit::j) = (cls.b - cls.c) / 2.0;
    u(Unit::k, Unit::j) = cls.b;
    return u;
}

HxHElement representation(const SpecialNormal& cls)
{
    return HxHElement::basis(Unit::one, Unit::one, cls.a)
        + HxHElement::tensor(cls.sym_left.pure_part(), cls.t_hat.pure_part())
        + HxHElement::tensor(cls.s.pure_part(), Quaternion::one())
        + HxHElement::tensor(Quaternion::one(), cls.t.pure_part());
}

HxHElement symmetric_factor(const BisymmetricRS& cls)
{
    return HxHElement::basis(Unit::one, Unit::one, cls.a) + HxHElement::basis(Unit::j, Unit::i, cls.epsilon)
        + HxHElement::tensor(Quaternion::pure(cls.alpha, 0.0, cls.beta), Quaternion::pure(0.0, cls.gamma, cls.delta));
}

HxHElement representation(const BisymmetricRS& cls)
{
    return HxHElement::basis(Unit::j, Unit::i) * symmetric_factor(cls);
}

HxHElement representation(const SymmetricGeneral& cls)
{
    return HxHElement::basis(Unit::one, Unit::one, cls.a) + HxHElement::tensor(cls.p.pure_part(), {0, 1, 0, 0})
        + HxHElement::tensor(cls.q.pure_part(), {0, 0, 1, 0}) + HxHElement::tensor(cls.r.pure_part(), {0, 0, 0, 1});
}

HxHElementC representation(const ComplexSO4& cls)
{
    HxHElementC u;
    for (std::size_t n = 0; n < 3; ++n) {
        u(kPureUnits[n], Unit::one) = cls.left[n];
        u(Unit::one, kPureUnits[n]) = cls.right[n];
    }
    return u;
}

HxHElementC representation(const ComplexPerskew& cls)
{
    const auto [first, second] = groups(cls);
    return first + second;
}

Mat4 reconstruct(const StructureClass& cls)
{
    return std::visit(
        [](const auto& c) -> Mat4 {
            using C = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<C, ComplexSO4> || std::is_same_v<C, ComplexPerskew>) {
                throw std::invalid_argument("reconstruct: complex class needs reconstruct_complex");
            } else {
                return to_matrix(representation(c));
            }
        },
        cls);
}

Mat4C reconstruct_complex(const StructureClass& cls)
{
    return std::visit(
        [](const auto& c) -> Mat4C {
            using C = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<C, ComplexSO4> || std::is_same_v<C, ComplexPerskew>) {
                return to_matrix(representation(c));
            } else {
                return complexify(to_matrix(representation(c)));
            }
        },
        cls);
}

} // namespace qtexp
