#include "pseudocohom/pseudoalg.hpp"

#include <gmpxx.h>

#include "pseudocohom/error.hpp"

namespace pseudocohom {

LiePseudoalgebra::LiePseudoalgebra(std::string n, FreeModule m, PolyMap b)
    : name(std::move(n)), module(std::move(m)), bracket(std::move(b))
{
    if (bracket.arity() != 2 || !(bracket.source(0) == module) || !(bracket.source(1) == module) ||
        !(bracket.target() == module))
        throw Error("pseudobracket of " + name + " must map " + module.name() + " ⊗ " + module.name() + " to " +
                    module.name());
}

LiePseudoalgebra LiePseudoalgebra::abelian(const FreeModule& m)
{
    return LiePseudoalgebra(m.name(), m, PolyMap::uniform(m, 2, m));
}

Representation::Representation(std::string n, LiePseudoalgebra a, FreeModule m, PolyMap act)
    : name(std::move(n)), algebra(std::move(a)), module(std::move(m)), action(std::move(act))
{
    if (action.arity() != 2 || !(action.source(0) == algebra.module) || !(action.source(1) == module) ||
        !(action.target() == module))
        throw Error("action " + name + " must map " + algebra.module.name() + " ⊗ " + module.name() + " to " +
                    module.name());
}

Representation Representation::adjoint(const LiePseudoalgebra& l)
{
    return Representation("ad " + l.name, l, l.module, l.bracket);
}

Representation Representation::trivial(const LiePseudoalgebra& l, const FreeModule& m)
{
    return Representation("trivial", l, m, PolyMap({l.module, m}, m));
}

TensorElement basis_element(const FreeModule& m, std::size_t i)
{
    return TensorElement::basis(m.hopf(), 1, static_cast<std::int32_t>(i));
}

TensorElement eval_bracket(const PolyMap& B, const TensorElement& x, const TensorElement& y)
{
    if (B.arity() != 2)
        throw Error("eval_bracket needs a map of arity 2");
    return evaluate(B, {x, y});
}

TensorElement compose_left(const PolyMap& B_out, const PolyMap& B_in, const TensorElement& x, const TensorElement& y,
                           const TensorElement& z)
{
    return evaluate(B_out, {evaluate(B_in, {x, y}), z});
}

TensorElement compose_right(const PolyMap& B_out, const PolyMap& B_in, const TensorElement& x,
                            const TensorElement& y, const TensorElement& z)
{
    return evaluate(B_out, {x, evaluate(B_in, {y, z})});
}

namespace {

const std::vector<int> kSwapFirstTwo{1, 0, 2};

std::vector<TensorElement> basis_of(const FreeModule& m)
{
    std::vector<TensorElement> out;
    for (std::size_t i = 0; i < m.rank(); ++i)
        out.push_back(basis_element(m, i));
    return out;
}

} // namespace

CheckReport check_jacobi(const LiePseudoalgebra& a)
{
    CheckReport report;
    const PolyMap& rho = a.bracket;
    const auto e = basis_of(a.module);
    const std::size_t n = e.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const TensorElement lhs = compose_left(rho, rho, e[i], e[j], e[k]);
                const TensorElement rhs =
                    compose_right(rho, rho, e[i], e[j], e[k]) -
                    permute_legs(LegPermutation::from_order(kSwapFirstTwo), compose_right(rho, rho, e[j], e[i], e[k]));
                if (!(lhs == rhs))
                    report.findings.push_back(
                        {"jacobi", {a.module.label(i), a.module.label(j), a.module.label(k)}, (lhs - rhs).render(a.module)});
            }
    return report;
}

CheckReport check_lie(const LiePseudoalgebra& a)
{
    CheckReport r = check_skew(a.bracket);
    r.append(check_jacobi(a));
    return r;
}

CheckReport check_representation(const Representation& r)
{
    CheckReport report;
    const auto x = basis_of(r.algebra.module);
    const auto u = basis_of(r.module);
    const PolyMap& psi = r.action;
    const PolyMap& rho = r.algebra.bracket;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            for (std::size_t k = 0; k < u.size(); ++k) {
                const TensorElement lhs = compose_left(psi, rho, x[i], x[j], u[k]);
                const TensorElement rhs =
                    compose_right(psi, psi, x[i], x[j], u[k]) -
                    permute_legs(LegPermutation::from_order(kSwapFirstTwo), compose_right(psi, psi, x[j], x[i], u[k]));
                if (!(lhs == rhs))
                    report.findings.push_back({"representation",
                                               {r.algebra.module.label(i), r.algebra.module.label(j), r.module.label(k)},
                                               (lhs - rhs).render(r.module)});
            }
    return report;
}

HomomorphismCheck check_homomorphism(const ModuleMap& theta, const LiePseudoalgebra& a, const LiePseudoalgebra& b,
                                     bool stop_early)
{
    if (!(theta.source() == a.module) || !(theta.target() == b.module))
        throw Error("homomorphism check: map " + theta.source().name() + " → " + theta.target().name() +
                    " does not match " + a.name + " → " + b.name);
    HomomorphismCheck out;
    const std::size_t n = a.module.rank();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const TensorElement lhs = evaluate(b.bracket, {theta.image(i), theta.image(j)});
            const TensorElement rhs = theta.apply(a.bracket.value(Tuple{static_cast<std::int32_t>(i), static_cast<std::int32_t>(j)}));
            if (!(lhs == rhs)) {
                out.report.findings.push_back(
                    {"homomorphism", {a.module.label(i), a.module.label(j)}, (lhs - rhs).render(b.module)});
                if (stop_early)
                    return out;
            }
        }
    out.invertible = theta.inverse().has_value();
    return out;
}

// ---------------------------------------------------------------------------

StructureConstants::StructureConstants(Field f, std::vector<std::string> l)
    : labels(std::move(l)),
      c(labels.size(), std::vector<std::vector<Scalar>>(labels.size(), std::vector<Scalar>(labels.size(), f.zero()))),
      field(f)
{
}

void StructureConstants::set(std::size_t i, std::size_t j, const std::vector<Scalar>& v)
{
    if (v.size() != dimension())
        throw Error("structure constant vector has wrong length");
    c.at(i).at(j) = v;
    std::vector<Scalar> neg;
    for (const auto& s : v)
        neg.push_back(-s);
    c.at(j).at(i) = neg;
}

CheckReport StructureConstants::check_lie() const
{
    CheckReport report;
    const std::size_t n = dimension();
    auto bracket = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
        std::vector<Scalar> r(n, field.zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!x[i].is_zero() && !y[j].is_zero())
                    for (std::size_t k = 0; k < n; ++k)
                        r[k] += x[i] * y[j] * c[i][j][k];
        return r;
    };
    auto unit = [&](std::size_t i) {
        std::vector<Scalar> v(n, field.zero());
        v[i] = field.one();
        return v;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!(c[i][j][k] == -c[j][i][k]))
                    report.findings.push_back({"antisymmetry", {labels[i], labels[j]}, "coefficient of " + labels[k]});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto lhs = bracket(bracket(unit(i), unit(j)), unit(k));
                auto r1 = bracket(unit(i), bracket(unit(j), unit(k)));
                auto r2 = bracket(unit(j), bracket(unit(i), unit(k)));
                for (std::size_t m = 0; m < n; ++m)
                    if (!(lhs[m] == r1[m] - r2[m])) {
                        report.findings.push_back({"jacobi", {labels[i], labels[j], labels[k]}, "coefficient of " + labels[m]});
                        break;
                    }
            }
    return report;
}

StructureConstants sl2_constants(Field f)
{
    StructureConstants g(f, {"e", "f", "h"});
    const Scalar z = f.zero(), one = f.one(), two = f.from_int(2);
    g.set(0, 1, {z, z, one});   // [e,f] = h
    g.set(2, 0, {two, z, z});   // [h,e] = 2e
    g.set(2, 1, {z, -two, z});  // [h,f] = -2f
    return g;
}

LiePseudoalgebra current_pseudoalgebra(const std::string& name, const StructureConstants& g, const HopfAlgebra& h)
{
    if (!(g.field == h.field()))
        throw Error("structure constants and Hopf algebra live over different fields");
    const CheckReport lie = g.check_lie();
    if (!lie.passed())
        throw Error("structure constants of " + name + " are not a Lie algebra: " + lie.summary(3));
    FreeModule m(name, g.labels, h);
    PolyMap b = PolyMap::uniform(m, 2, m);
    const Legs units(2, h.unit());
    for (std::size_t i = 0; i < g.dimension(); ++i)
        for (std::size_t j = 0; j < g.dimension(); ++j) {
            TensorElement v(h, 2);
            for (std::size_t k = 0; k < g.dimension(); ++k)
                v.add(units, static_cast<std::int32_t>(k), g.c[i][j][k]);
            b.set(Tuple{static_cast<std::int32_t>(i), static_cast<std::int32_t>(j)}, std::move(v));
        }
    return LiePseudoalgebra(name, m, b);
}

// ---------------------------------------------------------------------------

namespace {

void require_polynomial(const HopfAlgebra& h)
{
    if (h.kind() != HopfKind::polynomial)
        throw Error("the λ-bracket dictionary needs a polynomial Hopf algebra k[∂₁..∂_d]");
}

int total(const Monomial& m)
{
    int s = 0;
    for (auto v : m)
        s += v;
    return s;
}

} // namespace

PolyMap from_lambda_bracket(const LambdaTable& table, const FreeModule& module)
{
    const HopfAlgebra& h = module.hopf();
    require_polynomial(h);
    const std::size_t d = h.names().size();
    PolyMap out = PolyMap::uniform(module, 2, module);
    for (const auto& [pair, poly] : table) {
        TensorElement v(h, 2);
        for (const auto& [key, c] : poly.terms()) {
            if (key.lambda.size() != d || key.d.size() != d)
                throw Error("λ-term with the wrong number of variables");
            const Scalar sign = total(key.lambda) % 2 ? -c : c;
            for (const auto& [dl, dc] : h.coproduct(key.d, 2)) {
                Legs legs = dl;
                legs[0] = h.multiply(key.lambda, dl[0]);
                v.add(legs, key.index, sign * dc);
            }
        }
        out.add(Tuple{pair.first, pair.second}, v);
    }
    return out;
}

LambdaTable to_lambda_bracket(const PolyMap& bracket)
{
    const HopfAlgebra& h = bracket.hopf();
    require_polynomial(h);
    const Field f = h.field();
    const std::size_t d = h.names().size();
    LambdaTable out;
    for (const auto& [t, v] : bracket.table()) {
        LambdaPolynomial poly(f);
        for (const auto& [key, c] : v.terms()) {
            const Monomial& a = key.legs[0];
            const Monomial& b = key.legs[1];
            // ∂^a ⊗ ∂^b = Σ_k C(b,k) (−1)^{b−k} (∂^{a+b−k} ⊗ 1) Δ(∂^k), and (∂^n ⊗ 1) ↦ (−λ)^n
            Monomial k(d, 0);
            while (true) {
                mpz_class binom = 1;
                Monomial lam(d, 0);
                for (std::size_t v2 = 0; v2 < d; ++v2) {
                    mpz_class bc;
                    mpz_bin_uiui(bc.get_mpz_t(), b[v2], k[v2]);
                    binom *= bc;
                    lam[v2] = a[v2] + b[v2] - k[v2];
                }
                Scalar coeff = c * Scalar(f, mpq_class(binom));
                if (total(a) % 2)
                    coeff = -coeff;
                poly.add(LambdaKey{lam, k, key.index}, coeff);
                std::size_t v2 = 0;
                while (v2 < d && ++k[v2] > b[v2]) {
                    k[v2] = 0;
                    ++v2;
                }
                if (v2 == d)
                    break;
            }
        }
        if (!poly.empty())
            out.emplace(std::make_pair(static_cast<int>(t[0]), static_cast<int>(t[1])), std::move(poly));
    }
    return out;
}

std::string render_lambda(const LambdaPolynomial& p, const FreeModule& module)
{
    if (p.empty())
        return "0";
    const HopfAlgebra& h = module.hopf();
    const auto& names = h.names();
    std::string out;
    bool first = true;
    for (const auto& [key, c] : p.terms()) {
        const bool neg = c.renders_negative();
        const Scalar mag = neg ? -c : c;
        std::vector<std::string> factors;
        if (!mag.is_one())
            factors.push_back(mag.to_string());
        if (!h.is_unit(key.d))
            factors.push_back(h.render(key.d));
        for (std::size_t v = 0; v < key.lambda.size(); ++v) {
            if (key.lambda[v] == 0)
                continue;
            std::string name = names.size() == 1 ? "lambda" : "lambda_" + names[v];
            if (key.lambda[v] > 1)
                name += "^" + std::to_string(key.lambda[v]);
            factors.push_back(name);
        }
        std::string body;
        for (std::size_t i = 0; i < factors.size(); ++i)
            body += (i ? "*" : "") + factors[i];
        body += (body.empty() ? "" : " ") + module.label(key.index);
        if (first)
            out += neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

} // namespace pseudocohom
