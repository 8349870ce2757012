#include "pseudocohom/nonabelian.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "pseudocohom/error.hpp"
#include "pseudocohom/linalg.hpp"

namespace pseudocohom {

namespace {

const std::vector<int> kCycle{2, 0, 1};

std::int32_t i32(std::size_t i)
{
    return static_cast<std::int32_t>(i);
}

TensorElement unit(const FreeModule& m, std::size_t i)
{
    return TensorElement::basis(m.hopf(), 1, i32(i));
}

TensorElement shifted(const TensorElement& v, std::int32_t offset)
{
    TensorElement w(v.hopf(), v.arity());
    for (const auto& [key, c] : v.terms())
        w.add(key.legs, key.index + offset, c);
    return w;
}

TensorElement swapped(const TensorElement& v)
{
    return permute_legs(LegPermutation::transposition(v.arity(), 0, 1), v);
}

void require_shape(const NonAbelianCocycle& c, const LiePseudoalgebra& L, const LiePseudoalgebra& M)
{
    const PolyMap chi_shape({L.module, L.module}, M.module);
    const PolyMap psi_shape({L.module, M.module}, M.module);
    if (!c.chi.same_shape(chi_shape))
        throw Error("χ must be a map " + L.module.name() + " ⊗ " + L.module.name() + " → " + M.module.name());
    if (!c.psi.same_shape(psi_shape))
        throw Error("ψ must be a map " + L.module.name() + " ⊗ " + M.module.name() + " → " + M.module.name());
}

ModuleMap section_map(const ExtensionModel& E, const ModuleMap& phi_s)
{
    std::vector<TensorElement> images;
    for (std::size_t x = 0; x < E.l_rank(); ++x)
        images.push_back(E.lift(x, phi_s));
    return ModuleMap(E.L.module, E.E.module, std::move(images));
}

bool saturating_power(std::size_t base, std::size_t exp, std::size_t cap, std::size_t& out)
{
    out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && out > cap / base)
            return false;
        out *= base;
    }
    return true;
}

} // namespace

NonAbelianCocycle NonAbelianCocycle::zero(const LiePseudoalgebra& L, const LiePseudoalgebra& M)
{
    return {PolyMap({L.module, L.module}, M.module), PolyMap({L.module, M.module}, M.module)};
}

CheckReport check_nonabelian_cocycle(const NonAbelianCocycle& c, const LiePseudoalgebra& L,
                                     const LiePseudoalgebra& M)
{
    require_shape(c, L, M);
    CheckReport report = check_skew(c.chi, "chi-skew");
    const PolyMap& rl = L.bracket;
    const PolyMap& rm = M.bracket;
    const PolyMap& psi = c.psi;
    const PolyMap& chi = c.chi;
    const std::size_t nl = L.module.rank(), nm = M.module.rank();
    auto lab = [](const FreeModule& m, std::size_t i) { return m.label(i); };

    for (std::size_t x = 0; x < nl; ++x)
        for (std::size_t u = 0; u < nm; ++u)
            for (std::size_t v = 0; v < nm; ++v) {
                const TensorElement ex = unit(L.module, x), eu = unit(M.module, u), ev = unit(M.module, v);
                const TensorElement lhs = evaluate(rm, {eval_bracket(psi, ex, eu), ev});
                const TensorElement rhs = evaluate(psi, {ex, eval_bracket(rm, eu, ev)}) -
                                          swapped(evaluate(rm, {eu, eval_bracket(psi, ex, ev)}));
                if (!(lhs == rhs))
                    report.findings.push_back({"deri-iden", {lab(L.module, x), lab(M.module, u), lab(M.module, v)},
                                               (lhs - rhs).render(M.module)});
            }

    for (std::size_t x = 0; x < nl; ++x)
        for (std::size_t y = 0; y < nl; ++y)
            for (std::size_t u = 0; u < nm; ++u) {
                const TensorElement ex = unit(L.module, x), ey = unit(L.module, y), eu = unit(M.module, u);
                const TensorElement lhs = evaluate(psi, {ex, eval_bracket(psi, ey, eu)}) -
                                          swapped(evaluate(psi, {ey, eval_bracket(psi, ex, eu)})) -
                                          evaluate(psi, {eval_bracket(rl, ex, ey), eu});
                const TensorElement rhs = evaluate(rm, {eval_bracket(chi, ex, ey), eu});
                if (!(lhs == rhs))
                    report.findings.push_back({"first-iden", {lab(L.module, x), lab(L.module, y), lab(M.module, u)},
                                               (lhs - rhs).render(M.module)});
            }

    const auto cycle = LegPermutation::from_order(kCycle);
    for (std::size_t x = 0; x < nl; ++x)
        for (std::size_t y = 0; y < nl; ++y)
            for (std::size_t z = 0; z < nl; ++z) {
                const TensorElement ex = unit(L.module, x), ey = unit(L.module, y), ez = unit(L.module, z);
                auto psi_chi = [&](const TensorElement& a, const TensorElement& b, const TensorElement& d) {
                    return evaluate(psi, {a, eval_bracket(chi, b, d)});
                };
                auto chi_rho = [&](const TensorElement& a, const TensorElement& b, const TensorElement& d) {
                    return evaluate(chi, {a, eval_bracket(rl, b, d)});
                };
                const TensorElement sum = psi_chi(ex, ey, ez) - swapped(psi_chi(ey, ex, ez)) +
                                          permute_legs(cycle, psi_chi(ez, ex, ey)) + chi_rho(ex, ey, ez) -
                                          swapped(chi_rho(ey, ex, ez)) + permute_legs(cycle, chi_rho(ez, ex, ey));
                if (!sum.is_zero())
                    report.findings.push_back({"second-iden", {lab(L.module, x), lab(L.module, y), lab(L.module, z)},
                                               sum.render(M.module)});
            }
    return report;
}

// ---------------------------------------------------------------------------

TensorElement ExtensionModel::lift(std::size_t x, const ModuleMap& phi_s) const
{
    return unit(E.module, x) + shifted(phi_s.image(x), i32(l_rank()));
}

std::pair<TensorElement, TensorElement> ExtensionModel::split(const TensorElement& v) const
{
    const auto lr = i32(l_rank());
    TensorElement l(v.hopf(), v.arity()), m(v.hopf(), v.arity());
    for (const auto& [key, c] : v.terms()) {
        if (key.index < lr)
            l.add(key.legs, key.index, c);
        else
            m.add(key.legs, key.index - lr, c);
    }
    return {l, m};
}

CheckReport ExtensionModel::validate() const
{
    CheckReport report = check_lie(E);
    const auto lr = i32(l_rank());
    const std::size_t n = E.module.rank();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Tuple t{i32(a), i32(b)};
            const auto [lpart, mpart] = split(E.bracket.value(t));
            const bool la = i32(a) < lr, lb = i32(b) < lr;
            if (la && lb) {
                const TensorElement want = L.bracket.value(t);
                if (!(lpart == want))
                    report.findings.push_back({"projection", E.bracket.locator(t), (lpart - want).render(L.module)});
            } else if (!lpart.is_zero()) {
                report.findings.push_back({"ideal", E.bracket.locator(t), lpart.render(L.module)});
            }
            if (!la && !lb) {
                const TensorElement want = M.bracket.value(Tuple{i32(a) - lr, i32(b) - lr});
                if (!(mpart == want))
                    report.findings.push_back({"restriction", E.bracket.locator(t), (mpart - want).render(M.module)});
            }
        }
    return report;
}

ExtensionModel build_extension_unchecked(const NonAbelianCocycle& c, const LiePseudoalgebra& L,
                                         const LiePseudoalgebra& M)
{
    require_shape(c, L, M);
    const FreeModule e = FreeModule::direct_sum("E", L.module, M.module);
    const auto lr = i32(L.module.rank());
    PolyMap bracket = PolyMap::uniform(e, 2, e);
    for (const Tuple& t : bracket.tuples()) {
        const bool la = t[0] < lr, lb = t[1] < lr;
        TensorElement v(e.hopf(), 2);
        if (la && lb)
            v = L.bracket.value(t) + shifted(c.chi.value(t), lr);
        else if (la)
            v = shifted(c.psi.value(Tuple{t[0], t[1] - lr}), lr);
        else if (lb)
            v = -swapped(shifted(c.psi.value(Tuple{t[1], t[0] - lr}), lr));
        else
            v = shifted(M.bracket.value(Tuple{t[0] - lr, t[1] - lr}), lr);
        bracket.set(t, std::move(v));
    }
    ExtensionModel out;
    out.L = L;
    out.M = M;
    out.E = LiePseudoalgebra(L.name + "⊕" + M.name, e, std::move(bracket));
    return out;
}

ExtensionModel build_extension(const NonAbelianCocycle& c, const LiePseudoalgebra& L, const LiePseudoalgebra& M)
{
    const CheckReport r = check_nonabelian_cocycle(c, L, M);
    if (!r.passed())
        throw Error("not a non-abelian 2-cocycle: " + r.summary(3));
    return build_extension_unchecked(c, L, M);
}

NonAbelianCocycle extract_cocycle(const ExtensionModel& E, const ModuleMap& phi_s)
{
    if (!(phi_s.source() == E.L.module) || !(phi_s.target() == E.M.module))
        throw Error("a section is given by a map " + E.L.module.name() + " → " + E.M.module.name());
    const ModuleMap s = section_map(E, phi_s);
    const auto lr = i32(E.l_rank());
    NonAbelianCocycle c = NonAbelianCocycle::zero(E.L, E.M);
    for (std::size_t x = 0; x < E.l_rank(); ++x) {
        const TensorElement sx = s.image(x);
        for (std::size_t y = 0; y < E.l_rank(); ++y) {
            const Tuple t{i32(x), i32(y)};
            const TensorElement v =
                evaluate(E.E.bracket, {sx, s.image(y)}) - s.apply(E.L.bracket.value(t));
            auto [l, m] = E.split(v);
            if (!l.is_zero())
                throw Error("p is not a homomorphism at (" + E.L.module.label(x) + ", " + E.L.module.label(y) + ")");
            c.chi.set(t, std::move(m));
        }
        for (std::size_t u = 0; u < E.M.module.rank(); ++u) {
            auto [l, m] = E.split(evaluate(E.E.bracket, {sx, unit(E.E.module, u + lr)}));
            if (!l.is_zero())
                throw Error("M is not an ideal of E at (" + E.L.module.label(x) + ", " + E.M.module.label(u) + ")");
            c.psi.set(Tuple{i32(x), i32(u)}, std::move(m));
        }
    }
    return c;
}

// ---------------------------------------------------------------------------

NonAbelianCocycle apply_equivalence(const NonAbelianCocycle& cp, const ModuleMap& phi, const LiePseudoalgebra& L,
                                    const LiePseudoalgebra& M)
{
    require_shape(cp, L, M);
    if (!(phi.source() == L.module) || !(phi.target() == M.module))
        throw Error("equivalence map must be " + L.module.name() + " → " + M.module.name());
    NonAbelianCocycle c = cp;
    const std::size_t nl = L.module.rank(), nm = M.module.rank();
    const bool m_abelian = M.is_abelian();
    for (std::size_t x = 0; x < nl; ++x) {
        if (!m_abelian)
            for (std::size_t u = 0; u < nm; ++u) {
                const Tuple t{i32(x), i32(u)};
                c.psi.set(t, cp.psi.value(t) + evaluate(M.bracket, {phi.image(x), unit(M.module, u)}));
            }
        for (std::size_t y = 0; y < nl; ++y) {
            const Tuple t{i32(x), i32(y)};
            TensorElement v = cp.chi.value(t);
            v += evaluate(cp.psi, {unit(L.module, x), phi.image(y)});
            v -= swapped(evaluate(cp.psi, {unit(L.module, y), phi.image(x)}));
            v -= phi.apply(L.bracket.value(t));
            if (!m_abelian)
                v += evaluate(M.bracket, {phi.image(x), phi.image(y)});
            c.chi.set(t, std::move(v));
        }
    }
    return c;
}

CheckReport check_cocycle_equivalence(const NonAbelianCocycle& c, const NonAbelianCocycle& cp, const ModuleMap& phi,
                                      const LiePseudoalgebra& L, const LiePseudoalgebra& M)
{
    require_shape(c, L, M);
    const NonAbelianCocycle want = apply_equivalence(cp, phi, L, M);
    CheckReport report;
    for (const Tuple& t : c.psi.tuples()) {
        const TensorElement d = c.psi.value(t) - want.psi.value(t);
        if (!d.is_zero())
            report.findings.push_back({"equiv1", c.psi.locator(t), d.render(M.module)});
    }
    for (const Tuple& t : c.chi.tuples()) {
        const TensorElement d = c.chi.value(t) - want.chi.value(t);
        if (!d.is_zero())
            report.findings.push_back({"equiv2", c.chi.locator(t), d.render(M.module)});
    }
    return report;
}

// ---------------------------------------------------------------------------

SearchConfig SearchConfig::parse(const std::string& text, Field f)
{
    SearchConfig s;
    if (text.empty() || text == "auto")
        return s;
    if (text == "exhaustive") {
        s.mode = SearchMode::exhaustive;
        return s;
    }
    if (text == "linear") {
        s.mode = SearchMode::linear;
        return s;
    }
    const std::string prefix = "bounded";
    if (text.rfind(prefix, 0) == 0) {
        s.mode = SearchMode::bounded;
        std::string rest = text.substr(prefix.size());
        if (rest.empty())
            return s;
        if (rest[0] != ':')
            throw Error("search mode '" + text + "': expected bounded:<set>");
        rest = rest.substr(1);
        rest.erase(std::remove_if(rest.begin(), rest.end(), [](char ch) { return ch == '{' || ch == '}' || ch == ' '; }),
                   rest.end());
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            const std::size_t comma = rest.find(',', pos);
            const std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (item.empty())
                throw Error("search mode '" + text + "': empty coefficient");
            const Scalar v = f.parse_scalar(item);
            if (std::find(s.coefficients.begin(), s.coefficients.end(), v) == s.coefficients.end())
                s.coefficients.push_back(v);
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
        return s;
    }
    throw Error("unknown search mode '" + text + "' (expected auto, exhaustive, linear or bounded:<set>)");
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::found:
        return "found";
    case Verdict::not_equivalent:
        return "not-equivalent";
    case Verdict::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

std::size_t enumerate_maps(const FreeModule& L, const FreeModule& M, const std::vector<Monomial>& labels,
                           const std::vector<Scalar>& coefficients,
                           const std::function<bool(const ModuleMap&)>& visit)
{
    const std::size_t slots = L.rank() * labels.size() * M.rank();
    const std::size_t base = coefficients.size();
    std::vector<std::size_t> digit(slots, 0);
    std::size_t visited = 0;
    if (base == 0)
        return 0;
    while (true) {
        std::vector<TensorElement> images;
        std::size_t k = 0;
        for (std::size_t x = 0; x < L.rank(); ++x) {
            TensorElement img(L.hopf(), 1);
            for (const auto& g : labels)
                for (std::size_t l = 0; l < M.rank(); ++l, ++k)
                    img.add(Legs{g}, i32(l), coefficients[digit[k]]);
            images.push_back(std::move(img));
        }
        ++visited;
        if (visit(ModuleMap(L, M, std::move(images))))
            return visited;
        std::size_t i = slots;
        while (i > 0) {
            --i;
            if (++digit[i] < base)
                break;
            digit[i] = 0;
            if (i == 0)
                return visited;
        }
        if (slots == 0)
            return visited;
    }
}

namespace {

std::vector<Monomial> template_labels(const HopfAlgebra& h, int degree_bound)
{
    return h.finite_dimensional() ? h.basis() : h.basis_up_to_degree(degree_bound);
}

std::vector<Scalar> all_residues(Field f)
{
    std::vector<Scalar> out;
    for (std::uint32_t i = 0; i < f.characteristic(); ++i)
        out.push_back(f.from_int(i));
    return out;
}

EquivalenceResult search_enumerate(const NonAbelianCocycle& c, const NonAbelianCocycle& cp, const LiePseudoalgebra& L,
                                   const LiePseudoalgebra& M, const std::vector<Monomial>& labels,
                                   const std::vector<Scalar>& coeffs, bool exhaustive, SearchMode mode,
                                   std::size_t max_candidates)
{
    EquivalenceResult res;
    res.mode = mode;
    std::size_t total = 0;
    const std::size_t slots = L.module.rank() * labels.size() * M.module.rank();
    if (!saturating_power(coeffs.size(), slots, max_candidates, total)) {
        res.detail = "search space exceeds " + std::to_string(max_candidates) + " candidates";
        return res;
    }
    res.candidates = enumerate_maps(L.module, M.module, labels, coeffs, [&](const ModuleMap& phi) {
        if (apply_equivalence(cp, phi, L, M) == c) {
            res.phi = phi;
            return true;
        }
        return false;
    });
    if (res.phi) {
        res.verdict = Verdict::found;
        res.detail = "witness found after " + std::to_string(res.candidates) + " of " + std::to_string(total) +
                     " candidates";
    } else if (exhaustive) {
        res.verdict = Verdict::not_equivalent;
        res.detail = "exhaustive over " + std::to_string(total) + " candidates";
    } else {
        res.detail = "no witness among " + std::to_string(total) + " bounded candidates";
    }
    return res;
}

// M abelian: ψ must agree and the χ-residual is affine in φ.
EquivalenceResult search_linear(const NonAbelianCocycle& c, const NonAbelianCocycle& cp, const LiePseudoalgebra& L,
                                const LiePseudoalgebra& M, const std::vector<Monomial>& labels, bool complete)
{
    EquivalenceResult res;
    res.mode = SearchMode::linear;
    const Field f = L.field();
    if (!(c.psi == cp.psi)) {
        // with [·*·]_M = 0 the first identity reads ψ = ψ′ for every φ
        res.verdict = Verdict::not_equivalent;
        res.detail = "ψ differs and M is abelian, so no φ can relate the cocycles";
        return res;
    }
    const ModuleMap zero = ModuleMap::zero(L.module, M.module);
    const PolyMap base = apply_equivalence(cp, zero, L, M).chi - c.chi;
    std::vector<PolyMap> columns;
    for (std::size_t x = 0; x < L.module.rank(); ++x)
        for (const auto& g : labels)
            for (std::size_t l = 0; l < M.module.rank(); ++l) {
                ModuleMap e = zero;
                TensorElement img(L.hopf(), 1);
                img.add(Legs{g}, i32(l), f.one());
                e.set_image(x, img);
                columns.push_back(apply_equivalence(cp, e, L, M).chi - c.chi - base);
            }
    res.candidates = columns.size();
    const auto sol = solve_combination(columns, -base);
    if (!sol) {
        res.verdict = complete ? Verdict::not_equivalent : Verdict::inconclusive;
        res.detail = complete ? "linear system over all " + std::to_string(columns.size()) + " coordinates of φ is inconsistent"
                              : "no solution within the degree-bounded template (" + std::to_string(columns.size()) +
                                    " coordinates)";
        return res;
    }
    std::vector<TensorElement> images;
    std::size_t k = 0;
    for (std::size_t x = 0; x < L.module.rank(); ++x) {
        TensorElement img(L.hopf(), 1);
        for (const auto& g : labels)
            for (std::size_t l = 0; l < M.module.rank(); ++l, ++k)
                img.add(Legs{g}, i32(l), (*sol)[k]);
        images.push_back(std::move(img));
    }
    ModuleMap phi(L.module, M.module, std::move(images));
    if (!(apply_equivalence(cp, phi, L, M) == c))
        throw Error("internal: linear equivalence witness failed verification");
    res.verdict = Verdict::found;
    res.phi = std::move(phi);
    res.detail = "exact linear solve over " + std::to_string(columns.size()) + " coordinates of φ";
    return res;
}

} // namespace

std::optional<std::vector<Scalar>> solve_combination(const std::vector<PolyMap>& columns, const PolyMap& target)
{
    const Field f = target.field();
    std::map<std::pair<Tuple, TensorKey>, std::size_t> row;
    auto index_rows = [&](const PolyMap& p) {
        for (const auto& [t, v] : p.table())
            for (const auto& [key, coeff] : v.terms())
                row.emplace(std::make_pair(t, key), row.size());
    };
    index_rows(target);
    for (const auto& col : columns)
        index_rows(col);
    Matrix A(f, row.size(), columns.size());
    std::vector<Scalar> b(row.size(), f.zero());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [t, v] : columns[j].table())
            for (const auto& [key, coeff] : v.terms())
                A.at(row.at({t, key}), j) = coeff;
    for (const auto& [t, v] : target.table())
        for (const auto& [key, coeff] : v.terms())
            b[row.at({t, key})] = coeff;
    return A.solve(b);
}

EquivalenceResult find_equivalence(const NonAbelianCocycle& c, const NonAbelianCocycle& cp, const LiePseudoalgebra& L,
                                   const LiePseudoalgebra& M, const SearchConfig& search)
{
    require_shape(c, L, M);
    require_shape(cp, L, M);
    const HopfAlgebra& h = L.hopf();
    const Field f = L.field();
    const bool finite_space = !f.is_rational() && h.finite_dimensional();
    const auto labels = template_labels(h, search.degree_bound);

    if (c == cp) {
        EquivalenceResult res;
        res.verdict = Verdict::found;
        res.phi = ModuleMap::zero(L.module, M.module);
        res.detail = "cocycles are equal";
        res.candidates = 1;
        res.mode = search.mode;
        return res;
    }

    SearchMode mode = search.mode;
    if (mode == SearchMode::automatic) {
        std::size_t total = 0;
        const std::size_t slots = L.module.rank() * labels.size() * M.module.rank();
        if (finite_space && saturating_power(f.characteristic(), slots, search.max_candidates, total))
            mode = SearchMode::exhaustive;
        else if (M.is_abelian())
            mode = SearchMode::linear;
        else
            mode = SearchMode::bounded;
    }
    switch (mode) {
    case SearchMode::exhaustive:
        if (!finite_space)
            throw Error("exhaustive search needs F_p scalars and a finite-dimensional Hopf algebra");
        return search_enumerate(c, cp, L, M, labels, all_residues(f), true, mode, search.max_candidates);
    case SearchMode::linear:
        if (!M.is_abelian())
            throw Error("linear search needs an abelian M (the equivalence identities are quadratic in φ otherwise)");
        return search_linear(c, cp, L, M, labels, h.finite_dimensional());
    case SearchMode::bounded: {
        std::vector<Scalar> coeffs = search.coefficients;
        if (coeffs.empty())
            coeffs = {f.zero(), f.one(), -f.one()};
        std::sort(coeffs.begin(), coeffs.end(), [&](const Scalar& a, const Scalar& b) {
            return f.is_rational() ? a.rational() < b.rational() : a.residue() < b.residue();
        });
        coeffs.erase(std::unique(coeffs.begin(), coeffs.end()), coeffs.end());
        const bool covers_field = finite_space && coeffs.size() == f.characteristic();
        return search_enumerate(c, cp, L, M, labels, coeffs, covers_field, mode, search.max_candidates);
    }
    case SearchMode::automatic:
        break;
    }
    throw Error("unreachable search mode");
}

// ---------------------------------------------------------------------------

ModuleMap theta_from_phi(const ExtensionModel& E, const ModuleMap& phi)
{
    std::vector<TensorElement> images;
    for (std::size_t x = 0; x < E.l_rank(); ++x)
        images.push_back(E.lift(x, phi));
    for (std::size_t u = 0; u < E.M.module.rank(); ++u)
        images.push_back(unit(E.E.module, E.l_rank() + u));
    return ModuleMap(E.E.module, E.E.module, std::move(images));
}

CheckReport check_extension_equivalence(const ExtensionModel& E, const ExtensionModel& Ep, const ModuleMap& theta)
{
    if (!(E.E.module == Ep.E.module) || !(E.L.module == Ep.L.module))
        throw Error("extension equivalence needs extensions of the same L by the same M");
    if (!(theta.source() == E.E.module) || !(theta.target() == Ep.E.module))
        throw Error("Θ must be a map E → E′");
    CheckReport report = check_homomorphism(theta, E.E, Ep.E).report;
    const std::size_t lr = E.l_rank();
    for (std::size_t a = 0; a < E.E.module.rank(); ++a) {
        const auto [l, m] = Ep.split(theta.image(a));
        if (a < lr) {
            const TensorElement want = unit(E.L.module, a);
            if (!(l == want))
                report.findings.push_back({"projection", {E.E.module.label(a)}, (l - want).render(E.L.module)});
        } else {
            const TensorElement want = unit(E.M.module, a - lr);
            if (!l.is_zero() || !(m == want))
                report.findings.push_back(
                    {"injection", {E.E.module.label(a)}, (theta.image(a) - unit(E.E.module, a)).render(E.E.module)});
        }
    }
    return report;
}

GradedElement cocycle_as_mc(const DgLa& g, const NonAbelianCocycle& c)
{
    require_shape(c, g.L, g.M);
    GradedElement a;
    a.add(embed_into_e(g, c.chi, 2));
    a.add(embed_into_e(g, c.psi, 1));
    return a;
}

NonAbelianCocycle mc_as_cocycle(const DgLa& g, const GradedElement& alpha)
{
    for (const auto& [k, p] : alpha.parts())
        if (k != 2)
            throw Error("a cocycle corresponds to a degree-1 element (arity 2) of g");
    const CheckReport member = g.check_membership(alpha);
    if (!member.passed())
        throw Error("element is not in g: " + member.summary(3));
    const PolyMap a = alpha.part(2, g.E);
    return {g.component(a, 2), g.component(a, 1)};
}

} // namespace pseudocohom
