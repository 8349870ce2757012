#include "pseudocohom/wells.hpp"

#include <map>
#include <sstream>

#include "pseudocohom/error.hpp"

namespace pseudocohom {

namespace {

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

ModuleMap inverse_or_throw(const ModuleMap& m, const std::string& what)
{
    auto inv = m.inverse();
    if (!inv)
        throw Error(what + " is not invertible over H");
    return *inv;
}

void require_enumerable(const HopfAlgebra& h)
{
    if (h.field().is_rational() || !h.finite_dimensional())
        throw Error("enumeration needs F_p scalars and a finite-dimensional Hopf algebra");
}

std::vector<Scalar> residues(Field f)
{
    std::vector<Scalar> out;
    for (std::uint32_t i = 0; i < f.characteristic(); ++i)
        out.push_back(f.from_int(i));
    return out;
}

std::size_t map_count(const FreeModule& A, const FreeModule& B, std::size_t cap)
{
    const HopfAlgebra& h = A.hopf();
    const std::size_t slots = A.rank() * h.dimension() * B.rank();
    std::size_t out = 1;
    for (std::size_t i = 0; i < slots; ++i) {
        if (out > cap / h.field().characteristic())
            return cap + 1;
        out *= h.field().characteristic();
    }
    return out;
}

} // namespace

std::string AutPair::render() const
{
    return "β: " + beta.render() + "  α: " + alpha.render();
}

CheckReport check_automorphism(const ModuleMap& theta, const LiePseudoalgebra& a)
{
    HomomorphismCheck h = check_homomorphism(theta, a, a);
    if (h.passed() && !h.invertible)
        h.report.findings.push_back({"not-invertible", {}, theta.render()});
    return h.report;
}

AutPair make_aut_pair(ModuleMap beta, ModuleMap alpha, const LiePseudoalgebra& L, const LiePseudoalgebra& M)
{
    const CheckReport rb = check_automorphism(beta, M);
    if (!rb.passed())
        throw Error("β is not an automorphism of " + M.name + ": " + rb.summary(3));
    const CheckReport ra = check_automorphism(alpha, L);
    if (!ra.passed())
        throw Error("α is not an automorphism of " + L.name + ": " + ra.summary(3));
    return {std::move(beta), std::move(alpha)};
}

bool preserves_m(const ExtensionModel& E, const ModuleMap& gamma)
{
    for (std::size_t u = 0; u < E.M.module.rank(); ++u)
        if (!E.split(gamma.image(E.l_rank() + u)).first.is_zero())
            return false;
    return true;
}

AutPair tau(const ExtensionModel& E, const ModuleMap& gamma, const ModuleMap& phi_s)
{
    if (!preserves_m(E, gamma))
        throw Error("τ needs an automorphism with γ(M) ⊆ M");
    std::vector<TensorElement> b, a;
    for (std::size_t u = 0; u < E.M.module.rank(); ++u)
        b.push_back(E.split(gamma.image(E.l_rank() + u)).second);
    for (std::size_t x = 0; x < E.l_rank(); ++x)
        a.push_back(E.split(gamma.apply(E.lift(x, phi_s))).first);
    return {ModuleMap(E.M.module, E.M.module, std::move(b)), ModuleMap(E.L.module, E.L.module, std::move(a))};
}

NonAbelianCocycle transform_cocycle(const NonAbelianCocycle& c, const AutPair& pair, const LiePseudoalgebra& L,
                                    const LiePseudoalgebra& M)
{
    const ModuleMap ai = inverse_or_throw(pair.alpha, "α");
    const ModuleMap bi = inverse_or_throw(pair.beta, "β");
    NonAbelianCocycle out = NonAbelianCocycle::zero(L, M);
    for (std::size_t x = 0; x < L.module.rank(); ++x) {
        for (std::size_t y = 0; y < L.module.rank(); ++y)
            out.chi.set(Tuple{i32(x), i32(y)}, pair.beta.apply(evaluate(c.chi, {ai.image(x), ai.image(y)})));
        for (std::size_t u = 0; u < M.module.rank(); ++u)
            out.psi.set(Tuple{i32(x), i32(u)}, pair.beta.apply(evaluate(c.psi, {ai.image(x), bi.image(u)})));
    }
    return out;
}

WellsResult wells_obstruction(const ExtensionModel& E, const ModuleMap& phi_s, const AutPair& pair,
                              const SearchConfig& search)
{
    WellsResult r;
    r.cocycle = extract_cocycle(E, phi_s);
    r.transformed = transform_cocycle(r.cocycle, pair, E.L, E.M);
    r.equivalence = find_equivalence(r.transformed, r.cocycle, E.L, E.M, search);
    return r;
}

ModuleMap construct_lift(const ExtensionModel& E, const ModuleMap& phi_s, const AutPair& pair, const ModuleMap& phi)
{
    const auto lr = i32(E.l_rank());
    std::vector<TensorElement> images;
    for (std::size_t x = 0; x < E.l_rank(); ++x) {
        const TensorElement ax = pair.alpha.image(x);
        TensorElement m = phi.apply(ax) + phi_s.apply(ax) - pair.beta.apply(phi_s.image(x));
        images.push_back(ax + shifted(m, lr));
    }
    for (std::size_t u = 0; u < E.M.module.rank(); ++u)
        images.push_back(shifted(pair.beta.image(u), lr));
    ModuleMap gamma(E.E.module, E.E.module, std::move(images));
    const CheckReport aut = check_automorphism(gamma, E.E);
    if (!aut.passed())
        throw Error("lift is not an automorphism of E (invalid certificate φ): " + aut.summary(3));
    if (!(tau(E, gamma, phi_s) == pair))
        throw Error("lift does not map to the requested pair under τ");
    return gamma;
}

std::string to_string(Inducibility v)
{
    switch (v) {
    case Inducibility::inducible:
        return "inducible";
    case Inducibility::not_inducible:
        return "not-inducible";
    case Inducibility::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

InducibilityResult check_inducible(const ExtensionModel& E, const AutPair& pair, const SearchConfig& search,
                                   const std::optional<ModuleMap>& phi_s)
{
    const ModuleMap s = phi_s ? *phi_s : ModuleMap::zero(E.L.module, E.M.module);
    InducibilityResult r;
    r.wells = wells_obstruction(E, s, pair, search);
    switch (r.wells.equivalence.verdict) {
    case Verdict::found:
        r.gamma = construct_lift(E, s, pair, *r.wells.equivalence.phi);
        r.verdict = Inducibility::inducible;
        break;
    case Verdict::not_equivalent:
        r.verdict = Inducibility::not_inducible;
        break;
    case Verdict::inconclusive:
        r.verdict = Inducibility::inconclusive;
        break;
    }
    return r;
}

bool check_C_psi(const AutPair& pair, const Representation& r)
{
    for (std::size_t x = 0; x < r.algebra.module.rank(); ++x)
        for (std::size_t u = 0; u < r.module.rank(); ++u) {
            const TensorElement lhs = pair.beta.apply(r.action.value(Tuple{i32(x), i32(u)}));
            const TensorElement rhs = evaluate(r.action, {pair.alpha.image(x), pair.beta.image(u)});
            if (!(lhs == rhs))
                return false;
        }
    return true;
}

AbelianWellsResult abelian_wells(const ExtensionModel& E, const ModuleMap& phi_s, const AutPair& pair)
{
    if (!E.M.is_abelian())
        throw Error("abelian Wells map needs [·*·]_M = 0");
    if (!E.L.hopf().finite_dimensional())
        throw Error("abelian Wells map decides coboundaries only for finite-dimensional H; "
                    "use the bounded equivalence search for polynomial H");
    const NonAbelianCocycle c = extract_cocycle(E, phi_s);
    const Representation rep("ψ", E.L, E.M.module, c.psi);
    if (!check_C_psi(pair, rep))
        throw Error("pair is not in C_ψ");
    AbelianWellsResult out;
    out.difference = transform_cocycle(c, pair, E.L, E.M).chi - c.chi;

    const HopfAlgebra& h = E.L.hopf();
    const auto labels = h.basis();
    std::vector<PolyMap> columns;
    for (std::size_t x = 0; x < E.l_rank(); ++x)
        for (const auto& g : labels)
            for (std::size_t l = 0; l < E.M.module.rank(); ++l) {
                Cochain unit_cochain = zero_cochain(rep, 1);
                TensorElement v(h, 1);
                v.add(Legs{g}, i32(l), h.field().one());
                unit_cochain.map.set(Tuple{i32(x)}, std::move(v));
                columns.push_back(coboundary(unit_cochain, rep).map);
            }
    const auto sol = solve_combination(columns, out.difference);
    if (!sol)
        return out;
    std::vector<TensorElement> images;
    std::size_t k = 0;
    for (std::size_t x = 0; x < E.l_rank(); ++x) {
        TensorElement img(h, 1);
        for (const auto& g : labels)
            for (std::size_t l = 0; l < E.M.module.rank(); ++l, ++k)
                img.add(Legs{g}, i32(l), (*sol)[k]);
        images.push_back(std::move(img));
    }
    out.zero = true;
    out.phi = ModuleMap(E.L.module, E.M.module, std::move(images));
    return out;
}

// ---------------------------------------------------------------------------

std::size_t enumerate_all_maps(const FreeModule& A, const FreeModule& B, const std::function<bool(const ModuleMap&)>& visit)
{
    require_enumerable(A.hopf());
    return enumerate_maps(A, B, A.hopf().basis(), residues(A.field()), visit);
}

std::vector<ModuleMap> enumerate_automorphisms(const LiePseudoalgebra& a, std::size_t max_candidates)
{
    require_enumerable(a.hopf());
    if (map_count(a.module, a.module, max_candidates) > max_candidates)
        throw Error("automorphism enumeration of " + a.name + " exceeds " + std::to_string(max_candidates) +
                    " candidates");
    std::vector<ModuleMap> out;
    enumerate_all_maps(a.module, a.module, [&](const ModuleMap& m) {
        const HomomorphismCheck h = check_homomorphism(m, a, a, true);
        if (h.passed() && h.invertible)
            out.push_back(m);
        return false;
    });
    return out;
}

std::string ExactSequenceReport::summary() const
{
    std::ostringstream os;
    if (exhaustive)
        os << "exhaustive: " << candidates << " M-preserving maps, |Aut_M(E)| = " << aut_m
           << ", |ker τ| = " << ker_tau << ", |Aut_M^{M,L}(E)| = " << shape_kernel << ", |im τ| = " << im_tau
           << " of " << pairs << " pairs, |ker W| = " << ker_w;
    else
        os << "sampled: " << aut_m << " automorphisms, " << pairs << " pairs, " << ker_w << " with W = 0";
    return os.str();
}

ExactSequenceReport check_exact_sequence(const ExtensionModel& E, const std::vector<AutPair>& sample_pairs,
                                         const std::vector<ModuleMap>& sample_gammas, std::size_t max_candidates)
{
    ExactSequenceReport out;
    const ModuleMap s0 = ModuleMap::zero(E.L.module, E.M.module);
    const AutPair identity{ModuleMap::identity(E.M.module), ModuleMap::identity(E.L.module)};
    const HopfAlgebra& h = E.L.hopf();
    const bool enumerable = !h.field().is_rational() && h.finite_dimensional() &&
                            map_count(E.L.module, E.E.module, max_candidates) *
                                    map_count(E.M.module, E.M.module, max_candidates) <=
                                max_candidates;
    auto fail = [&](const std::string& check, const std::string& detail) {
        out.report.findings.push_back({check, {}, detail});
    };

    // (b) every pair in im τ has W = 0
    auto check_image = [&](const AutPair& p) {
        const WellsResult w = wells_obstruction(E, s0, p);
        if (!w.zero())
            fail("im-tau-in-ker-W", p.render() + ": " + w.equivalence.detail);
    };
    // (c) pairs with W = 0 lift
    auto check_pair = [&](const AutPair& p) {
        const WellsResult w = wells_obstruction(E, s0, p);
        if (!w.zero())
            return false;
        ++out.ker_w;
        try {
            construct_lift(E, s0, p, *w.equivalence.phi);
        } catch (const Error& e) {
            fail("ker-W-lifts", p.render() + ": " + e.what());
        }
        return true;
    };

    if (!enumerable) {
        std::vector<ModuleMap> gammas = sample_gammas;
        gammas.push_back(ModuleMap::identity(E.E.module));
        for (const auto& g : gammas) {
            if (!check_automorphism(g, E.E).passed() || !preserves_m(E, g)) {
                fail("sample", "supplied γ is not in Aut_M(E): " + g.render());
                continue;
            }
            ++out.aut_m;
            const AutPair p = tau(E, g, s0);
            if (p == identity) {
                ++out.ker_tau;
                const ModuleMap phi(E.L.module, E.M.module, [&] {
                    std::vector<TensorElement> v;
                    for (std::size_t x = 0; x < E.l_rank(); ++x)
                        v.push_back(E.split(g.image(x)).second);
                    return v;
                }());
                if (!(theta_from_phi(E, phi) == g))
                    fail("ker-tau-shape", g.render());
            }
            check_image(p);
        }
        std::vector<AutPair> pairs = sample_pairs;
        pairs.push_back(identity);
        for (const auto& p : pairs) {
            ++out.pairs;
            check_pair(p);
        }
        return out;
    }

    out.exhaustive = true;
    const auto aut_m = enumerate_automorphisms(E.M, max_candidates);
    const auto aut_l = enumerate_automorphisms(E.L, max_candidates);
    const std::size_t l_maps = map_count(E.L.module, E.E.module, max_candidates);
    out.candidates = l_maps * map_count(E.M.module, E.M.module, max_candidates);
    const auto lr = i32(E.l_rank());

    // Aut_M(E): γ|_M is an injective endomorphism of the finite M, so only β ∈ Aut(M) can occur.
    std::map<std::string, AutPair> image;
    for (const auto& beta : aut_m) {
        std::vector<TensorElement> m_images;
        for (std::size_t u = 0; u < E.M.module.rank(); ++u)
            m_images.push_back(shifted(beta.image(u), lr));
        enumerate_all_maps(E.L.module, E.E.module, [&](const ModuleMap& top) {
            std::vector<TensorElement> images = top.images();
            images.insert(images.end(), m_images.begin(), m_images.end());
            const ModuleMap gamma(E.E.module, E.E.module, std::move(images));
            const HomomorphismCheck hc = check_homomorphism(gamma, E.E, E.E, true);
            if (!hc.passed() || !hc.invertible)
                return false;
            ++out.aut_m;
            const AutPair p = tau(E, gamma, s0);
            if (p == identity) {
                ++out.ker_tau;
                for (std::size_t x = 0; x < E.l_rank(); ++x)
                    if (!(E.split(gamma.image(x)).first == unit(E.L.module, x)))
                        fail("ker-tau-shape", gamma.render());
            }
            image.emplace(p.render(), p);
            return false;
        });
    }
    // (a) the kernel is exactly the γ_φ that are automorphisms
    enumerate_all_maps(E.L.module, E.M.module, [&](const ModuleMap& phi) {
        const ModuleMap g = theta_from_phi(E, phi);
        if (check_automorphism(g, E.E).passed()) {
            ++out.shape_kernel;
            if (!(tau(E, g, s0) == identity))
                fail("ker-tau", "γ_φ with τ ≠ id: " + g.render());
        }
        return false;
    });
    if (out.ker_tau != out.shape_kernel)
        fail("ker-tau", "|ker τ| = " + std::to_string(out.ker_tau) + " but " + std::to_string(out.shape_kernel) +
                            " maps of the form (x, u) ↦ (x, φx + u) are automorphisms");

    out.im_tau = image.size();
    for (const auto& [key, p] : image)
        check_image(p);
    for (const auto& beta : aut_m)
        for (const auto& alpha : aut_l) {
            const AutPair p{beta, alpha};
            ++out.pairs;
            const bool zero = check_pair(p);
            if (zero && !image.count(p.render()))
                fail("ker-W-in-im-tau", p.render());
        }
    if (out.ker_w != out.im_tau)
        fail("exactness", "|ker W| = " + std::to_string(out.ker_w) + " but |im τ| = " + std::to_string(out.im_tau));
    return out;
}

} // namespace pseudocohom
