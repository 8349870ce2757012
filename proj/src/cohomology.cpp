#include "pseudocohom/cohomology.hpp"

#include <algorithm>
#include <numeric>

#include "pseudocohom/error.hpp"
#include "pseudocohom/linalg.hpp"

namespace pseudocohom {

namespace {

TensorElement unit_element(const FreeModule& m, std::int32_t i)
{
    return TensorElement::basis(m.hopf(), 1, i);
}

Tuple without(const Tuple& t, std::size_t skip_a, std::size_t skip_b = static_cast<std::size_t>(-1))
{
    Tuple r;
    for (std::size_t k = 0; k < t.size(); ++k)
        if (k != skip_a && k != skip_b)
            r.push_back(t[k]);
    return r;
}

// All increasing k-subsets of {0..n-1}, lexicographic.
std::vector<std::vector<int>> subsets(int n, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    if (k > n)
        return out;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i)
            --i;
        if (i < 0)
            return out;
        ++cur[i];
        for (int j = i + 1; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
}

Scalar factorial(Field f, std::size_t n)
{
    Scalar r = f.one();
    for (std::size_t i = 2; i <= n; ++i)
        r *= f.from_int(static_cast<long>(i));
    return r;
}

void require_finite(const HopfAlgebra& h)
{
    if (!h.finite_dimensional())
        throw Error("cohomology dimensions need a finite-dimensional Hopf algebra (trivial or group kind); "
                    "cochain spaces over " + h.describe() + " are infinite-dimensional");
}

} // namespace

Cochain zero_cochain(const Representation& r, std::size_t degree)
{
    Cochain c;
    c.degree = degree;
    if (degree == 0)
        c.constant.assign(r.module.rank(), r.module.field().zero());
    else
        c.map = PolyMap::uniform(r.algebra.module, degree, r.module);
    return c;
}

Cochain make_cochain(const Representation& r, PolyMap map)
{
    for (const auto& s : map.sources())
        if (!(s == r.algebra.module))
            throw Error("cochain sources must all be " + r.algebra.module.name());
    if (!(map.target() == r.module))
        throw Error("cochain values must lie in " + r.module.name());
    const CheckReport skew = check_skew(map);
    if (!skew.passed())
        throw Error("cochain is not skew-symmetric: " + skew.summary(3));
    Cochain c;
    c.degree = map.arity();
    c.map = std::move(map);
    return c;
}

Cochain coboundary(const Cochain& theta, const Representation& r)
{
    const FreeModule& L = r.algebra.module;
    const FreeModule& M = r.module;
    const HopfAlgebra& h = L.hopf();
    const Field f = h.field();
    const PolyMap& psi = r.action;
    const PolyMap& rho = r.algebra.bracket;
    Cochain out;
    out.degree = theta.degree + 1;
    out.map = PolyMap::uniform(L, out.degree, M);

    if (theta.degree == 0) {
        if (theta.constant.size() != M.rank())
            throw Error("degree-0 cochain has the wrong length");
        for (std::size_t i = 0; i < L.rank(); ++i) {
            TensorElement v(h, 1);
            for (std::size_t j = 0; j < M.rank(); ++j) {
                if (theta.constant[j].is_zero())
                    continue;
                const TensorElement act = psi.value(Tuple{static_cast<std::int32_t>(i), static_cast<std::int32_t>(j)});
                for (const auto& [key, c] : act.terms())
                    v.add(Legs{key.legs[0]}, key.index, theta.constant[j] * c * h.counit(key.legs[1]));
            }
            out.map.set(Tuple{static_cast<std::int32_t>(i)}, std::move(v));
        }
        return out;
    }

    const std::size_t n = theta.degree;
    for (const Tuple& t : out.map.tuples()) {
        TensorElement acc(h, n + 1);
        for (std::size_t p = 0; p <= n; ++p) {
            const TensorElement th = theta.map.value(without(t, p));
            if (th.is_zero())
                continue;
            TensorElement v = evaluate(psi, {unit_element(L, t[p]), th});
            v = permute_legs(LegPermutation::move_first_to(n + 1, p), v);
            acc.add_scaled(v, p % 2 == 0 ? -f.one() : f.one());
        }
        for (std::size_t p = 0; p <= n; ++p)
            for (std::size_t q = p + 1; q <= n; ++q) {
                const TensorElement br = rho.value(Tuple{t[p], t[q]});
                if (br.is_zero())
                    continue;
                std::vector<TensorElement> args{br};
                for (auto idx : without(t, p, q))
                    args.push_back(unit_element(L, idx));
                TensorElement v = evaluate(theta.map, args);
                v = permute_legs(LegPermutation::move_first_two_to(n + 1, p, q), v);
                acc.add_scaled(v, (p + q) % 2 == 0 ? -f.one() : f.one());
            }
        out.map.set(t, std::move(acc));
    }
    return out;
}

PolyMap nr_insert(const PolyMap& P, const PolyMap& Q)
{
    const FreeModule& V = P.target();
    if (!(Q.target() == V))
        throw Error("NR bracket of maps with different targets");
    for (const auto& s : P.sources())
        if (!(s == V))
            throw Error("NR bracket needs maps V^n → V");
    for (const auto& s : Q.sources())
        if (!(s == V))
            throw Error("NR bracket needs maps V^n → V");
    const std::size_t p = P.arity(), q = Q.arity();
    const std::size_t N = p + q - 1;
    PolyMap out = PolyMap::uniform(V, N, V);
    if (P.is_zero() || Q.is_zero())
        return out;
    const Field f = V.field();
    const auto shuffles = subsets(static_cast<int>(N), static_cast<int>(p));
    struct Shuffle {
        std::vector<int> order;
        std::vector<int> rest;
        bool negative;
    };
    std::vector<Shuffle> sh;
    for (const auto& S : shuffles) {
        Shuffle s;
        int inv = 0;
        for (std::size_t k = 0; k < S.size(); ++k)
            inv += S[k] - static_cast<int>(k);
        std::vector<char> in(N, 0);
        for (int v : S)
            in[v] = 1;
        s.order = S;
        for (std::size_t k = 0; k < N; ++k)
            if (!in[k]) {
                s.order.push_back(static_cast<int>(k));
                s.rest.push_back(static_cast<int>(k));
            }
        s.negative = inv % 2;
        sh.push_back(std::move(s));
    }
    for (const Tuple& t : out.tuples()) {
        TensorElement acc(V.hopf(), N);
        for (const auto& s : sh) {
            Tuple inner;
            for (std::size_t k = 0; k < p; ++k)
                inner.push_back(t[s.order[k]]);
            const TensorElement pv = P.value(inner);
            if (pv.is_zero())
                continue;
            std::vector<TensorElement> args{pv};
            for (int r : s.rest)
                args.push_back(unit_element(V, t[r]));
            acc.add_scaled(evaluate_ordered(Q, args, s.order), s.negative ? -f.one() : f.one());
        }
        out.set(t, std::move(acc));
    }
    return out;
}

PolyMap nr_bracket(const PolyMap& P, const PolyMap& Q)
{
    const std::size_t m = P.arity() - 1, n = Q.arity() - 1;
    PolyMap out = nr_insert(P, Q);
    const PolyMap back = nr_insert(Q, P);
    if ((m * n) % 2)
        out += back;
    else
        out -= back;
    return out;
}

// ---------------------------------------------------------------------------

PolyMap GradedElement::part(std::size_t arity, const FreeModule& module) const
{
    auto it = parts_.find(arity);
    if (it != parts_.end())
        return it->second;
    return PolyMap::uniform(module, arity, module);
}

void GradedElement::add(const PolyMap& p, const Scalar& c)
{
    if (p.is_zero() || c.is_zero())
        return;
    auto it = parts_.find(p.arity());
    if (it == parts_.end()) {
        parts_.emplace(p.arity(), c * p);
        return;
    }
    it->second += c * p;
    if (it->second.is_zero())
        parts_.erase(it);
}

GradedElement& GradedElement::operator+=(const GradedElement& o)
{
    for (const auto& [k, p] : o.parts_)
        add(p);
    return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o)
{
    for (const auto& [k, p] : o.parts_)
        add(p, -p.field().one());
    return *this;
}

GradedElement operator*(const Scalar& c, const GradedElement& a)
{
    GradedElement r;
    for (const auto& [k, p] : a.parts_)
        r.add(p, c);
    return r;
}

GradedElement nr_bracket(const GradedElement& a, const GradedElement& b)
{
    GradedElement out;
    for (const auto& [ka, pa] : a.parts())
        for (const auto& [kb, pb] : b.parts())
            out.add(nr_bracket(pa, pb));
    return out;
}

// ---------------------------------------------------------------------------

GradedElement DgLa::d(const GradedElement& x) const
{
    return nr_bracket(GradedElement(differential), x);
}

PolyMap DgLa::component(const PolyMap& x, std::size_t m) const
{
    const std::size_t k = x.arity();
    if (m > k)
        throw Error("component with more L-slots than the arity");
    std::vector<FreeModule> sources(m, L.module);
    sources.insert(sources.end(), k - m, M.module);
    PolyMap out(sources, M.module);
    const auto lr = static_cast<std::int32_t>(l_rank());
    for (const Tuple& t : out.tuples()) {
        Tuple et = t;
        for (std::size_t s = m; s < k; ++s)
            et[s] += lr;
        const TensorElement v = x.value(et);
        if (v.is_zero())
            continue;
        TensorElement w(v.hopf(), v.arity());
        for (const auto& [key, c] : v.terms()) {
            if (key.index < lr)
                throw Error("component has values outside " + M.module.name());
            w.add(key.legs, key.index - lr, c);
        }
        out.set(t, std::move(w));
    }
    return out;
}

std::set<std::pair<std::size_t, std::size_t>> DgLa::support(const GradedElement& x) const
{
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (const auto& [k, p] : x.parts())
        for (const auto& [t, v] : p.table()) {
            std::size_t m = 0;
            for (auto e : t)
                m += is_l_index(e) ? 1 : 0;
            out.emplace(m, k - m);
        }
    return out;
}

CheckReport DgLa::check_membership(const GradedElement& x) const
{
    CheckReport report;
    for (const auto& [k, p] : x.parts())
        for (const auto& [t, v] : p.table()) {
            bool has_l = false;
            for (auto e : t)
                has_l = has_l || is_l_index(e);
            bool l_values = false;
            for (const auto& [key, c] : v.terms())
                l_values = l_values || is_l_index(key.index);
            if (!has_l)
                report.findings.push_back({"g-membership", p.locator(t), "nonzero on M-only tuple: " + v.render(E)});
            else if (l_values)
                report.findings.push_back({"g-membership", p.locator(t), "value outside M: " + v.render(E)});
        }
    return report;
}

DgLa build_dgla(const LiePseudoalgebra& L, const LiePseudoalgebra& M)
{
    DgLa g;
    g.L = L;
    g.M = M;
    g.E = FreeModule::direct_sum("E", L.module, M.module);
    g.differential = PolyMap::uniform(g.E, 2, g.E);
    const auto lr = static_cast<std::int32_t>(L.module.rank());
    auto shifted = [&](const TensorElement& v, std::int32_t offset) {
        TensorElement w(v.hopf(), v.arity());
        for (const auto& [key, c] : v.terms())
            w.add(key.legs, key.index + offset, c);
        return w;
    };
    for (const auto& [t, v] : L.bracket.table())
        g.differential.set(t, shifted(v, 0));
    for (const auto& [t, v] : M.bracket.table())
        g.differential.set(Tuple{t[0] + lr, t[1] + lr}, shifted(v, lr));
    return g;
}

PolyMap embed_into_e(const DgLa& g, const PolyMap& x, std::size_t m, bool values_in_l)
{
    const std::size_t k = x.arity();
    const auto lr = static_cast<std::int32_t>(g.l_rank());
    PolyMap out = PolyMap::uniform(g.E, k, g.E);
    const std::int32_t offset = values_in_l ? 0 : lr;
    for (const Tuple& t : out.tuples()) {
        std::vector<int> idx;
        for (std::size_t s = 0; s < k; ++s)
            if (g.is_l_index(t[s]))
                idx.push_back(static_cast<int>(s));
        if (idx.size() != m)
            continue;
        for (std::size_t s = 0; s < k; ++s)
            if (!g.is_l_index(t[s]))
                idx.push_back(static_cast<int>(s));
        Tuple xs;
        for (std::size_t s = 0; s < k; ++s)
            xs.push_back(s < m ? t[idx[s]] : t[idx[s]] - lr);
        const TensorElement v = x.value(xs);
        if (v.is_zero())
            continue;
        TensorElement w(v.hopf(), v.arity());
        for (const auto& [key, c] : v.terms())
            w.add(key.legs, key.index + offset, c);
        out.set(t, skew_image(w, LegPermutation(idx)));
    }
    return out;
}

GradedElement embed_degree_zero(const DgLa& g, const ModuleMap& phi)
{
    if (!(phi.source() == g.L.module) || !(phi.target() == g.M.module))
        throw Error("degree-zero elements of g are maps " + g.L.module.name() + " → " + g.M.module.name());
    return GradedElement(embed_into_e(g, phi.as_polymap(), 1));
}

ModuleMap extract_degree_zero(const DgLa& g, const GradedElement& beta)
{
    const PolyMap c = g.component(beta.part(1, g.E), 1);
    std::vector<TensorElement> images;
    for (std::size_t j = 0; j < g.l_rank(); ++j)
        images.push_back(c.value(Tuple{static_cast<std::int32_t>(j)}));
    return ModuleMap(g.L.module, g.M.module, std::move(images));
}

CheckReport check_mc(const GradedElement& alpha, const DgLa& g)
{
    CheckReport report = g.check_membership(alpha);
    const Field f = g.E.field();
    const GradedElement R = g.d(alpha) + (f.one() / f.from_int(2)) * nr_bracket(alpha, alpha);
    const auto lr = static_cast<std::int32_t>(g.l_rank());
    for (const auto& [k, p] : R.parts()) {
        std::vector<std::size_t> order;
        for (std::size_t m = 1; m <= k; ++m)
            order.push_back(m);
        order.push_back(0);
        for (std::size_t m : order) {
            std::vector<std::size_t> ranks(m, g.L.module.rank());
            ranks.insert(ranks.end(), k - m, g.M.module.rank());
            for_each_tuple(ranks, [&](const Tuple& t) {
                Tuple et = t;
                for (std::size_t s = m; s < k; ++s)
                    et[s] += lr;
                const TensorElement v = p.value(et);
                if (!v.is_zero())
                    report.findings.push_back(
                        {"mc(" + std::to_string(m) + "," + std::to_string(k - m) + ")", p.locator(et), v.render(g.E)});
            });
        }
    }
    return report;
}

GradedElement gauge_transform(const GradedElement& alpha, const GradedElement& beta, const DgLa& g)
{
    for (const auto& [k, p] : beta.parts())
        if (k != 1)
            throw Error("gauge parameter must lie in g⁰ (maps L → M)");
    const CheckReport member = g.check_membership(beta);
    if (!member.passed())
        throw Error("gauge parameter is not in g⁰: " + member.summary(3));
    const Field f = g.E.field();
    // (ad_β)^n lowers the M-slot count by n, so the series stop after q_max + 1 terms.
    std::size_t qmax = 1;
    for (const auto& [k, p] : alpha.parts())
        qmax = std::max(qmax, k - 1);
    if (!f.is_rational() && f.characteristic() <= qmax + 1)
        throw Error("gauge action needs 1/(n+1)! for n <= " + std::to_string(qmax) + "; characteristic " +
                    std::to_string(f.characteristic()) + " is too small");
    auto ad = [&](const GradedElement& x) { return nr_bracket(beta, x); };

    GradedElement result;
    GradedElement term = alpha;
    for (std::size_t n = 0; !term.is_zero(); ++n) {
        if (n > qmax + 2)
            throw Error("ad_β failed to be nilpotent");
        result += factorial(f, n).inverse() * term;
        term = ad(term);
    }
    term = g.d(beta);
    for (std::size_t n = 0; !term.is_zero(); ++n) {
        if (n > qmax + 2)
            throw Error("ad_β failed to be nilpotent");
        result -= factorial(f, n + 1).inverse() * term;
        term = ad(term);
    }
    return result;
}

DgLa twist(const DgLa& g, const GradedElement& alpha)
{
    const CheckReport mc = check_mc(alpha, g);
    if (!mc.passed())
        throw Error("twisting element is not Maurer-Cartan: " + mc.summary(3));
    for (const auto& [k, p] : alpha.parts())
        if (k != 2)
            throw Error("Maurer-Cartan elements live in degree 1 (arity 2)");
    DgLa out = g;
    out.differential += alpha.part(2, g.E);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<LegPermutation> stabilizer(const Tuple& s)
{
    std::vector<int> p(s.size());
    std::iota(p.begin(), p.end(), 0);
    std::vector<LegPermutation> out;
    do {
        bool fixes = true;
        for (std::size_t k = 0; k < s.size() && fixes; ++k)
            fixes = s[p[k]] == s[k];
        if (fixes)
            out.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

bool nondecreasing(const Tuple& t)
{
    return std::is_sorted(t.begin(), t.end());
}

// All pure tensors over the k-basis of a finite-dimensional H.
std::vector<Legs> all_legs(const HopfAlgebra& h, std::size_t k)
{
    const auto hb = h.basis();
    std::vector<Legs> out{Legs{}};
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Legs> next;
        for (const auto& l : out)
            for (const auto& m : hb) {
                Legs n = l;
                n.push_back(m);
                next.push_back(std::move(n));
            }
        out = std::move(next);
    }
    return out;
}

} // namespace

std::vector<PolyMap> skew_basis(const FreeModule& source, std::size_t arity, const FreeModule& target,
                                const std::vector<std::int32_t>& allowed_targets,
                                const std::function<bool(const Tuple&)>& keep)
{
    const HopfAlgebra& h = source.hopf();
    require_finite(h);
    const Field f = h.field();
    const auto legs = all_legs(h, arity);
    std::vector<PolyMap> out;
    const PolyMap shape = PolyMap::uniform(source, arity, target);
    for (const Tuple& s : shape.tuples()) {
        if (!nondecreasing(s) || !keep(s))
            continue;
        const auto stab = stabilizer(s);
        // coordinates of the antisymmetrized standard vectors
        std::map<TensorKey, std::size_t> pos;
        std::vector<TensorKey> keys;
        for (const auto& l : legs)
            for (auto t : allowed_targets) {
                pos.emplace(TensorKey{l, t}, keys.size());
                keys.push_back(TensorKey{l, t});
            }
        Matrix rows(f, keys.size(), keys.size());
        for (std::size_t b = 0; b < keys.size(); ++b) {
            TensorElement e(h, arity);
            e.add(keys[b], f.one());
            TensorElement proj(h, arity);
            for (const auto& pi : stab)
                proj += skew_image(e, pi);
            for (const auto& [key, c] : proj.terms())
                rows.at(b, pos.at(key)) = c;
        }
        const auto pivots = rows.row_reduce();
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            TensorElement v(h, arity);
            for (std::size_t c = 0; c < keys.size(); ++c)
                if (!rows.at(r, c).is_zero())
                    v.add(keys[c], rows.at(r, c));
            PolyMap lower = shape;
            lower.set(s, std::move(v));
            out.push_back(skew_complete(lower));
        }
    }
    return out;
}

std::vector<Scalar> skew_coordinates(const PolyMap& x, const std::function<bool(const Tuple&)>& keep)
{
    const HopfAlgebra& h = x.hopf();
    require_finite(h);
    const auto hb = h.basis();
    std::map<Monomial, std::size_t> hpos;
    for (std::size_t i = 0; i < hb.size(); ++i)
        hpos.emplace(hb[i], i);
    const std::size_t k = x.arity();
    std::size_t legs_count = 1;
    for (std::size_t i = 0; i < k; ++i)
        legs_count *= hb.size();
    const std::size_t r = x.target().rank();
    std::vector<Scalar> out;
    for (const Tuple& s : x.tuples()) {
        if (!nondecreasing(s) || !keep(s))
            continue;
        const std::size_t base = out.size();
        out.resize(base + legs_count * r, h.field().zero());
        const TensorElement v = x.value(s);
        for (const auto& [key, c] : v.terms()) {
            std::size_t code = 0;
            for (const auto& m : key.legs)
                code = code * hb.size() + hpos.at(m);
            out[base + code * r + key.index] = c;
        }
    }
    return out;
}

std::size_t cohomology_dim(const Representation& r, std::size_t n)
{
    const FreeModule& L = r.algebra.module;
    const FreeModule& M = r.module;
    require_finite(L.hopf());
    const Field f = L.field();
    const auto all = [](const Tuple&) { return true; };
    std::vector<std::int32_t> targets(M.rank());
    std::iota(targets.begin(), targets.end(), 0);

    // basis of C^k and the rank of δ_k
    auto basis = [&](std::size_t k) {
        std::vector<Cochain> out;
        if (k == 0) {
            for (std::size_t j = 0; j < M.rank(); ++j) {
                Cochain c = zero_cochain(r, 0);
                c.constant[j] = f.one();
                out.push_back(std::move(c));
            }
            return out;
        }
        for (auto& p : skew_basis(L, k, M, targets, all)) {
            Cochain c;
            c.degree = k;
            c.map = std::move(p);
            out.push_back(std::move(c));
        }
        return out;
    };
    auto rank_delta = [&](const std::vector<Cochain>& b) {
        std::vector<std::vector<Scalar>> images;
        for (const auto& c : b)
            images.push_back(skew_coordinates(coboundary(c, r).map, all));
        return rank_of(f, images);
    };
    const auto bn = basis(n);
    std::size_t dim = bn.size() - rank_delta(bn);
    if (n > 0)
        dim -= rank_delta(basis(n - 1));
    return dim;
}

std::size_t dgla_cohomology_dim(const DgLa& g, std::size_t k)
{
    require_finite(g.E.hopf());
    const Field f = g.E.field();
    const auto has_l = [&](const Tuple& t) {
        return std::any_of(t.begin(), t.end(), [&](std::int32_t e) { return g.is_l_index(e); });
    };
    std::vector<std::int32_t> targets;
    for (std::size_t j = g.l_rank(); j < g.E.rank(); ++j)
        targets.push_back(static_cast<std::int32_t>(j));
    auto rank_d = [&](std::size_t arity) {
        std::vector<std::vector<Scalar>> images;
        for (const auto& b : skew_basis(g.E, arity, g.E, targets, has_l))
            images.push_back(skew_coordinates(g.d(GradedElement(b)).part(arity + 1, g.E), has_l));
        return rank_of(f, images);
    };
    const std::size_t dim = skew_basis(g.E, k + 1, g.E, targets, has_l).size();
    std::size_t out = dim - rank_d(k + 1);
    if (k > 0)
        out -= rank_d(k);
    return out;
}

} // namespace pseudocohom
