#include "pseudocohom/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pseudocohom/cohomology.hpp"
#include "pseudocohom/error.hpp"

namespace pseudocohom {

namespace {

// Row-echelon rank over the field, written out here so the oracle does not
// lean on the library's linear algebra.
std::size_t dense_rank(Field f, std::vector<std::vector<Scalar>> rows)
{
    if (rows.empty())
        return 0;
    const std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c].is_zero())
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[rank]);
        const Scalar inv = f.one() / rows[rank][c];
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c].is_zero())
                continue;
            const Scalar factor = rows[r][c] * inv;
            for (std::size_t k = c; k < cols; ++k)
                rows[r][k] -= factor * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

int permutation_sign(const std::vector<std::size_t>& p)
{
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            inv += p[i] > p[j];
    return inv % 2 ? -1 : 1;
}

std::vector<std::vector<std::size_t>> all_tuples(std::size_t n, std::size_t dim)
{
    std::vector<std::vector<std::size_t>> out{{}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& t : out)
            for (std::size_t d = 0; d < dim; ++d) {
                auto u = t;
                u.push_back(d);
                next.push_back(std::move(u));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t dim)
{
    std::vector<std::vector<std::size_t>> out;
    for (auto& t : all_tuples(n, dim)) {
        bool inc = true;
        for (std::size_t i = 1; i < t.size(); ++i)
            inc = inc && t[i - 1] < t[i];
        if (inc)
            out.push_back(t);
    }
    return out;
}

Scalar signed_one(Field f, int s)
{
    return s < 0 ? -f.one() : f.one();
}

// i_P Q on dense arrays.
ClassicalCochain insertion(const ClassicalCochain& P, const ClassicalCochain& Q, Field f)
{
    const std::size_t p = P.degree, q = Q.degree, N = p + q - 1, dim = P.in_dim;
    ClassicalCochain out(f, N, dim, dim);
    std::vector<std::vector<std::size_t>> subsets;
    for (auto& s : increasing_tuples(p, N))
        subsets.push_back(s);
    for (const auto& t : all_tuples(N, dim)) {
        for (const auto& S : subsets) {
            std::size_t shift = 0;
            for (std::size_t i = 0; i < S.size(); ++i)
                shift += S[i] - i;
            const Scalar sign = signed_one(f, shift % 2 ? -1 : 1);
            std::vector<std::size_t> inner, rest;
            std::vector<bool> chosen(N, false);
            for (auto s : S) {
                inner.push_back(t[s]);
                chosen[s] = true;
            }
            for (std::size_t i = 0; i < N; ++i)
                if (!chosen[i])
                    rest.push_back(t[i]);
            for (std::size_t m = 0; m < dim; ++m) {
                const Scalar pm = P.at(inner, m);
                if (pm.is_zero())
                    continue;
                std::vector<std::size_t> args{m};
                args.insert(args.end(), rest.begin(), rest.end());
                for (std::size_t k = 0; k < dim; ++k)
                    out.at(t, k) += sign * pm * Q.at(args, k);
            }
        }
    }
    return out;
}

void require_trivial(const HopfAlgebra& h)
{
    if (h.kind() != HopfKind::trivial)
        throw Error("classical comparison needs H = k (trivial Hopf algebra)");
}

} // namespace

ClassicalLieAlgebra::ClassicalLieAlgebra(Field f, std::size_t d) : field(f), dim(d), c(d * d * d, f.zero()) {}

bool ClassicalLieAlgebra::antisymmetric() const
{
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (!(at(i, j, k) == -at(j, i, k)))
                    return false;
    return true;
}

std::vector<std::array<std::size_t, 3>> ClassicalLieAlgebra::jacobi_failures() const
{
    std::vector<std::array<std::size_t, 3>> out;
    for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y)
            for (std::size_t z = 0; z < dim; ++z) {
                bool ok = true;
                for (std::size_t k = 0; k < dim && ok; ++k) {
                    Scalar s = field.zero();
                    for (std::size_t m = 0; m < dim; ++m) {
                        s += at(x, y, m) * at(m, z, k);
                        s -= at(y, z, m) * at(x, m, k);
                        s += at(x, z, m) * at(y, m, k);
                    }
                    ok = s.is_zero();
                }
                if (!ok)
                    out.push_back({x, y, z});
            }
    return out;
}

ClassicalRep ClassicalRep::adjoint(const ClassicalLieAlgebra& g)
{
    return {g.dim, g.c};
}

ClassicalRep ClassicalRep::trivial(const ClassicalLieAlgebra& g, std::size_t dim)
{
    return {dim, std::vector<Scalar>(g.dim * dim * dim, g.field.zero())};
}

ClassicalCochain::ClassicalCochain(Field f, std::size_t n, std::size_t in, std::size_t out)
    : degree(n), in_dim(in), out_dim(out)
{
    std::size_t count = 1;
    for (std::size_t i = 0; i < n; ++i)
        count *= in;
    v.assign(count * out, f.zero());
}

std::size_t ClassicalCochain::code(const std::vector<std::size_t>& t) const
{
    std::size_t c = 0;
    for (auto i : t)
        c = c * in_dim + i;
    return c;
}

ClassicalCochain ce_coboundary(const ClassicalCochain& theta, const ClassicalLieAlgebra& g, const ClassicalRep& rep,
                               CeNormalization norm)
{
    const Field f = g.field;
    const std::size_t n = theta.degree;
    ClassicalCochain out(f, n + 1, g.dim, rep.dim);
    const bool negate = norm == CeNormalization::library && n >= 1;
    for (const auto& t : all_tuples(n + 1, g.dim)) {
        for (std::size_t p = 0; p <= n; ++p) {
            std::vector<std::size_t> rest;
            for (std::size_t i = 0; i <= n; ++i)
                if (i != p)
                    rest.push_back(t[i]);
            const Scalar sign = signed_one(f, (p % 2 ? -1 : 1) * (negate ? -1 : 1));
            for (std::size_t j = 0; j < rep.dim; ++j) {
                const Scalar th = theta.at(rest, j);
                if (th.is_zero())
                    continue;
                for (std::size_t k = 0; k < rep.dim; ++k)
                    out.at(t, k) += sign * rep.at(t[p], j, k) * th;
            }
        }
        for (std::size_t p = 0; p <= n; ++p)
            for (std::size_t q = p + 1; q <= n; ++q) {
                const Scalar sign = signed_one(f, ((p + q) % 2 ? -1 : 1) * (negate ? -1 : 1));
                for (std::size_t m = 0; m < g.dim; ++m) {
                    const Scalar cm = g.at(t[p], t[q], m);
                    if (cm.is_zero())
                        continue;
                    std::vector<std::size_t> args{m};
                    for (std::size_t i = 0; i <= n; ++i)
                        if (i != p && i != q)
                            args.push_back(t[i]);
                    for (std::size_t k = 0; k < rep.dim; ++k)
                        out.at(t, k) += sign * cm * theta.at(args, k);
                }
            }
    }
    return out;
}

ClassicalCochain classical_nr_bracket(const ClassicalCochain& P, const ClassicalCochain& Q)
{
    if (P.in_dim != P.out_dim || Q.in_dim != P.in_dim || Q.out_dim != P.in_dim || P.degree == 0 || Q.degree == 0)
        throw Error("classical NR bracket needs maps V^n → V with n ≥ 1");
    const Field f = P.v.empty() ? Q.v.front().field() : P.v.front().field();
    ClassicalCochain a = insertion(P, Q, f);
    const ClassicalCochain b = insertion(Q, P, f);
    const bool odd = ((P.degree - 1) * (Q.degree - 1)) % 2;
    for (std::size_t i = 0; i < a.v.size(); ++i)
        a.v[i] = odd ? a.v[i] + b.v[i] : a.v[i] - b.v[i];
    return a;
}

std::vector<ClassicalCochain> alternating_basis(Field f, std::size_t n, std::size_t in_dim, std::size_t out_dim)
{
    std::vector<ClassicalCochain> out;
    for (const auto& I : increasing_tuples(n, in_dim))
        for (std::size_t k = 0; k < out_dim; ++k) {
            ClassicalCochain c(f, n, in_dim, out_dim);
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<std::size_t> t;
                for (auto i : perm)
                    t.push_back(I[i]);
                c.at(t, k) = signed_one(f, permutation_sign(perm));
            } while (std::next_permutation(perm.begin(), perm.end()));
            out.push_back(std::move(c));
        }
    return out;
}

std::size_t ce_cohomology_dim(const ClassicalLieAlgebra& g, const ClassicalRep& rep, std::size_t n)
{
    auto rank_delta = [&](std::size_t k) {
        std::vector<std::vector<Scalar>> rows;
        const auto inc = increasing_tuples(k + 1, g.dim);
        for (const auto& b : alternating_basis(g.field, k, g.dim, rep.dim)) {
            const ClassicalCochain d = ce_coboundary(b, g, rep, CeNormalization::textbook);
            std::vector<Scalar> row;
            for (const auto& t : inc)
                for (std::size_t j = 0; j < rep.dim; ++j)
                    row.push_back(d.at(t, j));
            rows.push_back(std::move(row));
        }
        return dense_rank(g.field, std::move(rows));
    };
    const std::size_t dim_c = alternating_basis(g.field, n, g.dim, rep.dim).size();
    std::size_t out = dim_c - rank_delta(n);
    if (n > 0)
        out -= rank_delta(n - 1);
    return out;
}

ClassicalInducibility classical_inducibility(const ClassicalLieAlgebra& E, std::size_t l_dim,
                                             const std::vector<int>& beta, const std::vector<int>& alpha)
{
    if (E.field.is_rational())
        throw Error("classical inducibility enumerates matrices over F_p");
    const int p = static_cast<int>(E.field.characteristic());
    const std::size_t n = E.dim, m_dim = n - l_dim;
    std::size_t total = 1;
    const std::size_t guard = 1953125; // 5^9
    for (std::size_t i = 0; i < n * n; ++i) {
        total *= static_cast<std::size_t>(p);
        if (total > guard)
            throw Error("classical inducibility is limited to 5^9 candidate matrices");
    }
    if (beta.size() != m_dim * m_dim || alpha.size() != l_dim * l_dim)
        throw Error("classical inducibility: pair has the wrong size");
    auto mod = [p](long v) { return static_cast<int>(((v % p) + p) % p); };
    std::vector<int> c(n * n * n);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = mod(E.c[i].residue());
    auto C = [&](std::size_t i, std::size_t j, std::size_t k) { return c[(i * n + j) * n + k]; };
    auto det_nonzero = [&](std::vector<int> a) {
        for (std::size_t col = 0, row = 0; col < n; ++col, ++row) {
            std::size_t piv = row;
            while (piv < n && a[piv * n + col] == 0)
                ++piv;
            if (piv == n)
                return false;
            for (std::size_t k = 0; k < n; ++k)
                std::swap(a[piv * n + k], a[row * n + k]);
            int inv = 1;
            while ((inv * a[row * n + col]) % p != 1)
                ++inv;
            for (std::size_t r = row + 1; r < n; ++r) {
                const int factor = (a[r * n + col] * inv) % p;
                for (std::size_t k = 0; k < n; ++k)
                    a[r * n + k] = mod(a[r * n + k] - factor * a[row * n + k]);
            }
        }
        return true;
    };

    ClassicalInducibility out;
    std::vector<int> g(n * n);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        for (std::size_t i = n * n; i-- > 0;) {
            g[i] = static_cast<int>(rest % p);
            rest /= p;
        }
        ++out.candidates;
        bool ok = true;
        for (std::size_t col = l_dim; col < n && ok; ++col)
            for (std::size_t r = 0; r < n && ok; ++r)
                ok = r < l_dim ? g[r * n + col] == 0
                               : g[r * n + col] == mod(beta[(r - l_dim) * m_dim + (col - l_dim)]);
        for (std::size_t col = 0; col < l_dim && ok; ++col)
            for (std::size_t r = 0; r < l_dim && ok; ++r)
                ok = g[r * n + col] == mod(alpha[r * l_dim + col]);
        if (!ok)
            continue;
        // γ[e_i, e_j] = [γe_i, γe_j]
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                for (std::size_t k = 0; k < n && ok; ++k) {
                    long lhs = 0, rhs = 0;
                    for (std::size_t m = 0; m < n; ++m)
                        lhs += static_cast<long>(C(i, j, m)) * g[k * n + m];
                    for (std::size_t a = 0; a < n; ++a)
                        for (std::size_t b = 0; b < n; ++b)
                            rhs += static_cast<long>(g[a * n + i]) * g[b * n + j] * C(a, b, k);
                    ok = mod(lhs) == mod(rhs);
                }
        if (!ok || !det_nonzero(g))
            continue;
        ++out.lifts;
        if (!out.inducible) {
            out.inducible = true;
            out.gamma = g;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

ClassicalLieAlgebra classical_from_pseudo(const LiePseudoalgebra& a)
{
    require_trivial(a.hopf());
    const std::size_t n = a.module.rank();
    ClassicalLieAlgebra g(a.field(), n);
    for (const auto& [t, v] : a.bracket.table())
        for (const auto& [key, coeff] : v.terms())
            g.at(t[0], t[1], key.index) += coeff;
    return g;
}

ClassicalRep classical_rep_from_pseudo(const Representation& r)
{
    require_trivial(r.module.hopf());
    ClassicalRep rep;
    rep.dim = r.module.rank();
    rep.a.assign(r.algebra.module.rank() * rep.dim * rep.dim, r.module.field().zero());
    for (const auto& [t, v] : r.action.table())
        for (const auto& [key, coeff] : v.terms())
            rep.a[(t[0] * rep.dim + t[1]) * rep.dim + key.index] += coeff;
    return rep;
}

LiePseudoalgebra pseudo_from_classical(const ClassicalLieAlgebra& g, const std::vector<std::string>& labels)
{
    const HopfAlgebra h = HopfAlgebra::trivial(g.field);
    const FreeModule m("g", labels, h);
    ClassicalCochain c(g.field, 2, g.dim, g.dim);
    c.v = g.c;
    return LiePseudoalgebra("g", m, polymap_from_classical(c, m, m));
}

ClassicalCochain classical_from_polymap(const PolyMap& p)
{
    require_trivial(p.hopf());
    ClassicalCochain c(p.field(), p.arity(), p.arity() ? p.source(0).rank() : 0, p.target().rank());
    for (const auto& [t, v] : p.table()) {
        std::vector<std::size_t> idx(t.begin(), t.end());
        for (const auto& [key, coeff] : v.terms())
            c.at(idx, key.index) += coeff;
    }
    return c;
}

PolyMap polymap_from_classical(const ClassicalCochain& c, const FreeModule& source, const FreeModule& target)
{
    require_trivial(target.hopf());
    PolyMap out = PolyMap::uniform(source, c.degree, target);
    const Legs units(c.degree, target.hopf().unit());
    for (const auto& t : all_tuples(c.degree, c.in_dim)) {
        TensorElement v(target.hopf(), c.degree);
        for (std::size_t k = 0; k < c.out_dim; ++k)
            v.add(units, static_cast<std::int32_t>(k), c.at(t, k));
        out.set(Tuple(t.begin(), t.end()), std::move(v));
    }
    return out;
}

CheckReport compare_with_pseudo(const Representation& r, std::size_t max_degree)
{
    require_trivial(r.module.hopf());
    const Field f = r.module.field();
    const ClassicalLieAlgebra g = classical_from_pseudo(r.algebra);
    const ClassicalRep rep = classical_rep_from_pseudo(r);
    const FreeModule& L = r.algebra.module;
    const FreeModule& M = r.module;
    CheckReport report;
    for (std::size_t n = 0; n <= max_degree; ++n) {
        const auto basis = alternating_basis(f, n, L.rank(), M.rank());
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Cochain c = zero_cochain(r, n);
            if (n == 0)
                c.constant = basis[i].v;
            else
                c = make_cochain(r, polymap_from_classical(basis[i], L, M));
            const ClassicalCochain pseudo = classical_from_polymap(coboundary(c, r).map);
            const ClassicalCochain classical = ce_coboundary(basis[i], g, rep);
            if (!(pseudo == classical))
                report.findings.push_back(
                    {"delta", {"degree " + std::to_string(n), "basis " + std::to_string(i)}, "δ_pseudo ≠ δ_CE"});
        }
    }
    for (std::size_t p = 1; p <= max_degree; ++p)
        for (std::size_t q = 1; p + q - 1 <= max_degree; ++q) {
            const auto A = alternating_basis(f, p, L.rank(), L.rank());
            const auto B = alternating_basis(f, q, L.rank(), L.rank());
            for (std::size_t i = 0; i < A.size(); ++i)
                for (std::size_t j = 0; j < B.size(); ++j) {
                    const ClassicalCochain classical = classical_nr_bracket(A[i], B[j]);
                    const ClassicalCochain pseudo = classical_from_polymap(
                        nr_bracket(polymap_from_classical(A[i], L, L), polymap_from_classical(B[j], L, L)));
                    if (!(pseudo == classical))
                        report.findings.push_back({"nr",
                                                   {"C^" + std::to_string(p) + " basis " + std::to_string(i),
                                                    "C^" + std::to_string(q) + " basis " + std::to_string(j)},
                                                   "⟦·,·⟧_pseudo ≠ classical NR"});
                }
        }
    return report;
}

CheckReport compare_jacobi(const LiePseudoalgebra& a)
{
    const ClassicalLieAlgebra g = classical_from_pseudo(a);
    std::set<std::vector<std::string>> classical, pseudo;
    for (const auto& t : g.jacobi_failures())
        classical.insert({a.module.label(t[0]), a.module.label(t[1]), a.module.label(t[2])});
    for (const auto& f : check_jacobi(a).findings)
        pseudo.insert(f.locator);
    CheckReport report;
    for (const auto& l : classical)
        if (!pseudo.count(l))
            report.findings.push_back({"jacobi-oracle", l, "classical Jacobi fails, pseudo check passes"});
    for (const auto& l : pseudo)
        if (!classical.count(l))
            report.findings.push_back({"jacobi-oracle", l, "pseudo check fails, classical Jacobi holds"});
    return report;
}

} // namespace pseudocohom
