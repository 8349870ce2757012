#include "pseudocohom/polymap.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pseudocohom/error.hpp"
#include "pseudocohom/linalg.hpp"

namespace pseudocohom {

std::string CheckReport::summary(std::size_t max_lines) const
{
    if (findings.empty())
        return "all identities hold";
    std::ostringstream os;
    os << findings.size() << " violation" << (findings.size() == 1 ? "" : "s");
    for (std::size_t i = 0; i < findings.size() && i < max_lines; ++i) {
        const Finding& f = findings[i];
        os << "\n  " << f.check << " at (";
        for (std::size_t k = 0; k < f.locator.size(); ++k)
            os << (k ? ", " : "") << f.locator[k];
        os << "): " << f.difference;
    }
    if (findings.size() > max_lines)
        os << "\n  ...";
    return os.str();
}

PolyMap::PolyMap(std::vector<FreeModule> sources, FreeModule target)
    : sources_(std::move(sources)), target_(std::move(target))
{
    for (const auto& s : sources_)
        if (!(s.hopf() == target_.hopf()))
            throw Error("polylinear map between modules over different Hopf algebras");
}

PolyMap PolyMap::uniform(const FreeModule& source, std::size_t arity, FreeModule target)
{
    return PolyMap(std::vector<FreeModule>(arity, source), std::move(target));
}

TensorElement PolyMap::value(const Tuple& t) const
{
    auto it = table_.find(t);
    if (it != table_.end())
        return it->second;
    return TensorElement(hopf(), arity());
}

void PolyMap::set(const Tuple& t, TensorElement v)
{
    if (t.size() != arity())
        throw Error("tuple length " + std::to_string(t.size()) + " for a map of arity " + std::to_string(arity()));
    for (std::size_t k = 0; k < t.size(); ++k)
        if (t[k] < 0 || static_cast<std::size_t>(t[k]) >= sources_[k].rank())
            throw Error("basis index out of range in tuple");
    if (v.is_zero()) {
        table_.erase(t);
        return;
    }
    if (v.arity() != arity())
        throw Error("value of arity " + std::to_string(v.arity()) + " stored in a map of arity " +
                    std::to_string(arity()));
    for (const auto& [key, c] : v.terms())
        if (key.index < 0 || static_cast<std::size_t>(key.index) >= target_.rank())
            throw Error("target index out of range for module " + target_.name());
    table_[t] = std::move(v);
}

void PolyMap::add(const Tuple& t, const TensorElement& v, const Scalar& c)
{
    if (v.is_zero() || c.is_zero())
        return;
    TensorElement cur = value(t);
    cur.add_scaled(v, c);
    set(t, std::move(cur));
}

bool PolyMap::same_shape(const PolyMap& o) const
{
    return sources_ == o.sources_ && target_ == o.target_;
}

void PolyMap::require_shape(const PolyMap& o) const
{
    if (!same_shape(o))
        throw Error("polylinear maps of different shapes");
}

PolyMap& PolyMap::operator+=(const PolyMap& o)
{
    require_shape(o);
    for (const auto& [t, v] : o.table_)
        add(t, v);
    return *this;
}

PolyMap& PolyMap::operator-=(const PolyMap& o)
{
    require_shape(o);
    for (const auto& [t, v] : o.table_)
        add(t, v, -field().one());
    return *this;
}

PolyMap operator*(const Scalar& c, PolyMap a)
{
    if (c.is_zero()) {
        a.table_.clear();
        return a;
    }
    for (auto& [t, v] : a.table_)
        v = c * v;
    return a;
}

PolyMap PolyMap::operator-() const
{
    return (-field().one()) * *this;
}

bool PolyMap::operator==(const PolyMap& o) const
{
    return same_shape(o) && table_ == o.table_;
}

void for_each_tuple(const std::vector<std::size_t>& ranks, const std::function<void(const Tuple&)>& fn)
{
    for (auto r : ranks)
        if (r == 0)
            return;
    Tuple t(ranks.size(), 0);
    while (true) {
        fn(t);
        std::size_t k = ranks.size();
        while (k > 0) {
            --k;
            if (static_cast<std::size_t>(++t[k]) < ranks[k])
                break;
            t[k] = 0;
            if (k == 0)
                return;
        }
        if (ranks.empty())
            return;
    }
}

std::vector<Tuple> PolyMap::tuples() const
{
    std::vector<std::size_t> ranks;
    for (const auto& s : sources_)
        ranks.push_back(s.rank());
    std::vector<Tuple> out;
    for_each_tuple(ranks, [&](const Tuple& t) { out.push_back(t); });
    return out;
}

std::vector<std::string> PolyMap::locator(const Tuple& t) const
{
    std::vector<std::string> out;
    for (std::size_t k = 0; k < t.size(); ++k)
        out.push_back(sources_[k].label(t[k]));
    return out;
}

// ---------------------------------------------------------------------------

namespace {

using Expansion = std::vector<std::pair<Legs, Scalar>>;

// F · Δ^{(a-1)}(g) for F a pure tensor of a legs.
Expansion leg_product(const HopfAlgebra& h, const Legs& F, const Monomial& g)
{
    Expansion out;
    for (auto& [dl, dc] : h.coproduct(g, F.size())) {
        Legs l(F.size());
        for (std::size_t k = 0; k < F.size(); ++k)
            l[k] = h.multiply(F[k], dl[k]);
        out.emplace_back(std::move(l), dc);
    }
    return out;
}

} // namespace

TensorElement evaluate(const PolyMap& P, const std::vector<TensorElement>& args)
{
    const std::size_t n = P.arity();
    if (args.size() != n)
        throw Error("evaluate: " + std::to_string(args.size()) + " arguments for a map of arity " + std::to_string(n));
    const HopfAlgebra& h = P.hopf();
    std::size_t total = 0;
    for (const auto& a : args) {
        if (a.arity() == 0)
            throw Error("evaluate: argument without legs");
        total += a.arity();
    }
    TensorElement out(h, total);
    for (const auto& a : args)
        if (a.is_zero())
            return out;

    std::vector<std::vector<std::pair<const TensorKey*, const Scalar*>>> terms(n);
    for (std::size_t k = 0; k < n; ++k)
        for (const auto& [key, c] : args[k].terms()) {
            if (key.index < 0 || static_cast<std::size_t>(key.index) >= P.source(k).rank())
                throw Error("evaluate: argument index out of range for module " + P.source(k).name());
            terms[k].emplace_back(&key, &c);
        }

    std::vector<std::size_t> choice(n, 0);
    Tuple t(n);
    while (true) {
        Scalar coeff = h.field().one();
        for (std::size_t k = 0; k < n; ++k) {
            t[k] = terms[k][choice[k]].first->index;
            coeff *= *terms[k][choice[k]].second;
        }
        auto it = P.table().find(t);
        if (it != P.table().end()) {
            for (const auto& [gkey, gc] : it->second.terms()) {
                // cartesian product of the per-argument leg expansions
                Expansion acc{{Legs{}, coeff * gc}};
                for (std::size_t k = 0; k < n; ++k) {
                    const Expansion part = leg_product(h, terms[k][choice[k]].first->legs, gkey.legs[k]);
                    Expansion next;
                    next.reserve(acc.size() * part.size());
                    for (const auto& [al, ac] : acc)
                        for (const auto& [pl, pc] : part) {
                            Legs l = al;
                            l.insert(l.end(), pl.begin(), pl.end());
                            next.emplace_back(std::move(l), ac * pc);
                        }
                    acc = std::move(next);
                }
                for (auto& [l, c] : acc)
                    out.add(l, gkey.index, c);
            }
        }
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++choice[k] < terms[k].size())
                break;
            choice[k] = 0;
            if (k == 0)
                return out;
        }
        if (n == 0)
            return out;
    }
}

TensorElement evaluate_ordered(const PolyMap& P, const std::vector<TensorElement>& args, const std::vector<int>& order)
{
    TensorElement raw = evaluate(P, args);
    return permute_legs(LegPermutation::from_order(order), raw);
}

TensorElement skew_image(const TensorElement& value, const LegPermutation& pi)
{
    TensorElement out = permute_legs(pi, value);
    return pi.sign() < 0 ? -out : out;
}

PolyMap skew_complete(const PolyMap& lower)
{
    PolyMap out(lower.sources(), lower.target());
    for (std::size_t k = 1; k < lower.arity(); ++k)
        if (!(lower.source(k) == lower.source(0)))
            throw Error("skew completion needs equal source modules");
    for (const Tuple& t : lower.tuples()) {
        // t = π·s with s sorted: the entry at position k of s came from position idx[k] of t
        std::vector<int> idx(t.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return t[a] < t[b]; });
        Tuple s(t.size());
        for (std::size_t k = 0; k < t.size(); ++k)
            s[k] = t[idx[k]];
        const TensorElement v = lower.value(s);
        if (v.is_zero())
            continue;
        out.set(t, skew_image(v, LegPermutation(idx)));
    }
    return out;
}

CheckReport check_skew(const PolyMap& B, const std::string& check)
{
    CheckReport report;
    for (const Tuple& t : B.tuples()) {
        for (std::size_t k = 0; k + 1 < t.size(); ++k) {
            if (!(B.source(k) == B.source(k + 1)))
                continue;
            Tuple swapped = t;
            std::swap(swapped[k], swapped[k + 1]);
            if (t < swapped)
                continue;
            const TensorElement lhs = B.value(t);
            const TensorElement rhs = skew_image(B.value(swapped), LegPermutation::transposition(t.size(), k, k + 1));
            if (!(lhs == rhs))
                report.findings.push_back({check, B.locator(t), (lhs - rhs).render(B.target())});
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

ModuleMap::ModuleMap(FreeModule source, FreeModule target, std::vector<TensorElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
{
    if (images_.size() != source_.rank())
        throw Error("module map from " + source_.name() + " needs " + std::to_string(source_.rank()) + " images");
    if (!(source_.hopf() == target_.hopf()))
        throw Error("module map between modules over different Hopf algebras");
    for (auto& im : images_) {
        if (im.arity() == 0 && im.is_zero())
            im = TensorElement(target_.hopf(), 1);
        if (im.arity() != 1)
            throw Error("module map images must be module elements");
        for (const auto& [key, c] : im.terms())
            if (key.index < 0 || static_cast<std::size_t>(key.index) >= target_.rank())
                throw Error("module map image outside " + target_.name());
    }
}

ModuleMap ModuleMap::identity(const FreeModule& m)
{
    std::vector<TensorElement> images;
    for (std::size_t j = 0; j < m.rank(); ++j)
        images.push_back(TensorElement::basis(m.hopf(), 1, static_cast<std::int32_t>(j)));
    return ModuleMap(m, m, std::move(images));
}

ModuleMap ModuleMap::zero(const FreeModule& source, const FreeModule& target)
{
    return ModuleMap(source, target, std::vector<TensorElement>(source.rank(), TensorElement(target.hopf(), 1)));
}

ModuleMap ModuleMap::from_matrix(const FreeModule& source, const FreeModule& target,
                                 const std::vector<std::vector<HopfElement>>& entries)
{
    if (entries.size() != target.rank())
        throw Error("matrix needs one row per basis element of " + target.name());
    std::vector<TensorElement> images(source.rank(), TensorElement(target.hopf(), 1));
    for (std::size_t l = 0; l < target.rank(); ++l) {
        if (entries[l].size() != source.rank())
            throw Error("matrix needs one column per basis element of " + source.name());
        for (std::size_t j = 0; j < source.rank(); ++j)
            images[j] += TensorElement::module_element(entries[l][j], static_cast<std::int32_t>(l));
    }
    return ModuleMap(source, target, std::move(images));
}

HopfElement ModuleMap::entry(std::size_t l, std::size_t j) const
{
    HopfElement out(target_.hopf());
    for (const auto& [key, c] : images_.at(j).terms())
        if (static_cast<std::size_t>(key.index) == l)
            out.add(key.legs[0], c);
    return out;
}

void ModuleMap::set_image(std::size_t j, TensorElement v)
{
    if (v.arity() != 1)
        throw Error("module map images must be module elements");
    images_.at(j) = std::move(v);
}

TensorElement ModuleMap::apply(const TensorElement& t) const
{
    const HopfAlgebra& h = target_.hopf();
    TensorElement out(h, t.arity());
    for (const auto& [key, c] : t.terms()) {
        if (key.index < 0 || static_cast<std::size_t>(key.index) >= source_.rank())
            throw Error("module map applied outside its source " + source_.name());
        for (const auto& [gk, gc] : images_[key.index].terms())
            for (auto& [l, lc] : leg_product(h, key.legs, gk.legs[0]))
                out.add(l, gk.index, c * gc * lc);
    }
    return out;
}

PolyMap ModuleMap::as_polymap() const
{
    PolyMap p({source_}, target_);
    for (std::size_t j = 0; j < images_.size(); ++j)
        p.set(Tuple{static_cast<std::int32_t>(j)}, images_[j]);
    return p;
}

ModuleMap ModuleMap::compose(const ModuleMap& inner) const
{
    if (!(inner.target_ == source_))
        throw Error("cannot compose " + inner.target_.name() + " into " + source_.name());
    std::vector<TensorElement> images;
    for (const auto& im : inner.images_)
        images.push_back(apply(im));
    return ModuleMap(inner.source_, target_, std::move(images));
}

namespace {

HopfElement determinant(const std::vector<std::vector<HopfElement>>& m, const HopfAlgebra& h)
{
    const std::size_t n = m.size();
    if (n == 0)
        return HopfElement::one(h);
    if (n == 1)
        return m[0][0];
    HopfElement det(h);
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero())
            continue;
        std::vector<std::vector<HopfElement>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<HopfElement> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        HopfElement term = mul(m[0][c], determinant(minor, h));
        if (c % 2)
            det -= term;
        else
            det += term;
    }
    return det;
}

} // namespace

std::optional<ModuleMap> ModuleMap::inverse() const
{
    const HopfAlgebra& h = source_.hopf();
    const Field f = h.field();
    if (source_.rank() != target_.rank())
        return std::nullopt;
    const std::size_t r = source_.rank();
    std::optional<ModuleMap> candidate;

    if (h.finite_dimensional()) {
        // k-linear matrix of Θ on the k-basis {g·e_j}
        const auto hb = h.basis();
        const std::size_t d = hb.size();
        Matrix big(f, r * d, r * d);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t gi = 0; gi < d; ++gi)
                for (const auto& [key, c] : images_[j].terms()) {
                    const Monomial prod = h.multiply(hb[gi], key.legs[0]);
                    const auto pos = std::find(hb.begin(), hb.end(), prod) - hb.begin();
                    big.at(key.index * d + pos, j * d + gi) += c;
                }
        auto inv = big.inverse();
        if (!inv)
            return std::nullopt;
        const auto unit_pos = std::find(hb.begin(), hb.end(), h.unit()) - hb.begin();
        std::vector<TensorElement> images(r, TensorElement(h, 1));
        for (std::size_t l = 0; l < r; ++l)
            for (std::size_t row = 0; row < r * d; ++row) {
                const Scalar& c = inv->at(row, l * d + unit_pos);
                if (!c.is_zero())
                    images[l].add(Legs{hb[row % d]}, static_cast<std::int32_t>(row / d), c);
            }
        candidate = ModuleMap(target_, source_, std::move(images));
    } else {
        // commutative H: invertible iff det is a unit, i.e. a nonzero constant
        std::vector<std::vector<HopfElement>> m(r, std::vector<HopfElement>(r, HopfElement(h)));
        for (std::size_t l = 0; l < r; ++l)
            for (std::size_t j = 0; j < r; ++j)
                m[l][j] = entry(l, j);
        const HopfElement det = determinant(m, h);
        if (det.terms().size() != 1 || !h.is_unit(det.terms().begin()->first))
            return std::nullopt;
        const Scalar inv_det = det.terms().begin()->second.inverse();
        std::vector<std::vector<HopfElement>> adj(r, std::vector<HopfElement>(r, HopfElement(h)));
        for (std::size_t l = 0; l < r; ++l)
            for (std::size_t j = 0; j < r; ++j) {
                std::vector<std::vector<HopfElement>> minor;
                for (std::size_t a = 0; a < r; ++a) {
                    if (a == l)
                        continue;
                    std::vector<HopfElement> row;
                    for (std::size_t b = 0; b < r; ++b)
                        if (b != j)
                            row.push_back(m[a][b]);
                    minor.push_back(std::move(row));
                }
                HopfElement cof = determinant(minor, h);
                if ((l + j) % 2)
                    cof = -cof;
                adj[j][l] = inv_det * cof;
            }
        candidate = ModuleMap::from_matrix(target_, source_, adj);
    }
    if (!(candidate->compose(*this) == identity(source_)) || !(compose(*candidate) == identity(target_)))
        return std::nullopt;
    return candidate;
}

ModuleMap& ModuleMap::operator+=(const ModuleMap& o)
{
    if (!(source_ == o.source_) || !(target_ == o.target_))
        throw Error("adding module maps of different shapes");
    for (std::size_t j = 0; j < images_.size(); ++j)
        images_[j] += o.images_[j];
    return *this;
}

ModuleMap& ModuleMap::operator-=(const ModuleMap& o)
{
    if (!(source_ == o.source_) || !(target_ == o.target_))
        throw Error("subtracting module maps of different shapes");
    for (std::size_t j = 0; j < images_.size(); ++j)
        images_[j] -= o.images_[j];
    return *this;
}

ModuleMap operator*(const Scalar& c, ModuleMap a)
{
    for (auto& im : a.images_)
        im = c * im;
    return a;
}

bool ModuleMap::operator==(const ModuleMap& o) const
{
    return source_ == o.source_ && target_ == o.target_ && images_ == o.images_;
}

bool ModuleMap::is_zero() const
{
    return std::all_of(images_.begin(), images_.end(), [](const TensorElement& t) { return t.is_zero(); });
}

std::string ModuleMap::render() const
{
    std::string out;
    for (std::size_t j = 0; j < images_.size(); ++j)
        out += (j ? "; " : "") + source_.label(j) + " ↦ " + images_[j].render(target_);
    return out;
}

} // namespace pseudocohom
