#include "pseudocohom/hopf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "pseudocohom/error.hpp"

namespace pseudocohom {

struct HopfAlgebra::Impl {
    HopfKind kind = HopfKind::trivial;
    Field field;
    std::vector<std::string> names;
    std::vector<std::vector<std::int32_t>> table;
    std::vector<std::int32_t> inverse;
    std::int32_t identity = 0;

    // Δ^{(n-1)} is requested for the same few labels over and over.
    mutable std::mutex cache_mutex;
    mutable std::map<std::pair<Monomial, std::size_t>, std::vector<std::pair<Legs, Scalar>>> coproduct_cache;
};

namespace {

const std::vector<std::string> kNoNames;

// All ways to write n as an ordered sum of `parts` nonnegative integers.
void compositions(int n, std::size_t parts, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (parts == 1) {
        cur.push_back(n);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int first = n; first >= 0; --first) {
        cur.push_back(first);
        compositions(n - first, parts - 1, cur, out);
        cur.pop_back();
    }
}

mpz_class factorial(int n)
{
    mpz_class r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

} // namespace

HopfAlgebra HopfAlgebra::trivial(Field f)
{
    auto impl = std::make_shared<Impl>();
    impl->kind = HopfKind::trivial;
    impl->field = f;
    return HopfAlgebra(impl);
}

HopfAlgebra HopfAlgebra::group(Field f, std::vector<std::string> labels, std::vector<std::vector<std::int32_t>> table)
{
    const auto n = static_cast<std::int32_t>(labels.size());
    if (n == 0)
        throw Error("group Hopf algebra needs at least one element");
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i] == labels[j])
                throw Error("duplicate group element label '" + labels[i] + "'");
    if (table.size() != labels.size())
        throw Error("group multiplication table must have " + std::to_string(n) + " rows");
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i].size() != labels.size())
            throw Error("row " + labels[i] + " of the group table has the wrong length");
        for (auto v : table[i])
            if (v < 0 || v >= n)
                throw Error("group table entry out of range in row " + labels[i]);
    }
    for (std::int32_t a = 0; a < n; ++a)
        for (std::int32_t b = 0; b < n; ++b)
            for (std::int32_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw Error("group table is not associative at (" + labels[a] + ", " + labels[b] + ", " + labels[c] + ")");
    std::int32_t identity = -1;
    for (std::int32_t e = 0; e < n && identity < 0; ++e) {
        bool ok = true;
        for (std::int32_t a = 0; a < n && ok; ++a)
            ok = table[e][a] == a && table[a][e] == a;
        if (ok)
            identity = e;
    }
    if (identity < 0)
        throw Error("group table has no identity element");
    std::vector<std::int32_t> inverse(n, -1);
    for (std::int32_t a = 0; a < n; ++a) {
        for (std::int32_t b = 0; b < n; ++b)
            if (table[a][b] == identity && table[b][a] == identity)
                inverse[a] = b;
        if (inverse[a] < 0)
            throw Error("group element " + labels[a] + " has no inverse");
    }
    auto impl = std::make_shared<Impl>();
    impl->kind = HopfKind::group;
    impl->field = f;
    impl->names = std::move(labels);
    impl->table = std::move(table);
    impl->inverse = std::move(inverse);
    impl->identity = identity;
    return HopfAlgebra(impl);
}

HopfAlgebra HopfAlgebra::polynomial(Field f, std::vector<std::string> generators)
{
    if (generators.empty())
        throw Error("polynomial Hopf algebra needs at least one generator");
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            if (generators[i] == generators[j])
                throw Error("duplicate generator name '" + generators[i] + "'");
    auto impl = std::make_shared<Impl>();
    impl->kind = HopfKind::polynomial;
    impl->field = f;
    impl->names = std::move(generators);
    return HopfAlgebra(impl);
}

const HopfAlgebra::Impl& HopfAlgebra::impl() const
{
    if (!impl_)
        throw Error("use of an uninitialized Hopf algebra");
    return *impl_;
}

HopfKind HopfAlgebra::kind() const { return impl().kind; }
Field HopfAlgebra::field() const { return impl().field; }
const std::vector<std::string>& HopfAlgebra::names() const { return impl_ ? impl_->names : kNoNames; }
const std::vector<std::vector<std::int32_t>>& HopfAlgebra::group_table() const { return impl().table; }
std::int32_t HopfAlgebra::group_identity() const { return impl().identity; }

std::size_t HopfAlgebra::dimension() const
{
    switch (kind()) {
    case HopfKind::trivial:
        return 1;
    case HopfKind::group:
        return impl().names.size();
    case HopfKind::polynomial:
        break;
    }
    throw Error("polynomial Hopf algebras are infinite-dimensional");
}

std::vector<Monomial> HopfAlgebra::basis() const
{
    if (kind() == HopfKind::polynomial)
        throw Error("polynomial Hopf algebras have no finite basis");
    if (kind() == HopfKind::trivial)
        return {Monomial{}};
    std::vector<Monomial> out;
    for (std::int32_t g = 0; g < static_cast<std::int32_t>(impl().names.size()); ++g)
        out.push_back(Monomial{g});
    return out;
}

std::vector<Monomial> HopfAlgebra::basis_up_to_degree(int max_degree) const
{
    if (kind() != HopfKind::polynomial)
        return basis();
    const std::size_t d = impl().names.size();
    std::vector<Monomial> out;
    for (int total = 0; total <= max_degree; ++total) {
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        compositions(total, d, cur, comps);
        for (const auto& c : comps)
            out.push_back(Monomial(c.begin(), c.end()));
    }
    return out;
}

Monomial HopfAlgebra::unit() const
{
    switch (kind()) {
    case HopfKind::trivial:
        return {};
    case HopfKind::group:
        return Monomial{impl().identity};
    case HopfKind::polynomial:
        return Monomial(impl().names.size(), 0);
    }
    return {};
}

bool HopfAlgebra::is_unit(const Monomial& m) const
{
    return m == unit();
}

int HopfAlgebra::degree(const Monomial& m) const
{
    if (kind() != HopfKind::polynomial)
        return 0;
    return std::accumulate(m.begin(), m.end(), 0);
}

Monomial HopfAlgebra::multiply(const Monomial& a, const Monomial& b) const
{
    switch (kind()) {
    case HopfKind::trivial:
        return {};
    case HopfKind::group:
        return Monomial{impl().table[a[0]][b[0]]};
    case HopfKind::polynomial: {
        Monomial r = a;
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] += b[i];
        return r;
    }
    }
    return {};
}

std::vector<std::pair<Legs, Scalar>> HopfAlgebra::coproduct(const Monomial& m, std::size_t legs) const
{
    if (legs == 0)
        throw Error("coproduct needs at least one leg");
    const Impl& im = impl();
    const Scalar one = im.field.one();
    if (im.kind != HopfKind::polynomial)
        return {{Legs(legs, m), one}};

    std::lock_guard<std::mutex> lock(im.cache_mutex);
    auto key = std::make_pair(m, legs);
    if (auto it = im.coproduct_cache.find(key); it != im.coproduct_cache.end())
        return it->second;

    // Multi-index multinomial expansion: each variable's exponent is distributed
    // independently over the legs.
    const std::size_t d = m.size();
    std::vector<std::pair<Legs, mpz_class>> acc{{Legs(legs, Monomial(d, 0)), mpz_class(1)}};
    for (std::size_t var = 0; var < d; ++var) {
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        compositions(m[var], legs, cur, comps);
        std::vector<std::pair<Legs, mpz_class>> next;
        next.reserve(acc.size() * comps.size());
        const mpz_class top = factorial(m[var]);
        for (const auto& [pt, coeff] : acc) {
            for (const auto& c : comps) {
                Legs l = pt;
                mpz_class denom = 1;
                for (std::size_t k = 0; k < legs; ++k) {
                    l[k][var] = c[k];
                    denom *= factorial(c[k]);
                }
                next.emplace_back(std::move(l), coeff * (top / denom));
            }
        }
        acc = std::move(next);
    }
    std::vector<std::pair<Legs, Scalar>> out;
    out.reserve(acc.size());
    for (auto& [l, c] : acc) {
        Scalar s(im.field, mpq_class(c));
        if (!s.is_zero())
            out.emplace_back(std::move(l), s);
    }
    im.coproduct_cache.emplace(key, out);
    return out;
}

Scalar HopfAlgebra::counit(const Monomial& m) const
{
    if (kind() == HopfKind::polynomial)
        return is_unit(m) ? field().one() : field().zero();
    return field().one();
}

std::pair<Monomial, Scalar> HopfAlgebra::antipode(const Monomial& m) const
{
    switch (kind()) {
    case HopfKind::trivial:
        return {m, field().one()};
    case HopfKind::group:
        return {Monomial{impl().inverse[m[0]]}, field().one()};
    case HopfKind::polynomial:
        return {m, degree(m) % 2 == 0 ? field().one() : -field().one()};
    }
    return {m, field().one()};
}

bool HopfAlgebra::render_before(const Monomial& a, const Monomial& b) const
{
    if (kind() == HopfKind::polynomial) {
        int da = degree(a), db = degree(b);
        if (da != db)
            return da > db;
        return a > b;
    }
    return a < b;
}

std::string HopfAlgebra::render(const Monomial& m) const
{
    switch (kind()) {
    case HopfKind::trivial:
        return "1";
    case HopfKind::group:
        return impl().names[m[0]];
    case HopfKind::polynomial: {
        std::string out;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (!out.empty())
                out += "*";
            out += impl().names[i];
            if (m[i] > 1)
                out += "^" + std::to_string(m[i]);
        }
        return out.empty() ? "1" : out;
    }
    }
    return "?";
}

bool HopfAlgebra::lookup(const std::string& ident, Monomial& out) const
{
    const auto& names = impl().names;
    auto it = std::find(names.begin(), names.end(), ident);
    if (it == names.end())
        return false;
    const auto idx = static_cast<std::int32_t>(it - names.begin());
    if (kind() == HopfKind::group) {
        out = Monomial{idx};
    } else {
        out = Monomial(names.size(), 0);
        out[idx] = 1;
    }
    return true;
}

bool HopfAlgebra::operator==(const HopfAlgebra& o) const
{
    if (impl_ == o.impl_)
        return true;
    if (!impl_ || !o.impl_)
        return false;
    return impl_->kind == o.impl_->kind && impl_->field == o.impl_->field && impl_->names == o.impl_->names &&
           impl_->table == o.impl_->table;
}

std::string HopfAlgebra::describe() const
{
    std::ostringstream os;
    switch (kind()) {
    case HopfKind::trivial:
        os << field().name();
        break;
    case HopfKind::group:
        os << field().name() << "[G], |G| = " << names().size();
        break;
    case HopfKind::polynomial:
        os << field().name() << "[";
        for (std::size_t i = 0; i < names().size(); ++i)
            os << (i ? "," : "") << names()[i];
        os << "]";
        break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

HopfElement::HopfElement(HopfAlgebra h) : hopf_(std::move(h)), sum_(hopf_.field()) {}

HopfElement::HopfElement(HopfAlgebra h, const Monomial& m, const Scalar& c) : HopfElement(std::move(h))
{
    sum_.add(m, c);
}

HopfElement HopfElement::scalar(HopfAlgebra h, const Scalar& c)
{
    Monomial u = h.unit();
    return HopfElement(std::move(h), u, c);
}

HopfElement HopfElement::generator(HopfAlgebra h, std::size_t index)
{
    if (index >= h.names().size())
        throw Error("generator index out of range");
    Monomial m;
    h.lookup(h.names()[index], m);
    const Scalar one = h.field().one();
    return HopfElement(std::move(h), m, one);
}

void HopfElement::require_same(const HopfElement& o) const
{
    if (!(hopf_ == o.hopf_))
        throw Error("Hopf algebra mismatch: " + hopf_.describe() + " vs " + o.hopf_.describe());
}

HopfElement& HopfElement::operator+=(const HopfElement& o)
{
    require_same(o);
    sum_.add_scaled(o.sum_, hopf_.field().one());
    return *this;
}

HopfElement& HopfElement::operator-=(const HopfElement& o)
{
    require_same(o);
    sum_.add_scaled(o.sum_, -hopf_.field().one());
    return *this;
}

HopfElement HopfElement::operator-() const
{
    HopfElement r = *this;
    r.sum_.scale(-hopf_.field().one());
    return r;
}

HopfElement operator*(const Scalar& c, HopfElement a)
{
    a.sum_.scale(c);
    return a;
}

HopfElement operator*(const HopfElement& a, const HopfElement& b)
{
    return mul(a, b);
}

bool HopfElement::operator==(const HopfElement& o) const
{
    return hopf_ == o.hopf_ && sum_ == o.sum_;
}

namespace {

// "c*mono" pieces joined with " + " / " - ".
template <class Item, class RenderItem>
std::string render_sum(const std::vector<std::pair<Item, Scalar>>& items, RenderItem render_item, bool item_is_unit_allowed_bare)
{
    if (items.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [item, coeff] : items) {
        const bool neg = coeff.renders_negative();
        const Scalar mag = neg ? -coeff : coeff;
        std::string body;
        auto [text, is_unit] = render_item(item);
        if (is_unit && item_is_unit_allowed_bare)
            body = mag.to_string();
        else if (mag.is_one())
            body = text;
        else
            body = mag.to_string() + "*" + text;
        if (first)
            out += neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

} // namespace

std::string HopfElement::render() const
{
    std::vector<std::pair<Monomial, Scalar>> items(sum_.terms().begin(), sum_.terms().end());
    std::stable_sort(items.begin(), items.end(),
                     [&](const auto& a, const auto& b) { return hopf_.render_before(a.first, b.first); });
    const bool bare_unit = hopf_.kind() != HopfKind::group;
    return render_sum(items, [&](const Monomial& m) { return std::make_pair(hopf_.render(m), hopf_.is_unit(m)); },
                      bare_unit);
}

// ---------------------------------------------------------------------------

HopfTensor::HopfTensor(HopfAlgebra h, std::size_t arity) : hopf_(std::move(h)), arity_(arity), sum_(hopf_.field()) {}

HopfTensor HopfTensor::pure(const std::vector<HopfElement>& factors)
{
    if (factors.empty())
        throw Error("pure tensor needs at least one factor");
    HopfTensor out(factors.front().hopf(), factors.size());
    std::vector<std::pair<Legs, Scalar>> acc{{Legs{}, out.hopf_.field().one()}};
    for (const auto& f : factors) {
        if (!(f.hopf() == out.hopf_))
            throw Error("Hopf algebra mismatch in pure tensor");
        std::vector<std::pair<Legs, Scalar>> next;
        for (const auto& [legs, c] : acc)
            for (const auto& [m, fc] : f.terms()) {
                Legs l = legs;
                l.push_back(m);
                next.emplace_back(std::move(l), c * fc);
            }
        acc = std::move(next);
    }
    for (auto& [l, c] : acc)
        out.sum_.add(std::move(l), c);
    return out;
}

HopfTensor HopfTensor::unit(HopfAlgebra h, std::size_t arity)
{
    HopfTensor out(h, arity);
    out.sum_.add(Legs(arity, h.unit()), h.field().one());
    return out;
}

void HopfTensor::add(const Legs& legs, const Scalar& c)
{
    if (legs.size() != arity_)
        throw Error("pure tensor has " + std::to_string(legs.size()) + " legs, expected " + std::to_string(arity_));
    sum_.add(legs, c);
}

HopfTensor& HopfTensor::operator+=(const HopfTensor& o)
{
    if (!(hopf_ == o.hopf_) || arity_ != o.arity_)
        throw Error("H^{⊗n} mismatch in addition");
    sum_.add_scaled(o.sum_, hopf_.field().one());
    return *this;
}

HopfTensor& HopfTensor::operator-=(const HopfTensor& o)
{
    if (!(hopf_ == o.hopf_) || arity_ != o.arity_)
        throw Error("H^{⊗n} mismatch in subtraction");
    sum_.add_scaled(o.sum_, -hopf_.field().one());
    return *this;
}

HopfTensor operator*(const Scalar& c, HopfTensor a)
{
    a.sum_.scale(c);
    return a;
}

Legs multiply_legs(const HopfAlgebra& h, const Legs& a, const Legs& b)
{
    if (a.size() != b.size())
        throw Error("leg count mismatch in H^{⊗n} product");
    Legs out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(h.multiply(a[i], b[i]));
    return out;
}

HopfTensor operator*(const HopfTensor& a, const HopfTensor& b)
{
    if (!(a.hopf_ == b.hopf_) || a.arity_ != b.arity_)
        throw Error("H^{⊗n} mismatch in product");
    HopfTensor out(a.hopf_, a.arity_);
    for (const auto& [la, ca] : a.terms())
        for (const auto& [lb, cb] : b.terms())
            out.sum_.add(multiply_legs(a.hopf_, la, lb), ca * cb);
    return out;
}

HopfTensor HopfTensor::flip() const
{
    if (arity_ != 2)
        throw Error("flip is defined on H^{⊗2} only");
    HopfTensor out(hopf_, 2);
    for (const auto& [l, c] : terms())
        out.sum_.add(Legs{l[1], l[0]}, c);
    return out;
}

bool HopfTensor::operator==(const HopfTensor& o) const
{
    return hopf_ == o.hopf_ && arity_ == o.arity_ && sum_ == o.sum_;
}

std::string HopfTensor::render() const
{
    std::vector<std::pair<Legs, Scalar>> items(sum_.terms().begin(), sum_.terms().end());
    std::stable_sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
        for (std::size_t k = 0; k < a.first.size(); ++k) {
            if (a.first[k] == b.first[k])
                continue;
            return hopf_.render_before(a.first[k], b.first[k]);
        }
        return false;
    });
    return render_sum(
        items,
        [&](const Legs& l) {
            std::string s;
            for (std::size_t k = 0; k < l.size(); ++k)
                s += (k ? " ⊗ " : "") + hopf_.render(l[k]);
            return std::make_pair(l.size() > 1 ? "(" + s + ")" : s, false);
        },
        false);
}

// ---------------------------------------------------------------------------

HopfElement mul(const HopfElement& a, const HopfElement& b)
{
    if (!(a.hopf() == b.hopf()))
        throw Error("Hopf algebra mismatch in product: " + a.hopf().describe() + " vs " + b.hopf().describe());
    HopfElement out(a.hopf());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out.add(a.hopf().multiply(ma, mb), ca * cb);
    return out;
}

HopfTensor iterated_comul(const HopfElement& a, std::size_t n)
{
    if (n == 0)
        throw Error("iterated coproduct needs n >= 1");
    HopfTensor out(a.hopf(), n);
    for (const auto& [m, c] : a.terms())
        for (const auto& [legs, lc] : a.hopf().coproduct(m, n))
            out.add(legs, c * lc);
    return out;
}

HopfTensor comul(const HopfElement& a)
{
    return iterated_comul(a, 2);
}

Scalar counit(const HopfElement& a)
{
    Scalar s = a.hopf().field().zero();
    for (const auto& [m, c] : a.terms())
        s += c * a.hopf().counit(m);
    return s;
}

HopfElement antipode(const HopfElement& a)
{
    HopfElement out(a.hopf());
    for (const auto& [m, c] : a.terms()) {
        auto [sm, sc] = a.hopf().antipode(m);
        out.add(sm, c * sc);
    }
    return out;
}

CheckReport check_hopf_axioms(const HopfAlgebra& h, int max_degree)
{
    CheckReport report;
    const auto fail = [&](const char* check, const Monomial& m, const std::string& diff) {
        report.findings.push_back({check, {h.render(m)}, diff});
    };
    for (const Monomial& m : h.basis_up_to_degree(max_degree)) {
        const HopfElement a(h, m, h.field().one());
        const HopfTensor d = comul(a);

        // (Δ ⊗ id)Δ and (id ⊗ Δ)Δ, both expanded against the direct Δ^{(2)}.
        HopfTensor left(h, 3), right(h, 3);
        for (const auto& [legs, c] : d.terms()) {
            for (const auto& [l2, c2] : h.coproduct(legs[0], 2))
                left.add(Legs{l2[0], l2[1], legs[1]}, c * c2);
            for (const auto& [l2, c2] : h.coproduct(legs[1], 2))
                right.add(Legs{legs[0], l2[0], l2[1]}, c * c2);
        }
        if (!(left == right))
            fail("coassociativity", m, (left - right).render());
        if (!(left == iterated_comul(a, 3)))
            fail("iterated coproduct", m, (left - iterated_comul(a, 3)).render());

        HopfElement eps_left(h), eps_right(h), s_left(h), s_right(h);
        for (const auto& [legs, c] : d.terms()) {
            eps_left.add(legs[1], c * h.counit(legs[0]));
            eps_right.add(legs[0], c * h.counit(legs[1]));
            auto [s0, sc0] = h.antipode(legs[0]);
            auto [s1, sc1] = h.antipode(legs[1]);
            s_left.add(h.multiply(s0, legs[1]), c * sc0);
            s_right.add(h.multiply(legs[0], s1), c * sc1);
        }
        if (!(eps_left == a) || !(eps_right == a))
            fail("counit", m, (eps_left - a).render() + " ; " + (eps_right - a).render());
        const HopfElement expected = HopfElement::scalar(h, h.counit(m));
        if (!(s_left == expected) || !(s_right == expected))
            fail("antipode", m, (s_left - expected).render() + " ; " + (s_right - expected).render());
        if (!(d.flip() == d))
            fail("cocommutativity", m, (d.flip() - d).render());
    }
    return report;
}

} // namespace pseudocohom
