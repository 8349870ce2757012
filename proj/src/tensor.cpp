#include "pseudocohom/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pseudocohom/error.hpp"

namespace pseudocohom {

FreeModule::FreeModule(std::string name, std::vector<std::string> labels, HopfAlgebra h)
    : name_(std::move(name)), labels_(std::move(labels)), hopf_(std::move(h))
{
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty())
            throw Error("module " + name_ + ": empty basis label");
        if (!seen.insert(l).second)
            throw Error("module " + name_ + ": duplicate basis label '" + l + "'");
    }
}

int FreeModule::index_of(const std::string& label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

FreeModule FreeModule::direct_sum(std::string name, const FreeModule& a, const FreeModule& b)
{
    if (!(a.hopf() == b.hopf()))
        throw Error("direct sum of modules over different Hopf algebras");
    std::set<std::string> left(a.labels_.begin(), a.labels_.end());
    std::set<std::string> right(b.labels_.begin(), b.labels_.end());
    std::vector<std::string> labels;
    for (const auto& l : a.labels_)
        labels.push_back(right.count(l) ? a.name_ + ":" + l : l);
    for (const auto& l : b.labels_)
        labels.push_back(left.count(l) ? b.name_ + ":" + l : l);
    return FreeModule(std::move(name), std::move(labels), a.hopf());
}

// ---------------------------------------------------------------------------

TensorElement::TensorElement(HopfAlgebra h, std::size_t arity) : hopf_(std::move(h)), arity_(arity), sum_(hopf_.field())
{
}

TensorElement TensorElement::basis(HopfAlgebra h, std::size_t arity, std::int32_t index)
{
    TensorElement t(h, arity);
    t.add(Legs(arity, h.unit()), index, h.field().one());
    return t;
}

TensorElement TensorElement::module_element(const HopfElement& coeff, std::int32_t index)
{
    TensorElement t(coeff.hopf(), 1);
    for (const auto& [m, c] : coeff.terms())
        t.add(Legs{m}, index, c);
    return t;
}

void TensorElement::add(const Legs& legs, std::int32_t index, const Scalar& c)
{
    if (legs.size() != arity_)
        throw Error("tensor arity mismatch: term with " + std::to_string(legs.size()) + " legs in arity " +
                    std::to_string(arity_));
    sum_.add(TensorKey{legs, index}, c);
}

void TensorElement::add(TensorKey key, const Scalar& c)
{
    if (key.legs.size() != arity_)
        throw Error("tensor arity mismatch: term with " + std::to_string(key.legs.size()) + " legs in arity " +
                    std::to_string(arity_));
    sum_.add(std::move(key), c);
}

void TensorElement::require_compatible(const TensorElement& o) const
{
    if (arity_ != o.arity_)
        throw Error("tensor arity mismatch: " + std::to_string(arity_) + " vs " + std::to_string(o.arity_));
    if (!(hopf_ == o.hopf_))
        throw Error("tensor Hopf algebra mismatch");
}

void TensorElement::add_scaled(const TensorElement& o, const Scalar& c)
{
    if (o.is_zero() || c.is_zero())
        return;
    // a default-constructed accumulator adopts the shape of the first summand
    if (arity_ == 0 && sum_.empty() && o.arity_ != 0)
        *this = TensorElement(o.hopf_, o.arity_);
    require_compatible(o);
    sum_.add_scaled(o.sum_, c);
}

TensorElement& TensorElement::operator+=(const TensorElement& o)
{
    if (arity_ == 0 && sum_.empty() && o.arity_ != 0)
        *this = TensorElement(o.hopf_, o.arity_);
    require_compatible(o);
    sum_.add_scaled(o.sum_, hopf_.field().one());
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o)
{
    if (arity_ == 0 && sum_.empty() && o.arity_ != 0)
        *this = TensorElement(o.hopf_, o.arity_);
    require_compatible(o);
    sum_.add_scaled(o.sum_, -hopf_.field().one());
    return *this;
}

TensorElement TensorElement::operator-() const
{
    TensorElement r = *this;
    r.sum_.scale(-hopf_.field().one());
    return r;
}

TensorElement operator*(const Scalar& c, TensorElement a)
{
    a.sum_.scale(c);
    return a;
}

bool TensorElement::operator==(const TensorElement& o) const
{
    return arity_ == o.arity_ && sum_ == o.sum_;
}

std::string TensorElement::render(const FreeModule& target) const
{
    if (sum_.empty())
        return "0";
    std::vector<std::pair<TensorKey, Scalar>> items(sum_.terms().begin(), sum_.terms().end());
    std::stable_sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
        for (std::size_t k = 0; k < a.first.legs.size(); ++k) {
            if (a.first.legs[k] == b.first.legs[k])
                continue;
            return hopf_.render_before(a.first.legs[k], b.first.legs[k]);
        }
        return a.first.index < b.first.index;
    });
    std::string out;
    bool first = true;
    for (const auto& [key, coeff] : items) {
        const bool neg = coeff.renders_negative();
        const Scalar mag = neg ? -coeff : coeff;
        std::string legs = "(";
        for (std::size_t k = 0; k < key.legs.size(); ++k)
            legs += (k ? " | " : "") + hopf_.render(key.legs[k]);
        legs += ")";
        const std::string label = key.index >= 0 && static_cast<std::size_t>(key.index) < target.rank()
                                      ? target.label(key.index)
                                      : "e" + std::to_string(key.index);
        std::string body = (mag.is_one() ? "" : mag.to_string() + "*") + legs + " " + label;
        if (first)
            out += neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------

LegPermutation::LegPermutation(std::vector<int> image) : image_(std::move(image))
{
    std::vector<char> seen(image_.size(), 0);
    for (int v : image_) {
        if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || seen[v])
            throw Error("not a permutation");
        seen[v] = 1;
    }
}

LegPermutation LegPermutation::identity(std::size_t n)
{
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return LegPermutation(std::move(img));
}

LegPermutation LegPermutation::transposition(std::size_t n, std::size_t a, std::size_t b)
{
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::swap(img.at(a), img.at(b));
    return LegPermutation(std::move(img));
}

LegPermutation LegPermutation::move_first_to(std::size_t n, std::size_t i)
{
    // input (h_i, h_1, .., ĥ_i, ..) -> natural order
    std::vector<int> img;
    img.push_back(static_cast<int>(i));
    for (std::size_t k = 0; k < n; ++k)
        if (k != i)
            img.push_back(static_cast<int>(k));
    return LegPermutation(std::move(img));
}

LegPermutation LegPermutation::move_first_two_to(std::size_t n, std::size_t i, std::size_t j)
{
    std::vector<int> img{static_cast<int>(i), static_cast<int>(j)};
    for (std::size_t k = 0; k < n; ++k)
        if (k != i && k != j)
            img.push_back(static_cast<int>(k));
    return LegPermutation(std::move(img));
}

LegPermutation LegPermutation::compose(const LegPermutation& inner) const
{
    if (size() != inner.size())
        throw Error("permutation size mismatch");
    std::vector<int> img(size());
    for (std::size_t k = 0; k < size(); ++k)
        img[k] = image_[inner.image_[k]];
    return LegPermutation(std::move(img));
}

LegPermutation LegPermutation::inverse() const
{
    std::vector<int> img(size());
    for (std::size_t k = 0; k < size(); ++k)
        img[image_[k]] = static_cast<int>(k);
    return LegPermutation(std::move(img));
}

int LegPermutation::sign() const
{
    int inversions = 0;
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = a + 1; b < size(); ++b)
            if (image_[a] > image_[b])
                ++inversions;
    return inversions % 2 ? -1 : 1;
}

// ---------------------------------------------------------------------------

TensorElement canonicalize(std::size_t arity, const std::vector<std::pair<HopfTensor, TensorElement>>& terms)
{
    if (terms.empty())
        throw Error("canonicalize needs at least one term to fix the Hopf algebra");
    const HopfAlgebra& h = terms.front().first.hopf();
    TensorElement out(h, arity);
    for (const auto& [F, m] : terms) {
        if (F.arity() != arity)
            throw Error("canonicalize: leg count " + std::to_string(F.arity()) + " differs from arity " +
                        std::to_string(arity));
        if (m.arity() != 1)
            throw Error("canonicalize: module part must be a module element");
        for (const auto& [fl, fc] : F.terms())
            for (const auto& [key, mc] : m.terms())
                for (const auto& [dl, dc] : h.coproduct(key.legs[0], arity))
                    out.add(multiply_legs(h, fl, dl), key.index, fc * mc * dc);
    }
    return out;
}

TensorElement act(const HopfTensor& F, const TensorElement& T)
{
    if (F.arity() != T.arity())
        throw Error("act: arity mismatch " + std::to_string(F.arity()) + " vs " + std::to_string(T.arity()));
    TensorElement out(T.hopf(), T.arity());
    for (const auto& [fl, fc] : F.terms())
        for (const auto& [key, c] : T.terms())
            out.add(multiply_legs(T.hopf(), fl, key.legs), key.index, fc * c);
    return out;
}

TensorElement permute_legs(const LegPermutation& sigma, const TensorElement& T)
{
    if (sigma.size() != T.arity())
        throw Error("permute_legs: permutation of " + std::to_string(sigma.size()) + " legs on arity " +
                    std::to_string(T.arity()));
    TensorElement out(T.hopf(), T.arity());
    for (const auto& [key, c] : T.terms()) {
        Legs legs(key.legs.size());
        for (std::size_t k = 0; k < key.legs.size(); ++k)
            legs[sigma(k)] = key.legs[k];
        out.add(std::move(legs), key.index, c);
    }
    return out;
}

TensorElement splice_at(const HopfTensor& F, const TensorElement& T, std::size_t at)
{
    if (at >= T.arity())
        throw Error("splice position out of range");
    const std::size_t m1 = F.arity();
    const HopfAlgebra& h = T.hopf();
    TensorElement out(h, T.arity() + m1 - 1);
    for (const auto& [key, c] : T.terms()) {
        for (const auto& [dl, dc] : h.coproduct(key.legs[at], m1)) {
            for (const auto& [fl, fc] : F.terms()) {
                Legs legs;
                legs.reserve(out.arity());
                for (std::size_t k = 0; k < at; ++k)
                    legs.push_back(key.legs[k]);
                for (std::size_t k = 0; k < m1; ++k)
                    legs.push_back(h.multiply(fl[k], dl[k]));
                for (std::size_t k = at + 1; k < key.legs.size(); ++k)
                    legs.push_back(key.legs[k]);
                out.add(std::move(legs), key.index, c * dc * fc);
            }
        }
    }
    return out;
}

TensorElement splice(const HopfTensor& F, const TensorElement& T)
{
    return splice_at(F, T, 0);
}

bool equal(const TensorElement& a, const TensorElement& b)
{
    if (a.arity() != b.arity())
        throw Error("equal: arity mismatch");
    return a == b;
}

} // namespace pseudocohom
