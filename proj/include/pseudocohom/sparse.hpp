#pragma once

#include <map>
#include <utility>

#include "pseudocohom/scalar.hpp"

namespace pseudocohom {

/// Finite formal sum over an ordered key set with coefficients in a field.
/// Zero coefficients are never stored, so two sums are equal iff their maps are.
template <class Key>
class SparseSum {
public:
    using Map = std::map<Key, Scalar>;

    explicit SparseSum(Field f = Field::rationals()) : field_(f) {}

    Field field() const { return field_; }
    const Map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    template <class K>
    void add(K&& key, const Scalar& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(std::forward<K>(key), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    void add_scaled(const SparseSum& o, const Scalar& factor)
    {
        if (factor.is_zero())
            return;
        for (const auto& [k, c] : o.terms_)
            add(k, c * factor);
    }

    void scale(const Scalar& factor)
    {
        if (factor.is_zero()) {
            terms_.clear();
            return;
        }
        for (auto& [k, c] : terms_)
            c *= factor;
    }

    Scalar coefficient(const Key& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? field_.zero() : it->second;
    }

    bool operator==(const SparseSum& o) const { return terms_ == o.terms_; }

private:
    Field field_;
    Map terms_;
};

} // namespace pseudocohom
