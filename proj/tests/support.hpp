#pragma once

#include <random>
#include <string>
#include <vector>

#include "pseudocohom/model.hpp"

namespace testsupport {

using namespace pseudocohom;

inline std::string fixture(const std::string& name)
{
    return std::string(PSEUDOCOHOM_FIXTURE_DIR) + "/" + name + ".model";
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(g_() % n); }
    /// Uniform integer in [lo, hi] as a field element.
    Scalar scalar(Field f, long lo, long hi) { return f.from_int(lo + static_cast<long>(g_() % (hi - lo + 1))); }

private:
    std::mt19937_64 g_;
};

/// Labels of H usable in random legs: the full basis, or monomials of degree <= 1.
inline std::vector<Monomial> leg_labels(const HopfAlgebra& h)
{
    return h.finite_dimensional() ? h.basis() : h.basis_up_to_degree(1);
}

inline TensorElement random_tensor(Rng& rng, std::size_t arity, const FreeModule& target, int terms)
{
    const HopfAlgebra& h = target.hopf();
    const auto labels = leg_labels(h);
    TensorElement v(h, arity);
    for (int t = 0; t < terms; ++t) {
        Legs legs;
        for (std::size_t a = 0; a < arity; ++a)
            legs.push_back(labels[rng.below(labels.size())]);
        v.add(legs, static_cast<std::int32_t>(rng.below(target.rank())), rng.scalar(h.field(), -2, 2));
    }
    return v;
}

/// Arbitrary table on every tuple.
inline PolyMap random_map(Rng& rng, std::vector<FreeModule> sources, const FreeModule& target, int terms)
{
    PolyMap p(std::move(sources), target);
    for (const auto& t : p.tuples())
        p.set(t, random_tensor(rng, t.size(), target, terms));
    return p;
}

/// Skew arity-2 map: random values on i < j, zero diagonal, completed by skew-symmetry.
inline PolyMap random_skew2(Rng& rng, const FreeModule& source, const FreeModule& target, int terms)
{
    PolyMap p = PolyMap::uniform(source, 2, target);
    for (const auto& t : p.tuples())
        if (t[0] < t[1])
            p.set(t, random_tensor(rng, 2, target, terms));
    return skew_complete(p);
}

inline ModuleMap random_module_map(Rng& rng, const FreeModule& source, const FreeModule& target, int terms = 1)
{
    std::vector<TensorElement> images;
    for (std::size_t j = 0; j < source.rank(); ++j)
        images.push_back(random_tensor(rng, 1, target, terms));
    return ModuleMap(source, target, images);
}

/// Random element of C^n(L, M) (finite-dimensional H).
inline Cochain random_cochain(Rng& rng, const Representation& r, std::size_t n)
{
    Cochain c = zero_cochain(r, n);
    const Field f = r.module.field();
    if (n == 0) {
        for (auto& v : c.constant)
            v = rng.scalar(f, -2, 2);
        return c;
    }
    std::vector<std::int32_t> all;
    for (std::size_t i = 0; i < r.module.rank(); ++i)
        all.push_back(static_cast<std::int32_t>(i));
    const auto basis = skew_basis(r.algebra.module, n, r.module, all, [](const Tuple&) { return true; });
    PolyMap sum = PolyMap::uniform(r.algebra.module, n, r.module);
    for (const auto& b : basis)
        sum += rng.scalar(f, -2, 2) * b;
    c.map = sum;
    return c;
}

inline LiePseudoalgebra two_dim_nonabelian(const HopfAlgebra& h, const std::string& name,
                                           const std::vector<std::string>& labels)
{
    FreeModule m(name, labels, h);
    PolyMap b = PolyMap::uniform(m, 2, m);
    TensorElement v(h, 2);
    v.add(Legs{h.unit(), h.unit()}, 1, h.field().one());
    b.set(Tuple{0, 1}, v);
    return LiePseudoalgebra(name, m, skew_complete(b));
}

} // namespace testsupport
