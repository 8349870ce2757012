#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pseudocohom/hopf.hpp"

namespace pseudocohom {

/// Free left H-module of finite rank with named basis.
class FreeModule {
public:
    FreeModule() = default;
    FreeModule(std::string name, std::vector<std::string> labels, HopfAlgebra h);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t rank() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const HopfAlgebra& hopf() const { return hopf_; }
    Field field() const { return hopf_.field(); }
    /// -1 when absent.
    int index_of(const std::string& label) const;

    /// L ⊕ M with the basis of `a` first. Labels are qualified as "A:x" only
    /// where the two label sets clash.
    static FreeModule direct_sum(std::string name, const FreeModule& a, const FreeModule& b);

    /// Structural: same Hopf algebra and same labels. The name is cosmetic.
    bool operator==(const FreeModule& o) const { return labels_ == o.labels_ && hopf_ == o.hopf_; }

private:
    std::string name_;
    std::vector<std::string> labels_;
    HopfAlgebra hopf_;
};

struct TensorKey {
    Legs legs;
    std::int32_t index = 0;

    bool operator<(const TensorKey& o) const
    {
        if (legs != o.legs)
            return legs < o.legs;
        return index < o.index;
    }
    bool operator==(const TensorKey& o) const { return index == o.index && legs == o.legs; }
};

/// Element of H^{⊗n} ⊗_H M for free M, stored as Σ c (l_1 ⊗ .. ⊗ l_n) ⊗ e_i
/// over basis labels l_k. Arity-1 elements double as module elements h·e_i.
class TensorElement {
public:
    TensorElement() = default;
    TensorElement(HopfAlgebra h, std::size_t arity);

    /// (1 ⊗ .. ⊗ 1) ⊗_H e_index.
    static TensorElement basis(HopfAlgebra h, std::size_t arity, std::int32_t index);
    /// h · e_index as an arity-1 element.
    static TensorElement module_element(const HopfElement& coeff, std::int32_t index);

    const HopfAlgebra& hopf() const { return hopf_; }
    Field field() const { return hopf_.field(); }
    std::size_t arity() const { return arity_; }
    const SparseSum<TensorKey>::Map& terms() const { return sum_.terms(); }
    bool is_zero() const { return sum_.empty(); }
    std::size_t size() const { return sum_.size(); }

    void add(const Legs& legs, std::int32_t index, const Scalar& c);
    void add(TensorKey key, const Scalar& c);
    void add_scaled(const TensorElement& o, const Scalar& c);

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    TensorElement operator-() const;
    friend TensorElement operator*(const Scalar& c, TensorElement a);

    bool operator==(const TensorElement& o) const;

    /// "2*(d | 1) L - (1 | d) L"; "0" for the zero element.
    std::string render(const FreeModule& target) const;

private:
    void require_compatible(const TensorElement& o) const;
    HopfAlgebra hopf_;
    std::size_t arity_ = 0;
    SparseSum<TensorKey> sum_;
};

/// σ as the list of output positions: leg k of the input lands at image[k].
class LegPermutation {
public:
    LegPermutation() = default;
    explicit LegPermutation(std::vector<int> image);

    static LegPermutation identity(std::size_t n);
    /// Swaps positions a and b (0-based).
    static LegPermutation transposition(std::size_t n, std::size_t a, std::size_t b);
    /// σ_{1→i}: the first leg moves to position i (0-based), the others keep their order.
    static LegPermutation move_first_to(std::size_t n, std::size_t i);
    /// σ_{1→i,2→j} with i < j (0-based).
    static LegPermutation move_first_two_to(std::size_t n, std::size_t i, std::size_t j);
    /// Legs produced in the order of the listed variables, sent back to natural order.
    static LegPermutation from_order(const std::vector<int>& order) { return LegPermutation(order); }

    std::size_t size() const { return image_.size(); }
    int operator()(std::size_t k) const { return image_[k]; }
    const std::vector<int>& image() const { return image_; }

    /// (this ∘ inner)(k) = this(inner(k)).
    LegPermutation compose(const LegPermutation& inner) const;
    LegPermutation inverse() const;
    int sign() const;
    bool operator==(const LegPermutation&) const = default;

private:
    std::vector<int> image_;
};

/// Σ (F, m) with m = Σ h_i e_i rewritten to Σ (F · Δ^{(n-1)}(h_i), e_i).
TensorElement canonicalize(std::size_t arity, const std::vector<std::pair<HopfTensor, TensorElement>>& terms);
/// Componentwise left multiplication of the legs by F.
TensorElement act(const HopfTensor& F, const TensorElement& T);
TensorElement permute_legs(const LegPermutation& sigma, const TensorElement& T);
/// F has m+1 legs: every first leg a of T is replaced by F · Δ^{(m)}(a).
TensorElement splice(const HopfTensor& F, const TensorElement& T);
/// As splice, but expanding the leg at position `at` in place.
TensorElement splice_at(const HopfTensor& F, const TensorElement& T, std::size_t at);
bool equal(const TensorElement& a, const TensorElement& b);

} // namespace pseudocohom
