#pragma once

#include <map>
#include <string>
#include <vector>

#include "pseudocohom/polymap.hpp"

namespace pseudocohom {

/// Free H-module L with a pseudobracket ρ_L : L ⊗ L → H^{⊗2} ⊗_H L.
struct LiePseudoalgebra {
    std::string name;
    FreeModule module;
    PolyMap bracket;

    LiePseudoalgebra() = default;
    LiePseudoalgebra(std::string name, FreeModule module, PolyMap bracket);
    static LiePseudoalgebra abelian(const FreeModule& module);

    const HopfAlgebra& hopf() const { return module.hopf(); }
    Field field() const { return module.field(); }
    bool is_abelian() const { return bracket.is_zero(); }
    bool operator==(const LiePseudoalgebra& o) const { return module == o.module && bracket == o.bracket; }
};

/// Action ψ : L ⊗ M → H^{⊗2} ⊗_H M.
struct Representation {
    std::string name;
    LiePseudoalgebra algebra;
    FreeModule module;
    PolyMap action;

    Representation() = default;
    Representation(std::string name, LiePseudoalgebra algebra, FreeModule module, PolyMap action);
    static Representation adjoint(const LiePseudoalgebra& l);
    static Representation trivial(const LiePseudoalgebra& l, const FreeModule& m);
    bool operator==(const Representation& o) const
    {
        return algebra == o.algebra && module == o.module && action == o.action;
    }
};

/// Basis element e_i as a module element.
TensorElement basis_element(const FreeModule& m, std::size_t i);

TensorElement eval_bracket(const PolyMap& B, const TensorElement& x, const TensorElement& y);
/// [[x*y]*z] with B_in inside, B_out outside; legs ordered (x, y, z).
TensorElement compose_left(const PolyMap& B_out, const PolyMap& B_in, const TensorElement& x, const TensorElement& y,
                           const TensorElement& z);
/// [x*[y*z]]; legs ordered (x, y, z).
TensorElement compose_right(const PolyMap& B_out, const PolyMap& B_in, const TensorElement& x,
                            const TensorElement& y, const TensorElement& z);

/// [[x*y]*z] = [x*[y*z]] − σ₁₂[y*[x*z]] on all basis triples.
CheckReport check_jacobi(const LiePseudoalgebra& a);
/// check_skew + check_jacobi.
CheckReport check_lie(const LiePseudoalgebra& a);
/// [x*y]*u = x*(y*u) − σ₁₂ y*(x*u) on all basis triples.
CheckReport check_representation(const Representation& r);

struct HomomorphismCheck {
    CheckReport report;
    bool invertible = false;
    bool passed() const { return report.passed(); }
};
/// [Θx * Θy]' = (id ⊗_H Θ)[x*y] on all basis pairs, plus invertibility over H.
/// With stop_early the scan ends at the first violation.
HomomorphismCheck check_homomorphism(const ModuleMap& theta, const LiePseudoalgebra& a, const LiePseudoalgebra& b,
                                     bool stop_early = false);

/// Classical structure constants: c[i][j][k] is the coefficient of e_k in [e_i, e_j].
struct StructureConstants {
    std::vector<std::string> labels;
    std::vector<std::vector<std::vector<Scalar>>> c;
    Field field;

    StructureConstants() = default;
    StructureConstants(Field f, std::vector<std::string> labels);
    std::size_t dimension() const { return labels.size(); }
    /// Sets [e_i, e_j] = v and [e_j, e_i] = −v.
    void set(std::size_t i, std::size_t j, const std::vector<Scalar>& v);
    CheckReport check_lie() const;
};

/// sl₂ with [e,f] = h, [h,e] = 2e, [h,f] = −2f.
StructureConstants sl2_constants(Field f);

/// Cur g: [a*b] = (1 ⊗ 1) ⊗_H [a,b]. Throws when g fails Jacobi.
LiePseudoalgebra current_pseudoalgebra(const std::string& name, const StructureConstants& g, const HopfAlgebra& h);

/// λ-bracket entry Σ c λ^m ∂^k e over multi-indices m (λ) and k (∂).
struct LambdaKey {
    Monomial lambda;
    Monomial d;
    std::int32_t index = 0;
    bool operator<(const LambdaKey& o) const
    {
        if (lambda != o.lambda)
            return lambda < o.lambda;
        if (d != o.d)
            return d < o.d;
        return index < o.index;
    }
    bool operator==(const LambdaKey& o) const { return lambda == o.lambda && d == o.d && index == o.index; }
};
using LambdaPolynomial = SparseSum<LambdaKey>;
using LambdaTable = std::map<std::pair<int, int>, LambdaPolynomial>;

/// [a_λ b] = Σ λ^m p_m(∂) e  ↦  Σ ((−∂)^m ⊗ 1) ⊗_H p_m(∂) e, per variable.
PolyMap from_lambda_bracket(const LambdaTable& table, const FreeModule& module);
LambdaTable to_lambda_bracket(const PolyMap& bracket);
/// "d L + 2*lambda L".
std::string render_lambda(const LambdaPolynomial& p, const FreeModule& module);

} // namespace pseudocohom
