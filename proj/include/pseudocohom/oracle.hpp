#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pseudocohom/scalar.hpp"
#include "pseudocohom/report.hpp"

// Classical (H = k) reference implementations. Everything here works on dense
// coordinate arrays and shares only the scalar type with the main library;
// the bridging helpers at the bottom are the only place the two meet.

namespace pseudocohom {

struct ClassicalLieAlgebra {
    Field field;
    std::size_t dim = 0;
    /// c[(i*dim + j)*dim + k]: coefficient of e_k in [e_i, e_j].
    std::vector<Scalar> c;

    ClassicalLieAlgebra() = default;
    ClassicalLieAlgebra(Field f, std::size_t dim);
    Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * dim + j) * dim + k]; }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * dim + j) * dim + k]; }

    bool antisymmetric() const;
    /// Triples where [[x,y],z] ≠ [x,[y,z]] − [y,[x,z]].
    std::vector<std::array<std::size_t, 3>> jacobi_failures() const;
};

/// a[(i*dim + j)*dim + k]: coefficient of m_k in x_i · m_j.
struct ClassicalRep {
    std::size_t dim = 0;
    std::vector<Scalar> a;

    static ClassicalRep adjoint(const ClassicalLieAlgebra& g);
    static ClassicalRep trivial(const ClassicalLieAlgebra& g, std::size_t dim);
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return a[(i * dim + j) * dim + k]; }
};

/// Multilinear map V^n → W stored on all index tuples.
struct ClassicalCochain {
    std::size_t degree = 0;
    std::size_t in_dim = 0;
    std::size_t out_dim = 0;
    std::vector<Scalar> v;

    ClassicalCochain() = default;
    ClassicalCochain(Field f, std::size_t degree, std::size_t in_dim, std::size_t out_dim);
    std::size_t code(const std::vector<std::size_t>& t) const;
    Scalar& at(const std::vector<std::size_t>& t, std::size_t k) { return v[code(t) * out_dim + k]; }
    const Scalar& at(const std::vector<std::size_t>& t, std::size_t k) const { return v[code(t) * out_dim + k]; }
    bool operator==(const ClassicalCochain& o) const { return degree == o.degree && v == o.v; }
};

/// textbook: Σ (−1)^i x_i θ(..x̂_i..) + Σ_{i<j} (−1)^{i+j} θ([x_i,x_j], ..) (0-based i, j).
/// library: the same in degree 0 and its negative in degrees ≥ 1.
enum class CeNormalization { library, textbook };

ClassicalCochain ce_coboundary(const ClassicalCochain& theta, const ClassicalLieAlgebra& g, const ClassicalRep& rep,
                               CeNormalization norm = CeNormalization::library);
/// ⟦P,Q⟧ = i_P Q − (−1)^{(p−1)(q−1)} i_Q P with i_P Q = Σ_shuffles sign · Q(P(x_S), x_rest).
ClassicalCochain classical_nr_bracket(const ClassicalCochain& P, const ClassicalCochain& Q);
/// e^I ⊗ w_k for increasing I, antisymmetrized.
std::vector<ClassicalCochain> alternating_basis(Field f, std::size_t degree, std::size_t in_dim, std::size_t out_dim);
std::size_t ce_cohomology_dim(const ClassicalLieAlgebra& g, const ClassicalRep& rep, std::size_t n);

struct ClassicalInducibility {
    bool inducible = false;
    /// Lexicographically first γ (row-major, γ[r*dim + c] = coefficient of e_r in γ(e_c)).
    std::vector<int> gamma;
    std::size_t candidates = 0;
    std::size_t lifts = 0;
};

/// Brute force over all dim×dim matrices mod p: γ preserving M with γ|_M = β,
/// p∘γ|_L = α, γ a bracket-preserving bijection. L is the first l_dim basis vectors.
/// beta and alpha are row-major residues. Throws beyond p^{dim²} > 5^9.
ClassicalInducibility classical_inducibility(const ClassicalLieAlgebra& E, std::size_t l_dim,
                                             const std::vector<int>& beta, const std::vector<int>& alpha);

} // namespace pseudocohom

// Bridging to the main library.
#include "pseudocohom/pseudoalg.hpp"

namespace pseudocohom {

ClassicalLieAlgebra classical_from_pseudo(const LiePseudoalgebra& a);
ClassicalRep classical_rep_from_pseudo(const Representation& r);
LiePseudoalgebra pseudo_from_classical(const ClassicalLieAlgebra& g, const std::vector<std::string>& labels);
ClassicalCochain classical_from_polymap(const PolyMap& p);
PolyMap polymap_from_classical(const ClassicalCochain& c, const FreeModule& source, const FreeModule& target);

/// δ_pseudo against δ_CE (library normalization) on every alternating basis
/// cochain of degree ≤ max_degree, and nr_bracket against the classical
/// bracket on all basis pairs of C^{•}(L, L) with total arity ≤ max_degree.
/// Requires H = k.
CheckReport compare_with_pseudo(const Representation& r, std::size_t max_degree);
/// check_jacobi locators against the classical Leibniz-form test.
CheckReport compare_jacobi(const LiePseudoalgebra& a);

} // namespace pseudocohom
