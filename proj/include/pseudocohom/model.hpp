#pragma once

#include <map>
#include <string>
#include <vector>

#include "pseudocohom/error.hpp"
#include "pseudocohom/nonabelian.hpp"
#include "pseudocohom/wells.hpp"

// Model files: JSON documents with embedded expression strings.
//
//   Hopf element   "2*d1^2*d2 + 3", "g + 1"
//   tensor         "2*(d | 1) L - (1 | d) L"; arity 1 also "2*d*x1 + x2"
//   λ-polynomial   "d L + 2*lambda L" (lambda_<gen> with several generators)

namespace pseudocohom {

/// Load error; the message carries the origin, the JSON path and, for
/// expression strings, the column inside the string.
class ModelError : public Error {
public:
    using Error::Error;
};

struct ModelCochain {
    std::string action;
    Cochain cochain;
    bool operator==(const ModelCochain&) const = default;
};

struct ModelCocycle {
    std::string algebra;
    std::string coefficients;
    NonAbelianCocycle cocycle;
    bool operator==(const ModelCocycle&) const = default;
};

struct ModelPair {
    std::string beta;
    std::string alpha;
    bool operator==(const ModelPair&) const = default;
};

struct Model {
    Field field;
    HopfAlgebra hopf;
    std::map<std::string, FreeModule> modules;
    std::map<std::string, LiePseudoalgebra> algebras;
    std::map<std::string, Representation> actions;
    std::map<std::string, ModelCochain> cochains;
    std::map<std::string, ModuleMap> maps;
    std::map<std::string, ModelCocycle> cocycles;
    std::map<std::string, ModelPair> pairs;

    const FreeModule& module(const std::string& name) const;
    /// A declared bracket, or the abelian algebra on a module of that name.
    LiePseudoalgebra algebra(const std::string& name) const;
    const Representation& action(const std::string& name) const;
    const ModuleMap& map(const std::string& name) const;
    const ModelCocycle& cocycle(const std::string& name) const;
    AutPair pair(const std::string& name) const;

    bool operator==(const Model& o) const;
};

Model parse_model(const std::string& text, const std::string& origin = "<model>");
Model load_model(const std::string& path);
/// JSON text with full tables; parse_model(render_model(m)) == m.
std::string render_model(const Model& m);

HopfElement parse_hopf_element(const std::string& text, const HopfAlgebra& h);
TensorElement parse_tensor(const std::string& text, std::size_t arity, const FreeModule& target);
LambdaPolynomial parse_lambda(const std::string& text, const FreeModule& module);

} // namespace pseudocohom
