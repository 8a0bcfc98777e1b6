#pragma once

#include "pbwdeform/skew.hpp"

#include <optional>
#include <random>
#include <string>

namespace pbwdeform {

/// The parameter map lambda: kG (x) V -> kG, stored densely over G x basis.
class LambdaParam {
public:
    LambdaParam() = default;
    explicit LambdaParam(RepPtr rep);

    static LambdaParam zero(RepPtr rep) { return LambdaParam(std::move(rep)); }

    const RepPtr& rep() const { return rep_; }

    const GroupAlgebraElem& value(int g, int i) const { return table_[g][i]; }
    void set(int g, int i, GroupAlgebraElem val) { table_[g][i] = std::move(val); }

    /// lambda extended kG-linearly in the first slot.
    GroupAlgebraElem value_linear(const GroupAlgebraElem& x, int i) const;
    /// lambda(g, u) for an arbitrary vector u given by coordinates.
    GroupAlgebraElem value_vec(int g, const std::vector<FieldScalar>& u) const;

    bool operator==(const LambdaParam& o) const { return table_ == o.table_; }

private:
    RepPtr rep_;
    std::vector<std::vector<GroupAlgebraElem>> table_;  // [g][i]
};

/// Alternating kappa: V (x) V -> kG; only pairs i < j are stored.
class KappaParam {
public:
    KappaParam() = default;
    explicit KappaParam(RepPtr rep);

    static KappaParam zero(RepPtr rep) { return KappaParam(std::move(rep)); }

    const RepPtr& rep() const { return rep_; }

    /// kappa(v_i, v_j) for any i, j (antisymmetric lookup; zero on i == j).
    GroupAlgebraElem value(int i, int j) const;
    void set(int i, int j, GroupAlgebraElem val);

    /// kappa(u1, u2) for arbitrary coordinate vectors.
    GroupAlgebraElem value_vec(const std::vector<FieldScalar>& u1,
                               const std::vector<FieldScalar>& u2) const;

    /// Component kappa_g as a bilinear form on coordinates.
    FieldScalar component(int g, int i, int j) const { return value(i, j).coeff(g); }

    bool operator==(const KappaParam& o) const { return table_ == o.table_; }

private:
    RepPtr rep_;
    std::map<std::pair<int, int>, GroupAlgebraElem> table_;  // keys i < j
};

/// A kappa with image in kG (+) (V (x) kG): a kG part plus, per basis vector,
/// a kG coefficient.  Alternating in the same sense as KappaParam.
struct GeneralKappaEntry {
    GroupAlgebraElem scalar_part;                 // component in kG
    std::vector<GroupAlgebraElem> vector_part;    // vector_part[k]: coefficient of v_k
};

class GeneralKappa {
public:
    GeneralKappa() = default;
    explicit GeneralKappa(RepPtr rep) : rep_(std::move(rep)) {}

    const RepPtr& rep() const { return rep_; }
    void set(int i, int j, GeneralKappaEntry e);
    /// Entry for i < j only; negate externally for the flipped pair.
    const GeneralKappaEntry* entry(int i, int j) const;
    const std::map<std::pair<int, int>, GeneralKappaEntry>& table() const { return table_; }

private:
    RepPtr rep_;
    std::map<std::pair<int, int>, GeneralKappaEntry> table_;
};

/// Defines lambda on a generating set only; used to seed the recursion.
struct LambdaSeed {
    int g = 0;                              // group element
    std::vector<GroupAlgebraElem> values;   // lambda(g, v_i) per basis index
};

struct WellDefinednessError : std::runtime_error {
    int g, h, i;
    WellDefinednessError(int g_, int h_, int i_, const std::string& msg)
        : std::runtime_error(msg), g(g_), h(h_), i(i_) {}
};

/// Extend lambda from seeds on generators to all of G along breadth-first
/// words via lambda(gh,v) = lambda(g,^h v) h + g lambda(h,v), then verify
/// that identity globally; throws WellDefinednessError with a witness pair
/// if the seed values violate it.
LambdaParam extend_lambda_by_recursion(const std::vector<LambdaSeed>& seeds, const RepPtr& rep);

/// Graded-affine-Hecke style builder: lambda(s, v) := c_s * mu * 1 where
/// v - ^s v = mu * alpha_s, seeded on the listed simple reflections and
/// extended by recursion.
LambdaParam build_lambda_coxeter(const RepPtr& rep,
                                 const std::vector<int>& simple_reflections,
                                 const std::vector<std::vector<FieldScalar>>& roots,
                                 const std::vector<FieldScalar>& c);

struct StructuralViolation {
    std::string rule;     // which necessary condition failed
    int g = -1, h = -1;   // involved group elements (-1 when unused)
    std::string detail;
};

struct StructuralReport {
    std::vector<StructuralViolation> violations;
    bool clean() const { return violations.empty(); }
};

/// Necessary conditions on (lambda, kappa) from the support corollaries:
/// kappa_g nonzero forces codim V^g in {0,1,2} with the wedge/kernel
/// constraints, and lambda_h(g,.) is supported where h^{-1}g is a reflection
/// or the identity, vanishing on the reflecting hyperplane.  Report-only.
StructuralReport validate_structural(const LambdaParam& lambda, const KappaParam& kappa,
                                     const RepPtr& rep);

/// Seeded uniform random parameters over kG coefficients (property tests).
LambdaParam random_lambda(const RepPtr& rep, std::mt19937_64& rng);
KappaParam random_kappa(const RepPtr& rep, std::mt19937_64& rng);
FieldScalar random_scalar(Field f, std::mt19937_64& rng);

}  // namespace pbwdeform
