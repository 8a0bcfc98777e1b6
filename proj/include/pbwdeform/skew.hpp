#pragma once

#include "pbwdeform/group_algebra.hpp"

#include <map>
#include <vector>

namespace pbwdeform {

/// PBW monomial v_1^{e_1} ... v_m^{e_m} g, optionally times t^t.
/// Ordered by total v-degree first, so echelon pivots respect the filtration.
struct SkewMono {
    std::vector<int> exps;
    int g = 0;
    int t = 0;

    int degree() const {
        int d = 0;
        for (int e : exps) d += e;
        return d;
    }
    bool operator==(const SkewMono&) const = default;
    bool operator<(const SkewMono& o) const {
        int da = degree(), db = o.degree();
        if (da != db) return da < db;
        if (exps != o.exps) return exps < o.exps;
        if (g != o.g) return g < o.g;
        return t < o.t;
    }
};

/// Element of S(V)#G (or of H_{lambda,kappa,t}) in the PBW basis, with the
/// group factor on the right.  Zero coefficients are never stored.
class SkewElem {
public:
    SkewElem() = default;
    explicit SkewElem(RepPtr rep) : rep_(std::move(rep)) {}

    static SkewElem zero(RepPtr rep) { return SkewElem(std::move(rep)); }
    static SkewElem one(RepPtr rep);
    static SkewElem group_elem(RepPtr rep, int g, int t = 0);
    static SkewElem basis_vector(RepPtr rep, int i, int t = 0);
    static SkewElem from_group_algebra(RepPtr rep, const GroupAlgebraElem& x, int t = 0);
    /// v-monomial with the given coefficient column over the basis (degree-1).
    static SkewElem from_vector(RepPtr rep, const std::vector<FieldScalar>& coords);

    const RepPtr& rep() const { return rep_; }
    Field field() const { return rep_->field(); }
    bool is_zero() const { return terms_.empty(); }
    const std::map<SkewMono, FieldScalar>& terms() const { return terms_; }

    void add_term(SkewMono m, const FieldScalar& c);
    FieldScalar coeff(const SkewMono& m) const;

    /// Max total v-degree over terms; -1 for zero.
    int degree() const;
    /// True when every term has the same v-degree d (vacuously true for 0).
    bool is_homogeneous(int d) const;
    /// Coefficient of t^j, as a t-free element.
    SkewElem t_coefficient(int j) const;
    /// The kG part, if every term has v-degree 0 and t = 0.
    GroupAlgebraElem as_group_algebra() const;

    friend SkewElem operator+(const SkewElem& a, const SkewElem& b);
    friend SkewElem operator-(const SkewElem& a, const SkewElem& b);
    SkewElem operator-() const;
    friend SkewElem operator*(const FieldScalar& s, const SkewElem& a);

    bool operator==(const SkewElem& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    RepPtr rep_;
    std::map<SkewMono, FieldScalar> terms_;
};

/// Commutative polynomial in the v's alone: monomial exponents -> coefficient.
using VPoly = std::map<std::vector<int>, FieldScalar>;

/// Image of the monomial v^exps under the action of g, expanded over the
/// monomial basis (a product of linear forms).
VPoly act_on_monomial(const Representation& rep, int g, const std::vector<int>& exps);

/// Product in S(V)#G: (r g)(s h) = r (^g s) gh.  t-exponents add.
SkewElem skew_multiply(const SkewElem& a, const SkewElem& b);

}  // namespace pbwdeform
