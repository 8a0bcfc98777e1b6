#pragma once

#include "pbwdeform/rewrite.hpp"

#include <array>

namespace pbwdeform {

/// Middle data of a basis element of X_{i,j} = A (x) (kG)^i (x) /\^j V (x) A:
/// i group elements and a strictly increasing wedge of basis indices.
struct XBasisElem {
    std::vector<int> groups;
    std::vector<int> wedge;

    int hdeg() const { return static_cast<int>(groups.size()); }
    int vdeg() const { return static_cast<int>(wedge.size()); }
    int degree() const { return hdeg() + vdeg(); }

    bool operator==(const XBasisElem&) const = default;
    bool operator<(const XBasisElem& o) const {
        if (groups.size() != o.groups.size()) return groups.size() < o.groups.size();
        if (groups != o.groups) return groups < o.groups;
        return wedge < o.wedge;
    }
    std::string str() const;
};

/// One free-basis tensor of X: outer A-monomials around a middle basis datum.
struct XKey {
    SkewMono left;
    XBasisElem mid;
    SkewMono right;

    bool operator==(const XKey&) const = default;
    bool operator<(const XKey& o) const {
        if (!(mid == o.mid)) return mid < o.mid;
        if (!(left == o.left)) return left < o.left;
        return right < o.right;
    }
};

class XChain {
public:
    XChain() = default;
    explicit XChain(RepPtr rep) : rep_(std::move(rep)) {}

    const RepPtr& rep() const { return rep_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<XKey, FieldScalar>& terms() const { return terms_; }

    void add_term(XKey k, const FieldScalar& c);
    /// a (x) mid (x) b with arbitrary outer A-elements, wedge normalized
    /// (sorted with its sign; dropped when an index repeats).
    void add_product(const SkewElem& left, const std::vector<int>& groups,
                     const std::vector<int>& wedge, const SkewElem& right,
                     const FieldScalar& c);

    friend XChain operator+(const XChain& a, const XChain& b);
    friend XChain operator-(const XChain& a, const XChain& b);

private:
    RepPtr rep_;
    std::map<XKey, FieldScalar> terms_;
};

/// d = d^h + d^v on the free basis element 1 (x) mid (x) 1, for total degree
/// <= 3.  The sign of d^v is fixed so that d(1 (x) v (x) 1) = v(x)1 - 1(x)v.
XChain differential(const XBasisElem& x, const RepPtr& rep);

/// Degree-2 cochain with A-values on the middle basis of X_2, evaluated on
/// chains by multiplying the outer factors through in A.
class Cochain2 {
public:
    Cochain2() = default;
    Cochain2(RepPtr rep, int graded_degree) : rep_(std::move(rep)), degree_(graded_degree) {}

    const RepPtr& rep() const { return rep_; }
    int graded_degree() const { return degree_; }

    SkewElem value(const XBasisElem& mid) const;
    void set(XBasisElem mid, SkewElem val);

    SkewElem evaluate(const XChain& chain) const;

private:
    RepPtr rep_;
    int degree_ = 0;
    std::map<XBasisElem, SkewElem> values_;
};

class Cochain3 {
public:
    Cochain3() = default;
    Cochain3(RepPtr rep, int graded_degree) : rep_(std::move(rep)), degree_(graded_degree) {}

    const RepPtr& rep() const { return rep_; }
    int graded_degree() const { return degree_; }

    SkewElem value(const XBasisElem& mid) const;
    void set(XBasisElem mid, SkewElem val);
    bool is_zero() const;
    /// First middle-basis element with a nonzero value, if any.
    std::optional<std::pair<XBasisElem, SkewElem>> first_nonzero() const;

    friend Cochain3 operator-(const Cochain3& a, const Cochain3& b);
    friend Cochain3 operator*(const FieldScalar& s, const Cochain3& a);

private:
    RepPtr rep_;
    int degree_ = 0;
    std::map<XBasisElem, SkewElem> values_;
};

/// lambda as the degree -1 cochain supported on X_{1,1}.
Cochain2 extend_cochain(const LambdaParam& lambda);
/// kappa as the degree -2 cochain supported on X_{0,2}.
Cochain2 extend_cochain(const KappaParam& kappa);

/// (d* c)(x) = c(d x) on every degree-3 middle basis element.
Cochain3 coboundary(const Cochain2& c);

/// All middle-basis elements of the given total degree (<= 3).
std::vector<XBasisElem> middle_basis(const RepPtr& rep, int degree);

/// Bar-resolution tensors whose slots are single letters from V u G
/// (letters follow the rewrite-engine convention: 0..m-1 vectors, then G).
using BarTensor2 = std::map<std::array<int, 2>, FieldScalar>;
using BarTensor3 = std::map<std::array<int, 3>, FieldScalar>;

BarTensor2 phi2(const XBasisElem& x, const RepPtr& rep);
BarTensor3 phi3(const XBasisElem& x, const RepPtr& rep);
XChain psi2(const BarTensor2& bar, const RepPtr& rep);

/// General bar 2-tensor with A-monomial slots and outer factors; used to
/// state the chain-map identity delta_3 phi_3 = phi_2 d_3 literally.
struct Bar2Key {
    SkewMono left, x1, x2, right;
    bool operator==(const Bar2Key&) const = default;
    bool operator<(const Bar2Key& o) const {
        if (!(x1 == o.x1)) return x1 < o.x1;
        if (!(x2 == o.x2)) return x2 < o.x2;
        if (!(left == o.left)) return left < o.left;
        return right < o.right;
    }
};
using Bar2Chain = std::map<Bar2Key, FieldScalar>;

/// Bar differential of a slice 3-tensor (outer factors 1).
Bar2Chain bar_delta3(const BarTensor3& bar, const RepPtr& rep);
/// phi_2 applied to the middle of every term of a degree-2 chain.
Bar2Chain phi2_of_chain(const XChain& chain);

struct SliceViolation : std::runtime_error {
    explicit SliceViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Bilinear kG-valued map defined only on span(V u G) (x) span(V u G),
/// extended kG-linearly in each slot; evaluation elsewhere throws.
class BarSliceCochain {
public:
    BarSliceCochain() = default;
    explicit BarSliceCochain(RepPtr rep);

    const RepPtr& rep() const { return rep_; }
    GroupAlgebraElem value(int a, int b) const;  // letters
    void set(int a, int b, GroupAlgebraElem val);

    /// Evaluation with a kG element in one slot, extended linearly.
    GroupAlgebraElem eval_ga_left(const GroupAlgebraElem& x, int b) const;
    GroupAlgebraElem eval_ga_right(int a, const GroupAlgebraElem& x) const;
    /// Evaluation on degree <= 1 slice elements; throws SliceViolation when a
    /// monomial is neither a group element nor a plain basis vector.
    GroupAlgebraElem eval(const SkewElem& a, const SkewElem& b) const;

private:
    RepPtr rep_;
    std::vector<std::vector<GroupAlgebraElem>> table_;  // [letter a][letter b]
};

/// psi_2 pullback of a cochain from extend_cochain, as a slice cochain.
BarSliceCochain pullback_psi2(const Cochain2& c);

/// [c1, c2] evaluated through phi_3 via the circle-product formula on the
/// generator slice.
Cochain3 gerstenhaber_bracket(const Cochain2& c1, const Cochain2& c2);

struct IdentityStatus {
    std::string name;
    bool pass = true;
    std::optional<XBasisElem> witness;
    std::string residual;
};

struct HomologicalReport {
    std::array<IdentityStatus, 3> identities;
    bool pass() const {
        for (const auto& s : identities)
            if (!s.pass) return false;
        return true;
    }
    std::string render(bool structured = false) const;
};

/// The homological PBW criterion: d*(lambda) = 0, [lambda,lambda] = 2 d*(kappa),
/// [lambda,kappa] = 0, each evaluated on every degree-3 middle basis element.
HomologicalReport check_homological(const LambdaParam& lambda, const KappaParam& kappa);

enum class LiftMode { graded, collapsed };

struct DeformationHandle {
    ReductionSystem system;
    BarSliceCochain mu1, mu2;
};

/// Builds the t-graded deformation realizing H_{lambda,kappa,t} (degrees
/// t, t^2), or the collapsed t^2 -> t version (kappa only; requires
/// lambda = 0), and extracts the first two multiplication maps.
DeformationHandle lift_to_deformation(const LambdaParam& lambda, const KappaParam& kappa,
                                      LiftMode mode);

}  // namespace pbwdeform
