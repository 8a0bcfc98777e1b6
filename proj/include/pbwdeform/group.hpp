#pragma once

#include "pbwdeform/linalg.hpp"

#include <memory>
#include <vector>

namespace pbwdeform {

/// Finite group given by its multiplication table.  Indices 0..n-1; the
/// identity index is discovered from the table.  Construction verifies the
/// group axioms unless the table was produced by generator closure (which is
/// associative by construction).
class FiniteGroup {
public:
    explicit FiniteGroup(std::vector<std::vector<int>> table, bool trusted = false);

    int order() const { return static_cast<int>(table_.size()); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }

    const std::vector<std::vector<int>>& table() const { return table_; }
    const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
    /// Index of the class containing g.
    int class_of(int g) const { return class_of_[g]; }

private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
    int identity_ = -1;
};

enum class ElementClass { IdentityAction, Reflection, Codim2, Other };

/// A finite group together with invertible matrices giving its linear action.
/// The matrix convention is column-based: ^g v_i = sum_j rho(g)_{j,i} v_j.
class Representation {
public:
    Representation(std::shared_ptr<const FiniteGroup> group, std::vector<Matrix> matrices);

    const FiniteGroup& group() const { return *group_; }
    std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
    int dim() const { return dim_; }
    Field field() const { return field_; }
    const Matrix& matrix(int g) const { return matrices_[g]; }

    /// Image of basis vector v_i under g, as a coefficient column.
    std::vector<FieldScalar> act_on_basis(int g, int i) const;

private:
    std::shared_ptr<const FiniteGroup> group_;
    std::vector<Matrix> matrices_;
    int dim_ = 0;
    Field field_{};
};

using RepPtr = std::shared_ptr<const Representation>;

bool same_rep(const RepPtr& a, const RepPtr& b);

/// Close a set of invertible matrices under multiplication.  Fails with an
/// error if the closure exceeds `cap` (infinite or too-large group).
std::pair<std::shared_ptr<const FiniteGroup>, RepPtr>
close_generators(const std::vector<Matrix>& generators, int cap = 1024);

struct FixedSpace {
    std::vector<std::vector<FieldScalar>> basis;  // reduced-echelon kernel of rho(g) - I
    int codim = 0;
};

FixedSpace fixed_space(const Representation& rep, int g);

ElementClass classify_element(const Representation& rep, int g);

}  // namespace pbwdeform
