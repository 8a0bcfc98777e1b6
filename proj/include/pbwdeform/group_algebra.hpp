#pragma once

#include "pbwdeform/group.hpp"

#include <map>

namespace pbwdeform {

/// Element of kG, stored sparsely: zero coefficients are never present.
class GroupAlgebraElem {
public:
    GroupAlgebraElem() = default;
    GroupAlgebraElem(Field f, int order) : field_(f), order_(order) {}

    static GroupAlgebraElem zero(Field f, int order) { return {f, order}; }
    static GroupAlgebraElem basis(Field f, int order, int g) {
        GroupAlgebraElem e(f, order);
        e.set(g, FieldScalar::one(f));
        return e;
    }
    static GroupAlgebraElem scalar(Field f, int order, FieldScalar c, int identity) {
        GroupAlgebraElem e(f, order);
        e.set(identity, std::move(c));
        return e;
    }

    Field field() const { return field_; }
    int group_order() const { return order_; }
    bool is_zero() const { return coeffs_.empty(); }

    FieldScalar coeff(int g) const {
        auto it = coeffs_.find(g);
        return it == coeffs_.end() ? FieldScalar::zero(field_) : it->second;
    }
    void set(int g, FieldScalar c) {
        if (g < 0 || g >= order_) throw std::out_of_range("group index out of range");
        if (c.is_zero()) coeffs_.erase(g);
        else coeffs_[g] = std::move(c);
    }
    void add(int g, const FieldScalar& c) { set(g, coeff(g) + c); }

    const std::map<int, FieldScalar>& coeffs() const { return coeffs_; }

    friend GroupAlgebraElem operator+(const GroupAlgebraElem& a, const GroupAlgebraElem& b) {
        a.require_same(b);
        GroupAlgebraElem out = a;
        for (const auto& [g, c] : b.coeffs_) out.add(g, c);
        return out;
    }
    friend GroupAlgebraElem operator-(const GroupAlgebraElem& a, const GroupAlgebraElem& b) {
        a.require_same(b);
        GroupAlgebraElem out = a;
        for (const auto& [g, c] : b.coeffs_) out.add(g, -c);
        return out;
    }
    GroupAlgebraElem operator-() const {
        GroupAlgebraElem out(field_, order_);
        for (const auto& [g, c] : coeffs_) out.set(g, -c);
        return out;
    }
    friend GroupAlgebraElem operator*(const FieldScalar& s, const GroupAlgebraElem& a) {
        GroupAlgebraElem out(a.field_, a.order_);
        for (const auto& [g, c] : a.coeffs_) out.set(g, s * c);
        return out;
    }

    bool operator==(const GroupAlgebraElem& o) const {
        return field_ == o.field_ && order_ == o.order_ && coeffs_ == o.coeffs_;
    }
    bool operator<(const GroupAlgebraElem& o) const {
        if (!(coeffs_.size() == o.coeffs_.size()))
            return coeffs_.size() < o.coeffs_.size();
        return std::lexicographical_compare(
            coeffs_.begin(), coeffs_.end(), o.coeffs_.begin(), o.coeffs_.end(),
            [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first < b.first;
                return a.second < b.second;
            });
    }

private:
    void require_same(const GroupAlgebraElem& b) const {
        if (!(field_ == b.field_)) throw FieldMismatch{};
        if (order_ != b.order_) throw std::invalid_argument("group mismatch in kG arithmetic");
    }

    Field field_{};
    int order_ = 0;
    std::map<int, FieldScalar> coeffs_;
};

/// Convolution product in kG using the multiplication table of G.
GroupAlgebraElem ga_multiply(const GroupAlgebraElem& x, const GroupAlgebraElem& y,
                             const FiniteGroup& G);

/// Canonical text form, e.g. "1 + 2*g3"; "0" for the zero element.
std::string ga_render(const GroupAlgebraElem& x, int identity);

}  // namespace pbwdeform
