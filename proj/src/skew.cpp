#include "pbwdeform/skew.hpp"

namespace pbwdeform {

SkewElem SkewElem::one(RepPtr rep) {
    const int e = rep->group().identity();
    return group_elem(std::move(rep), e);
}

SkewElem SkewElem::group_elem(RepPtr rep, int g, int t) {
    SkewElem e(rep);
    SkewMono m{std::vector<int>(rep->dim(), 0), g, t};
    e.add_term(std::move(m), FieldScalar::one(rep->field()));
    return e;
}

SkewElem SkewElem::basis_vector(RepPtr rep, int i, int t) {
    SkewElem e(rep);
    SkewMono m{std::vector<int>(rep->dim(), 0), rep->group().identity(), t};
    m.exps[i] = 1;
    e.add_term(std::move(m), FieldScalar::one(rep->field()));
    return e;
}

SkewElem SkewElem::from_group_algebra(RepPtr rep, const GroupAlgebraElem& x, int t) {
    SkewElem e(rep);
    for (const auto& [g, c] : x.coeffs())
        e.add_term(SkewMono{std::vector<int>(rep->dim(), 0), g, t}, c);
    return e;
}

SkewElem SkewElem::from_vector(RepPtr rep, const std::vector<FieldScalar>& coords) {
    SkewElem e(rep);
    for (int i = 0; i < rep->dim(); ++i) {
        if (coords[i].is_zero()) continue;
        SkewMono m{std::vector<int>(rep->dim(), 0), rep->group().identity(), 0};
        m.exps[i] = 1;
        e.add_term(std::move(m), coords[i]);
    }
    return e;
}

void SkewElem::add_term(SkewMono m, const FieldScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FieldScalar SkewElem::coeff(const SkewMono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldScalar::zero(field()) : it->second;
}

int SkewElem::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool SkewElem::is_homogeneous(int d) const {
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

SkewElem SkewElem::t_coefficient(int j) const {
    SkewElem out(rep_);
    for (const auto& [m, c] : terms_)
        if (m.t == j) {
            SkewMono n = m;
            n.t = 0;
            out.add_term(std::move(n), c);
        }
    return out;
}

GroupAlgebraElem SkewElem::as_group_algebra() const {
    GroupAlgebraElem out(field(), rep_->group().order());
    for (const auto& [m, c] : terms_) {
        if (m.degree() != 0 || m.t != 0)
            throw std::invalid_argument("element is not in kG");
        out.add(m.g, c);
    }
    return out;
}

SkewElem operator+(const SkewElem& a, const SkewElem& b) {
    SkewElem out = a;
    if (!out.rep_) out.rep_ = b.rep_;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

SkewElem operator-(const SkewElem& a, const SkewElem& b) {
    SkewElem out = a;
    if (!out.rep_) out.rep_ = b.rep_;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
}

SkewElem SkewElem::operator-() const {
    SkewElem out(rep_);
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

SkewElem operator*(const FieldScalar& s, const SkewElem& a) {
    SkewElem out(a.rep_);
    if (s.is_zero()) return out;
    for (const auto& [m, c] : a.terms_) out.add_term(m, s * c);
    return out;
}

VPoly act_on_monomial(const Representation& rep, int g, const std::vector<int>& exps) {
    const Field f = rep.field();
    const int m = rep.dim();
    VPoly result{{std::vector<int>(m, 0), FieldScalar::one(f)}};
    for (int i = 0; i < m; ++i) {
        auto img = rep.act_on_basis(g, i);  // ^g v_i as a column
        for (int rep_count = 0; rep_count < exps[i]; ++rep_count) {
            VPoly next;
            for (const auto& [mono, c] : result) {
                for (int j = 0; j < m; ++j) {
                    if (img[j].is_zero()) continue;
                    auto key = mono;
                    key[j] += 1;
                    auto it = next.find(key);
                    FieldScalar add = c * img[j];
                    if (it == next.end()) next.emplace(std::move(key), add);
                    else {
                        it->second += add;
                        if (it->second.is_zero()) next.erase(it);
                    }
                }
            }
            result = std::move(next);
        }
    }
    return result;
}

SkewElem skew_multiply(const SkewElem& a, const SkewElem& b) {
    if (!a.rep() || !b.rep()) {
        if (!a.rep()) return a;  // zero with no context
        return b;
    }
    if (!same_rep(a.rep(), b.rep()))
        throw std::invalid_argument("representation mismatch in skew product");
    const auto& rep = *a.rep();
    SkewElem out(a.rep());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            // (v^ma.exps ma.g)(v^mb.exps mb.g) = v^ma.exps (^g v^mb.exps) (ma.g mb.g)
            VPoly acted = act_on_monomial(rep, ma.g, mb.exps);
            const int gg = rep.group().mul(ma.g, mb.g);
            for (const auto& [mono, c] : acted) {
                SkewMono key{ma.exps, gg, ma.t + mb.t};
                for (std::size_t i = 0; i < key.exps.size(); ++i) key.exps[i] += mono[i];
                out.add_term(std::move(key), ca * cb * c);
            }
        }
    }
    return out;
}

std::string SkewElem::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    const int e = rep_->group().identity();
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string part;
        bool unit_coeff = c.is_one();
        if (!unit_coeff) part += c.str();
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            for (int k = 0; k < m.exps[i]; ++k) {
                if (!part.empty()) part += "*";
                part += "v" + std::to_string(i);
            }
        }
        if (m.g != e || part.empty() || (unit_coeff && m.degree() == 0)) {
            if (m.g != e) {
                if (!part.empty()) part += "*";
                part += "g" + std::to_string(m.g);
            } else if (part.empty()) {
                part = "1";
            }
        }
        for (int k = 0; k < m.t; ++k) part += "*t";
        out += part;
    }
    return out;
}

}  // namespace pbwdeform
