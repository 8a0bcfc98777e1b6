#include "pbwdeform/hochschild.hpp"

#include <sstream>

namespace pbwdeform {

namespace {

/// Sorts a wedge tuple; returns the sign, or nullopt when an index repeats.
std::optional<std::pair<std::vector<int>, int>> normalize_wedge(std::vector<int> w) {
    int sign = 1;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b) {
            if (w[a] == w[b]) return std::nullopt;
            if (w[a] > w[b]) {
                std::swap(w[a], w[b]);
                sign = -sign;
            }
        }
    return std::make_pair(std::move(w), sign);
}

/// ^g (v_{w_1} /\ ... /\ v_{w_j}) expanded multilinearly into raw index
/// tuples (not yet wedge-normalized).
std::vector<std::pair<std::vector<int>, FieldScalar>>
act_on_wedge(const Representation& rep, int g, const std::vector<int>& w) {
    const Field f = rep.field();
    std::vector<std::pair<std::vector<int>, FieldScalar>> out{{{}, FieldScalar::one(f)}};
    for (int idx : w) {
        auto col = rep.act_on_basis(g, idx);
        std::vector<std::pair<std::vector<int>, FieldScalar>> next;
        for (const auto& [tuple, c] : out)
            for (int j = 0; j < rep.dim(); ++j) {
                if (col[j].is_zero()) continue;
                auto t2 = tuple;
                t2.push_back(j);
                next.emplace_back(std::move(t2), c * col[j]);
            }
        out = std::move(next);
    }
    return out;
}

SkewElem mono_elem(const RepPtr& rep, const SkewMono& m) {
    SkewElem e(rep);
    e.add_term(m, FieldScalar::one(rep->field()));
    return e;
}

SkewElem letter_elem(const RepPtr& rep, int letter) {
    return letter < rep->dim() ? SkewElem::basis_vector(rep, letter)
                               : SkewElem::group_elem(rep, letter - rep->dim());
}

SkewMono letter_mono(const RepPtr& rep, int letter) {
    SkewMono m;
    m.exps.assign(rep->dim(), 0);
    if (letter < rep->dim()) {
        m.exps[letter] = 1;
        m.g = rep->group().identity();
    } else {
        m.g = letter - rep->dim();
    }
    return m;
}

int glet(const RepPtr& rep, int g) { return rep->dim() + g; }

}  // namespace

std::string XBasisElem::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t a = 0; a < groups.size(); ++a)
        os << (a ? "," : "") << "g" << groups[a];
    os << " | ";
    for (std::size_t a = 0; a < wedge.size(); ++a)
        os << (a ? "^" : "") << "v" << wedge[a];
    os << ")";
    return os.str();
}

void XChain::add_term(XKey k, const FieldScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

void XChain::add_product(const SkewElem& left, const std::vector<int>& groups,
                         const std::vector<int>& wedge, const SkewElem& right,
                         const FieldScalar& c) {
    auto norm = normalize_wedge(wedge);
    if (!norm) return;
    FieldScalar base = norm->second > 0 ? c : -c;
    for (const auto& [lm, lc] : left.terms())
        for (const auto& [rm, rc] : right.terms())
            add_term({lm, {groups, norm->first}, rm}, base * lc * rc);
}

XChain operator+(const XChain& a, const XChain& b) {
    XChain out = a;
    if (!out.rep_) out.rep_ = b.rep_;
    for (const auto& [k, c] : b.terms_) out.add_term(k, c);
    return out;
}

XChain operator-(const XChain& a, const XChain& b) {
    XChain out = a;
    if (!out.rep_) out.rep_ = b.rep_;
    for (const auto& [k, c] : b.terms_) out.add_term(k, -c);
    return out;
}

XChain differential(const XBasisElem& x, const RepPtr& rep) {
    if (x.degree() > 3) throw std::invalid_argument("differential implemented for degree <= 3");
    const Field f = rep->field();
    const FieldScalar one = FieldScalar::one(f);
    const int i = x.hdeg(), j = x.vdeg();
    XChain out(rep);
    const SkewElem unit = SkewElem::one(rep);

    // Horizontal part.
    if (i >= 1) {
        {
            std::vector<int> rest(x.groups.begin() + 1, x.groups.end());
            out.add_product(SkewElem::group_elem(rep, x.groups[0]), rest, x.wedge, unit, one);
        }
        FieldScalar sign = one;
        for (int l = 1; l <= i - 1; ++l) {
            sign = -sign;
            std::vector<int> merged;
            for (int a = 0; a < i; ++a) {
                if (a == l - 1) {
                    merged.push_back(rep->group().mul(x.groups[a], x.groups[a + 1]));
                    ++a;
                } else {
                    merged.push_back(x.groups[a]);
                }
            }
            out.add_product(unit, merged, x.wedge, unit, sign);
        }
        {
            FieldScalar last = i % 2 == 0 ? one : -one;
            int gi = x.groups[i - 1];
            std::vector<int> rest(x.groups.begin(), x.groups.end() - 1);
            SkewElem right = SkewElem::group_elem(rep, gi);
            for (const auto& [tuple, c] : act_on_wedge(*rep, gi, x.wedge))
                out.add_product(unit, rest, tuple, right, last * c);
        }
    }

    // Vertical part, with the sign convention making d(1 (x) v (x) 1) = v(x)1 - 1(x)v.
    if (j >= 1) {
        int gprod = rep->group().identity();
        for (int g : x.groups) gprod = rep->group().mul(gprod, g);
        FieldScalar outer = i % 2 == 0 ? one : -one;
        for (int l = 1; l <= j; ++l) {
            FieldScalar s = l % 2 == 1 ? outer : -outer;
            std::vector<int> rest;
            for (int a = 0; a < j; ++a)
                if (a != l - 1) rest.push_back(x.wedge[a]);
            SkewElem moved = SkewElem::from_vector(rep, rep->act_on_basis(gprod, x.wedge[l - 1]));
            out.add_product(moved, x.groups, rest, unit, s);
            out.add_product(unit, x.groups, rest, SkewElem::basis_vector(rep, x.wedge[l - 1]), -s);
        }
    }
    return out;
}

SkewElem Cochain2::value(const XBasisElem& mid) const {
    auto it = values_.find(mid);
    return it == values_.end() ? SkewElem::zero(rep_) : it->second;
}

void Cochain2::set(XBasisElem mid, SkewElem val) {
    if (mid.degree() != 2) throw std::invalid_argument("2-cochain values live on X_2");
    if (val.is_zero()) values_.erase(mid);
    else values_[std::move(mid)] = std::move(val);
}

SkewElem Cochain2::evaluate(const XChain& chain) const {
    SkewElem out = SkewElem::zero(rep_);
    for (const auto& [key, c] : chain.terms()) {
        if (key.mid.degree() != 2)
            throw std::invalid_argument("2-cochain evaluated on a chain outside X_2");
        SkewElem v = value(key.mid);
        if (v.is_zero()) continue;
        out = out + c * skew_multiply(skew_multiply(mono_elem(rep_, key.left), v),
                                      mono_elem(rep_, key.right));
    }
    return out;
}

SkewElem Cochain3::value(const XBasisElem& mid) const {
    auto it = values_.find(mid);
    return it == values_.end() ? SkewElem::zero(rep_) : it->second;
}

void Cochain3::set(XBasisElem mid, SkewElem val) {
    if (mid.degree() != 3) throw std::invalid_argument("3-cochain values live on X_3");
    if (val.is_zero()) values_.erase(mid);
    else values_[std::move(mid)] = std::move(val);
}

bool Cochain3::is_zero() const { return values_.empty(); }

std::optional<std::pair<XBasisElem, SkewElem>> Cochain3::first_nonzero() const {
    if (values_.empty()) return std::nullopt;
    return *values_.begin();
}

Cochain3 operator-(const Cochain3& a, const Cochain3& b) {
    Cochain3 out = a;
    if (!out.rep_) out.rep_ = b.rep_;
    for (const auto& [mid, val] : b.values_) out.set(mid, out.value(mid) - val);
    return out;
}

Cochain3 operator*(const FieldScalar& s, const Cochain3& a) {
    Cochain3 out(a.rep_, a.degree_);
    for (const auto& [mid, val] : a.values_) out.set(mid, s * val);
    return out;
}

Cochain2 extend_cochain(const LambdaParam& lambda) {
    const RepPtr& rep = lambda.rep();
    Cochain2 out(rep, -1);
    for (int g = 0; g < rep->group().order(); ++g)
        for (int i = 0; i < rep->dim(); ++i)
            out.set({{g}, {i}}, SkewElem::from_group_algebra(rep, lambda.value(g, i)));
    return out;
}

Cochain2 extend_cochain(const KappaParam& kappa) {
    const RepPtr& rep = kappa.rep();
    Cochain2 out(rep, -2);
    for (int j = 0; j < rep->dim(); ++j)
        for (int i = 0; i < j; ++i)
            out.set({{}, {i, j}}, SkewElem::from_group_algebra(rep, kappa.value(i, j)));
    return out;
}

std::vector<XBasisElem> middle_basis(const RepPtr& rep, int degree) {
    const int n = rep->group().order();
    const int m = rep->dim();
    std::vector<XBasisElem> out;
    for (int i = degree; i >= 0; --i) {
        int j = degree - i;
        std::vector<std::vector<int>> group_tuples{{}};
        for (int a = 0; a < i; ++a) {
            std::vector<std::vector<int>> next;
            for (const auto& tup : group_tuples)
                for (int g = 0; g < n; ++g) {
                    auto t2 = tup;
                    t2.push_back(g);
                    next.push_back(std::move(t2));
                }
            group_tuples = std::move(next);
        }
        std::vector<std::vector<int>> wedges{{}};
        for (int a = 0; a < j; ++a) {
            std::vector<std::vector<int>> next;
            for (const auto& tup : wedges)
                for (int v = tup.empty() ? 0 : tup.back() + 1; v < m; ++v) {
                    auto t2 = tup;
                    t2.push_back(v);
                    next.push_back(std::move(t2));
                }
            wedges = std::move(next);
        }
        for (const auto& gt : group_tuples)
            for (const auto& wt : wedges)
                out.push_back({gt, wt});
    }
    return out;
}

Cochain3 coboundary(const Cochain2& c) {
    const RepPtr& rep = c.rep();
    Cochain3 out(rep, c.graded_degree());
    for (const XBasisElem& x : middle_basis(rep, 3))
        out.set(x, c.evaluate(differential(x, rep)));
    return out;
}

BarTensor2 phi2(const XBasisElem& x, const RepPtr& rep) {
    const Field f = rep->field();
    const FieldScalar one = FieldScalar::one(f);
    BarTensor2 out;
    auto add = [&](int a, int b, const FieldScalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = out.try_emplace({a, b}, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    if (x.hdeg() == 2) {
        add(glet(rep, x.groups[0]), glet(rep, x.groups[1]), one);
    } else if (x.hdeg() == 1) {
        int g = x.groups[0], i = x.wedge[0];
        add(glet(rep, g), i, one);
        auto col = rep->act_on_basis(g, i);
        for (int j = 0; j < rep->dim(); ++j) add(j, glet(rep, g), -col[j]);
    } else if (x.vdeg() == 2) {
        add(x.wedge[0], x.wedge[1], one);
        add(x.wedge[1], x.wedge[0], -one);
    } else {
        throw std::invalid_argument("phi2 expects a degree-2 middle basis element");
    }
    return out;
}

BarTensor3 phi3(const XBasisElem& x, const RepPtr& rep) {
    const Field f = rep->field();
    const FieldScalar one = FieldScalar::one(f);
    BarTensor3 out;
    auto add = [&](int a, int b, int c, const FieldScalar& s) {
        if (s.is_zero()) return;
        auto [it, fresh] = out.try_emplace({a, b, c}, s);
        if (!fresh) {
            it->second = it->second + s;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    const int m = rep->dim();
    if (x.hdeg() == 3) {
        add(glet(rep, x.groups[0]), glet(rep, x.groups[1]), glet(rep, x.groups[2]), one);
    } else if (x.hdeg() == 2) {
        int g = x.groups[0], h = x.groups[1], i = x.wedge[0];
        add(glet(rep, g), glet(rep, h), i, one);
        auto hv = rep->act_on_basis(h, i);
        for (int j = 0; j < m; ++j) add(glet(rep, g), j, glet(rep, h), -hv[j]);
        auto ghv = rep->act_on_basis(rep->group().mul(g, h), i);
        for (int j = 0; j < m; ++j) add(j, glet(rep, g), glet(rep, h), ghv[j]);
    } else if (x.hdeg() == 1) {
        int g = x.groups[0], i = x.wedge[0], j = x.wedge[1];
        add(glet(rep, g), i, j, one);
        add(glet(rep, g), j, i, -one);
        auto gv = rep->act_on_basis(g, i), gw = rep->act_on_basis(g, j);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                add(a, b, glet(rep, g), gv[a] * gw[b]);
                add(a, b, glet(rep, g), -(gw[a] * gv[b]));
            }
        for (int a = 0; a < m; ++a) {
            add(a, glet(rep, g), j, -gv[a]);
            add(a, glet(rep, g), i, gw[a]);
        }
    } else if (x.vdeg() == 3) {
        const int idx[3] = {x.wedge[0], x.wedge[1], x.wedge[2]};
        const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
        for (int p = 0; p < 6; ++p)
            add(idx[perms[p][0]], idx[perms[p][1]], idx[perms[p][2]], p < 3 ? one : -one);
    } else {
        throw std::invalid_argument("phi3 expects a degree-3 middle basis element");
    }
    return out;
}

XChain psi2(const BarTensor2& bar, const RepPtr& rep) {
    const int m = rep->dim();
    const SkewElem unit = SkewElem::one(rep);
    XChain out(rep);
    for (const auto& [letters, c] : bar) {
        auto [a, b] = std::pair{letters[0], letters[1]};
        if (a >= m && b >= m) {
            out.add_product(unit, {a - m, b - m}, {}, unit, c);
        } else if (a >= m && b < m) {
            out.add_product(unit, {a - m}, {b}, unit, c);
        } else if (a < m && b < m && a < b) {
            out.add_product(unit, {}, {a, b}, unit, c);
        }
        // v (x) g and out-of-order v (x) v map to zero.
    }
    return out;
}

Bar2Chain bar_delta3(const BarTensor3& bar, const RepPtr& rep) {
    Bar2Chain out;
    auto add = [&](const SkewElem& left, const SkewElem& x1, const SkewElem& x2,
                   const SkewElem& right, const FieldScalar& c) {
        for (const auto& [lm, lc] : left.terms())
            for (const auto& [m1, c1] : x1.terms())
                for (const auto& [m2, c2] : x2.terms())
                    for (const auto& [rm, rc] : right.terms()) {
                        Bar2Key key{lm, m1, m2, rm};
                        FieldScalar v = c * lc * c1 * c2 * rc;
                        if (v.is_zero()) continue;
                        auto [it, fresh] = out.try_emplace(key, v);
                        if (!fresh) {
                            it->second = it->second + v;
                            if (it->second.is_zero()) out.erase(it);
                        }
                    }
    };
    const SkewElem unit = SkewElem::one(rep);
    for (const auto& [letters, c] : bar) {
        SkewElem e0 = letter_elem(rep, letters[0]);
        SkewElem e1 = letter_elem(rep, letters[1]);
        SkewElem e2 = letter_elem(rep, letters[2]);
        add(e0, e1, e2, unit, c);
        add(unit, skew_multiply(e0, e1), e2, unit, -c);
        add(unit, e0, skew_multiply(e1, e2), unit, c);
        add(unit, e0, e1, e2, -c);
    }
    return out;
}

Bar2Chain phi2_of_chain(const XChain& chain) {
    const RepPtr& rep = chain.rep();
    Bar2Chain out;
    for (const auto& [key, c] : chain.terms()) {
        for (const auto& [letters, bc] : phi2(key.mid, rep)) {
            Bar2Key bk{key.left, letter_mono(rep, letters[0]), letter_mono(rep, letters[1]),
                       key.right};
            FieldScalar v = c * bc;
            if (v.is_zero()) continue;
            auto [it, fresh] = out.try_emplace(bk, v);
            if (!fresh) {
                it->second = it->second + v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

BarSliceCochain::BarSliceCochain(RepPtr rep) : rep_(std::move(rep)) {
    const int letters = rep_->dim() + rep_->group().order();
    table_.assign(letters,
                  std::vector<GroupAlgebraElem>(
                      letters, GroupAlgebraElem::zero(rep_->field(), rep_->group().order())));
}

GroupAlgebraElem BarSliceCochain::value(int a, int b) const { return table_[a][b]; }

void BarSliceCochain::set(int a, int b, GroupAlgebraElem val) { table_[a][b] = std::move(val); }

GroupAlgebraElem BarSliceCochain::eval_ga_left(const GroupAlgebraElem& x, int b) const {
    GroupAlgebraElem out = GroupAlgebraElem::zero(rep_->field(), rep_->group().order());
    for (const auto& [g, c] : x.coeffs()) out = out + c * table_[glet(rep_, g)][b];
    return out;
}

GroupAlgebraElem BarSliceCochain::eval_ga_right(int a, const GroupAlgebraElem& x) const {
    GroupAlgebraElem out = GroupAlgebraElem::zero(rep_->field(), rep_->group().order());
    for (const auto& [g, c] : x.coeffs()) out = out + c * table_[a][glet(rep_, g)];
    return out;
}

namespace {

int slice_letter(const RepPtr& rep, const SkewMono& mono) {
    if (mono.t != 0) throw SliceViolation("t-power in a slice slot");
    if (mono.degree() == 0) return glet(rep, mono.g);
    if (mono.degree() == 1 && mono.g == rep->group().identity()) {
        for (int i = 0; i < rep->dim(); ++i)
            if (mono.exps[i] == 1) return i;
    }
    throw SliceViolation("slot value left span(V u G)");
}

}  // namespace

GroupAlgebraElem BarSliceCochain::eval(const SkewElem& a, const SkewElem& b) const {
    GroupAlgebraElem out = GroupAlgebraElem::zero(rep_->field(), rep_->group().order());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out = out + (ca * cb) * table_[slice_letter(rep_, ma)][slice_letter(rep_, mb)];
    return out;
}

BarSliceCochain pullback_psi2(const Cochain2& c) {
    const RepPtr& rep = c.rep();
    BarSliceCochain out(rep);
    const Field f = rep->field();
    const int letters = rep->dim() + rep->group().order();
    for (int a = 0; a < letters; ++a)
        for (int b = 0; b < letters; ++b) {
            BarTensor2 bar{{{a, b}, FieldScalar::one(f)}};
            out.set(a, b, c.evaluate(psi2(bar, rep)).as_group_algebra());
        }
    return out;
}

Cochain3 gerstenhaber_bracket(const Cochain2& c1, const Cochain2& c2) {
    const RepPtr& rep = c1.rep();
    BarSliceCochain mu1 = pullback_psi2(c1);
    BarSliceCochain mu2 = pullback_psi2(c2);
    Cochain3 out(rep, c1.graded_degree() + c2.graded_degree());
    for (const XBasisElem& x : middle_basis(rep, 3)) {
        GroupAlgebraElem acc = GroupAlgebraElem::zero(rep->field(), rep->group().order());
        for (const auto& [letters, c] : phi3(x, rep)) {
            auto [a, b, cc] = std::tuple{letters[0], letters[1], letters[2]};
            GroupAlgebraElem term = mu1.eval_ga_left(mu2.value(a, b), cc) -
                                    mu1.eval_ga_right(a, mu2.value(b, cc)) +
                                    mu2.eval_ga_left(mu1.value(a, b), cc) -
                                    mu2.eval_ga_right(a, mu1.value(b, cc));
            acc = acc + c * term;
        }
        out.set(x, SkewElem::from_group_algebra(rep, acc));
    }
    return out;
}

std::string HomologicalReport::render(bool structured) const {
    std::ostringstream os;
    for (const auto& s : identities) {
        if (structured) {
            os << "identity=" << s.name << " pass=" << (s.pass ? "true" : "false");
            if (s.witness) os << " witness=" << s.witness->str() << " residual=" << s.residual;
            os << "\n";
        } else {
            os << s.name << ": " << (s.pass ? "holds" : "FAILS");
            if (s.witness) os << " at " << s.witness->str() << ", residual " << s.residual;
            os << "\n";
        }
    }
    os << (structured ? "verdict=" : "homological verdict: ") << (pass() ? "pass" : "fail") << "\n";
    return os.str();
}

HomologicalReport check_homological(const LambdaParam& lambda, const KappaParam& kappa) {
    const RepPtr& rep = lambda.rep();
    const Field f = rep->field();
    Cochain2 L = extend_cochain(lambda);
    Cochain2 K = extend_cochain(kappa);

    HomologicalReport report;
    auto fill = [&](int slot, std::string name, const Cochain3& val) {
        IdentityStatus s;
        s.name = std::move(name);
        if (auto bad = val.first_nonzero()) {
            s.pass = false;
            s.witness = bad->first;
            s.residual = bad->second.str();
        }
        report.identities[slot] = std::move(s);
    };
    fill(0, "d*(lambda) = 0", coboundary(L));
    fill(1, "[lambda,lambda] = 2 d*(kappa)",
         gerstenhaber_bracket(L, L) - FieldScalar::from_int(2, f) * coboundary(K));
    fill(2, "[lambda,kappa] = 0", gerstenhaber_bracket(L, K));
    return report;
}

DeformationHandle lift_to_deformation(const LambdaParam& lambda, const KappaParam& kappa,
                                      LiftMode mode) {
    const RepPtr& rep = lambda.rep();
    if (!check_pbw(lambda, kappa, rep).pass())
        throw std::invalid_argument("parameters do not satisfy the PBW conditions");
    if (mode == LiftMode::collapsed && !(lambda == LambdaParam::zero(rep)))
        throw std::invalid_argument("collapsed lift requires lambda = 0");

    ReductionSystem sys(rep, lambda, kappa, 1, mode == LiftMode::graded ? 2 : 1);
    DeformationHandle handle{sys, BarSliceCochain(rep), BarSliceCochain(rep)};
    const int letters = rep->dim() + rep->group().order();
    for (int a = 0; a < letters; ++a)
        for (int b = 0; b < letters; ++b) {
            SkewElem prod = nf_product(letter_elem(rep, a), letter_elem(rep, b), sys);
            handle.mu1.set(a, b, prod.t_coefficient(1).as_group_algebra());
            handle.mu2.set(a, b, prod.t_coefficient(2).as_group_algebra());
        }
    return handle;
}

}  // namespace pbwdeform
