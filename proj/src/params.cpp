#include "pbwdeform/params.hpp"

#include <deque>
#include <set>

namespace pbwdeform {

namespace {

GroupAlgebraElem times_group_right(const GroupAlgebraElem& x, int h, const FiniteGroup& G) {
    GroupAlgebraElem out(x.field(), G.order());
    for (const auto& [g, c] : x.coeffs()) out.add(G.mul(g, h), c);
    return out;
}

GroupAlgebraElem times_group_left(int g, const GroupAlgebraElem& x, const FiniteGroup& G) {
    GroupAlgebraElem out(x.field(), G.order());
    for (const auto& [h, c] : x.coeffs()) out.add(G.mul(g, h), c);
    return out;
}

/// b = mu * a for a nonzero a, if such a scalar exists.
std::optional<FieldScalar> proportionality(const std::vector<FieldScalar>& a,
                                           const std::vector<FieldScalar>& b) {
    std::optional<FieldScalar> mu;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) {
            if (!b[i].is_zero()) return std::nullopt;
            continue;
        }
        FieldScalar ratio = b[i] / a[i];
        if (!mu) mu = ratio;
        else if (!(*mu == ratio)) return std::nullopt;
    }
    if (!mu) return std::nullopt;  // a was zero
    return mu;
}

}  // namespace

LambdaParam::LambdaParam(RepPtr rep) : rep_(std::move(rep)) {
    const int n = rep_->group().order(), m = rep_->dim();
    table_.assign(n, std::vector<GroupAlgebraElem>(
                         m, GroupAlgebraElem::zero(rep_->field(), n)));
}

GroupAlgebraElem LambdaParam::value_linear(const GroupAlgebraElem& x, int i) const {
    GroupAlgebraElem out(rep_->field(), rep_->group().order());
    for (const auto& [g, c] : x.coeffs()) out = out + c * table_[g][i];
    return out;
}

GroupAlgebraElem LambdaParam::value_vec(int g, const std::vector<FieldScalar>& u) const {
    GroupAlgebraElem out(rep_->field(), rep_->group().order());
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!u[i].is_zero()) out = out + u[i] * table_[g][i];
    return out;
}

KappaParam::KappaParam(RepPtr rep) : rep_(std::move(rep)) {}

GroupAlgebraElem KappaParam::value(int i, int j) const {
    if (i == j) return GroupAlgebraElem::zero(rep_->field(), rep_->group().order());
    bool flip = i > j;
    auto it = table_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == table_.end()) return GroupAlgebraElem::zero(rep_->field(), rep_->group().order());
    return flip ? -it->second : it->second;
}

void KappaParam::set(int i, int j, GroupAlgebraElem val) {
    if (i == j) throw std::invalid_argument("kappa(v,v) must be zero");
    if (i > j) { std::swap(i, j); val = -val; }
    if (val.is_zero()) table_.erase({i, j});
    else table_[{i, j}] = std::move(val);
}

GroupAlgebraElem KappaParam::value_vec(const std::vector<FieldScalar>& u1,
                                       const std::vector<FieldScalar>& u2) const {
    GroupAlgebraElem out(rep_->field(), rep_->group().order());
    const int m = rep_->dim();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j || u1[i].is_zero() || u2[j].is_zero()) continue;
            out = out + (u1[i] * u2[j]) * value(i, j);
        }
    return out;
}

void GeneralKappa::set(int i, int j, GeneralKappaEntry e) {
    if (i >= j) throw std::invalid_argument("general kappa entries are stored with i < j");
    table_[{i, j}] = std::move(e);
}

const GeneralKappaEntry* GeneralKappa::entry(int i, int j) const {
    auto it = table_.find({i, j});
    return it == table_.end() ? nullptr : &it->second;
}

LambdaParam extend_lambda_by_recursion(const std::vector<LambdaSeed>& seeds, const RepPtr& rep) {
    const auto& G = rep->group();
    const int n = G.order(), m = rep->dim();
    const int e = G.identity();
    const Field f = rep->field();

    LambdaParam lambda(rep);
    std::vector<bool> known(n, false);
    known[e] = true;  // lambda(1,.) = 0
    std::deque<int> queue{e};
    for (const auto& s : seeds) {
        if (static_cast<int>(s.values.size()) != m)
            throw std::invalid_argument("seed value count must equal dim V");
        if (s.g == e) {
            for (const auto& v : s.values)
                if (!v.is_zero())
                    throw WellDefinednessError(e, e, 0, "seed sets lambda(1,.) nonzero");
            continue;
        }
        if (known[s.g]) throw std::invalid_argument("duplicate seed element");
        for (int i = 0; i < m; ++i) lambda.set(s.g, i, s.values[i]);
        known[s.g] = true;
        queue.push_back(s.g);
    }

    // breadth-first extension: for known w and seed s, define lambda(s*w, .)
    while (!queue.empty()) {
        int w = queue.front();
        queue.pop_front();
        for (const auto& s : seeds) {
            if (s.g == e) continue;
            int gw = G.mul(s.g, w);
            if (known[gw]) continue;
            for (int i = 0; i < m; ++i) {
                // lambda(s w, v_i) = lambda(s, ^w v_i) w + s lambda(w, v_i)
                auto img = rep->act_on_basis(w, i);
                GroupAlgebraElem first(f, n);
                for (int j = 0; j < m; ++j)
                    if (!img[j].is_zero()) first = first + img[j] * lambda.value(s.g, j);
                GroupAlgebraElem val = times_group_right(first, w, G) +
                                       times_group_left(s.g, lambda.value(w, i), G);
                lambda.set(gw, i, std::move(val));
            }
            known[gw] = true;
            queue.push_back(gw);
        }
    }
    for (int g = 0; g < n; ++g)
        if (!known[g])
            throw std::invalid_argument("group element not reachable from the seed generators");

    // global re-verification of condition (1); the recursion fixed one word
    // per element, this check covers every pair.
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int i = 0; i < m; ++i) {
                auto img = rep->act_on_basis(h, i);
                GroupAlgebraElem lg(f, n);
                for (int j = 0; j < m; ++j)
                    if (!img[j].is_zero()) lg = lg + img[j] * lambda.value(g, j);
                GroupAlgebraElem rhs = times_group_right(lg, h, G) +
                                       times_group_left(g, lambda.value(h, i), G);
                if (!(lambda.value(G.mul(g, h), i) == rhs))
                    throw WellDefinednessError(
                        g, h, i, "seed values violate the cocycle recursion identity");
            }
    return lambda;
}

LambdaParam build_lambda_coxeter(const RepPtr& rep,
                                 const std::vector<int>& simple_reflections,
                                 const std::vector<std::vector<FieldScalar>>& roots,
                                 const std::vector<FieldScalar>& c) {
    if (simple_reflections.size() != roots.size() || roots.size() != c.size())
        throw std::invalid_argument("reflections, roots and c values must align");
    const auto& G = rep->group();
    const int m = rep->dim();
    const Field f = rep->field();

    // c must be constant on conjugacy classes (checked on the listed elements)
    for (std::size_t a = 0; a < simple_reflections.size(); ++a)
        for (std::size_t b = a + 1; b < simple_reflections.size(); ++b)
            if (G.class_of(simple_reflections[a]) == G.class_of(simple_reflections[b]) &&
                !(c[a] == c[b]))
                throw std::invalid_argument("c is not constant on conjugacy classes");

    std::vector<LambdaSeed> seeds;
    for (std::size_t idx = 0; idx < simple_reflections.size(); ++idx) {
        const int s = simple_reflections[idx];
        if (classify_element(*rep, s) != ElementClass::Reflection)
            throw std::invalid_argument("listed element is not a reflection");
        const auto& alpha = roots[idx];
        LambdaSeed seed;
        seed.g = s;
        for (int i = 0; i < m; ++i) {
            // v_i - ^s v_i = mu * alpha_s
            auto img = rep->act_on_basis(s, i);
            std::vector<FieldScalar> diff(m, FieldScalar::zero(f));
            for (int j = 0; j < m; ++j) diff[j] = (i == j ? FieldScalar::one(f) : FieldScalar::zero(f)) - img[j];
            bool diff_zero = true;
            for (const auto& d : diff) diff_zero = diff_zero && d.is_zero();
            FieldScalar mu = FieldScalar::zero(f);
            if (!diff_zero) {
                auto p = proportionality(alpha, diff);
                if (!p)
                    throw std::invalid_argument(
                        "root vector does not span the image of rho(s) - I");
                mu = *p;
            }
            seed.values.push_back(
                GroupAlgebraElem::scalar(f, G.order(), c[idx] * mu, G.identity()));
        }
        seeds.push_back(std::move(seed));
    }
    return extend_lambda_by_recursion(seeds, rep);
}

StructuralReport validate_structural(const LambdaParam& lambda, const KappaParam& kappa,
                                     const RepPtr& rep) {
    StructuralReport report;
    const auto& G = rep->group();
    const int n = G.order(), m = rep->dim();
    const Field f = rep->field();

    for (int g = 0; g < n; ++g) {
        bool kg_zero = true;
        for (int i = 0; i < m && kg_zero; ++i)
            for (int j = i + 1; j < m && kg_zero; ++j)
                kg_zero = kappa.component(g, i, j).is_zero();
        if (kg_zero) continue;

        FixedSpace fs = fixed_space(*rep, g);
        if (fs.codim > 2) {
            report.violations.push_back(
                {"kappa-support-codim", g, -1,
                 "kappa_g nonzero but codim V^g = " + std::to_string(fs.codim)});
            continue;
        }
        auto kappa_g = [&](const std::vector<FieldScalar>& u,
                           const std::vector<FieldScalar>& w) {
            FieldScalar out = FieldScalar::zero(f);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    if (i != j && !u[i].is_zero() && !w[j].is_zero())
                        out += u[i] * w[j] * kappa.component(g, i, j);
            return out;
        };
        if (fs.codim == 1) {
            for (std::size_t a = 0; a < fs.basis.size(); ++a)
                for (std::size_t b = a + 1; b < fs.basis.size(); ++b)
                    if (!kappa_g(fs.basis[a], fs.basis[b]).is_zero())
                        report.violations.push_back(
                            {"kappa-wedge-fixed", g, -1,
                             "kappa_g does not vanish on V^g wedge V^g"});
        } else if (fs.codim == 2) {
            // ker kappa_g must equal V^g
            Matrix K(m, m, f);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    if (i != j) K.at(i, j) = kappa.component(g, i, j);
            auto ker = K.kernel_basis();
            bool ok = static_cast<int>(ker.size()) == m - 2;
            for (const auto& u : fs.basis) {
                std::vector<FieldScalar> e(m, FieldScalar::zero(f));
                bool in_ker = true;
                for (int j = 0; j < m && in_ker; ++j) {
                    e.assign(m, FieldScalar::zero(f));
                    e[j] = FieldScalar::one(f);
                    in_ker = kappa_g(u, e).is_zero();
                }
                ok = ok && in_ker;
            }
            if (!ok)
                report.violations.push_back(
                    {"kappa-kernel", g, -1, "ker kappa_g differs from V^g"});
        }
    }

    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            bool lh_zero = true;
            for (int i = 0; i < m && lh_zero; ++i)
                lh_zero = lambda.value(g, i).coeff(h).is_zero();
            if (lh_zero) continue;
            const int r = G.mul(G.inv(h), g);
            ElementClass cls = classify_element(*rep, r);
            if (cls == ElementClass::IdentityAction) continue;
            if (cls != ElementClass::Reflection) {
                report.violations.push_back(
                    {"lambda-support", g, h,
                     "lambda_h(g,.) nonzero but h^-1 g is neither a reflection nor the identity"});
                continue;
            }
            FixedSpace fs = fixed_space(*rep, r);
            for (const auto& u : fs.basis) {
                FieldScalar val = FieldScalar::zero(f);
                for (int i = 0; i < m; ++i)
                    if (!u[i].is_zero()) val += u[i] * lambda.value(g, i).coeff(h);
                if (!val.is_zero())
                    report.violations.push_back(
                        {"lambda-hyperplane", g, h,
                         "lambda_h(g,.) does not vanish on the reflecting hyperplane"});
            }
        }
    return report;
}

FieldScalar random_scalar(Field f, std::mt19937_64& rng) {
    if (f.is_rational()) {
        std::uniform_int_distribution<int> num(-4, 4), den(1, 4);
        return FieldScalar::from_rational(Rational(num(rng), den(rng)));
    }
    std::uniform_int_distribution<long long> d(0, f.p - 1);
    return FieldScalar::from_int(d(rng), f);
}

LambdaParam random_lambda(const RepPtr& rep, std::mt19937_64& rng) {
    LambdaParam lambda(rep);
    const int n = rep->group().order(), m = rep->dim();
    for (int g = 0; g < n; ++g)
        for (int i = 0; i < m; ++i) {
            GroupAlgebraElem v(rep->field(), n);
            for (int h = 0; h < n; ++h) v.set(h, random_scalar(rep->field(), rng));
            lambda.set(g, i, std::move(v));
        }
    return lambda;
}

KappaParam random_kappa(const RepPtr& rep, std::mt19937_64& rng) {
    KappaParam kappa(rep);
    const int n = rep->group().order(), m = rep->dim();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            GroupAlgebraElem v(rep->field(), n);
            for (int h = 0; h < n; ++h) v.set(h, random_scalar(rep->field(), rng));
            kappa.set(i, j, std::move(v));
        }
    return kappa;
}

}  // namespace pbwdeform
