#include "pbwdeform/pbw_check.hpp"

#include <sstream>

namespace pbwdeform {

namespace {

GroupAlgebraElem times_right(const GroupAlgebraElem& x, int h, const FiniteGroup& G) {
    GroupAlgebraElem out(x.field(), G.order());
    for (const auto& [g, c] : x.coeffs()) out.add(G.mul(g, h), c);
    return out;
}

GroupAlgebraElem times_left(int g, const GroupAlgebraElem& x, const FiniteGroup& G) {
    GroupAlgebraElem out(x.field(), G.order());
    for (const auto& [h, c] : x.coeffs()) out.add(G.mul(g, h), c);
    return out;
}

void record_ga_failure(ConditionStatus& st, std::vector<int> tuple,
                       const GroupAlgebraElem& residual, int identity) {
    st.pass = false;
    ++st.failure_count;
    if (!st.witness) {
        ConditionWitness w;
        w.tuple = std::move(tuple);
        w.residual_ga = residual;
        w.text = ga_render(residual, identity);
        st.witness = std::move(w);
    }
}

void record_vec_failure(ConditionStatus& st, std::vector<int> tuple,
                        const std::vector<FieldScalar>& residual) {
    st.pass = false;
    ++st.failure_count;
    if (!st.witness) {
        ConditionWitness w;
        w.tuple = std::move(tuple);
        w.residual_vec = residual;
        std::string t = "(";
        for (std::size_t i = 0; i < residual.size(); ++i)
            t += (i ? ", " : "") + residual[i].str();
        w.text = t + ")";
        st.witness = std::move(w);
    }
}

}  // namespace

ConditionReport check_pbw(const LambdaParam& lambda, const KappaParam& kappa,
                          const RepPtr& rep) {
    if (!same_rep(lambda.rep(), rep) || !same_rep(kappa.rep(), rep))
        throw std::invalid_argument("parameters and representation do not match");
    const auto& G = rep->group();
    const int n = G.order(), m = rep->dim(), e = G.identity();
    const Field f = rep->field();
    ConditionReport report;

    // (1) lambda(gh, v) = lambda(g, ^h v) h + g lambda(h, v)
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int i = 0; i < m; ++i) {
                GroupAlgebraElem rhs =
                    times_right(lambda.value_vec(g, rep->act_on_basis(h, i)), h, G) +
                    times_left(g, lambda.value(h, i), G);
                GroupAlgebraElem residual = lambda.value(G.mul(g, h), i) - rhs;
                if (!residual.is_zero())
                    record_ga_failure(report.conditions[0], {g, h, i}, residual, e);
            }

    // (2) kappa(^g u, ^g v) g - g kappa(u, v) = lambda(lambda(g,v), u) - lambda(lambda(g,u), v)
    for (int g = 0; g < n; ++g)
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                GroupAlgebraElem lhs =
                    times_right(kappa.value_vec(rep->act_on_basis(g, i),
                                                rep->act_on_basis(g, j)), g, G) -
                    times_left(g, kappa.value(i, j), G);
                GroupAlgebraElem rhs = lambda.value_linear(lambda.value(g, j), i) -
                                       lambda.value_linear(lambda.value(g, i), j);
                GroupAlgebraElem residual = lhs - rhs;
                if (!residual.is_zero())
                    record_ga_failure(report.conditions[1], {g, i, j}, residual, e);
            }

    // (3) lambda_h(g,v)(^h u - ^g u) = lambda_h(g,u)(^h v - ^g v) in V
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) {
                    const FieldScalar li = lambda.value(g, i).coeff(h);
                    const FieldScalar lj = lambda.value(g, j).coeff(h);
                    if (li.is_zero() && lj.is_zero()) continue;
                    auto hu = rep->act_on_basis(h, i), gu = rep->act_on_basis(g, i);
                    auto hv = rep->act_on_basis(h, j), gv = rep->act_on_basis(g, j);
                    std::vector<FieldScalar> residual(m, FieldScalar::zero(f));
                    for (int a = 0; a < m; ++a)
                        residual[a] = lj * (hu[a] - gu[a]) - li * (hv[a] - gv[a]);
                    bool zero = true;
                    for (const auto& x : residual) zero = zero && x.is_zero();
                    if (!zero)
                        record_vec_failure(report.conditions[2], {g, h, i, j}, residual);
                }

    // (4) kappa_g(u,v)(^g w - w) + kappa_g(v,w)(^g u - u) + kappa_g(w,u)(^g v - v) = 0 in V
    for (int g = 0; g < n; ++g)
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (int k = j + 1; k < m; ++k) {
                    auto diff = [&](int idx) {
                        auto img = rep->act_on_basis(g, idx);
                        std::vector<FieldScalar> d(m, FieldScalar::zero(f));
                        for (int a = 0; a < m; ++a)
                            d[a] = img[a] - (a == idx ? FieldScalar::one(f)
                                                      : FieldScalar::zero(f));
                        return d;
                    };
                    auto du = diff(i), dv = diff(j), dw = diff(k);
                    const FieldScalar kuv = kappa.component(g, i, j);
                    const FieldScalar kvw = kappa.component(g, j, k);
                    const FieldScalar kwu = kappa.component(g, k, i);
                    std::vector<FieldScalar> residual(m, FieldScalar::zero(f));
                    for (int a = 0; a < m; ++a)
                        residual[a] = kuv * dw[a] + kvw * du[a] + kwu * dv[a];
                    bool zero = true;
                    for (const auto& x : residual) zero = zero && x.is_zero();
                    if (!zero)
                        record_vec_failure(report.conditions[3], {g, i, j, k}, residual);
                }

    // (5) lambda(kappa(u,v), w) + lambda(kappa(v,w), u) + lambda(kappa(w,u), v) = 0 in kG
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                GroupAlgebraElem residual =
                    lambda.value_linear(kappa.value(i, j), k) +
                    lambda.value_linear(kappa.value(j, k), i) +
                    lambda.value_linear(kappa.value(k, i), j);
                if (!residual.is_zero())
                    record_ga_failure(report.conditions[4], {i, j, k}, residual, e);
            }

    return report;
}

std::string ConditionReport::render(bool structured) const {
    std::ostringstream out;
    for (int c = 0; c < 5; ++c) {
        const auto& st = conditions[c];
        if (structured) {
            out << "condition " << (c + 1) << " status "
                << (st.pass ? "pass" : "fail");
            if (st.witness) {
                out << " witness";
                for (int t : st.witness->tuple) out << " " << t;
                out << " residual " << st.witness->text
                    << " failures " << st.failure_count;
            }
            out << "\n";
        } else {
            out << "condition (" << (c + 1) << "): " << (st.pass ? "pass" : "FAIL");
            if (st.witness) {
                out << "  [witness tuple";
                for (int t : st.witness->tuple) out << " " << t;
                out << "; residual " << st.witness->text << "; "
                    << st.failure_count << " failure(s)]";
            }
            out << "\n";
        }
    }
    out << (structured ? "verdict " : "overall: ") << (pass() ? "PBW" : "not PBW") << "\n";
    return out.str();
}

std::vector<std::pair<LambdaParam, KappaParam>>
enumerate_instances(const InstanceEnumSpec& spec) {
    const RepPtr& rep = spec.rep;
    const auto& G = rep->group();
    const int n = G.order(), m = rep->dim(), e = G.identity();
    const Field f = rep->field();
    std::vector<std::pair<LambdaParam, KappaParam>> out;

    if (spec.exhaustive) {
        if (f.is_rational())
            throw std::invalid_argument("exhaustive enumeration over the rationals");
        // free slots: lambda(g, v_i) for g != identity, kappa(v_i, v_j) for i < j
        std::vector<std::pair<int, int>> lambda_slots;
        for (int g = 0; g < n; ++g)
            if (g != e)
                for (int i = 0; i < m; ++i) lambda_slots.emplace_back(g, i);
        std::vector<std::pair<int, int>> kappa_slots;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) kappa_slots.emplace_back(i, j);

        const std::size_t slots = lambda_slots.size() + kappa_slots.size();
        double total_log = static_cast<double>(slots) * n * std::log2(double(f.p));
        if (total_log > 24)
            throw std::invalid_argument("exhaustive family too large to enumerate");

        // each slot is a full kG element: p^n choices, counted in base p
        std::vector<std::vector<long long>> digits(slots, std::vector<long long>(n, 0));
        auto build = [&] {
            LambdaParam lambda(rep);
            KappaParam kappa(rep);
            std::size_t s = 0;
            for (const auto& [g, i] : lambda_slots) {
                GroupAlgebraElem v(f, n);
                for (int h = 0; h < n; ++h)
                    v.set(h, FieldScalar::from_int(digits[s][h], f));
                lambda.set(g, i, std::move(v));
                ++s;
            }
            for (const auto& [i, j] : kappa_slots) {
                GroupAlgebraElem v(f, n);
                for (int h = 0; h < n; ++h)
                    v.set(h, FieldScalar::from_int(digits[s][h], f));
                kappa.set(i, j, std::move(v));
                ++s;
            }
            out.emplace_back(std::move(lambda), std::move(kappa));
        };
        while (true) {
            build();
            // odometer increment
            std::size_t s = 0;
            int h = 0;
            while (s < slots) {
                if (++digits[s][h] < f.p) break;
                digits[s][h] = 0;
                if (++h == n) { h = 0; ++s; }
            }
            if (s == slots) break;
        }
        return out;
    }

    std::mt19937_64 rng(spec.seed);
    for (int c = 0; c < spec.count; ++c)
        out.emplace_back(random_lambda(rep, rng), random_kappa(rep, rng));
    return out;
}

}  // namespace pbwdeform
