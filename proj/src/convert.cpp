#include "pbwdeform/convert.hpp"

#include "pbwdeform/pbw_check.hpp"

namespace pbwdeform {

GroupAlgebraElem GammaMap::value_vec(const std::vector<FieldScalar>& u) const {
    GroupAlgebraElem out(rep->field(), rep->group().order());
    for (std::size_t i = 0; i < u.size(); ++i)
        out = out + u[i] * values[i];
    return out;
}

GammaMap gamma(const LambdaParam& lambda) {
    const RepPtr& rep = lambda.rep();
    const Field f = rep->field();
    const FiniteGroup& G = rep->group();
    const int n = G.order();
    if (!f.is_rational() && n % static_cast<int>(f.p) == 0)
        throw ModularObstruction(f.p, n);
    const FieldScalar inv_order =
        FieldScalar::one(f) / FieldScalar::from_int(n, f);

    GammaMap out{rep, {}};
    for (int i = 0; i < rep->dim(); ++i) {
        GroupAlgebraElem gi(f, n);
        for (int b = 0; b < n; ++b) {
            GroupAlgebraElem lam = lambda.value_vec(b, rep->act_on_basis(G.inv(b), i));
            for (int a = 0; a < n; ++a)
                gi.add(a, lam.coeff(G.mul(a, b)));
        }
        out.values.push_back(inv_order * gi);
    }
    return out;
}

KappaParam kappa_from_gamma(const LambdaParam& lambda, const GammaMap& g) {
    const RepPtr& rep = lambda.rep();
    const FiniteGroup& G = rep->group();
    KappaParam out(rep);
    for (int j = 0; j < rep->dim(); ++j)
        for (int i = 0; i < j; ++i) {
            GroupAlgebraElem val =
                ga_multiply(g.value(i), g.value(j), G) - ga_multiply(g.value(j), g.value(i), G) +
                lambda.value_linear(g.value(i), j) - lambda.value_linear(g.value(j), i);
            out.set(i, j, val);
        }
    return out;
}

namespace {

GeneratorImages shift_images(const ReductionSystem& sys, const GammaMap& gm, bool plus) {
    const Field f = sys.field();
    GeneratorImages images;
    for (int i = 0; i < sys.dim(); ++i) {
        FreeElem img = FreeElem::letter(f, i);
        for (const auto& [h, c] : gm.values[i].coeffs())
            img.add_term({{sys.group_letter(h)}, 0}, plus ? c : -c);
        images.v_images.push_back(std::move(img));
    }
    for (int g = 0; g < sys.rep()->group().order(); ++g)
        images.g_images.push_back(FreeElem::letter(f, sys.group_letter(g)));
    return images;
}

void require_identity_composite(const GeneratorImages& first, const GeneratorImages& second,
                                const ReductionSystem& end_sys) {
    const Field f = end_sys.field();
    const int m = end_sys.dim();
    auto check = [&](const FreeElem& generator, const SkewElem& expected, const char* what) {
        FreeElem through = apply_images(apply_images(generator, first, m), second, m);
        if (!(normal_form(through, end_sys) == expected))
            throw std::runtime_error(std::string("conversion composite is not the identity on ") +
                                     what);
    };
    for (int i = 0; i < m; ++i)
        check(FreeElem::letter(f, i), SkewElem::basis_vector(end_sys.rep(), i), "a basis vector");
    for (int g = 0; g < end_sys.rep()->group().order(); ++g)
        check(FreeElem::letter(f, end_sys.group_letter(g)),
              SkewElem::group_elem(end_sys.rep(), g), "a group element");
}

}  // namespace

ConversionIso build_conversion_iso(const LambdaParam& lambda) {
    const RepPtr& rep = lambda.rep();
    if (!check_pbw(lambda, KappaParam::zero(rep), rep).pass())
        throw std::invalid_argument("H_{lambda,0} does not have the PBW property");

    ConversionIso out;
    out.gammamap = gamma(lambda);
    out.kappa = kappa_from_gamma(lambda, out.gammamap);

    ReductionSystem source(rep, LambdaParam::zero(rep), out.kappa);
    ReductionSystem target(rep, lambda, KappaParam::zero(rep));
    out.forward = shift_images(target, out.gammamap, /*plus=*/true);
    out.backward = shift_images(source, out.gammamap, /*plus=*/false);

    HomomorphismCheck fwd = verify_homomorphism(out.forward, source.relations(), target);
    if (!fwd.ok)
        throw std::runtime_error("forward conversion map is not well-defined; residual " +
                                 fwd.residual.str());
    HomomorphismCheck bwd = verify_homomorphism(out.backward, target.relations(), source);
    if (!bwd.ok)
        throw std::runtime_error("backward conversion map is not well-defined; residual " +
                                 bwd.residual.str());

    require_identity_composite(out.forward, out.backward, source);
    require_identity_composite(out.backward, out.forward, target);
    return out;
}

}  // namespace pbwdeform
