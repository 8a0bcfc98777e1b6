#include "pbwdeform/group_algebra.hpp"

namespace pbwdeform {

GroupAlgebraElem ga_multiply(const GroupAlgebraElem& x, const GroupAlgebraElem& y,
                             const FiniteGroup& G) {
    if (!(x.field() == y.field())) throw FieldMismatch{};
    if (x.group_order() != G.order() || y.group_order() != G.order())
        throw std::invalid_argument("group mismatch in kG multiplication");
    GroupAlgebraElem out(x.field(), G.order());
    for (const auto& [g, cg] : x.coeffs())
        for (const auto& [h, ch] : y.coeffs())
            out.add(G.mul(g, h), cg * ch);
    return out;
}

std::string ga_render(const GroupAlgebraElem& x, int identity) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [g, c] : x.coeffs()) {
        if (!out.empty()) out += " + ";
        if (g == identity) out += c.str();
        else if (c.is_one()) out += "g" + std::to_string(g);
        else out += c.str() + "*g" + std::to_string(g);
    }
    return out;
}

}  // namespace pbwdeform
