#include "pbwdeform/group.hpp"

#include <algorithm>
#include <map>

namespace pbwdeform {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, bool trusted)
    : table_(std::move(table)) {
    const int n = static_cast<int>(table_.size());
    if (n == 0) throw std::invalid_argument("empty multiplication table");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("multiplication table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
    }
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = table_[e][x] == x && table_[x][e] == x;
        if (ok) { identity_ = e; break; }
    }
    if (identity_ < 0) throw std::invalid_argument("table has no identity element");
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) { inverse_[a] = b; break; }
        if (inverse_[a] < 0) throw std::invalid_argument("table element has no inverse");
    }
    if (!trusted) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        throw std::invalid_argument("multiplication table is not associative");
    }
    // conjugacy classes
    class_of_.assign(n, -1);
    for (int g = 0; g < n; ++g) {
        if (class_of_[g] >= 0) continue;
        int id = static_cast<int>(classes_.size());
        std::vector<int> cls;
        for (int h = 0; h < n; ++h) {
            int c = table_[table_[h][g]][inverse_[h]];
            if (class_of_[c] < 0) { class_of_[c] = id; cls.push_back(c); }
        }
        std::sort(cls.begin(), cls.end());
        classes_.push_back(std::move(cls));
    }
}

Representation::Representation(std::shared_ptr<const FiniteGroup> group,
                               std::vector<Matrix> matrices)
    : group_(std::move(group)), matrices_(std::move(matrices)) {
    const int n = group_->order();
    if (static_cast<int>(matrices_.size()) != n)
        throw std::invalid_argument("one matrix per group element required");
    dim_ = static_cast<int>(matrices_[0].rows());
    field_ = matrices_[0].field();
    for (const auto& m : matrices_) {
        if (static_cast<int>(m.rows()) != dim_ || static_cast<int>(m.cols()) != dim_ ||
            !(m.field() == field_))
            throw std::invalid_argument("representation matrices must share size and field");
        if (!m.inverse()) throw std::invalid_argument("representation matrix is singular");
    }
    if (!(matrices_[group_->identity()] == Matrix::identity(dim_, field_)))
        throw std::invalid_argument("identity element must act as the identity matrix");
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (!(matrices_[g] * matrices_[h] == matrices_[group_->mul(g, h)]))
                throw std::invalid_argument("matrices do not respect the group table");
}

std::vector<FieldScalar> Representation::act_on_basis(int g, int i) const {
    std::vector<FieldScalar> out(dim_, FieldScalar::zero(field_));
    for (int j = 0; j < dim_; ++j) out[j] = matrices_[g].at(j, i);
    return out;
}

bool same_rep(const RepPtr& a, const RepPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (!(a->field() == b->field()) || a->dim() != b->dim() ||
        a->group().order() != b->group().order())
        return false;
    if (a->group().table() != b->group().table()) return false;
    for (int g = 0; g < a->group().order(); ++g)
        if (!(a->matrix(g) == b->matrix(g))) return false;
    return true;
}

std::pair<std::shared_ptr<const FiniteGroup>, RepPtr>
close_generators(const std::vector<Matrix>& generators, int cap) {
    if (generators.empty()) throw std::invalid_argument("no generators given");
    const Field f = generators[0].field();
    const std::size_t d = generators[0].rows();
    for (const auto& g : generators) {
        if (g.rows() != d || g.cols() != d || !(g.field() == f))
            throw std::invalid_argument("generators must be square, equal-size, same-field");
        if (!g.inverse()) throw std::invalid_argument("singular generator");
    }
    std::vector<Matrix> elems{Matrix::identity(d, f)};
    std::map<std::vector<FieldScalar>, int> index;
    auto key = [&](const Matrix& m) {
        std::vector<FieldScalar> k;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) k.push_back(m.at(i, j));
        return k;
    };
    index[key(elems[0])] = 0;
    // breadth-first closure
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : generators) {
            Matrix prod = elems[head] * g;
            auto k = key(prod);
            if (index.count(k)) continue;
            if (static_cast<int>(elems.size()) >= cap)
                throw std::runtime_error("group closure exceeds cap (infinite or too large)");
            index[k] = static_cast<int>(elems.size());
            elems.push_back(std::move(prod));
        }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[a][b] = index.at(key(elems[a] * elems[b]));
    auto group = std::make_shared<const FiniteGroup>(std::move(table), /*trusted=*/true);
    auto rep = std::make_shared<const Representation>(group, std::move(elems));
    return {group, rep};
}

FixedSpace fixed_space(const Representation& rep, int g) {
    if (g < 0 || g >= rep.group().order())
        throw std::out_of_range("group element index out of range");
    Matrix m = rep.matrix(g) - Matrix::identity(rep.dim(), rep.field());
    FixedSpace fs;
    fs.basis = m.kernel_basis();
    fs.codim = rep.dim() - static_cast<int>(fs.basis.size());
    return fs;
}

ElementClass classify_element(const Representation& rep, int g) {
    switch (fixed_space(rep, g).codim) {
        case 0: return ElementClass::IdentityAction;
        case 1: return ElementClass::Reflection;
        case 2: return ElementClass::Codim2;
        default: return ElementClass::Other;
    }
}

}  // namespace pbwdeform
