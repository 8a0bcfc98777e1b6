#include "pbwdeform/instance.hpp"

#include <sstream>

namespace pbwdeform {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

struct Cursor {
    std::vector<std::pair<int, std::vector<std::string>>> lines;  // (line no, tokens)
    std::size_t pos = 0;

    bool done() const { return pos >= lines.size(); }
    int line_no() const { return done() ? -1 : lines[pos].first; }
    const std::vector<std::string>& peek() const {
        if (done()) throw ParseError(-1, "unexpected end of input");
        return lines[pos].second;
    }
    std::vector<std::string> take() {
        auto t = peek();
        ++pos;
        return t;
    }
};

int parse_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
}

std::vector<FieldScalar> parse_scalar_row(const std::vector<std::string>& toks,
                                          std::size_t from, std::size_t count, Field f,
                                          int line) {
    if (toks.size() != from + count)
        throw ParseError(line, "expected " + std::to_string(count) + " scalars");
    std::vector<FieldScalar> out;
    for (std::size_t a = from; a < toks.size(); ++a) {
        try {
            out.push_back(parse_scalar(toks[a], f));
        } catch (const std::exception& ex) {
            throw ParseError(line, std::string("bad scalar '") + toks[a] + "': " + ex.what());
        }
    }
    return out;
}

GroupAlgebraElem row_to_ga(const std::vector<FieldScalar>& row, Field f) {
    GroupAlgebraElem out(f, static_cast<int>(row.size()));
    for (std::size_t g = 0; g < row.size(); ++g) out.set(static_cast<int>(g), row[g]);
    return out;
}

Matrix parse_matrix_rows(Cursor& cur, int m, Field f) {
    Matrix mat(m, m, f);
    for (int r = 0; r < m; ++r) {
        int line = cur.line_no();
        auto toks = cur.take();
        if (toks.empty() || toks[0] != "row") throw ParseError(line, "expected a 'row' line");
        auto vals = parse_scalar_row(toks, 1, m, f, line);
        for (int c = 0; c < m; ++c) mat.at(r, c) = vals[c];
    }
    return mat;
}

}  // namespace

Instance parse_instance(const std::string& text) {
    Cursor cur;
    {
        std::istringstream is(text);
        std::string raw;
        int no = 0;
        while (std::getline(is, raw)) {
            ++no;
            if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
            auto toks = tokenize(raw);
            if (!toks.empty()) cur.lines.emplace_back(no, std::move(toks));
        }
    }

    {
        int line = cur.line_no();
        auto hdr = cur.take();
        if (hdr != std::vector<std::string>{"pbw-instance", "1"})
            throw ParseError(line, "expected header 'pbw-instance 1'");
    }

    Instance inst;
    if (!cur.done() && cur.peek()[0] == "name") {
        auto toks = cur.take();
        if (toks.size() != 2) throw ParseError(cur.line_no(), "name takes one token");
        inst.name = toks[1];
    }

    Field field;
    {
        int line = cur.line_no();
        auto toks = cur.take();
        if (toks.size() != 2 || toks[0] != "field")
            throw ParseError(line, "expected 'field Q' or 'field <p>'");
        if (toks[1] == "Q") {
            field = Field{0};
        } else {
            int p = parse_int(toks[1], line);
            if (p < 2 || !is_prime(static_cast<std::uint32_t>(p)))
                throw ParseError(line, "characteristic must be prime");
            field = Field{static_cast<std::uint32_t>(p)};
        }
    }

    int group_line = cur.line_no();
    auto group_toks = cur.take();
    if (group_toks.size() != 3 || group_toks[0] != "group" ||
        (group_toks[1] != "table" && group_toks[1] != "generators"))
        throw ParseError(group_line, "expected 'group table <n>' or 'group generators <k>'");
    const bool by_table = group_toks[1] == "table";
    const int group_count = parse_int(group_toks[2], group_line);
    if (group_count < 1) throw ParseError(group_line, "group size must be positive");

    std::vector<std::vector<int>> table;
    if (by_table) {
        for (int r = 0; r < group_count; ++r) {
            int line = cur.line_no();
            auto toks = cur.take();
            if (toks.empty() || toks[0] != "row") throw ParseError(line, "expected a 'row' line");
            if (static_cast<int>(toks.size()) != group_count + 1)
                throw ParseError(line, "expected " + std::to_string(group_count) + " entries");
            std::vector<int> row;
            for (int c = 1; c <= group_count; ++c) {
                int v = parse_int(toks[c], line);
                if (v < 0 || v >= group_count) throw ParseError(line, "index out of range");
                row.push_back(v);
            }
            table.push_back(std::move(row));
        }
    }

    int rep_line = cur.line_no();
    auto rep_toks = cur.take();
    if (rep_toks.size() != 2 || rep_toks[0] != "representation")
        throw ParseError(rep_line, "expected 'representation <dim>'");
    const int m = parse_int(rep_toks[1], rep_line);
    if (m < 1) throw ParseError(rep_line, "dimension must be positive");

    std::vector<Matrix> matrices(group_count, Matrix(m, m, field));
    std::vector<bool> seen(group_count, false);
    for (int a = 0; a < group_count; ++a) {
        int line = cur.line_no();
        auto toks = cur.take();
        if (toks.size() != 2 || toks[0] != "matrix")
            throw ParseError(line, "expected 'matrix <index>'");
        int idx = parse_int(toks[1], line);
        if (idx < 0 || idx >= group_count || seen[idx])
            throw ParseError(line, "bad or repeated matrix index");
        seen[idx] = true;
        matrices[idx] = parse_matrix_rows(cur, m, field);
    }

    try {
        if (by_table) {
            auto group = std::make_shared<const FiniteGroup>(table);
            inst.rep = std::make_shared<const Representation>(group, matrices);
        } else {
            inst.rep = close_generators(matrices).second;
        }
    } catch (const std::exception& ex) {
        throw ParseError(group_line, std::string("invalid group data: ") + ex.what());
    }
    const int order = inst.rep->group().order();

    inst.lambda = LambdaParam::zero(inst.rep);
    inst.kappa = KappaParam::zero(inst.rep);
    while (!cur.done() && cur.peek()[0] != "end") {
        int line = cur.line_no();
        auto toks = cur.take();
        if (toks[0] == "lambda") {
            if (toks.size() != 3) throw ParseError(line, "expected 'lambda <g> <v>'");
            int g = parse_int(toks[1], line), i = parse_int(toks[2], line);
            if (g < 0 || g >= order || i < 0 || i >= m)
                throw ParseError(line, "lambda index out of range");
            int cline = cur.line_no();
            auto crow = cur.take();
            if (crow.empty() || crow[0] != "coeffs")
                throw ParseError(cline, "expected a 'coeffs' line");
            inst.lambda.set(g, i,
                            row_to_ga(parse_scalar_row(crow, 1, order, field, cline), field));
        } else if (toks[0] == "kappa") {
            if (toks.size() != 3) throw ParseError(line, "expected 'kappa <i> <j>'");
            int i = parse_int(toks[1], line), j = parse_int(toks[2], line);
            if (i < 0 || j < 0 || i >= m || j >= m || i >= j)
                throw ParseError(line, "kappa needs basis indices i < j");
            int cline = cur.line_no();
            auto crow = cur.take();
            if (crow.empty() || crow[0] != "coeffs")
                throw ParseError(cline, "expected a 'coeffs' line");
            inst.kappa.set(i, j, row_to_ga(parse_scalar_row(crow, 1, order, field, cline), field));
        } else if (toks[0] == "general-kappa") {
            if (toks.size() != 3) throw ParseError(line, "expected 'general-kappa <i> <j>'");
            int i = parse_int(toks[1], line), j = parse_int(toks[2], line);
            if (i < 0 || j < 0 || i >= m || j >= m || i >= j)
                throw ParseError(line, "general-kappa needs basis indices i < j");
            GeneralKappaEntry entry;
            entry.vector_part.assign(m, GroupAlgebraElem::zero(field, order));
            int sline = cur.line_no();
            auto srow = cur.take();
            if (srow.empty() || srow[0] != "scalar")
                throw ParseError(sline, "expected a 'scalar' line");
            entry.scalar_part = row_to_ga(parse_scalar_row(srow, 1, order, field, sline), field);
            while (!cur.done() && cur.peek()[0] == "vector") {
                int vline = cur.line_no();
                auto vrow = cur.take();
                if (vrow.size() != static_cast<std::size_t>(order) + 2)
                    throw ParseError(vline, "expected 'vector <k> <coeffs>'");
                int k = parse_int(vrow[1], vline);
                if (k < 0 || k >= m) throw ParseError(vline, "vector index out of range");
                entry.vector_part[k] = row_to_ga(
                    parse_scalar_row(vrow, 2, order, field, vline), field);
            }
            if (!inst.general_kappa) inst.general_kappa = GeneralKappa(inst.rep);
            inst.general_kappa->set(i, j, std::move(entry));
        } else {
            throw ParseError(line, "unknown key '" + toks[0] + "'");
        }
    }
    if (cur.done()) throw ParseError(-1, "missing 'end'");
    cur.take();
    if (!cur.done()) throw ParseError(cur.line_no(), "content after 'end'");
    return inst;
}

std::string render_instance(const Instance& inst) {
    const RepPtr& rep = inst.rep;
    const Field f = rep->field();
    const int order = rep->group().order();
    const int m = rep->dim();
    std::ostringstream os;
    os << "pbw-instance 1\n";
    if (!inst.name.empty()) os << "name " << inst.name << "\n";
    os << "field " << (f.is_rational() ? "Q" : std::to_string(f.p)) << "\n";
    os << "group table " << order << "\n";
    for (int a = 0; a < order; ++a) {
        os << "row";
        for (int b = 0; b < order; ++b) os << " " << rep->group().mul(a, b);
        os << "\n";
    }
    os << "representation " << m << "\n";
    for (int g = 0; g < order; ++g) {
        os << "matrix " << g << "\n";
        for (int r = 0; r < m; ++r) {
            os << "row";
            for (int c = 0; c < m; ++c) os << " " << rep->matrix(g).at(r, c).str();
            os << "\n";
        }
    }
    auto emit_ga = [&](const GroupAlgebraElem& x) {
        for (int g = 0; g < order; ++g) os << " " << x.coeff(g).str();
        os << "\n";
    };
    for (int g = 0; g < order; ++g)
        for (int i = 0; i < m; ++i) {
            if (inst.lambda.value(g, i).is_zero()) continue;
            os << "lambda " << g << " " << i << "\ncoeffs";
            emit_ga(inst.lambda.value(g, i));
        }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (inst.kappa.value(i, j).is_zero()) continue;
            os << "kappa " << i << " " << j << "\ncoeffs";
            emit_ga(inst.kappa.value(i, j));
        }
    if (inst.general_kappa)
        for (const auto& [key, entry] : inst.general_kappa->table()) {
            os << "general-kappa " << key.first << " " << key.second << "\nscalar";
            emit_ga(entry.scalar_part);
            for (int k = 0; k < m; ++k) {
                if (entry.vector_part[k].is_zero()) continue;
                os << "vector " << k;
                emit_ga(entry.vector_part[k]);
            }
        }
    os << "end\n";
    return os.str();
}

std::string instance_digest(const Instance& inst) {
    // FNV-1a over the canonical rendering.
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : render_instance(inst)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

namespace {

RepPtr unipotent_rep(std::uint32_t p) {
    const Field f{p};
    const int n = static_cast<int>(p);
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    auto group = std::make_shared<const FiniteGroup>(table);
    std::vector<Matrix> mats;
    for (int i = 0; i < n; ++i) {
        Matrix mat = Matrix::identity(2, f);
        mat.at(0, 1) = FieldScalar::from_int(i, f);
        mats.push_back(std::move(mat));
    }
    return std::make_shared<const Representation>(group, mats);
}

Instance cyclic_instance(std::uint32_t p, std::string name) {
    Instance inst;
    inst.name = std::move(name);
    inst.rep = unipotent_rep(p);
    const Field f{p};
    const int n = static_cast<int>(p);
    inst.lambda = LambdaParam::zero(inst.rep);
    for (int i = 1; i < n; ++i) {
        GroupAlgebraElem val(f, n);
        val.set(i - 1, FieldScalar::from_int(i, f));
        inst.lambda.set(i, 1, val);
    }
    inst.kappa = KappaParam::zero(inst.rep);
    inst.kappa.set(0, 1, GroupAlgebraElem::basis(f, n, 1 % n));
    return inst;
}

Instance general_kappa_fix() {
    Instance inst;
    inst.name = "general-kappa-fix";
    inst.rep = unipotent_rep(2);
    const Field f{2};
    inst.lambda = LambdaParam::zero(inst.rep);
    inst.kappa = KappaParam::zero(inst.rep);
    GeneralKappa gk(inst.rep);
    GeneralKappaEntry entry;
    // kappa'(v,w) = g - v g^{-1}; over F_2 the inverse of g is g itself.
    entry.scalar_part = GroupAlgebraElem::basis(f, 2, 1);
    entry.vector_part.assign(2, GroupAlgebraElem::zero(f, 2));
    entry.vector_part[0] = -GroupAlgebraElem::basis(f, 2, 1);
    gk.set(0, 1, std::move(entry));
    inst.general_kappa = std::move(gk);
    return inst;
}

Instance s3_coxeter() {
    const Field f{0};
    Matrix s1(2, 2, f), s2(2, 2, f);
    s1.at(0, 0) = FieldScalar::from_int(-1, f);
    s1.at(0, 1) = FieldScalar::one(f);
    s1.at(1, 1) = FieldScalar::one(f);
    s2.at(0, 0) = FieldScalar::one(f);
    s2.at(1, 0) = FieldScalar::one(f);
    s2.at(1, 1) = FieldScalar::from_int(-1, f);
    auto [group, rep] = close_generators({s1, s2});

    auto find = [&](const Matrix& mat) {
        for (int g = 0; g < group->order(); ++g)
            if (rep->matrix(g) == mat) return g;
        throw std::logic_error("generator not found in closure");
    };
    const int i1 = find(s1), i2 = find(s2);

    std::vector<std::vector<FieldScalar>> roots{
        {FieldScalar::one(f), FieldScalar::zero(f)},
        {FieldScalar::zero(f), FieldScalar::one(f)}};
    std::vector<FieldScalar> c(2, FieldScalar::one(f));

    Instance inst;
    inst.name = "s3-coxeter-q";
    inst.rep = rep;
    inst.lambda = build_lambda_coxeter(rep, {i1, i2}, roots, c);
    inst.kappa = KappaParam::zero(rep);
    return inst;
}

Instance skew_trivial() {
    Instance inst;
    inst.name = "skew-trivial";
    inst.rep = unipotent_rep(3);
    inst.lambda = LambdaParam::zero(inst.rep);
    inst.kappa = KappaParam::zero(inst.rep);
    return inst;
}

}  // namespace

std::vector<std::string> corpus_names() {
    return {"cyclic-p2", "cyclic-p3", "cyclic-p5", "cyclic-p7",
            "modular-counterexample", "general-kappa-fix", "s3-coxeter-q", "skew-trivial"};
}

Instance corpus_get(const std::string& name) {
    if (name == "cyclic-p2") return cyclic_instance(2, name);
    if (name == "cyclic-p3") return cyclic_instance(3, name);
    if (name == "cyclic-p5") return cyclic_instance(5, name);
    if (name == "cyclic-p7") return cyclic_instance(7, name);
    if (name == "modular-counterexample") return cyclic_instance(2, name);
    if (name == "general-kappa-fix") return general_kappa_fix();
    if (name == "s3-coxeter-q") return s3_coxeter();
    if (name == "skew-trivial") return skew_trivial();
    std::string known;
    for (const auto& n : corpus_names()) known += (known.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown corpus instance '" + name + "'; known: " + known);
}

}  // namespace pbwdeform
