#include "wfin/finite_model.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wfin {

FlagModel::FlagModel(int n_, int k_) : n(n_), k(k_)
{
    if (n < 1 || k < 1)
        throw std::invalid_argument("FlagModel: n and k must be >= 1");
}

WeightMatrix lambda_weight(const FlagModel& model, const Composition& a)
{
    if (a.arity() != model.n)
        throw std::invalid_argument("lambda_weight: arity != n");
    if (a.max_entry() > model.k)
        throw std::invalid_argument("lambda_weight: k smaller than an entry of a");
    WeightMatrix w(static_cast<std::size_t>(model.cells()), 0);
    for (int r = 1; r <= model.n; ++r)
        for (int c = 1; c <= a.at_weight(model.n - r + 1); ++c)
            w[static_cast<std::size_t>(model.cell(r, c))] = 1;
    return w;
}

// ---------------------------------------------------------------- shapes

namespace {

std::vector<RowRange> factor_ranges(const FlagModel& model, const Composition& a, bool quotient)
{
    if (a.arity() != model.n)
        throw std::invalid_argument("module: arity != n");
    std::vector<RowRange> out;
    for (const auto& e : elements_of(a)) {
        if (quotient)
            out.push_back({model.n - e.weight + 1, model.n});
        else
            out.push_back({1, model.n - e.weight + 1});
    }
    return out;
}

std::string describe(const char* name, const Composition& a)
{
    std::ostringstream os;
    os << name << a;
    return os.str();
}

bool same_shape(const ModuleShape& x, const ModuleShape& y)
{
    return x.model == y.model && x.factors == y.factors && x.vars == y.vars && x.degree_bound == y.degree_bound;
}

// All monomials supported on the rows of `vars` with degree <= D.
std::vector<Monomial> monomials_in_rows(const FlagModel& model, const RowRange& vars, int D)
{
    std::vector<Monomial> out;
    Monomial cur(static_cast<std::size_t>(model.cells()), 0);
    if (vars.empty()) {
        out.push_back(cur);
        return out;
    }
    const int first = model.cell(vars.lo, 1);
    const int last = model.cell(vars.hi, model.k);
    std::function<void(int, int)> rec = [&](int cell, int left) {
        if (cell > last) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[static_cast<std::size_t>(cell)] = e;
            rec(cell + 1, left - e);
        }
        cur[static_cast<std::size_t>(cell)] = 0;
    };
    rec(first, D);
    return out;
}

}  // namespace

ModuleShape ModuleShape::W(const FlagModel& model, const Composition& a)
{
    return {model, factor_ranges(model, a, false), RowRange{1, 0}, 0, describe("W", a)};
}

ModuleShape ModuleShape::Q(const FlagModel& model, const Composition& a, int D)
{
    if (D < 0)
        throw std::invalid_argument("Q: negative degree bound");
    return {model, factor_ranges(model, a, false), RowRange{1, model.n}, D, describe("Q", a)};
}

ModuleShape ModuleShape::T(const FlagModel& model, int d, const Composition& a)
{
    if (d < 1 || d > model.n)
        throw std::invalid_argument("T: d must lie in [1,n]");
    return {model, factor_ranges(model, a, true), RowRange{1, 0}, 0, describe("T", a)};
}

WeightMatrix ModuleShape::weight(const BasisElement& e) const
{
    WeightMatrix w = e.mono;
    for (int c : e.cells)
        ++w[static_cast<std::size_t>(c)];
    return w;
}

namespace {

// Walks the factor assignments compatible with w; `leaf` receives the cells
// and the leftover weight, which must then be a monomial of the shape.
void walk_weight_space(const ModuleShape& s, WeightMatrix& w, std::vector<int>& cells,
                       const std::function<void(const std::vector<int>&, const WeightMatrix&)>& leaf)
{
    const std::size_t f = cells.size();
    if (f == s.factors.size()) {
        int degree = 0;
        for (int c = 0; c < s.model.cells(); ++c) {
            const int e = w[static_cast<std::size_t>(c)];
            if (e == 0)
                continue;
            if (!s.vars.contains(s.model.row_of(c)))
                return;
            degree += e;
        }
        if (degree <= s.degree_bound)
            leaf(cells, w);
        return;
    }
    const auto& range = s.factors[f];
    for (int r = range.lo; r <= range.hi; ++r) {
        for (int c = 1; c <= s.model.k; ++c) {
            const auto cell = static_cast<std::size_t>(s.model.cell(r, c));
            if (w[cell] == 0)
                continue;
            --w[cell];
            cells.push_back(static_cast<int>(cell));
            walk_weight_space(s, w, cells, leaf);
            cells.pop_back();
            ++w[cell];
        }
    }
}

void check_weight(const ModuleShape& s, const WeightMatrix& w)
{
    if (static_cast<int>(w.size()) != s.model.cells())
        throw std::invalid_argument("weight matrix does not match the model");
    if (std::any_of(w.begin(), w.end(), [](int e) { return e < 0; }))
        throw std::invalid_argument("weight matrix has a negative entry");
}

}  // namespace

std::int64_t ModuleShape::weight_space_dim(const WeightMatrix& w) const
{
    check_weight(*this, w);
    std::int64_t count = 0;
    WeightMatrix rest = w;
    std::vector<int> cells;
    walk_weight_space(*this, rest, cells, [&](const std::vector<int>&, const WeightMatrix&) { ++count; });
    return count;
}

std::vector<BasisElement> ModuleShape::weight_space_basis(const WeightMatrix& w) const
{
    check_weight(*this, w);
    std::vector<BasisElement> out;
    WeightMatrix rest = w;
    std::vector<int> cells;
    walk_weight_space(*this, rest, cells,
                      [&](const std::vector<int>& cs, const WeightMatrix& mono) { out.push_back({mono, cs}); });
    std::sort(out.begin(), out.end());
    return out;
}

TruncatedModule::TruncatedModule(ModuleShape shape) : shape_(std::move(shape))
{
    const auto& m = shape_.model;
    for (const auto& r : shape_.factors)
        if (r.empty() || r.lo < 1 || r.hi > m.n)
            throw std::invalid_argument("TruncatedModule: bad factor range");
    const auto monos = monomials_in_rows(m, shape_.vars, shape_.degree_bound);
    std::vector<std::vector<int>> cell_choices{{}};
    for (const auto& r : shape_.factors) {
        std::vector<std::vector<int>> next;
        for (const auto& prefix : cell_choices) {
            for (int c = m.cell(r.lo, 1); c <= m.cell(r.hi, m.k); ++c) {
                next.push_back(prefix);
                next.back().push_back(c);
            }
        }
        cell_choices = std::move(next);
    }
    basis_.reserve(monos.size() * cell_choices.size());
    for (const auto& mono : monos)
        for (const auto& cells : cell_choices)
            basis_.push_back({mono, cells});
    std::sort(basis_.begin(), basis_.end());
}

int TruncatedModule::index_of(const BasisElement& e) const
{
    auto it = std::lower_bound(basis_.begin(), basis_.end(), e);
    if (it == basis_.end() || *it != e)
        return -1;
    return static_cast<int>(it - basis_.begin());
}

std::int64_t weight_space_dim(const TruncatedModule& m, const WeightMatrix& w)
{
    return m.shape().weight_space_dim(w);
}

// ---------------------------------------------------------------- maps

LinearMap::LinearMap(std::shared_ptr<const TruncatedModule> source, std::shared_ptr<const TruncatedModule> target)
    : source_(std::move(source)), target_(std::move(target)), columns_(source_->dim())
{
}

void LinearMap::set_column(std::size_t j, SparseVec v)
{
    for (const auto& [i, c] : v)
        if (i < 0 || static_cast<std::size_t>(i) >= target_->dim())
            throw std::out_of_range("LinearMap: row index out of range");
    columns_.at(j) = std::move(v);
}

SparseVec combine(std::vector<std::pair<SparseVec, Integer>> parts)
{
    std::map<int, Integer> acc;
    for (const auto& [v, s] : parts)
        for (const auto& [i, c] : v)
            acc[i] += s * c;
    SparseVec out;
    for (auto& [i, c] : acc)
        if (c != 0)
            out.emplace_back(i, std::move(c));
    return out;
}

SparseVec LinearMap::apply(const SparseVec& v) const
{
    std::vector<std::pair<SparseVec, Integer>> parts;
    parts.reserve(v.size());
    for (const auto& [j, c] : v)
        parts.emplace_back(columns_.at(static_cast<std::size_t>(j)), c);
    return combine(std::move(parts));
}

bool LinearMap::operator==(const LinearMap& other) const
{
    return same_shape(source_->shape(), other.source_->shape()) &&
           same_shape(target_->shape(), other.target_->shape()) && columns_ == other.columns_;
}

LinearMap compose(const LinearMap& g, const LinearMap& f)
{
    if (!same_shape(f.target().shape(), g.source().shape()))
        throw std::invalid_argument("compose: target(f) != source(g)");
    LinearMap out(f.source_ptr(), g.target_ptr());
    for (std::size_t j = 0; j < f.source().dim(); ++j)
        out.set_column(j, g.apply(f.column(j)));
    return out;
}

LinearMap identity_map(std::shared_ptr<const TruncatedModule> m)
{
    LinearMap out(m, m);
    for (std::size_t j = 0; j < m->dim(); ++j)
        out.set_column(j, SparseVec{{static_cast<int>(j), Integer(1)}});
    return out;
}

// ---------------------------------------------------------------- Lie action

std::vector<Elementary> lie_generators(const FlagModel& model, const LieAlgebra& algebra)
{
    std::vector<Elementary> out;
    const int special = model.cell(model.n - algebra.d + 1, 1);
    if (algebra.kind == LieAlgebra::Kind::Stabilizer && (algebra.d < 1 || algebra.d > model.n))
        throw std::invalid_argument("lie_generators: d must lie in [1,n]");
    for (int dst = 0; dst < model.cells(); ++dst) {
        if (algebra.kind == LieAlgebra::Kind::Stabilizer && dst == special)
            continue;
        for (int src = 0; src < model.cells(); ++src)
            if (model.row_of(dst) <= model.row_of(src))
                out.push_back({dst, src});
    }
    return out;
}

SparseVec lie_act(const TruncatedModule& m, const Elementary& e, std::size_t j)
{
    const auto& s = m.shape();
    const auto& v = m[j];
    const int dst_row = s.model.row_of(e.dst);
    std::map<BasisElement, Integer> terms;
    const auto src = static_cast<std::size_t>(e.src);
    const auto dst = static_cast<std::size_t>(e.dst);
    if (v.mono[src] > 0 && s.vars.contains(dst_row)) {
        BasisElement w = v;
        --w.mono[src];
        ++w.mono[dst];
        terms[w] += v.mono[src];
    }
    for (std::size_t f = 0; f < v.cells.size(); ++f) {
        if (v.cells[f] != e.src || !s.factors[f].contains(dst_row))
            continue;
        BasisElement w = v;
        w.cells[f] = e.dst;
        terms[w] += 1;
    }
    SparseVec out;
    for (const auto& [w, c] : terms) {
        if (c == 0)
            continue;
        const int i = m.index_of(w);
        if (i < 0)
            throw std::logic_error("lie_act: result left the module");
        out.emplace_back(i, c);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

namespace {

SparseVec lie_act_vec(const TruncatedModule& m, const Elementary& e, const SparseVec& v)
{
    std::vector<std::pair<SparseVec, Integer>> parts;
    for (const auto& [j, c] : v)
        parts.emplace_back(lie_act(m, e, static_cast<std::size_t>(j)), c);
    return combine(std::move(parts));
}

}  // namespace

bool lie_equivariance_check(const LinearMap& f, const LieAlgebra& algebra)
{
    if (!(f.source().model() == f.target().model()))
        throw std::invalid_argument("lie_equivariance_check: models differ");
    for (const auto& e : lie_generators(f.source().model(), algebra)) {
        for (std::size_t j = 0; j < f.source().dim(); ++j) {
            const auto lhs = f.apply(lie_act(f.source(), e, j));
            const auto rhs = lie_act_vec(f.target(), e, f.column(j));
            if (lhs != rhs)
                return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- Q and f_sigma

std::int64_t hom_dim_Q(const Composition& a, const Composition& b, int k, int D)
{
    if (a.arity() != b.arity())
        throw std::invalid_argument("hom_dim_Q: arity mismatch");
    if (k < std::max(a.max_entry(), b.max_entry()) + 1)
        throw std::invalid_argument("hom_dim_Q: k below max entry + 1");
    if (a.total() < b.total())
        return 0;
    if (D < a.total() - b.total())
        throw std::invalid_argument("hom_dim_Q: D below |a| - |b|");
    const FlagModel model(a.arity(), k);
    return ModuleShape::Q(model, b, D).weight_space_dim(lambda_weight(model, a));
}

BasisElement eps_generator(const FlagModel& model, const Composition& a)
{
    if (a.max_entry() > model.k)
        throw std::invalid_argument("eps_generator: k smaller than an entry of a");
    BasisElement e{Monomial(static_cast<std::size_t>(model.cells()), 0), {}};
    for (const auto& x : elements_of(a))
        e.cells.push_back(model.cell(model.n - x.weight + 1, x.index));
    return e;
}

BasisElement f_sigma_image(const FlagModel& model, const WeightedInjection& sigma, const BasisElement& e)
{
    const auto& a = sigma.target();
    if (static_cast<int>(e.cells.size()) != a.total())
        throw std::invalid_argument("f_sigma_image: basis element does not belong to Q_a");
    BasisElement out{e.mono, {}};
    std::vector<bool> matched(e.cells.size(), false);
    for (const auto& t : sigma.images()) {
        const auto pos = static_cast<std::size_t>(element_position(a, t));
        matched[pos] = true;
        out.cells.push_back(e.cells[pos]);
    }
    for (std::size_t p = 0; p < matched.size(); ++p)
        if (!matched[p])
            ++out.mono[static_cast<std::size_t>(e.cells[p])];
    (void)model;
    return out;
}

BasisElement tensor_merge(const Composition& a, const BasisElement& u, const Composition& c, const BasisElement& v)
{
    if (u.mono.size() != v.mono.size())
        throw std::invalid_argument("tensor_merge: models differ");
    BasisElement out{u.mono, {}};
    for (std::size_t p = 0; p < v.mono.size(); ++p)
        out.mono[p] += v.mono[p];
    std::size_t pu = 0, pv = 0;
    for (int w = 1; w <= a.arity(); ++w) {
        for (int q = 0; q < a.at_weight(w); ++q)
            out.cells.push_back(u.cells.at(pu++));
        for (int q = 0; q < c.at_weight(w); ++q)
            out.cells.push_back(v.cells.at(pv++));
    }
    return out;
}

LinearMap build_f_sigma(const WeightedInjection& sigma, int k, int D)
{
    if (!sigma.valid_in(CategoryFlavor::fi()))
        throw std::invalid_argument("build_f_sigma: not an FI(n) morphism");
    const FlagModel model(sigma.source().arity(), k);
    const auto& a = sigma.target();
    const auto& b = sigma.source();
    auto src = std::make_shared<const TruncatedModule>(ModuleShape::Q(model, a, D));
    auto tgt = std::make_shared<const TruncatedModule>(ModuleShape::Q(model, b, D + a.total() - b.total()));
    LinearMap f(src, tgt);
    for (std::size_t j = 0; j < src->dim(); ++j) {
        const int i = tgt->index_of(f_sigma_image(model, sigma, (*src)[j]));
        if (i < 0)
            throw std::logic_error("build_f_sigma: image outside the target");
        f.set_column(j, SparseVec{{i, Integer(1)}});
    }
    return f;
}

// ---------------------------------------------------------------- T_d

int xi_d(const FlagModel& model, int d, int cell)
{
    return cell == model.cell(model.n - d + 1, 1) ? 1 : 0;
}

LinearMap build_Td_morphism(int d, const WeightedInjection& psi, int k)
{
    const auto& b = psi.source();
    const auto& a = psi.target();
    const FlagModel model(a.arity(), k);
    if (d < 1 || d > model.n)
        throw std::invalid_argument("build_Td_morphism: d must lie in [1,n]");
    if (!psi.valid_in(CategoryFlavor::c(d)))
        throw std::invalid_argument("build_Td_morphism: not a C_d morphism");
    auto src = std::make_shared<const TruncatedModule>(ModuleShape::T(model, d, a));
    auto tgt = std::make_shared<const TruncatedModule>(ModuleShape::T(model, d, b));
    const auto b_elems = elements_of(b);
    std::vector<int> pos_of_image;
    std::vector<bool> matched(static_cast<std::size_t>(a.total()), false);
    for (const auto& t : psi.images()) {
        pos_of_image.push_back(element_position(a, t));
        matched[static_cast<std::size_t>(pos_of_image.back())] = true;
    }
    LinearMap f(src, tgt);
    for (std::size_t j = 0; j < src->dim(); ++j) {
        const auto& e = (*src)[j];
        bool zero = false;
        for (std::size_t p = 0; p < matched.size() && !zero; ++p)
            zero = !matched[p] && xi_d(model, d, e.cells[p]) == 0;
        BasisElement out{e.mono, {}};
        for (std::size_t y = 0; y < b_elems.size() && !zero; ++y) {
            const int c = e.cells[static_cast<std::size_t>(pos_of_image[y])];
            // the quotient V/V_{n-w'} -> V/V_{n-w} kills rows <= n-w
            zero = model.row_of(c) <= model.n - b_elems[y].weight;
            out.cells.push_back(c);
        }
        if (zero)
            continue;
        const int i = tgt->index_of(out);
        if (i < 0)
            throw std::logic_error("build_Td_morphism: image outside the target");
        f.set_column(j, SparseVec{{i, Integer(1)}});
    }
    return f;
}

std::vector<WeightedInjection> kernel_generators(int d, const Composition& a)
{
    const int n = a.arity();
    if (d < 1 || d > n)
        throw std::invalid_argument("kernel_generators: d must lie in [1,n]");
    std::vector<WeightedInjection> out;
    // one element x of weight j+1 moves down to weight j
    for (int j = 1; j < n; ++j) {
        for (int q = 1; q <= a.at_weight(j + 1); ++q) {
            auto e = a.entries();
            ++e[static_cast<std::size_t>(j - 1)];
            --e[static_cast<std::size_t>(j)];
            const Composition b(e);
            std::vector<Element> images;
            for (const auto& y : elements_of(b)) {
                if (y.weight == j && y.index == b.at_weight(j))
                    images.push_back({j + 1, q});
                else if (y.weight == j + 1)
                    images.push_back({j + 1, y.index < q ? y.index : y.index + 1});
                else
                    images.push_back(y);
            }
            out.emplace_back(b, a, std::move(images));
        }
    }
    // one element of weight d is deleted
    for (int q = 1; q <= a.at_weight(d); ++q) {
        auto e = a.entries();
        --e[static_cast<std::size_t>(d - 1)];
        const Composition b(e);
        std::vector<Element> images;
        for (const auto& y : elements_of(b)) {
            if (y.weight == d)
                images.push_back({d, y.index < q ? y.index : y.index + 1});
            else
                images.push_back(y);
        }
        out.emplace_back(b, a, std::move(images));
    }
    return out;
}

std::int64_t kernel_intersection_dim(int d, const Composition& a, int k, KernelMode mode)
{
    std::vector<WeightedInjection> family;
    if (mode == KernelMode::Generators) {
        family = kernel_generators(d, a);
    } else {
        for (const auto& b : inward_objects(d, a)) {
            for (auto& psi : enumerate_homs(CategoryFlavor::c(d), b, a)) {
                const auto src = elements_of(b);
                bool iso = psi.is_bijection();
                for (std::size_t p = 0; p < src.size() && iso; ++p)
                    iso = psi.images()[p].weight == src[p].weight;
                if (!iso)
                    family.push_back(std::move(psi));
            }
        }
    }
    const FlagModel model(a.arity(), k);
    const TruncatedModule t(ModuleShape::T(model, d, a));
    std::vector<IntRow> rows(t.dim());
    int offset = 0;
    for (const auto& psi : family) {
        const auto f = build_Td_morphism(d, psi, k);
        for (std::size_t j = 0; j < t.dim(); ++j)
            for (const auto& [i, c] : f.column(j))
                rows[j].emplace_back(offset + i, c);
        offset += static_cast<int>(f.target().dim());
    }
    EchelonBasis basis;
    for (auto& r : rows)
        basis.insert(std::move(r));
    return static_cast<std::int64_t>(t.dim() - basis.rank());
}

// ---------------------------------------------------------------- presentations

Integer evaluate_at_xi(const FlagModel& model, int d, const Polynomial& p)
{
    const int special = model.cell(model.n - d + 1, 1);
    Integer total = 0;
    for (const auto& [m, c] : p) {
        bool survives = true;
        for (int cell = 0; cell < model.cells() && survives; ++cell)
            survives = m[static_cast<std::size_t>(cell)] == 0 || cell == special;
        if (survives)
            total += c;
    }
    return total;
}

PhiResult phi_d_of_presentation(const Presentation& p)
{
    if (p.d < 1 || p.d > p.model.n)
        throw std::invalid_argument("phi_d: d must lie in [1,n]");
    EchelonBasis basis;
    for (const auto& col : p.columns) {
        IntRow row;
        for (const auto& [i, poly] : col) {
            if (i < 0 || i >= p.rank0)
                throw std::out_of_range("phi_d: row index out of range");
            Integer v = evaluate_at_xi(p.model, p.d, poly);
            if (v != 0)
                row.emplace_back(i, std::move(v));
        }
        basis.insert(std::move(row));
    }
    PhiResult out;
    const auto lead = basis.leading_columns();
    for (int i = 0; i < p.rank0; ++i)
        if (!std::binary_search(lead.begin(), lead.end(), i))
            out.basis.push_back(i);
    out.dim = out.basis.size();
    return out;
}

namespace {

Polynomial constant(const FlagModel& model, const Integer& c)
{
    return {{Monomial(static_cast<std::size_t>(model.cells()), 0), c}};
}

int dim_of(const ModuleShape& s)
{
    int d = 1;
    for (const auto& r : s.factors)
        d *= (r.hi - r.lo + 1) * s.model.k;
    return d;
}

}  // namespace

Presentation free_presentation(const FlagModel& model, int d, int dim_v)
{
    return {model, d, dim_v, {}};
}

Presentation doubled_presentation(const FlagModel& model, int d, int dim_v, const Polynomial& p)
{
    Presentation out{model, d, 2 * dim_v, {}};
    for (int j = 0; j < dim_v; ++j)
        out.columns.push_back({{j, p}, {dim_v + j, constant(model, 1)}});
    return out;
}

Presentation torsion_presentation(const FlagModel& model, int d, const Composition& c, int m)
{
    if (m < 1)
        throw std::invalid_argument("torsion_presentation: m must be >= 1");
    const int dim_w = dim_of(ModuleShape::W(model, c));
    Presentation out{model, d, dim_w, {}};
    const int r = model.n - d + 1;
    const RowRange row{r, r};
    for (const auto& mono : monomials_in_rows(model, row, m)) {
        if (std::accumulate(mono.begin(), mono.end(), 0) != m)
            continue;
        for (int j = 0; j < dim_w; ++j)
            out.columns.push_back({{j, Polynomial{{mono, Integer(1)}}}});
    }
    return out;
}

Presentation fsigma_presentation(const FlagModel& model, int d, const WeightedInjection& sigma)
{
    const TruncatedModule wa(ModuleShape::W(model, sigma.target()));
    const TruncatedModule wb(ModuleShape::W(model, sigma.source()));
    Presentation out{model, d, static_cast<int>(wb.dim()), {}};
    for (const auto& e : wa.basis()) {
        BasisElement img = f_sigma_image(model, sigma, e);
        Monomial mono = img.mono;
        img.mono.assign(img.mono.size(), 0);
        const int i = wb.index_of(img);
        if (i < 0)
            throw std::logic_error("fsigma_presentation: image outside W_b");
        out.columns.push_back({{i, Polynomial{{mono, Integer(1)}}}});
    }
    return out;
}

}  // namespace wfin
