#pragma once

#include <memory>
#include <numeric>
#include <vector>

#include "qalg/algebra.hpp"

namespace qalg {

// Finite-dimensional left module, given by one action matrix per algebra
// basis element. Construction checks that the assignment is a unital algebra
// homomorphism.
template <class F>
struct Module {
    AlgP<F> alg;
    size_t dim = 0;
    std::vector<Matrix<F>> action;

    const Matrix<F>& act(size_t basis_index) const { return action[basis_index]; }
    const Matrix<F>& act_idem(size_t v) const { return action[alg->idem[v]]; }

    void validate() const {
        const auto& A = *alg;
        require(action.size() == A.dim, "module needs one action matrix per basis element");
        for (const auto& m : action)
            require(m.rows() == dim && m.cols() == dim, "action matrix shape mismatch");
        if (A.dim == 0) {
            require(dim == 0, "nonzero module over the zero algebra");
            return;
        }
        // unit acts as identity
        Matrix<F> u(A.field, dim, dim);
        for (size_t v : A.idem) u = u + action[v];
        require(u == Matrix<F>::identity(A.field, dim), "unit does not act as identity");
        // multiplicativity on all basis pairs
        for (size_t i = 0; i < A.dim; ++i)
            for (size_t j = 0; j < A.dim; ++j) {
                Matrix<F> lhs = action[i] * action[j];
                Matrix<F> rhs(A.field, dim, dim);
                for (size_t l = 0; l < A.dim; ++l) {
                    const auto& c = A.prod(i, j, l);
                    if (!A.field.is_zero(c)) rhs = rhs + action[l].scaled(c);
                }
                require(lhs == rhs, "action is not an algebra homomorphism (pair " +
                                        A.labels[i] + ", " + A.labels[j] + ")");
            }
    }
};

template <class F>
using ModP = std::shared_ptr<const Module<F>>;

template <class F>
ModP<F> make_module(AlgP<F> alg, size_t dim, std::vector<Matrix<F>> action) {
    auto m = std::make_shared<Module<F>>();
    m->alg = std::move(alg);
    m->dim = dim;
    m->action = std::move(action);
    m->validate();
    return m;
}

template <class F>
ModP<F> zero_module(AlgP<F> alg) {
    std::vector<Matrix<F>> action(alg->dim, Matrix<F>(alg->field, 0, 0));
    return make_module(std::move(alg), 0, std::move(action));
}

// Map of modules over the same algebra; matrix is target.dim x source.dim and
// intertwines every basis action.
template <class F>
struct ModuleMap {
    ModP<F> source, target;
    Matrix<F> mat;

    ModuleMap(ModP<F> src, ModP<F> tgt, Matrix<F> m)
        : source(std::move(src)), target(std::move(tgt)), mat(std::move(m)) {
        require(source->alg == target->alg, "module map across different algebras");
        require(mat.rows() == target->dim && mat.cols() == source->dim,
                "module map matrix shape mismatch");
        for (size_t b = 0; b < source->alg->dim; ++b)
            require(target->act(b) * mat == mat * source->act(b),
                    "module map does not intertwine the action");
    }
};

template <class F>
ModuleMap<F> compose(const ModuleMap<F>& g, const ModuleMap<F>& f) {
    require(f.target == g.source, "non-composable module maps");
    return ModuleMap<F>(f.source, g.target, g.mat * f.mat);
}

// ---- projectives ----

// Indecomposable projective P_v = A e_v: spanned by the basis elements with
// source v; the left action restricts to that span.
template <class F>
std::vector<size_t> projective_basis_indices(const Algebra<F>& A, size_t v) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < A.dim; ++i)
        if (A.src[i] == v) idx.push_back(i);
    return idx;
}

// P = ⊕_j A e_{summands[j]} with its standard basis: per copy, the algebra
// basis elements of that A e_v in basis order. Retains the bookkeeping that
// resolutions, in_add checks and induced Tor/Ext complexes rely on.
template <class F>
struct ProjectiveModule {
    ModP<F> mod;
    std::vector<size_t> summands;                 // vertex index per copy
    std::vector<std::vector<size_t>> copy_basis;  // algebra basis indices per copy
    std::vector<size_t> copy_offset;              // coordinate offset per copy

    size_t copies() const { return summands.size(); }

    std::vector<size_t> multiplicities(size_t n_vertices) const {
        std::vector<size_t> m(n_vertices, 0);
        for (size_t v : summands) ++m[v];
        return m;
    }

    // coordinate of the generator (the e_v basis element) of copy j
    size_t generator_coord(size_t j) const {
        const auto& A = *mod->alg;
        const auto& cb = copy_basis[j];
        for (size_t k = 0; k < cb.size(); ++k)
            if (cb[k] == A.idem[summands[j]]) return copy_offset[j] + k;
        throw std::logic_error("projective copy without generator coordinate");
    }

    // true iff the coordinate belongs to rad P (non-idempotent basis element)
    bool radical_coord(size_t c) const {
        for (size_t j = 0; j < copies(); ++j)
            if (c >= copy_offset[j] && c < copy_offset[j] + copy_basis[j].size()) {
                size_t b = copy_basis[j][c - copy_offset[j]];
                return b != mod->alg->idem[summands[j]];
            }
        throw std::logic_error("coordinate out of range");
    }
};

template <class F>
ProjectiveModule<F> make_projective(AlgP<F> alg, const std::vector<size_t>& summand_vertices) {
    const auto& A = *alg;
    ProjectiveModule<F> P;
    P.summands = summand_vertices;
    size_t total = 0;
    for (size_t v : summand_vertices) {
        P.copy_basis.push_back(projective_basis_indices(A, v));
        P.copy_offset.push_back(total);
        total += P.copy_basis.back().size();
    }
    std::vector<Matrix<F>> action(A.dim, Matrix<F>(A.field, total, total));
    for (size_t b = 0; b < A.dim; ++b) {
        auto& M = action[b];
        for (size_t j = 0; j < P.copies(); ++j) {
            const auto& cb = P.copy_basis[j];
            for (size_t k = 0; k < cb.size(); ++k) {
                // b * cb[k], expressed in the coordinates of the same copy
                for (size_t k2 = 0; k2 < cb.size(); ++k2) {
                    const auto& c = A.prod(b, cb[k], cb[k2]);
                    if (!A.field.is_zero(c)) M.at(P.copy_offset[j] + k2, P.copy_offset[j] + k) = c;
                }
            }
        }
    }
    P.mod = make_module(alg, total, std::move(action));
    return P;
}

template <class F>
ProjectiveModule<F> projective(AlgP<F> alg, size_t v) {
    return make_projective(alg, std::vector<size_t>{v});
}

template <class F>
ModP<F> simple(AlgP<F> alg, size_t v) {
    const auto& A = *alg;
    std::vector<Matrix<F>> action(A.dim, Matrix<F>(A.field, 1, 1));
    action[A.idem[v]].at(0, 0) = A.field.one();
    return make_module(alg, 1, std::move(action));
}

// Left regular module A.
template <class F>
ModP<F> regular_left(AlgP<F> alg) {
    std::vector<Matrix<F>> action;
    for (size_t b = 0; b < alg->dim; ++b) action.push_back(alg->left_mult(b));
    return make_module(alg, alg->dim, std::move(action));
}

// A as a right module over itself, i.e. a left module over the given
// opposite algebra (which must be opposite(*alg_of) structurally).
template <class F>
ModP<F> regular_right(const Algebra<F>& a, AlgP<F> aop) {
    require(is_opposite_pair(a, *aop), "regular_right needs the opposite algebra");
    std::vector<Matrix<F>> action;
    for (size_t b = 0; b < a.dim; ++b) action.push_back(a.right_mult(b));
    return make_module(std::move(aop), a.dim, std::move(action));
}

template <class F>
ModP<F> direct_sum(const Module<F>& a, const Module<F>& b) {
    require(a.alg == b.alg, "direct sum across different algebras");
    std::vector<Matrix<F>> action;
    for (size_t k = 0; k < a.alg->dim; ++k) {
        Matrix<F> m(a.alg->field, a.dim + b.dim, a.dim + b.dim);
        for (size_t i = 0; i < a.dim; ++i)
            for (size_t j = 0; j < a.dim; ++j) m.at(i, j) = a.act(k).at(i, j);
        for (size_t i = 0; i < b.dim; ++i)
            for (size_t j = 0; j < b.dim; ++j) m.at(a.dim + i, a.dim + j) = b.act(k).at(i, j);
        action.push_back(std::move(m));
    }
    return make_module(a.alg, a.dim + b.dim, std::move(action));
}

// ---- structure: radical, top, Loewy and socle series ----

// Basis (as columns) of rad(A)·m.
template <class F>
Matrix<F> radical_span(const Module<F>& m) {
    SpanBuilder<F> span(m.alg->field, m.dim);
    for (size_t r : m.alg->rad) {
        const auto& M = m.act(r);
        for (size_t j = 0; j < m.dim; ++j) span.add(M.col(j));
    }
    return span.basis_cols();
}

// dim e_v · m per vertex.
template <class F>
std::vector<size_t> dim_vector(const Module<F>& m) {
    std::vector<size_t> d;
    for (size_t v = 0; v < m.alg->n_vertices(); ++v) d.push_back(rank(m.act_idem(v)));
    return d;
}

template <class F>
struct TopGenerators {
    std::vector<size_t> multiplicities;        // per vertex
    std::vector<size_t> vertices;              // vertex per generator, in cover order
    std::vector<std::vector<typename F::Elem>> generators;  // lifted generator vectors in m
};

// Multiplicities of each simple in m / rad·m, together with lifted
// generators: a basis of e_v(m/rad m) chosen inside e_v·m.
template <class F>
TopGenerators<F> top_generators(const Module<F>& m) {
    const auto& A = *m.alg;
    TopGenerators<F> out;
    out.multiplicities.assign(A.n_vertices(), 0);
    SpanBuilder<F> span(A.field, m.dim);
    Matrix<F> W = radical_span(m);
    for (size_t j = 0; j < W.cols(); ++j) span.add(W.col(j));
    size_t rad_dim = span.dim();
    for (size_t v = 0; v < A.n_vertices(); ++v) {
        const auto& E = m.act_idem(v);
        for (size_t j = 0; j < m.dim; ++j) {
            auto col = E.col(j);
            if (span.add(col)) {
                ++out.multiplicities[v];
                out.vertices.push_back(v);
                out.generators.push_back(std::move(col));
            }
        }
    }
    if (span.dim() != m.dim || rad_dim + out.vertices.size() != m.dim)
        throw std::logic_error("top computation lost dimensions");
    return out;
}

template <class F>
std::vector<size_t> top(const Module<F>& m) {
    return top_generators(m).multiplicities;
}

// Descending radical series; entry k is the multiplicity vector of
// rad^k m / rad^{k+1} m.
template <class F>
std::vector<std::vector<size_t>> loewy_layers(const Module<F>& m) {
    const auto& A = *m.alg;
    std::vector<std::vector<size_t>> layers;
    // basis of rad^k m as columns
    Matrix<F> cur = Matrix<F>::identity(A.field, m.dim);
    while (cur.cols() > 0) {
        SpanBuilder<F> next(A.field, m.dim);
        for (size_t r : A.rad)
            for (size_t j = 0; j < cur.cols(); ++j) next.add((m.act(r) * cur).col(j));
        Matrix<F> nxt = next.basis_cols();
        std::vector<size_t> layer;
        for (size_t v = 0; v < A.n_vertices(); ++v)
            layer.push_back(rank(m.act_idem(v) * cur) - rank(m.act_idem(v) * nxt));
        layers.push_back(std::move(layer));
        cur = std::move(nxt);
    }
    return layers;
}

// Ascending socle series; entry k is the multiplicity vector of
// soc^{k+1} m / soc^k m, where soc^k = annihilator of rad^k.
template <class F>
std::vector<std::vector<size_t>> socle_layers(const Module<F>& m) {
    const auto& A = *m.alg;
    if (m.dim == 0) return {};
    std::vector<std::vector<size_t>> layers;
    // radical powers of the algebra, as element vectors
    std::vector<std::vector<typename F::Elem>> power;
    for (size_t r : A.rad) power.push_back(A.basis_vec(r));
    auto act_of = [&](const std::vector<typename F::Elem>& a) {
        Matrix<F> M(A.field, m.dim, m.dim);
        for (size_t b = 0; b < A.dim; ++b)
            if (!A.field.is_zero(a[b])) M = M + m.act(b).scaled(a[b]);
        return M;
    };
    std::vector<size_t> prev_dims(A.n_vertices(), 0);
    size_t prev_total = 0;
    while (prev_total < m.dim) {
        // T = {x : rad^k x = 0}: kernel of the stacked action of rad^k spanners
        Matrix<F> stacked(A.field, power.size() * m.dim, m.dim);
        for (size_t t = 0; t < power.size(); ++t) {
            Matrix<F> M = act_of(power[t]);
            for (size_t i = 0; i < m.dim; ++i)
                for (size_t j = 0; j < m.dim; ++j) stacked.at(t * m.dim + i, j) = M.at(i, j);
        }
        Matrix<F> T = power.empty() ? Matrix<F>::identity(A.field, m.dim) : kernel_basis(stacked);
        std::vector<size_t> layer;
        size_t total = 0;
        for (size_t v = 0; v < A.n_vertices(); ++v) {
            size_t d = rank(m.act_idem(v) * T);
            layer.push_back(d - prev_dims[v]);
            prev_dims[v] = d;
            total += d;
        }
        layers.push_back(std::move(layer));
        if (total == prev_total) throw std::logic_error("socle series stalled");
        prev_total = total;
        // next radical power
        SpanBuilder<F> nspan(A.field, A.dim);
        for (size_t r : A.rad)
            for (const auto& w : power) nspan.add(A.multiply(A.basis_vec(r), w));
        auto basis = nspan.basis_cols();
        power.clear();
        for (size_t j = 0; j < basis.cols(); ++j) power.push_back(basis.col(j));
    }
    return layers;
}

// ---- covers and syzygies ----

template <class F>
struct Cover {
    ProjectiveModule<F> proj;
    ModuleMap<F> epi;
};

// Minimal projective cover: P = ⊕ P_v^{top multiplicities} with the epi
// sending each copy generator to a lifted top generator. Checks surjectivity
// and minimality (kernel inside rad P).
template <class F>
Cover<F> projective_cover(const ModP<F>& m) {
    const auto& A = *m->alg;
    auto tg = top_generators(*m);
    auto P = make_projective(m->alg, tg.vertices);
    Matrix<F> epi(A.field, m->dim, P.mod->dim);
    for (size_t j = 0; j < P.copies(); ++j) {
        const auto& cb = P.copy_basis[j];
        for (size_t k = 0; k < cb.size(); ++k) {
            auto img = m->act(cb[k]).apply(tg.generators[j]);
            for (size_t i = 0; i < m->dim; ++i) epi.at(i, P.copy_offset[j] + k) = img[i];
        }
    }
    ModuleMap<F> map(P.mod, m, std::move(epi));
    if (rank(map.mat) != m->dim) throw std::logic_error("projective cover not surjective");
    // minimality: kernel vectors have no component on generator coordinates
    Matrix<F> K = kernel_basis(map.mat);
    for (size_t j = 0; j < P.copies(); ++j) {
        size_t g = P.generator_coord(j);
        for (size_t c = 0; c < K.cols(); ++c)
            if (!A.field.is_zero(K.at(g, c)))
                throw std::logic_error("projective cover not minimal");
    }
    if (P.mod->dim != m->dim + K.cols())
        throw std::logic_error("cover rank bookkeeping failed");
    return {std::move(P), std::move(map)};
}

// ---- submodules and quotients via explicit base change ----

template <class F>
struct SubmoduleResult {
    ModP<F> sub;
    ModuleMap<F> incl;
};

template <class F>
struct SplitResult {
    ModP<F> sub, quot;
    ModuleMap<F> incl, proj;
};

// S: columns span an action-invariant subspace (independent columns).
template <class F>
SubmoduleResult<F> submodule_from_columns(const ModP<F>& m, const Matrix<F>& S) {
    const auto& A = *m->alg;
    std::vector<Matrix<F>> action;
    for (size_t b = 0; b < A.dim; ++b) {
        auto sol = solve(S, m->act(b) * S);
        require(sol.has_value(), "columns do not span an invariant subspace");
        action.push_back(std::move(*sol));
    }
    auto sub = make_module(m->alg, S.cols(), std::move(action));
    return {sub, ModuleMap<F>(sub, m, S)};
}

// Materializes both m ⊇ span(S) and m/span(S) with one base change.
template <class F>
SplitResult<F> split_by_columns(const ModP<F>& m, const Matrix<F>& S) {
    const auto& A = *m->alg;
    const size_t k = S.cols();
    SpanBuilder<F> span(A.field, m->dim);
    for (size_t j = 0; j < k; ++j)
        require(span.add(S.col(j)), "submodule columns not independent");
    std::vector<size_t> extend;
    for (size_t i = 0; i < m->dim; ++i) {
        std::vector<typename F::Elem> unit(m->dim, A.field.zero());
        unit[i] = A.field.one();
        if (span.add(unit)) extend.push_back(i);
    }
    Matrix<F> T(A.field, m->dim, m->dim);
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < m->dim; ++i) T.at(i, j) = S.at(i, j);
    for (size_t j = 0; j < extend.size(); ++j) T.at(extend[j], k + j) = A.field.one();
    auto Tinv = solve(T, Matrix<F>::identity(A.field, m->dim));
    if (!Tinv) throw std::logic_error("base change not invertible");

    std::vector<Matrix<F>> sub_act, quot_act;
    for (size_t b = 0; b < A.dim; ++b) {
        Matrix<F> M = *Tinv * m->act(b) * T;
        Matrix<F> top(A.field, k, k), bottom(A.field, m->dim - k, m->dim - k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) top.at(i, j) = M.at(i, j);
        for (size_t i = k; i < m->dim; ++i) {
            for (size_t j = 0; j < k; ++j)
                require(A.field.is_zero(M.at(i, j)), "columns do not span an invariant subspace");
            for (size_t j = k; j < m->dim; ++j) bottom.at(i - k, j - k) = M.at(i, j);
        }
        sub_act.push_back(std::move(top));
        quot_act.push_back(std::move(bottom));
    }
    auto sub = make_module(m->alg, k, std::move(sub_act));
    auto quot = make_module(m->alg, m->dim - k, std::move(quot_act));
    Matrix<F> projmat(A.field, m->dim - k, m->dim);
    for (size_t i = 0; i < m->dim - k; ++i)
        for (size_t j = 0; j < m->dim; ++j) projmat.at(i, j) = Tinv->at(k + i, j);
    return {sub, quot, ModuleMap<F>(sub, m, S), ModuleMap<F>(m, quot, std::move(projmat))};
}

// Quotient by the image of an injective map.
template <class F>
ModP<F> quotient_module(const ModP<F>& m, const ModuleMap<F>& incl) {
    require(incl.target == m, "inclusion does not land in the module");
    require(rank(incl.mat) == incl.source->dim, "quotient by a non-injective map");
    return split_by_columns(m, incl.mat).quot;
}

template <class F>
SubmoduleResult<F> syzygy_of_cover(const Cover<F>& cover) {
    Matrix<F> K = kernel_basis(cover.epi.mat);
    return submodule_from_columns(cover.proj.mod, K);
}

template <class F>
ModP<F> syzygy(const ModP<F>& m) {
    return syzygy_of_cover(projective_cover(m)).sub;
}

template <class F>
bool is_projective(const ModP<F>& m) {
    auto cover = projective_cover(m);
    return cover.proj.mod->dim == m->dim;
}

// ---- Hom and tensor ----

// Basis of the intertwiner space Hom_A(m, n), solved as one linear system.
template <class F>
std::vector<Matrix<F>> hom_basis(const Module<F>& m, const Module<F>& n) {
    require(m.alg == n.alg, "Hom across different algebras");
    const auto& A = *m.alg;
    const size_t rows_per = n.dim * m.dim;
    Matrix<F> E(A.field, A.dim * rows_per, rows_per);
    // unknown M[i][j] at column i*m.dim + j; equation act_n(b)M - M act_m(b) = 0
    for (size_t b = 0; b < A.dim; ++b)
        for (size_t i = 0; i < n.dim; ++i)
            for (size_t j = 0; j < m.dim; ++j) {
                size_t row = b * rows_per + i * m.dim + j;
                for (size_t k = 0; k < n.dim; ++k) {
                    const auto& c = n.act(b).at(i, k);
                    if (!A.field.is_zero(c))
                        E.at(row, k * m.dim + j) = A.field.add(E.at(row, k * m.dim + j), c);
                }
                for (size_t k = 0; k < m.dim; ++k) {
                    const auto& c = m.act(b).at(k, j);
                    if (!A.field.is_zero(c))
                        E.at(row, i * m.dim + k) = A.field.sub(E.at(row, i * m.dim + k), c);
                }
            }
    Matrix<F> K = kernel_basis(E);
    std::vector<Matrix<F>> basis;
    for (size_t c = 0; c < K.cols(); ++c) {
        Matrix<F> M(A.field, n.dim, m.dim);
        for (size_t i = 0; i < n.dim; ++i)
            for (size_t j = 0; j < m.dim; ++j) M.at(i, j) = K.at(i * m.dim + j, c);
        basis.push_back(std::move(M));
    }
    return basis;
}

template <class F>
size_t hom_dim(const Module<F>& m, const Module<F>& n) {
    return hom_basis(m, n).size();
}

// dim (x ⊗_A y) for x a right A-module (left module over the opposite
// algebra) and y a left A-module: the span quotient of x ⊗_k y by the
// relators x·a ⊗ y − x ⊗ a·y, one kernel/rank computation.
template <class F>
size_t tensor_dim(const Module<F>& x, const Module<F>& y) {
    require(is_opposite_pair(*x.alg, *y.alg), "tensor operands not over opposite algebras");
    const auto& f = x.alg->field;
    const size_t dx = x.dim, dy = y.dim;
    if (dx == 0 || dy == 0) return 0;
    SpanBuilder<F> rel(f, dx * dy);
    std::vector<typename F::Elem> v(dx * dy, f.zero());
    for (size_t b = 0; b < x.alg->dim; ++b) {
        const auto& xa = x.act(b);  // right action of b on x
        const auto& ay = y.act(b);
        for (size_t i = 0; i < dx; ++i)
            for (size_t j = 0; j < dy; ++j) {
                std::fill(v.begin(), v.end(), f.zero());
                for (size_t k = 0; k < dx; ++k)
                    if (!f.is_zero(xa.at(k, i))) v[k * dy + j] = xa.at(k, i);
                for (size_t k = 0; k < dy; ++k)
                    if (!f.is_zero(ay.at(k, j)))
                        v[i * dy + k] = f.sub(v[i * dy + k], ay.at(k, j));
                rel.add(v);
            }
    }
    return dx * dy - rel.dim();
}

// D(m): the dual space as a module over the opposite algebra, action the
// transpose. dual(dual(m)) has identical action matrices.
template <class F>
ModP<F> dual(const Module<F>& m, AlgP<F> aop) {
    require(is_opposite_pair(*m.alg, *aop), "dual needs the opposite algebra");
    std::vector<Matrix<F>> action;
    for (size_t b = 0; b < m.alg->dim; ++b) action.push_back(m.act(b).transpose());
    return make_module(std::move(aop), m.dim, std::move(action));
}

// Pivot-column basis of e_v·m (image of the idempotent projection).
template <class F>
Matrix<F> idempotent_image_basis(const Module<F>& m, size_t v) {
    const auto& E = m.act_idem(v);
    auto rr = rref(E);
    return E.select_cols(rr.pivots);
}

}  // namespace qalg
