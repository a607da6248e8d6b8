#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qalg/matrix.hpp"
#include "qalg/quiver.hpp"

namespace qalg {

// Multiplication convention. Path words are written first-arrow-leftmost,
// but the ring product composes like operators: x * y means "apply y, then
// x", so for basis paths word(x * y) = word(y) ++ word(x). With this choice
// the left projective A e_v is spanned by the paths starting at v, and the
// Loewy layer of a path is the simple at its target vertex.
template <class F>
class Algebra {
public:
    using Elem = typename F::Elem;
    using Vec = std::vector<Elem>;

    explicit Algebra(F f) : field(std::move(f)) {}

    F field;
    size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<std::string> vertex_labels;
    std::vector<size_t> idem;        // basis index of e_v per vertex
    std::vector<size_t> rad;         // basis indices spanning the radical
    std::vector<size_t> src, tgt;    // Peirce weights per basis element
    std::optional<MonomialPresentation> mono;  // set when monomial-constructed
    std::vector<PathWord> mono_paths;          // basis words, parallel to labels

    // prod[(i*dim + j)*dim + l] = coefficient of b_l in b_i * b_j
    std::vector<Elem> prod_flat;

    const Elem& prod(size_t i, size_t j, size_t l) const {
        return prod_flat[(i * dim + j) * dim + l];
    }
    Elem& prod(size_t i, size_t j, size_t l) { return prod_flat[(i * dim + j) * dim + l]; }

    size_t n_vertices() const { return idem.size(); }

    Vec zero_vec() const { return Vec(dim, field.zero()); }

    Vec basis_vec(size_t i) const {
        Vec v = zero_vec();
        v[i] = field.one();
        return v;
    }

    Vec unit() const {
        Vec u = zero_vec();
        for (size_t e : idem) u[e] = field.one();
        return u;
    }

    // Bilinear extension of the structure constants.
    Vec multiply(const Vec& x, const Vec& y) const {
        require(x.size() == dim && y.size() == dim, "element dimension mismatch");
        Vec r = zero_vec();
        for (size_t i = 0; i < dim; ++i) {
            if (field.is_zero(x[i])) continue;
            for (size_t j = 0; j < dim; ++j) {
                if (field.is_zero(y[j])) continue;
                auto c = field.mul(x[i], y[j]);
                for (size_t l = 0; l < dim; ++l) {
                    const Elem& s = prod(i, j, l);
                    if (!field.is_zero(s)) r[l] = field.add(r[l], field.mul(c, s));
                }
            }
        }
        return r;
    }

    // Matrix of left multiplication by basis element i on A.
    Matrix<F> left_mult(size_t i) const {
        Matrix<F> m(field, dim, dim);
        for (size_t j = 0; j < dim; ++j)
            for (size_t l = 0; l < dim; ++l) m.at(l, j) = prod(i, j, l);
        return m;
    }

    // Matrix of right multiplication by basis element i on A.
    Matrix<F> right_mult(size_t i) const {
        Matrix<F> m(field, dim, dim);
        for (size_t j = 0; j < dim; ++j)
            for (size_t l = 0; l < dim; ++l) m.at(l, j) = prod(j, i, l);
        return m;
    }

    size_t vertex_index(const std::string& label) const {
        for (size_t v = 0; v < vertex_labels.size(); ++v)
            if (vertex_labels[v] == label) return v;
        throw error("unknown vertex label '" + label + "'");
    }

    void validate() const;
};

template <class F>
using AlgP = std::shared_ptr<const Algebra<F>>;

template <class F>
void Algebra<F>::validate() const {
    require(labels.size() == dim, "label count mismatch");
    require(vertex_labels.size() == idem.size(), "vertex label count mismatch");
    require(prod_flat.size() == dim * dim * dim, "structure constant table size mismatch");
    require(src.size() == dim && tgt.size() == dim, "Peirce weight table size mismatch");
    if (dim == 0) {
        require(idem.empty() && rad.empty(), "zero algebra with idempotents");
        return;
    }
    require(!idem.empty(), "no idempotents");
    require(idem.size() + rad.size() == dim, "basis must split as idempotents + radical");
    {
        std::vector<bool> seen(dim, false);
        for (size_t e : idem) {
            require(e < dim && !seen[e], "bad idempotent index");
            seen[e] = true;
        }
        for (size_t r : rad) {
            require(r < dim && !seen[r], "bad radical index");
            seen[r] = true;
        }
    }

    auto is_basis_vec = [&](const Vec& v, size_t i) {
        for (size_t l = 0; l < dim; ++l) {
            bool want_one = (l == i);
            if (want_one && !field.eq(v[l], field.one())) return false;
            if (!want_one && !field.is_zero(v[l])) return false;
        }
        return true;
    };
    auto is_zero_vec = [&](const Vec& v) {
        for (const auto& x : v)
            if (!field.is_zero(x)) return false;
        return true;
    };

    // orthogonal idempotents
    for (size_t a = 0; a < idem.size(); ++a)
        for (size_t b = 0; b < idem.size(); ++b) {
            Vec p(prod_flat.begin() + (idem[a] * dim + idem[b]) * dim,
                  prod_flat.begin() + (idem[a] * dim + idem[b] + 1) * dim);
            if (a == b)
                require(is_basis_vec(p, idem[a]), "idempotent not idempotent");
            else
                require(is_zero_vec(p), "idempotents not orthogonal");
        }

    // the unit acts as identity on both sides
    Vec u = unit();
    for (size_t i = 0; i < dim; ++i) {
        require(is_basis_vec(multiply(u, basis_vec(i)), i), "unit fails on the left");
        require(is_basis_vec(multiply(basis_vec(i), u), i), "unit fails on the right");
    }

    // Peirce weights: b * e_src(b) = b and e_tgt(b) * b = b
    for (size_t i = 0; i < dim; ++i) {
        require(src[i] < idem.size() && tgt[i] < idem.size(), "Peirce weight out of range");
        Vec right(prod_flat.begin() + (i * dim + idem[src[i]]) * dim,
                  prod_flat.begin() + (i * dim + idem[src[i]] + 1) * dim);
        require(is_basis_vec(right, i), "basis not adapted: b*e_src != b");
        Vec left(prod_flat.begin() + (idem[tgt[i]] * dim + i) * dim,
                 prod_flat.begin() + (idem[tgt[i]] * dim + i + 1) * dim);
        require(is_basis_vec(left, i), "basis not adapted: e_tgt*b != b");
    }

    // radical spans a two-sided ideal
    std::vector<bool> in_rad(dim, false);
    for (size_t r : rad) in_rad[r] = true;
    for (size_t r : rad)
        for (size_t j = 0; j < dim; ++j)
            for (size_t l = 0; l < dim; ++l) {
                if (in_rad[l]) continue;
                require(field.is_zero(prod(r, j, l)) && field.is_zero(prod(j, r, l)),
                        "radical is not an ideal");
            }

    // radical nilpotent: iterate R^{k+1} = rad * R^k until zero
    {
        SpanBuilder<F> cur(field, dim);
        for (size_t r : rad) cur.add(basis_vec(r));
        size_t steps = 0;
        while (cur.dim() > 0) {
            require(++steps <= dim + 1, "radical is not nilpotent");
            SpanBuilder<F> next(field, dim);
            auto basis = cur.basis_cols();
            for (size_t r : rad)
                for (size_t k = 0; k < basis.cols(); ++k)
                    next.add(multiply(basis_vec(r), basis.col(k)));
            cur = std::move(next);
        }
    }

    // associativity on all basis triples
    Vec lhs = zero_vec(), rhs = zero_vec();
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
            for (size_t k = 0; k < dim; ++k) {
                std::fill(lhs.begin(), lhs.end(), field.zero());
                std::fill(rhs.begin(), rhs.end(), field.zero());
                for (size_t l = 0; l < dim; ++l) {
                    const Elem& c = prod(i, j, l);
                    if (!field.is_zero(c))
                        for (size_t m = 0; m < dim; ++m) {
                            const Elem& d = prod(l, k, m);
                            if (!field.is_zero(d)) lhs[m] = field.add(lhs[m], field.mul(c, d));
                        }
                    const Elem& e = prod(j, k, l);
                    if (!field.is_zero(e))
                        for (size_t m = 0; m < dim; ++m) {
                            const Elem& d = prod(i, l, m);
                            if (!field.is_zero(d)) rhs[m] = field.add(rhs[m], field.mul(e, d));
                        }
                }
                for (size_t m = 0; m < dim; ++m)
                    require(field.eq(lhs[m], rhs[m]), "structure constants not associative");
            }
        }
}

// Builds the path algebra of a monomial presentation. Basis = relation-free
// paths; the product of paths is concatenation in traversal order (respecting
// the operator convention above), zero if non-composable or if the result
// contains a relation.
template <class F>
AlgP<F> from_monomial(const MonomialPresentation& pres, F field, const PathBudget& budget = {}) {
    auto paths = path_basis(pres, budget);
    auto alg = std::make_shared<Algebra<F>>(field);
    alg->dim = paths.size();
    alg->mono = pres;
    alg->mono_paths = paths;
    alg->vertex_labels = pres.quiver.vertices;

    std::map<PathWord, size_t> index;
    for (size_t i = 0; i < paths.size(); ++i) index[paths[i]] = i;

    for (const auto& p : paths) alg->labels.push_back(path_label(pres.quiver, p));
    alg->idem.resize(pres.quiver.vertices.size());
    for (size_t i = 0; i < paths.size(); ++i) {
        alg->src.push_back(path_source(pres.quiver, paths[i]));
        alg->tgt.push_back(path_target(pres.quiver, paths[i]));
        if (paths[i].length() == 0)
            alg->idem[paths[i].start_vertex] = i;
        else
            alg->rad.push_back(i);
    }

    auto contains_relation = [&](const std::vector<size_t>& word) {
        for (const auto& r : pres.relations) {
            if (r.arrows.size() > word.size()) continue;
            for (size_t k = 0; k + r.arrows.size() <= word.size(); ++k)
                if (std::equal(r.arrows.begin(), r.arrows.end(), word.begin() + k)) return true;
        }
        return false;
    };

    size_t d = alg->dim;
    alg->prod_flat.assign(d * d * d, field.zero());
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            // b_i * b_j: traverse b_j first, then b_i
            const PathWord& pi = paths[i];
            const PathWord& pj = paths[j];
            if (path_target(pres.quiver, pj) != path_source(pres.quiver, pi)) continue;
            PathWord w;
            w.start_vertex = path_source(pres.quiver, pj);
            w.arrows = pj.arrows;
            w.arrows.insert(w.arrows.end(), pi.arrows.begin(), pi.arrows.end());
            if (contains_relation(w.arrows)) continue;
            auto it = index.find(w);
            if (it != index.end()) alg->prod(i, j, it->second) = field.one();
        }

    alg->validate();
    return alg;
}

// Same basis, reversed product: c'[i][j] = c[j][i]. Involutive.
template <class F>
AlgP<F> opposite(const Algebra<F>& a) {
    auto op = std::make_shared<Algebra<F>>(a.field);
    op->dim = a.dim;
    op->labels = a.labels;
    op->vertex_labels = a.vertex_labels;
    op->idem = a.idem;
    op->rad = a.rad;
    op->src = a.tgt;
    op->tgt = a.src;
    op->prod_flat.assign(a.dim * a.dim * a.dim, a.field.zero());
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j)
            for (size_t l = 0; l < a.dim; ++l) op->prod(i, j, l) = a.prod(j, i, l);
    if (a.mono) {
        MonomialPresentation rev = *a.mono;
        for (auto& arrow : rev.quiver.arrows) std::swap(arrow.src, arrow.tgt);
        for (auto& r : rev.relations) {
            std::reverse(r.arrows.begin(), r.arrows.end());
            r.start_vertex = rev.quiver.arrows[r.arrows.front()].src;
        }
        op->mono = rev;
        op->mono_paths = a.mono_paths;
        for (auto& p : op->mono_paths) {
            std::reverse(p.arrows.begin(), p.arrows.end());
            if (!p.arrows.empty()) p.start_vertex = rev.quiver.arrows[p.arrows.front()].src;
        }
    }
    op->validate();
    return op;
}

// Structural test that `b` is the opposite of `a` (same basis, transposed
// structure constants). Used to sanity-check Tor/Hom call sites.
template <class F>
bool is_opposite_pair(const Algebra<F>& a, const Algebra<F>& b) {
    if (a.dim != b.dim || a.idem != b.idem || a.rad != b.rad) return false;
    if (!(a.field == b.field)) return false;
    if (a.src != b.tgt || a.tgt != b.src) return false;
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j)
            for (size_t l = 0; l < a.dim; ++l)
                if (!a.field.eq(a.prod(i, j, l), b.prod(j, i, l))) return false;
    return true;
}

}  // namespace qalg
