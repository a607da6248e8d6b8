#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qalg/module.hpp"

namespace qalg {

// Three-valued certified answer for questions quantified over all degrees.
// Refuted always carries a concrete witness; Proven needs a finite
// certificate (a terminating resolution behind it).
struct Verdict {
    enum class Kind { proven, refuted, unknown };
    Kind kind = Kind::unknown;
    size_t degree = 0;    // witness degree if refuted, cutoff if unknown
    std::string witness;  // description of the refuting witness

    static Verdict proven() { return {Kind::proven, 0, ""}; }
    static Verdict refuted(size_t deg, std::string w) {
        return {Kind::refuted, deg, std::move(w)};
    }
    static Verdict unknown_up_to(size_t cutoff) { return {Kind::unknown, cutoff, ""}; }

    bool is_proven() const { return kind == Kind::proven; }
    bool is_refuted() const { return kind == Kind::refuted; }
    bool is_unknown() const { return kind == Kind::unknown; }

    std::string str() const {
        switch (kind) {
            case Kind::proven: return "Proven";
            case Kind::refuted:
                return "Refuted(degree " + std::to_string(degree) +
                       (witness.empty() ? "" : ": " + witness) + ")";
            default: return "UnknownUpTo(" + std::to_string(degree) + ")";
        }
    }
};

// Heuristic evidence that a resolution repeats: the dimension vectors and
// top-multiplicity vectors of the syzygies agree along a window of length
// `period` starting at `lag` and again one period later. Evidence of
// infinitude, not a proof; reports label it as such.
struct PeriodCert {
    size_t lag = 0;
    size_t period = 1;
    bool operator==(const PeriodCert& o) const { return lag == o.lag && period == o.period; }
};

struct DimVerdict {
    enum class Kind { exactly, at_least };
    Kind kind = Kind::exactly;
    size_t value = 0;  // the dimension, or the unreached bound (cutoff + 1)
    std::optional<PeriodCert> cert;

    static DimVerdict exactly(size_t d) { return {Kind::exactly, d, std::nullopt}; }
    static DimVerdict at_least(size_t n, std::optional<PeriodCert> c) {
        return {Kind::at_least, n, c};
    }
    bool is_finite() const { return kind == Kind::exactly; }
    bool operator==(const DimVerdict& o) const {
        return kind == o.kind && value == o.value;
    }
    std::string str() const {
        if (kind == Kind::exactly) return "Exactly(" + std::to_string(value) + ")";
        std::string s = "AtLeast(" + std::to_string(value) + ")";
        if (cert)
            s += " [periodic: lag " + std::to_string(cert->lag) + ", period " +
                 std::to_string(cert->period) + "]";
        return s;
    }
};

template <class F>
struct ResolutionStep {
    ProjectiveModule<F> P;
    ModuleMap<F> d;  // P_i -> P_{i-1}.mod (or the target for i = 0)
};

// Minimal projective resolution truncated at `cutoff`. Syzygy data (the
// modules plus their dimension and top vectors) is retained for periodicity
// detection and for the trace-of-syzygy verifiers.
template <class F>
struct Resolution {
    ModP<F> target;
    std::vector<ResolutionStep<F>> steps;
    size_t cutoff = 0;
    bool terminated = false;
    std::vector<ModP<F>> syzygies;                // Omega^0 = target, Omega^1, ...
    std::vector<std::vector<size_t>> syzygy_dims;  // dim vectors per vertex
    std::vector<std::vector<size_t>> syzygy_tops;  // top multiplicity vectors

    // projective multiplicities per degree (vector over vertices)
    std::vector<std::vector<size_t>> step_multiplicities() const {
        std::vector<std::vector<size_t>> out;
        for (const auto& s : steps)
            out.push_back(s.P.multiplicities(target->alg->n_vertices()));
        return out;
    }

    // projective dimension when terminated: index of the last nonzero step
    size_t finite_length() const {
        if (!terminated) throw std::logic_error("finite_length on unterminated resolution");
        if (steps.empty() || steps.back().P.mod->dim == 0) return 0;
        return steps.size() - 1;
    }
};

template <class F>
Resolution<F> minimal_resolution(const ModP<F>& m, size_t cutoff) {
    Resolution<F> res;
    res.target = m;
    res.cutoff = cutoff;
    ModP<F> cur = m;
    res.syzygies.push_back(cur);
    res.syzygy_dims.push_back(dim_vector(*cur));
    res.syzygy_tops.push_back(top(*cur));
    std::optional<ModuleMap<F>> incl_prev;  // inclusion of cur into the previous step
    for (size_t i = 0; i <= cutoff; ++i) {
        auto cover = projective_cover(cur);
        ModuleMap<F> d = incl_prev ? compose(*incl_prev, cover.epi) : cover.epi;
        if (incl_prev) {
            // image of d_i lies in rad P_{i-1}: no component on generator coordinates
            const auto& prev = res.steps.back().P;
            const auto& f = m->alg->field;
            for (size_t j = 0; j < prev.copies(); ++j) {
                size_t g = prev.generator_coord(j);
                for (size_t c = 0; c < d.mat.cols(); ++c)
                    if (!f.is_zero(d.mat.at(g, c)))
                        throw std::logic_error("resolution differential leaves the radical");
            }
        }
        auto syz = syzygy_of_cover(cover);
        res.steps.push_back({std::move(cover.proj), std::move(d)});
        if (syz.sub->dim == 0) {
            res.terminated = true;
            return res;
        }
        incl_prev = syz.incl;
        cur = syz.sub;
        res.syzygies.push_back(cur);
        res.syzygy_dims.push_back(dim_vector(*cur));
        res.syzygy_tops.push_back(top(*cur));
    }
    return res;
}

// Earliest repeat of syzygy invariants: minimal lag, then minimal period,
// such that the windows [lag, lag+period) and [lag+period, lag+2*period)
// agree in dimension vectors and top multiplicities.
template <class F>
std::optional<PeriodCert> detect_periodicity(const Resolution<F>& res) {
    if (res.terminated) return std::nullopt;
    size_t last = res.syzygy_dims.size() - 1;  // data for Omega^0..Omega^last
    for (size_t lag = 0; lag <= last; ++lag)
        for (size_t period = 1; lag + 2 * period - 1 <= last; ++period) {
            bool ok = true;
            for (size_t i = 0; i < period && ok; ++i)
                ok = res.syzygy_dims[lag + i] == res.syzygy_dims[lag + period + i] &&
                     res.syzygy_tops[lag + i] == res.syzygy_tops[lag + period + i];
            if (ok) return PeriodCert{lag, period};
        }
    return std::nullopt;
}

template <class F>
DimVerdict proj_dim(const ModP<F>& m, size_t cutoff) {
    auto res = minimal_resolution(m, cutoff);
    if (res.terminated) return DimVerdict::exactly(res.finite_length());
    return DimVerdict::at_least(cutoff + 1, detect_periodicity(res));
}

template <class F>
DimVerdict proj_dim(const Resolution<F>& res) {
    if (res.terminated) return DimVerdict::exactly(res.finite_length());
    return DimVerdict::at_least(res.cutoff + 1, detect_periodicity(res));
}

// Injective dimension via duality: inj.dim(m) = proj.dim of D(m) over the
// opposite algebra.
template <class F>
DimVerdict inj_dim(const Module<F>& m, size_t cutoff) {
    auto aop = opposite(*m.alg);
    return proj_dim(dual(m, aop), cutoff);
}

// ---- induced complexes: Tor and Ext dimensions ----

namespace detail {

// chain complex presented by dimensions C_0..C_K and maps T_i: C_i -> C_{i-1}
template <class F>
struct InducedComplex {
    std::vector<size_t> dims;
    std::vector<Matrix<F>> maps;  // maps[i]: C_{i+1} -> C_i, i = 0..K-1
    bool exact_beyond = false;    // resolution terminated inside the window
};

// x (a module over the opposite algebra) tensored against the resolution:
// x ⊗_A (A e_v) is realized as x·e_v with its pivot-column basis.
template <class F>
InducedComplex<F> tensor_complex(const Module<F>& x, const Resolution<F>& res) {
    require(is_opposite_pair(*x.alg, *res.target->alg),
            "tensor_complex operands not over opposite algebras");
    const auto& f = x.alg->field;
    const size_t nv = x.alg->n_vertices();
    std::vector<Matrix<F>> basis;  // per vertex, basis of x·e_v
    for (size_t v = 0; v < nv; ++v) basis.push_back(idempotent_image_basis(x, v));

    InducedComplex<F> cx;
    cx.exact_beyond = res.terminated;
    for (const auto& step : res.steps) {
        size_t d = 0;
        for (size_t v : step.P.summands) d += basis[v].cols();
        cx.dims.push_back(d);
    }
    for (size_t i = 1; i < res.steps.size(); ++i) {
        const auto& Pi = res.steps[i].P;
        const auto& Pprev = res.steps[i - 1].P;
        // offsets of the tensored copies
        std::vector<size_t> off_i(Pi.copies() + 1, 0), off_p(Pprev.copies() + 1, 0);
        for (size_t j = 0; j < Pi.copies(); ++j)
            off_i[j + 1] = off_i[j] + basis[Pi.summands[j]].cols();
        for (size_t j = 0; j < Pprev.copies(); ++j)
            off_p[j + 1] = off_p[j] + basis[Pprev.summands[j]].cols();
        Matrix<F> T(f, cx.dims[i - 1], cx.dims[i]);
        for (size_t j = 0; j < Pi.copies(); ++j) {
            const auto& Bj = basis[Pi.summands[j]];
            auto dcol = res.steps[i].d.mat.col(Pi.generator_coord(j));
            for (size_t t = 0; t < (size_t)Bj.cols(); ++t) {
                auto xi = Bj.col(t);
                // image of xi ⊗ gen_j, collected per target copy
                for (size_t jp = 0; jp < Pprev.copies(); ++jp) {
                    std::vector<typename F::Elem> img(x.dim, f.zero());
                    const auto& cb = Pprev.copy_basis[jp];
                    for (size_t k = 0; k < cb.size(); ++k) {
                        const auto& lam = dcol[Pprev.copy_offset[jp] + k];
                        if (f.is_zero(lam)) continue;
                        auto moved = x.act(cb[k]).apply(xi);  // xi · b
                        for (size_t r = 0; r < x.dim; ++r)
                            img[r] = f.add(img[r], f.mul(lam, moved[r]));
                    }
                    auto coords = solve(basis[Pprev.summands[jp]], img);
                    if (!coords) throw std::logic_error("tensor image left its weight space");
                    for (size_t r = 0; r < coords->size(); ++r)
                        T.at(off_p[jp] + r, off_i[j] + t) = (*coords)[r];
                }
            }
        }
        cx.maps.push_back(std::move(T));
    }
    return cx;
}

// Hom of the resolution into y: Hom_A(A e_v, y) realized as e_v·y.
template <class F>
InducedComplex<F> hom_complex(const Resolution<F>& res, const Module<F>& y) {
    require(res.target->alg == y.alg, "hom_complex across different algebras");
    const auto& f = y.alg->field;
    const size_t nv = y.alg->n_vertices();
    std::vector<Matrix<F>> basis;
    for (size_t v = 0; v < nv; ++v) basis.push_back(idempotent_image_basis(y, v));

    InducedComplex<F> cx;
    cx.exact_beyond = res.terminated;
    for (const auto& step : res.steps) {
        size_t d = 0;
        for (size_t v : step.P.summands) d += basis[v].cols();
        cx.dims.push_back(d);
    }
    // cochain maps delta_i: Hom(P_i, y) -> Hom(P_{i+1}, y); stored at maps[i]
    for (size_t i = 1; i < res.steps.size(); ++i) {
        const auto& Pi = res.steps[i].P;        // source of d_i
        const auto& Pprev = res.steps[i - 1].P;  // target of d_i
        std::vector<size_t> off_i(Pi.copies() + 1, 0), off_p(Pprev.copies() + 1, 0);
        for (size_t j = 0; j < Pi.copies(); ++j)
            off_i[j + 1] = off_i[j] + basis[Pi.summands[j]].cols();
        for (size_t j = 0; j < Pprev.copies(); ++j)
            off_p[j + 1] = off_p[j] + basis[Pprev.summands[j]].cols();
        Matrix<F> D(f, off_i.back(), off_p.back());
        for (size_t jp = 0; jp < Pprev.copies(); ++jp) {
            const auto& Bp = basis[Pprev.summands[jp]];
            for (size_t t = 0; t < (size_t)Bp.cols(); ++t) {
                auto eta = Bp.col(t);  // phi(gen_{jp}) = eta, zero on other copies
                for (size_t j = 0; j < Pi.copies(); ++j) {
                    auto dcol = res.steps[i].d.mat.col(Pi.generator_coord(j));
                    std::vector<typename F::Elem> img(y.dim, f.zero());
                    const auto& cb = Pprev.copy_basis[jp];
                    for (size_t k = 0; k < cb.size(); ++k) {
                        const auto& lam = dcol[Pprev.copy_offset[jp] + k];
                        if (f.is_zero(lam)) continue;
                        auto moved = y.act(cb[k]).apply(eta);  // b · eta
                        for (size_t r = 0; r < y.dim; ++r)
                            img[r] = f.add(img[r], f.mul(lam, moved[r]));
                    }
                    auto coords = solve(basis[Pi.summands[j]], img);
                    if (!coords) throw std::logic_error("hom image left its weight space");
                    for (size_t r = 0; r < coords->size(); ++r)
                        D.at(off_i[j] + r, off_p[jp] + t) = (*coords)[r];
                }
            }
        }
        cx.maps.push_back(std::move(D));
    }
    return cx;
}

}  // namespace detail

// dim Tor_n^A(x, y), computed by resolving y minimally to degree n+1 and
// taking homology of x ⊗ (resolution). Degrees past a terminated resolution
// give 0.
template <class F>
std::vector<size_t> tor_all(const Module<F>& x, const Resolution<F>& res, size_t max_n) {
    if (!res.terminated && res.steps.size() < max_n + 2)
        throw std::logic_error("resolution window too small for the requested Tor degree");
    auto cx = detail::tensor_complex(x, res);
    std::vector<size_t> out;
    for (size_t n = 0; n <= max_n; ++n) {
        if (n >= cx.dims.size()) {
            out.push_back(0);  // beyond a terminated resolution
            continue;
        }
        size_t ker = (n == 0) ? cx.dims[0]
                              : cx.dims[n] - rank(cx.maps[n - 1]);  // dim ker T_n
        size_t im = (n < cx.maps.size()) ? rank(cx.maps[n]) : 0;    // rank T_{n+1}
        out.push_back(ker - im);
    }
    return out;
}

template <class F>
size_t tor_dim(const Module<F>& x, const ModP<F>& y, size_t n) {
    auto res = minimal_resolution(y, n + 1);
    return tor_all(x, res, n)[n];
}

// dim Ext^n_A(x, y) via Hom(resolution of x, y) cohomology.
template <class F>
std::vector<size_t> ext_all(const Resolution<F>& res, const Module<F>& y, size_t max_n) {
    if (!res.terminated && res.steps.size() < max_n + 2)
        throw std::logic_error("resolution window too small for the requested Ext degree");
    auto cx = detail::hom_complex(res, y);
    std::vector<size_t> out;
    for (size_t n = 0; n <= max_n; ++n) {
        if (n >= cx.dims.size()) {
            out.push_back(0);
            continue;
        }
        size_t ker = (n < cx.maps.size()) ? cx.dims[n] - rank(cx.maps[n]) : cx.dims[n];
        size_t im = (n == 0 || n - 1 >= cx.maps.size()) ? 0 : rank(cx.maps[n - 1]);
        out.push_back(ker - im);
    }
    return out;
}

template <class F>
size_t ext_dim(const ModP<F>& x, const Module<F>& y, size_t n) {
    auto res = minimal_resolution(x, n + 1);
    return ext_all(res, y, n)[n];
}

}  // namespace qalg
