#pragma once

#include <map>
#include <sstream>

#include "qalg/module.hpp"

namespace qalg {

// Line-oriented algebra description with [section] headers. Hand-authorable
// and exactly diffable; relations use the first-arrow-leftmost convention.
//
//   [field]
//   Q
//   [vertices]
//   1 2
//   [arrows]
//   a: 1 -> 2
//   [relations]
//   b a b
//   [module M]
//   dim: 1 1
//   a:
//   1
//   [subset T]
//   1 2
struct ModuleSpec {
    std::string name;
    std::vector<size_t> dim_vector;  // per vertex, in vertex order
    // per arrow label: matrix rows (target-dim rows of source-dim entries)
    std::map<std::string, std::vector<std::vector<std::string>>> arrow_entries;
};

struct AlgebraSpecFile {
    FieldSpec field;
    MonomialPresentation presentation;
    std::vector<ModuleSpec> modules;
    std::map<std::string, std::vector<std::string>> subsets;
};

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

[[noreturn]] inline void parse_fail(size_t line_no, const std::string& msg) {
    throw error("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace detail

inline AlgebraSpecFile parse_spec(const std::string& text) {
    AlgebraSpecFile spec;
    std::istringstream in(text);
    std::string raw;
    size_t line_no = 0;
    std::string section;
    std::string section_arg;
    ModuleSpec* cur_module = nullptr;
    std::string cur_arrow;
    bool seen_field = false, seen_vertices = false;
    std::set<std::string> module_names;

    auto close_module_arrow = [&]() { cur_arrow.clear(); };

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        auto toks = detail::tokens(line);
        if (toks.empty()) continue;

        if (line.find('[') != std::string::npos) {
            auto open = line.find('[');
            auto close = line.find(']');
            if (close == std::string::npos || close < open)
                detail::parse_fail(line_no, "malformed section header (expected '[name]')");
            auto inner = detail::tokens(line.substr(open + 1, close - open - 1));
            if (inner.empty()) detail::parse_fail(line_no, "empty section header");
            section = inner[0];
            section_arg = inner.size() > 1 ? inner[1] : "";
            close_module_arrow();
            cur_module = nullptr;
            if (section == "module") {
                if (inner.size() != 2) detail::parse_fail(line_no, "expected '[module <name>]'");
                if (!module_names.insert(section_arg).second)
                    detail::parse_fail(line_no, "duplicate module name '" + section_arg + "'");
                spec.modules.push_back(ModuleSpec{section_arg, {}, {}});
                cur_module = &spec.modules.back();
            } else if (section == "subset") {
                if (inner.size() != 2) detail::parse_fail(line_no, "expected '[subset <name>]'");
                if (spec.subsets.count(section_arg))
                    detail::parse_fail(line_no, "duplicate subset name '" + section_arg + "'");
                spec.subsets[section_arg] = {};
            } else if (section != "field" && section != "vertices" && section != "arrows" &&
                       section != "relations") {
                detail::parse_fail(line_no, "unknown section '" + section + "'");
            }
            continue;
        }

        if (section == "field") {
            if (toks.size() != 1) detail::parse_fail(line_no, "expected a single field token");
            try {
                spec.field = FieldSpec::parse(toks[0]);
            } catch (const error& e) {
                detail::parse_fail(line_no, e.what());
            }
            seen_field = true;
        } else if (section == "vertices") {
            for (const auto& t : toks) spec.presentation.quiver.vertices.push_back(t);
            seen_vertices = true;
        } else if (section == "arrows") {
            // "name: src -> tgt"
            if (toks.size() != 4 || toks[0].back() != ':' || toks[2] != "->")
                detail::parse_fail(line_no, "expected 'name: src -> tgt'");
            std::string name = toks[0].substr(0, toks[0].size() - 1);
            auto find_vertex = [&](const std::string& l) {
                for (size_t v = 0; v < spec.presentation.quiver.vertices.size(); ++v)
                    if (spec.presentation.quiver.vertices[v] == l) return v;
                detail::parse_fail(line_no, "unknown vertex label '" + l + "'");
            };
            spec.presentation.quiver.arrows.push_back(
                {name, find_vertex(toks[1]), find_vertex(toks[3])});
        } else if (section == "relations") {
            PathWord w;
            for (const auto& t : toks) {
                bool found = false;
                for (size_t a = 0; a < spec.presentation.quiver.arrows.size(); ++a)
                    if (spec.presentation.quiver.arrows[a].label == t) {
                        w.arrows.push_back(a);
                        found = true;
                        break;
                    }
                if (!found) detail::parse_fail(line_no, "unknown arrow label '" + t + "'");
            }
            if (w.arrows.size() < 2)
                detail::parse_fail(line_no, "relation must have length >= 2");
            w.start_vertex = spec.presentation.quiver.arrows[w.arrows.front()].src;
            if (!path_composable(spec.presentation.quiver, w))
                detail::parse_fail(line_no, "non-composable relation word");
            spec.presentation.relations.push_back(std::move(w));
        } else if (section == "module") {
            if (!cur_module) detail::parse_fail(line_no, "module content outside a module section");
            if (toks[0] == "dim:") {
                for (size_t k = 1; k < toks.size(); ++k) {
                    try {
                        cur_module->dim_vector.push_back(std::stoul(toks[k]));
                    } catch (...) {
                        detail::parse_fail(line_no, "bad dimension '" + toks[k] + "'");
                    }
                }
                if (cur_module->dim_vector.size() != spec.presentation.quiver.vertices.size())
                    detail::parse_fail(line_no, "dimension vector length must match vertex count");
            } else if (toks.size() == 1 && toks[0].back() == ':') {
                cur_arrow = toks[0].substr(0, toks[0].size() - 1);
                bool known = false;
                for (const auto& a : spec.presentation.quiver.arrows)
                    if (a.label == cur_arrow) known = true;
                if (!known) detail::parse_fail(line_no, "unknown arrow label '" + cur_arrow + "'");
                if (cur_module->arrow_entries.count(cur_arrow))
                    detail::parse_fail(line_no, "duplicate matrix for arrow '" + cur_arrow + "'");
                cur_module->arrow_entries[cur_arrow] = {};
            } else {
                if (cur_arrow.empty())
                    detail::parse_fail(line_no, "matrix row before any 'arrow:' line");
                cur_module->arrow_entries[cur_arrow].push_back(toks);
            }
        } else if (section == "subset") {
            for (const auto& t : toks) {
                bool known = false;
                for (const auto& v : spec.presentation.quiver.vertices)
                    if (v == t) known = true;
                if (!known) detail::parse_fail(line_no, "unknown vertex label '" + t + "'");
                spec.subsets[section_arg].push_back(t);
            }
        } else {
            detail::parse_fail(line_no, "content before any section header");
        }
    }
    if (!seen_field) throw error("spec file missing [field] section");
    if (!seen_vertices) throw error("spec file missing [vertices] section");
    spec.presentation.validate();
    for (const auto& m : spec.modules)
        if (m.dim_vector.empty()) throw error("module '" + m.name + "' missing dim: line");
    return spec;
}

// Canonical rendering; parse(render(s)) reproduces s for valid specs.
inline std::string render_spec(const AlgebraSpecFile& spec) {
    std::ostringstream out;
    out << "[field]\n" << spec.field.name() << "\n";
    out << "[vertices]\n";
    for (size_t v = 0; v < spec.presentation.quiver.vertices.size(); ++v)
        out << (v ? " " : "") << spec.presentation.quiver.vertices[v];
    out << "\n";
    out << "[arrows]\n";
    for (const auto& a : spec.presentation.quiver.arrows)
        out << a.label << ": " << spec.presentation.quiver.vertices[a.src] << " -> "
            << spec.presentation.quiver.vertices[a.tgt] << "\n";
    out << "[relations]\n";
    for (const auto& r : spec.presentation.relations) {
        for (size_t k = 0; k < r.arrows.size(); ++k)
            out << (k ? " " : "") << spec.presentation.quiver.arrows[r.arrows[k]].label;
        out << "\n";
    }
    for (const auto& m : spec.modules) {
        out << "[module " << m.name << "]\n";
        out << "dim:";
        for (size_t d : m.dim_vector) out << " " << d;
        out << "\n";
        for (const auto& [arrow, rows] : m.arrow_entries) {
            out << arrow << ":\n";
            for (const auto& row : rows) {
                for (size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k];
                out << "\n";
            }
        }
    }
    for (const auto& [name, verts] : spec.subsets) {
        out << "[subset " << name << "]\n";
        for (size_t k = 0; k < verts.size(); ++k) out << (k ? " " : "") << verts[k];
        out << "\n";
    }
    return out.str();
}

// Instantiate a named module over the algebra built from the same spec:
// dimension vector per vertex plus one matrix per arrow; all other basis
// actions derive from path words.
template <class F>
ModP<F> module_from_spec(const AlgP<F>& alg, const ModuleSpec& ms) {
    const auto& pres = *alg->mono;
    const auto& q = pres.quiver;
    size_t nv = q.vertices.size();
    require(ms.dim_vector.size() == nv, "module dimension vector length mismatch");
    std::vector<size_t> offset(nv + 1, 0);
    for (size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + ms.dim_vector[v];
    size_t dim = offset[nv];
    const auto& f = alg->field;

    // arrow matrices in global coordinates
    std::vector<Matrix<F>> arrow_act(q.arrows.size(), Matrix<F>(f, dim, dim));
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        size_t rs = ms.dim_vector[q.arrows[a].tgt];
        size_t cs = ms.dim_vector[q.arrows[a].src];
        auto it = ms.arrow_entries.find(q.arrows[a].label);
        if (it == ms.arrow_entries.end()) continue;  // zero matrix
        const auto& rows = it->second;
        require(rows.size() == rs, "module '" + ms.name + "': arrow '" + q.arrows[a].label +
                                       "' expects " + std::to_string(rs) + " rows");
        for (size_t i = 0; i < rs; ++i) {
            require(rows[i].size() == cs, "module '" + ms.name + "': arrow '" +
                                              q.arrows[a].label + "' expects rows of length " +
                                              std::to_string(cs));
            for (size_t j = 0; j < cs; ++j)
                arrow_act[a].at(offset[q.arrows[a].tgt] + i, offset[q.arrows[a].src] + j) =
                    f.parse(rows[i][j]);
        }
    }

    std::vector<Matrix<F>> action;
    for (size_t b = 0; b < alg->dim; ++b) {
        const auto& p = alg->mono_paths[b];
        if (p.length() == 0) {
            Matrix<F> proj(f, dim, dim);
            for (size_t k = offset[p.start_vertex]; k < offset[p.start_vertex + 1]; ++k)
                proj.at(k, k) = f.one();
            action.push_back(std::move(proj));
        } else {
            Matrix<F> m = arrow_act[p.arrows[0]];
            for (size_t k = 1; k < p.arrows.size(); ++k) m = arrow_act[p.arrows[k]] * m;
            action.push_back(std::move(m));
        }
    }
    return make_module(alg, dim, std::move(action));
}

}  // namespace qalg
