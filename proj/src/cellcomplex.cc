// Copyright 2026 The cellcss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cellcss/cellcomplex.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "cellcss/error.h"

namespace cellcss {

namespace {

std::optional<size_t> find_name(const std::vector<std::string> &names, const std::string &name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
        return std::nullopt;
    }
    return static_cast<size_t>(it - names.begin());
}

template <typename T>
std::optional<size_t> find_named(const std::vector<T> &cells, const std::string &name) {
    for (size_t i = 0; i < cells.size(); i++) {
        if (cells[i].name == name) {
            return i;
        }
    }
    return std::nullopt;
}

// Union-find over cells of one dimension where each cell is stored as a signed
// multiple of its parent. Roots are always the smallest index of their class.
class SignedUnionFind {
   public:
    enum class Outcome { Merged, AlreadyEqual, Contradiction };

    explicit SignedUnionFind(size_t n) : parent_(n), sign_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::pair<size_t, int> find(size_t i) {
        if (parent_[i] == i) {
            return {i, 1};
        }
        auto [root, s] = find(parent_[i]);
        parent_[i] = root;
        sign_[i] *= s;
        return {root, sign_[i]};
    }

    // Records sa * a ~ sb * b.
    Outcome unite(size_t a, int sa, size_t b, int sb) {
        auto [ra, xa] = find(a);
        auto [rb, xb] = find(b);
        int lhs = sa * xa;
        int rhs = sb * xb;
        if (ra == rb) {
            return lhs == rhs ? Outcome::AlreadyEqual : Outcome::Contradiction;
        }
        if (rb < ra) {
            std::swap(ra, rb);
        }
        parent_[rb] = ra;
        sign_[rb] = lhs * rhs;
        return Outcome::Merged;
    }

   private:
    std::vector<size_t> parent_;
    std::vector<int> sign_;
};

std::string sign_prefix(int sign) {
    return sign < 0 ? "-" : "";
}

template <typename T>
std::string where(const Glued<T> &g) {
    return g.line > 0 ? " (line " + std::to_string(g.line) + ")" : "";
}

std::string describe(const char *kind, const Glued<OrientedRef> &g) {
    return std::string("glue ") + kind + " " + g.a.to_string() + " " + g.b.to_string() + where(g);
}

}  // namespace

std::string OrientedRef::to_string() const {
    return sign_prefix(sign) + cell;
}

BoundaryCircle negate_circle(const BoundaryCircle &circle) {
    BoundaryCircle out(circle.rbegin(), circle.rend());
    for (auto &ref : out) {
        ref.sign = -ref.sign;
    }
    return out;
}

bool circles_equal(const BoundaryCircle &a, const BoundaryCircle &b) {
    if (a.size() != b.size()) {
        return false;
    }
    const size_t n = a.size();
    if (n == 0) {
        return true;
    }
    for (size_t shift = 0; shift < n; shift++) {
        bool same = true;
        for (size_t i = 0; i < n && same; i++) {
            same = a[i] == b[(i + shift) % n];
        }
        if (same) {
            return true;
        }
    }
    return false;
}

std::string circle_to_string(const BoundaryCircle &circle) {
    std::string out = "(";
    for (size_t i = 0; i < circle.size(); i++) {
        out += (i ? ", " : "") + circle[i].to_string();
    }
    return out + ")";
}

std::optional<size_t> CellComplex::vertex_index(const std::string &name) const {
    return find_name(vertices, name);
}

std::optional<size_t> CellComplex::edge_index(const std::string &name) const {
    return find_named(edges, name);
}

std::optional<size_t> CellComplex::face_index(const std::string &name) const {
    return find_named(faces, name);
}

std::string CellComplex::start_of(const OrientedRef &ref) const {
    const Edge &e = edges.at(edge_index(ref.cell).value());
    return ref.sign > 0 ? e.source : e.target;
}

std::string CellComplex::end_of(const OrientedRef &ref) const {
    const Edge &e = edges.at(edge_index(ref.cell).value());
    return ref.sign > 0 ? e.target : e.source;
}

std::vector<std::string> validate(const CellComplex &x) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    auto claim = [&](const std::string &name) {
        if (name.empty()) {
            out.push_back("cell with empty name");
        } else if (!seen.insert(name).second) {
            out.push_back("duplicate cell name '" + name + "'");
        }
    };
    for (const auto &v : x.vertices) {
        claim(v);
    }
    std::set<std::string> vertex_set(x.vertices.begin(), x.vertices.end());
    std::set<std::string> good_edges;
    for (const auto &e : x.edges) {
        claim(e.name);
        bool ok = true;
        for (const auto *end : {&e.source, &e.target}) {
            if (!vertex_set.count(*end)) {
                out.push_back("edge " + e.name + ": unknown vertex '" + *end + "'");
                ok = false;
            }
        }
        if (ok) {
            good_edges.insert(e.name);
        }
    }
    for (const auto &f : x.faces) {
        claim(f.name);
        if (f.boundary.empty()) {
            out.push_back("face " + f.name + ": empty boundary");
            continue;
        }
        bool refs_ok = true;
        for (const auto &ref : f.boundary) {
            if (ref.sign != 1 && ref.sign != -1) {
                out.push_back("face " + f.name + ": bad orientation sign on '" + ref.cell + "'");
                refs_ok = false;
            } else if (!good_edges.count(ref.cell)) {
                out.push_back("face " + f.name + ": unknown edge '" + ref.cell + "'");
                refs_ok = false;
            }
        }
        if (!refs_ok) {
            continue;
        }
        const size_t n = f.boundary.size();
        for (size_t i = 0; i < n; i++) {
            const auto &here = f.boundary[i];
            const auto &next = f.boundary[(i + 1) % n];
            if (x.end_of(here) != x.start_of(next)) {
                out.push_back("face " + f.name + ": circle not closed between " + here.to_string() + " and " +
                              next.to_string());
                break;
            }
        }
    }
    return out;
}

void require_valid(const CellComplex &x) {
    auto diagnostics = validate(x);
    if (!diagnostics.empty()) {
        throw Error(ErrorCode::InvalidComplex, diagnostics.front());
    }
}

CellComplex quotient(const CellComplex &x, const GluingSpec &g) {
    require_valid(x);
    SignedUnionFind vuf(x.vertices.size());
    SignedUnionFind euf(x.edges.size());
    SignedUnionFind fuf(x.faces.size());

    auto vertex_of = [&](const std::string &name, const std::string &context) {
        auto i = x.vertex_index(name);
        if (!i) {
            throw Error(ErrorCode::InvalidArgument, context + ": unknown vertex '" + name + "'");
        }
        return *i;
    };
    auto lookup = [&](const OrientedRef &ref, bool face, const std::string &context) {
        auto i = face ? x.face_index(ref.cell) : x.edge_index(ref.cell);
        if (!i) {
            throw Error(ErrorCode::InvalidArgument,
                        context + ": unknown " + (face ? "face" : "edge") + " '" + ref.cell + "'");
        }
        return *i;
    };

    for (const auto &p : g.vertex_pairs) {
        std::string context = "glue vertex " + p.a + " " + p.b + where(p);
        vuf.unite(vertex_of(p.a, context), 1, vertex_of(p.b, context), 1);
    }
    auto glue_signed = [&](SignedUnionFind &uf, const Glued<OrientedRef> &p, bool face) {
        const char *kind = face ? "face" : "edge";
        std::string context = describe(kind, p);
        size_t a = lookup(p.a, face, context);
        size_t b = lookup(p.b, face, context);
        if (uf.unite(a, p.a.sign, b, p.b.sign) == SignedUnionFind::Outcome::Contradiction) {
            throw Error(ErrorCode::IncoherentGluing,
                        context + " identifies " + kind + " " + p.a.cell + " with its own inverse");
        }
    };
    for (const auto &p : g.edge_pairs) {
        glue_signed(euf, p, false);
    }
    for (const auto &p : g.face_pairs) {
        glue_signed(fuf, p, true);
    }

    // Boundary of each face rewritten in terms of edge class representatives.
    auto canonical = [&](SignedUnionFind &uf, const BoundaryCircle &circle) {
        std::vector<std::pair<size_t, int>> out;
        for (const auto &ref : circle) {
            auto [root, s] = uf.find(*x.edge_index(ref.cell));
            out.emplace_back(root, s * ref.sign);
        }
        return out;
    };
    auto matches_some_rotation = [](const std::vector<std::pair<size_t, int>> &a,
                                    const std::vector<std::pair<size_t, int>> &b) {
        const size_t n = a.size();
        for (size_t shift = 0; shift < n; shift++) {
            bool same = true;
            for (size_t i = 0; i < n && same; i++) {
                same = a[i] == b[(i + shift) % n];
            }
            if (same) {
                return true;
            }
        }
        return false;
    };

    // Identified faces force their boundary edges together. Forced edge merges can
    // make earlier matches trivially hold, so a single pass suffices per face, but
    // repeat until nothing changes to keep the closure obviously complete.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t f = 0; f < x.faces.size(); f++) {
            auto [root, s] = fuf.find(f);
            if (root == f) {
                continue;
            }
            BoundaryCircle mine = s > 0 ? x.faces[f].boundary : negate_circle(x.faces[f].boundary);
            const BoundaryCircle &theirs = x.faces[root].boundary;
            std::string context = "face " + x.faces[f].name + " glued to " + sign_prefix(s) + x.faces[root].name;
            if (mine.size() != theirs.size()) {
                throw Error(ErrorCode::IncoherentGluing, context + ": boundary lengths differ");
            }
            if (matches_some_rotation(canonical(euf, mine), canonical(euf, theirs))) {
                continue;
            }
            bool placed = false;
            const size_t n = mine.size();
            for (size_t shift = 0; shift < n && !placed; shift++) {
                SignedUnionFind trial = euf;
                bool ok = true;
                for (size_t i = 0; i < n && ok; i++) {
                    const auto &a = mine[i];
                    const auto &b = theirs[(i + shift) % n];
                    ok = trial.unite(*x.edge_index(a.cell), a.sign, *x.edge_index(b.cell), b.sign) !=
                         SignedUnionFind::Outcome::Contradiction;
                }
                if (ok) {
                    euf = trial;
                    placed = true;
                }
            }
            if (!placed) {
                throw Error(ErrorCode::IncoherentGluing,
                            context + ": boundaries " + circle_to_string(mine) + " and " + circle_to_string(theirs) +
                                " cannot be matched");
            }
            changed = true;
        }
    }

    // Identified edges force their endpoints together, respecting orientation.
    for (size_t e = 0; e < x.edges.size(); e++) {
        auto [root, s] = euf.find(e);
        const Edge &mine = x.edges[e];
        const Edge &theirs = x.edges[root];
        size_t ms = *x.vertex_index(mine.source), mt = *x.vertex_index(mine.target);
        size_t ts = *x.vertex_index(theirs.source), tt = *x.vertex_index(theirs.target);
        if (s > 0) {
            vuf.unite(ms, 1, ts, 1);
            vuf.unite(mt, 1, tt, 1);
        } else {
            vuf.unite(ms, 1, tt, 1);
            vuf.unite(mt, 1, ts, 1);
        }
    }

    CellComplex out;
    auto vertex_rep = [&](const std::string &name) { return x.vertices[vuf.find(*x.vertex_index(name)).first]; };
    for (size_t v = 0; v < x.vertices.size(); v++) {
        if (vuf.find(v).first == v) {
            out.vertices.push_back(x.vertices[v]);
        }
    }
    for (size_t e = 0; e < x.edges.size(); e++) {
        if (euf.find(e).first == e) {
            out.edges.push_back({x.edges[e].name, vertex_rep(x.edges[e].source), vertex_rep(x.edges[e].target)});
        }
    }
    for (size_t f = 0; f < x.faces.size(); f++) {
        if (fuf.find(f).first != f) {
            continue;
        }
        Face face{x.faces[f].name, {}};
        for (const auto &[root, s] : canonical(euf, x.faces[f].boundary)) {
            face.boundary.push_back({s, x.edges[root].name});
        }
        out.faces.push_back(std::move(face));
    }
    return out;
}

CellComplex direct_sum(const CellComplex &x, const CellComplex &y) {
    std::set<std::string> left;
    left.insert(x.vertices.begin(), x.vertices.end());
    for (const auto &e : x.edges) {
        left.insert(e.name);
    }
    for (const auto &f : x.faces) {
        left.insert(f.name);
    }
    bool clash = false;
    for (const auto &v : y.vertices) {
        clash |= left.count(v) > 0;
    }
    for (const auto &e : y.edges) {
        clash |= left.count(e.name) > 0;
    }
    for (const auto &f : y.faces) {
        clash |= left.count(f.name) > 0;
    }

    CellComplex out;
    auto append = [&](const CellComplex &c, const std::string &prefix) {
        for (const auto &v : c.vertices) {
            out.vertices.push_back(prefix + v);
        }
        for (const auto &e : c.edges) {
            out.edges.push_back({prefix + e.name, prefix + e.source, prefix + e.target});
        }
        for (const auto &f : c.faces) {
            Face face{prefix + f.name, f.boundary};
            for (auto &ref : face.boundary) {
                ref.cell = prefix + ref.cell;
            }
            out.faces.push_back(std::move(face));
        }
    };
    append(x, clash ? "L." : "");
    append(y, clash ? "R." : "");
    return out;
}

CellComplex tensor_product_1d(const CellComplex &x, const CellComplex &y) {
    if (!x.faces.empty() || !y.faces.empty()) {
        throw Error(ErrorCode::DimensionTooHigh, "tensor_product_1d needs complexes without faces");
    }
    auto name = [](const std::string &a, const std::string &b) { return a + "_x_" + b; };
    CellComplex out;
    for (const auto &v : x.vertices) {
        for (const auto &w : y.vertices) {
            out.vertices.push_back(name(v, w));
        }
    }
    for (const auto &v : x.vertices) {
        for (const auto &f : y.edges) {
            out.edges.push_back({name(v, f.name), name(v, f.source), name(v, f.target)});
        }
    }
    for (const auto &e : x.edges) {
        for (const auto &w : y.vertices) {
            out.edges.push_back({name(e.name, w), name(e.source, w), name(e.target, w)});
        }
    }
    for (const auto &e : x.edges) {
        for (const auto &f : y.edges) {
            out.faces.push_back({name(e.name, f.name),
                                 {{1, name(e.name, f.source)},
                                  {1, name(e.target, f.name)},
                                  {-1, name(e.name, f.target)},
                                  {-1, name(e.source, f.name)}}});
        }
    }
    return out;
}

Components connected_components(const CellComplex &x) {
    SignedUnionFind uf(x.vertices.size());
    for (const auto &e : x.edges) {
        auto s = x.vertex_index(e.source);
        auto t = x.vertex_index(e.target);
        if (s && t) {
            uf.unite(*s, 1, *t, 1);
        }
    }
    Components out;
    out.component_of.resize(x.vertices.size());
    std::vector<size_t> id_of_root(x.vertices.size(), SIZE_MAX);
    for (size_t v = 0; v < x.vertices.size(); v++) {
        size_t root = uf.find(v).first;
        if (id_of_root[root] == SIZE_MAX) {
            id_of_root[root] = out.count++;
        }
        out.component_of[v] = id_of_root[root];
    }
    return out;
}

CellComplex lift_classical(const ModMatrix &parity) {
    if (parity.modulus() != 2) {
        throw Error(ErrorCode::BadModulus, "lift_classical needs a binary parity matrix");
    }
    CellComplex out;
    for (size_t r = 0; r < parity.rows(); r++) {
        out.vertices.push_back("v" + std::to_string(r + 1));
    }
    bool needs_infinity = false;
    for (size_t c = 0; c < parity.cols(); c++) {
        std::vector<size_t> hits;
        for (size_t r = 0; r < parity.rows(); r++) {
            if (parity(r, c) != 0) {
                hits.push_back(r);
            }
        }
        if (hits.empty() || hits.size() > 2) {
            throw Error(ErrorCode::BadColumnWeight,
                        "column " + std::to_string(c + 1) + " has weight " + std::to_string(hits.size()));
        }
        std::string edge = "e" + std::to_string(c + 1);
        if (hits.size() == 2) {
            out.edges.push_back({edge, out.vertices[hits[0]], out.vertices[hits[1]]});
        } else {
            out.edges.push_back({edge, out.vertices[hits[0]], "v_inf"});
            needs_infinity = true;
        }
    }
    if (needs_infinity) {
        out.vertices.push_back("v_inf");
    }
    return out;
}

}  // namespace cellcss
