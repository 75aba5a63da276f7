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

#include <map>

#include "cellcss/cellcomplex.h"
#include "cellcss/error.h"

namespace cellcss {

namespace {

OrientedRef P(const char *name) {
    return {1, name};
}

OrientedRef N(const char *name) {
    return {-1, name};
}

std::vector<std::string> numbered(const char *prefix, int64_t count) {
    std::vector<std::string> out;
    for (int64_t i = 1; i <= count; i++) {
        out.push_back(prefix + std::to_string(i));
    }
    return out;
}

CellComplex square() {
    CellComplex x;
    x.vertices = {"v1", "v2", "v3", "v4"};
    x.edges = {{"e1", "v1", "v2"}, {"e2", "v2", "v3"}, {"e3", "v3", "v4"}, {"e4", "v4", "v1"}};
    x.faces = {{"f1", {P("e1"), P("e2"), P("e3"), P("e4")}}};
    return x;
}

CellComplex glued_square(std::vector<Glued<OrientedRef>> pairs) {
    GluingSpec g;
    g.edge_pairs = std::move(pairs);
    return quotient(square(), g);
}

CellComplex torus() {
    CellComplex x;
    x.vertices = {"v1", "v2", "v3"};
    x.edges = {{"e1", "v1", "v2"}, {"e2", "v2", "v1"}, {"e3", "v1", "v1"}, {"e4", "v2", "v3"}, {"e5", "v3", "v2"}};
    x.faces = {
        {"f1", {P("e1"), P("e4"), P("e5"), N("e1"), N("e3")}},
        {"f2", {P("e2"), P("e3"), N("e2"), N("e5"), N("e4")}},
    };
    return x;
}

CellComplex rp2_halfsphere() {
    CellComplex x;
    x.vertices = {"v1", "v2", "v3"};
    x.edges = {{"e1", "v1", "v2"}, {"e2", "v2", "v1"}, {"e3", "v2", "v3"},
               {"e4", "v3", "v2"}, {"e5", "v1", "v3"}, {"e6", "v3", "v1"}};
    x.faces = {
        {"f1", {P("e1"), P("e2")}},
        {"f2", {P("e3"), P("e4")}},
        {"f3", {P("e5"), P("e6")}},
        {"f4", {P("e5"), P("e4"), P("e2"), N("e6"), N("e3"), N("e1")}},
    };
    return x;
}

CellComplex polygon_torsion(int64_t q) {
    CellComplex x;
    x.vertices = {"v1", "v2"};
    x.edges = {{"e1", "v1", "v2"}, {"e2", "v2", "v1"}};
    Face f{"f1", {}};
    for (int64_t i = 0; i < q; i++) {
        f.boundary.push_back(P("e1"));
        f.boundary.push_back(P("e2"));
    }
    x.faces.push_back(std::move(f));
    return x;
}

CellComplex circle(int64_t n) {
    CellComplex x;
    x.vertices = numbered("v", n);
    for (int64_t i = 0; i < n; i++) {
        x.edges.push_back({"e" + std::to_string(i + 1), x.vertices[i], x.vertices[(i + 1) % n]});
    }
    return x;
}

CellComplex line(int64_t n) {
    CellComplex x;
    x.vertices = numbered("v", n + 1);
    for (int64_t i = 0; i < n; i++) {
        x.edges.push_back({"e" + std::to_string(i + 1), x.vertices[i], x.vertices[i + 1]});
    }
    return x;
}

constexpr int64_t kMaxParam = 100000;

struct Entry {
    bool takes_param;
    int64_t min_param;
};

const std::map<std::string, Entry> &registry() {
    static const std::map<std::string, Entry> table = {
        {"square", {false, 0}},
        {"cylinder", {false, 0}},
        {"moebius", {false, 0}},
        {"torus", {false, 0}},
        {"torus_filled", {false, 0}},
        {"klein", {false, 0}},
        {"rp2_square", {false, 0}},
        {"rp2_halfsphere", {false, 0}},
        {"polygon_torsion", {true, 2}},
        {"circle", {true, 1}},
        {"line", {true, 1}},
    };
    return table;
}

}  // namespace

const std::vector<std::string> &builtin_names() {
    static const std::vector<std::string> names = {
        "square", "cylinder", "moebius", "torus", "torus_filled", "klein",
        "rp2_square", "rp2_halfsphere", "polygon_torsion", "circle", "line",
    };
    return names;
}

bool builtin_takes_param(const std::string &name) {
    auto it = registry().find(name);
    if (it == registry().end()) {
        throw Error(ErrorCode::UnknownBuiltin, "no builtin named '" + name + "'");
    }
    return it->second.takes_param;
}

CellComplex builtin(const std::string &name, std::optional<int64_t> param) {
    auto it = registry().find(name);
    if (it == registry().end()) {
        throw Error(ErrorCode::UnknownBuiltin, "no builtin named '" + name + "'");
    }
    const Entry &entry = it->second;
    if (entry.takes_param) {
        if (!param) {
            throw Error(ErrorCode::BadParam, name + " needs a parameter");
        }
        if (*param < entry.min_param || *param > kMaxParam) {
            throw Error(ErrorCode::BadParam,
                        name + " needs a parameter in [" + std::to_string(entry.min_param) + ", " +
                            std::to_string(kMaxParam) + "], got " + std::to_string(*param));
        }
    } else if (param) {
        throw Error(ErrorCode::BadParam, name + " takes no parameter");
    }

    if (name == "square") {
        return square();
    }
    if (name == "cylinder") {
        return glued_square({{P("e1"), N("e3")}});
    }
    if (name == "moebius") {
        return glued_square({{P("e1"), P("e3")}});
    }
    if (name == "klein") {
        return glued_square({{P("e1"), N("e3")}, {P("e2"), P("e4")}});
    }
    if (name == "rp2_square") {
        return glued_square({{P("e1"), P("e3")}, {P("e2"), P("e4")}});
    }
    if (name == "torus") {
        return torus();
    }
    if (name == "torus_filled") {
        CellComplex x = torus();
        x.faces.push_back({"f3", {P("e4"), P("e5")}});
        return x;
    }
    if (name == "rp2_halfsphere") {
        return rp2_halfsphere();
    }
    if (name == "polygon_torsion") {
        return polygon_torsion(*param);
    }
    if (name == "circle") {
        return circle(*param);
    }
    return line(*param);
}

}  // namespace cellcss
