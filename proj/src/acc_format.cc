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

#include "cellcss/acc_format.h"

#include <map>
#include <sstream>

#include "cellcss/error.h"

namespace cellcss {

namespace {

enum class Kind { Vertex, Edge, Face };

const char *kind_name(Kind k) {
    switch (k) {
        case Kind::Vertex:
            return "vertex";
        case Kind::Edge:
            return "edge";
        case Kind::Face:
            return "face";
    }
    return "";
}

[[noreturn]] void fail(int line, const std::string &message) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message);
}

struct Reference {
    std::string name;
    Kind kind;
    int line;
};

OrientedRef parse_signed(const std::string &token, int line) {
    OrientedRef ref;
    std::string name = token;
    if (!name.empty() && (name[0] == '+' || name[0] == '-')) {
        ref.sign = name[0] == '-' ? -1 : 1;
        name.erase(0, 1);
    }
    if (!is_valid_name(name)) {
        fail(line, "bad cell name '" + token + "'");
    }
    ref.cell = name;
    return ref;
}

}  // namespace

bool is_valid_name(const std::string &name) {
    if (name.empty()) {
        return false;
    }
    for (char c : name) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '.';
        if (!ok) {
            return false;
        }
    }
    return true;
}

AccDocument parse_acc(const std::string &text) {
    AccDocument doc;
    std::map<std::string, std::pair<Kind, int>> declared;
    std::vector<Reference> references;

    auto declare = [&](const std::string &name, Kind kind, int line) {
        if (!is_valid_name(name)) {
            fail(line, "bad cell name '" + name + "'");
        }
        auto [it, fresh] = declared.emplace(name, std::make_pair(kind, line));
        if (!fresh) {
            fail(line, "duplicate name '" + name + "' (first declared on line " + std::to_string(it->second.second) +
                           ")");
        }
    };
    auto refer = [&](const std::string &name, Kind kind, int line) {
        if (!is_valid_name(name)) {
            fail(line, "bad cell name '" + name + "'");
        }
        references.push_back({name, kind, line});
    };

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        line++;
        auto hash = raw.find('#');
        if (hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream words(raw);
        std::vector<std::string> tok;
        for (std::string w; words >> w;) {
            tok.push_back(w);
        }
        if (tok.empty()) {
            continue;
        }
        const std::string &kw = tok[0];
        if (kw == "vertex") {
            if (tok.size() != 2) {
                fail(line, "expected 'vertex NAME'");
            }
            declare(tok[1], Kind::Vertex, line);
            doc.complex.vertices.push_back(tok[1]);
        } else if (kw == "edge") {
            if (tok.size() != 4) {
                fail(line, "expected 'edge NAME SRC TGT'");
            }
            declare(tok[1], Kind::Edge, line);
            refer(tok[2], Kind::Vertex, line);
            refer(tok[3], Kind::Vertex, line);
            doc.complex.edges.push_back({tok[1], tok[2], tok[3]});
        } else if (kw == "face") {
            if (tok.size() < 2) {
                fail(line, "expected 'face NAME EDGE...'");
            }
            declare(tok[1], Kind::Face, line);
            if (tok.size() == 2) {
                fail(line, "face " + tok[1] + ": empty boundary");
            }
            Face f{tok[1], {}};
            for (size_t i = 2; i < tok.size(); i++) {
                f.boundary.push_back(parse_signed(tok[i], line));
                refer(f.boundary.back().cell, Kind::Edge, line);
            }
            doc.complex.faces.push_back(std::move(f));
        } else if (kw == "glue") {
            if (tok.size() != 4) {
                fail(line, "expected 'glue vertex|edge|face A B'");
            }
            if (tok[1] == "vertex") {
                refer(tok[2], Kind::Vertex, line);
                refer(tok[3], Kind::Vertex, line);
                doc.glue.vertex_pairs.push_back({tok[2], tok[3], line});
            } else if (tok[1] == "edge" || tok[1] == "face") {
                Kind kind = tok[1] == "edge" ? Kind::Edge : Kind::Face;
                OrientedRef a = parse_signed(tok[2], line);
                OrientedRef b = parse_signed(tok[3], line);
                refer(a.cell, kind, line);
                refer(b.cell, kind, line);
                (kind == Kind::Edge ? doc.glue.edge_pairs : doc.glue.face_pairs).push_back({a, b, line});
            } else {
                fail(line, "unknown glue target '" + tok[1] + "'");
            }
        } else {
            fail(line, "unknown keyword '" + kw + "'");
        }
    }

    for (const auto &ref : references) {
        auto it = declared.find(ref.name);
        if (it == declared.end()) {
            fail(ref.line, std::string("unknown ") + kind_name(ref.kind) + " '" + ref.name + "'");
        }
        if (it->second.first != ref.kind) {
            fail(ref.line, "'" + ref.name + "' is a " + kind_name(it->second.first) + ", expected a " +
                               kind_name(ref.kind));
        }
    }
    return doc;
}

std::string serialize_acc(const CellComplex &x, const GluingSpec &glue) {
    std::string out;
    for (const auto &v : x.vertices) {
        out += "vertex " + v + "\n";
    }
    for (const auto &e : x.edges) {
        out += "edge " + e.name + " " + e.source + " " + e.target + "\n";
    }
    for (const auto &f : x.faces) {
        out += "face " + f.name;
        for (const auto &ref : f.boundary) {
            out += " " + ref.to_string();
        }
        out += "\n";
    }
    for (const auto &p : glue.vertex_pairs) {
        out += "glue vertex " + p.a + " " + p.b + "\n";
    }
    for (const auto &p : glue.edge_pairs) {
        out += "glue edge " + p.a.to_string() + " " + p.b.to_string() + "\n";
    }
    for (const auto &p : glue.face_pairs) {
        out += "glue face " + p.a.to_string() + " " + p.b.to_string() + "\n";
    }
    return out;
}

std::string serialize_acc(const AccDocument &doc) {
    return serialize_acc(doc.complex, doc.glue);
}

CellComplex resolve(const AccDocument &doc, bool apply_glue) {
    require_valid(doc.complex);
    if (!apply_glue || doc.glue.empty()) {
        return doc.complex;
    }
    return quotient(doc.complex, doc.glue);
}

}  // namespace cellcss
