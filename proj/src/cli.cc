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

#include "cellcss/cli.h"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cellcss/acc_format.h"
#include "cellcss/chaincomplex.h"
#include "cellcss/csscode.h"
#include "cellcss/error.h"
#include "cellcss/homology.h"

namespace cellcss {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An error tied to one input file.
struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FileError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) {
        throw FileError("cannot write " + path);
    }
}

AccDocument load_document(const std::string &path) {
    try {
        return parse_acc(read_file(path));
    } catch (const Error &e) {
        throw FileError(path + ": " + e.what());
    }
}

CellComplex load_complex(const std::string &path, bool apply_glue) {
    AccDocument doc = load_document(path);
    try {
        return resolve(doc, apply_glue);
    } catch (const Error &e) {
        throw FileError(path + ": " + e.what());
    }
}

std::vector<int64_t> parse_vector(const std::string &text) {
    std::vector<int64_t> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw UsageError("bad integer '" + item + "' in '" + text + "'");
        }
    }
    if (out.empty()) {
        throw UsageError("empty vector");
    }
    return out;
}

PauliType parse_type(const std::string &t) {
    return t == "x" ? PauliType::X : PauliType::Z;
}

std::string format_vector(std::span<const Integer> v, const std::vector<std::string> &labels) {
    std::string out;
    for (size_t i = 0; i < v.size(); i++) {
        int s = sgn(v[i]);
        if (s == 0) {
            continue;
        }
        Integer mag = abs(v[i]);
        if (out.empty()) {
            out += s < 0 ? "-" : "";
        } else {
            out += s < 0 ? " - " : " + ";
        }
        if (mag != 1) {
            out += mag.get_str();
        }
        out += labels[i];
    }
    return out.empty() ? "0" : out;
}

void print_matrix(const ModMatrix &m, std::ostream &out) {
    for (size_t r = 0; r < m.rows(); r++) {
        out << " ";
        for (size_t c = 0; c < m.cols(); c++) {
            out << " " << m(r, c);
        }
        out << "\n";
    }
}

nlohmann::ordered_json matrix_json(const ModMatrix &m) {
    auto rows = nlohmann::ordered_json::array();
    for (size_t r = 0; r < m.rows(); r++) {
        rows.push_back(std::vector<int64_t>(m.row(r).begin(), m.row(r).end()));
    }
    return rows;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Cell complexes, their homology and the qudit CSS codes they define.", "cellcss"};
    app.require_subcommand(1);

    std::string file, file_b, out_path, type = "z", vec_text, format = "text", high_degree = "truncate";
    std::string name;
    bool no_glue = false;
    size_t degree = 1, jobs = 1;
    int64_t modulus = 0;
    std::optional<int64_t> param;
    std::optional<size_t> max_weight;

    auto add_file = [&](CLI::App *cmd) {
        cmd->add_option("FILE", file, ".acc file")->required();
        cmd->add_flag("--no-glue", no_glue, "Skip the glue directives");
    };
    auto add_modulus = [&](CLI::App *cmd) {
        cmd->add_option("--d", modulus, "Qudit dimension")->required()->check(CLI::Range(int64_t{2}, int64_t{1} << 30));
    };
    auto add_type = [&](CLI::App *cmd, const char *help) {
        cmd->add_option("--type", type, help)->check(CLI::IsMember({"x", "z"}));
    };

    auto *validate_cmd = app.add_subcommand("validate", "Check a complex");
    add_file(validate_cmd);

    auto *homology_cmd = app.add_subcommand("homology", "Integer homology in one degree");
    add_file(homology_cmd);
    homology_cmd->add_option("--degree", degree, "Degree")->check(CLI::Range(0, 2));

    auto *logical_cmd = app.add_subcommand("logical", "Logical space over Z_d");
    add_file(logical_cmd);
    add_modulus(logical_cmd);

    auto *css_cmd = app.add_subcommand("css", "Parity checks and stabilizers");
    add_file(css_cmd);
    add_modulus(css_cmd);
    css_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    css_cmd->add_option("--high-degree", high_degree, "Handling of degrees above 2")
        ->check(CLI::IsMember({"truncate"}));

    auto *syndrome_cmd = app.add_subcommand("syndrome", "Syndrome of an error");
    add_file(syndrome_cmd);
    add_modulus(syndrome_cmd);
    add_type(syndrome_cmd, "Pauli type of the error");
    syndrome_cmd->add_option("--error", vec_text, "Comma separated exponents")->required();

    auto *classify_cmd = app.add_subcommand("classify", "Detectable error, stabilizer or logical");
    add_file(classify_cmd);
    add_modulus(classify_cmd);
    add_type(classify_cmd, "Pauli type of the operator");
    classify_cmd->add_option("--op", vec_text, "Comma separated exponents")->required();

    auto *distance_cmd = app.add_subcommand("distance", "Minimum weight of a logical operator");
    add_file(distance_cmd);
    add_modulus(distance_cmd);
    add_type(distance_cmd, "Pauli type of the logical operators");
    distance_cmd->add_option("--max-weight", max_weight, "Stop searching above this weight");
    distance_cmd->add_option("--jobs", jobs, "Threads")->check(CLI::Range(1, 256));

    auto *ldpc_cmd = app.add_subcommand("ldpc", "Row and column weights of the parity checks");
    add_file(ldpc_cmd);
    add_modulus(ldpc_cmd);

    auto *builtin_cmd = app.add_subcommand("builtin", "Print a built-in complex");
    builtin_cmd->add_option("NAME", name, "Builtin name")->required();
    builtin_cmd->add_option("--param", param, "Size parameter");
    builtin_cmd->add_option("--out", out_path, "Output file");

    auto *tensor_cmd = app.add_subcommand("tensor", "Product of two complexes without faces");
    auto *sum_cmd = app.add_subcommand("sum", "Disjoint union of two complexes");
    for (auto *cmd : {tensor_cmd, sum_cmd}) {
        cmd->add_option("A", file, ".acc file")->required();
        cmd->add_option("B", file_b, ".acc file")->required();
        cmd->add_option("--out", out_path, "Output file");
        cmd->add_flag("--no-glue", no_glue, "Skip the glue directives");
    }

    auto *table_cmd = app.add_subcommand("classical-table", "Syndromes of every word of a binary code");
    auto *metrics_cmd = app.add_subcommand("classical-metrics", "[n,k,d] of a binary code");
    for (auto *cmd : {table_cmd, metrics_cmd}) {
        cmd->add_option("--parity", file, "CSV of 0/1 rows")->required();
    }

    std::vector<const char *> argv = {"cellcss"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const bool glue = !no_glue;
        if (validate_cmd->parsed()) {
            AccDocument doc = load_document(file);
            auto diagnostics = validate(doc.complex);
            if (!diagnostics.empty()) {
                for (const auto &d : diagnostics) {
                    out << "invalid: " << d << "\n";
                }
                return 1;
            }
            CellComplex x = load_complex(file, glue);
            out << "ok: " << x.vertices.size() << " vertices, " << x.edges.size() << " edges, " << x.faces.size()
                << " faces\n";
        } else if (homology_cmd->parsed()) {
            ChainComplex c = from_cell_complex(load_complex(file, glue));
            HomologyDecomposition h = homology_z(c, degree);
            out << h.to_string() << "\n";
            for (size_t i = 0; i < h.representatives.cols(); i++) {
                std::string kind = i < h.free_rank ? "free" : "order " + h.invariant_factors[i - h.free_rank].get_str();
                out << "  " << kind << ": " << format_vector(h.representatives.column(i), c.labels(degree)) << "\n";
            }
        } else if (logical_cmd->parsed()) {
            ChainComplex c = from_cell_complex(load_complex(file, glue));
            out << logical_space(c, modulus).to_string() << "\n";
        } else if (css_cmd->parsed()) {
            ChainComplex c = from_cell_complex(load_complex(file, glue));
            CssCode code = css_from_chain(c, modulus);
            LogicalSpace ls = logical_space(c, modulus);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["modulus"] = modulus;
                j["n"] = code.n();
                j["p_x"] = matrix_json(code.p_x);
                j["p_z"] = matrix_json(code.p_z);
                j["logical"] = {{"k_free", ls.free_qudits}, {"torsion_dims", ls.torsion_dims}};
                j["labels"] = {{"qudits", code.qudit_labels},
                               {"x_checks", code.x_check_labels},
                               {"z_checks", code.z_check_labels}};
                out << j.dump(2) << "\n";
            } else {
                out << "n = " << code.n() << ", m_X = " << code.p_x.rows() << ", m_Z = " << code.p_z.rows()
                    << ", d = " << modulus << "\n";
                out << "P_X:\n";
                print_matrix(code.p_x, out);
                out << "P_Z:\n";
                print_matrix(code.p_z, out);
                out << "stabilizers:\n";
                for (const auto &line : render_stabilizers(code)) {
                    out << "  " << line << "\n";
                }
                out << "logical: " << ls.to_string() << "\n";
            }
        } else if (syndrome_cmd->parsed() || classify_cmd->parsed()) {
            CssCode code = css_from_chain(from_cell_complex(load_complex(file, glue)), modulus);
            PauliVector op = PauliVector::make(parse_type(type), modulus, parse_vector(vec_text));
            if (syndrome_cmd->parsed()) {
                Syndrome s = op.type == PauliType::Z ? syndrome_x(code, op) : syndrome_z(code, op);
                out << "syndrome: " << s.to_string() << "\n";
            } else {
                out << op_class_name(classify(code, op)) << "\n";
            }
        } else if (distance_cmd->parsed()) {
            CssCode code = css_from_chain(from_cell_complex(load_complex(file, glue)), modulus);
            PauliType t = parse_type(type);
            Distance dist = distance(code, t, max_weight, jobs);
            std::string label = std::string("d_") + pauli_char(t);
            switch (dist.kind) {
                case Distance::Kind::Exact:
                    out << label << " = " << dist.value << "\n";
                    out << "witness: " << dist.witness->to_string() << "\n";
                    break;
                case Distance::Kind::LowerBound:
                    out << label << " > " << dist.value << "\n";
                    break;
                case Distance::Kind::NoLogical:
                    out << label << ": no logical operators\n";
                    break;
            }
        } else if (ldpc_cmd->parsed()) {
            CssCode code = css_from_chain(from_cell_complex(load_complex(file, glue)), modulus);
            LdpcProfile p = ldpc_profile(code);
            for (auto [tag, w] : {std::pair{"P_X", &p.x}, std::pair{"P_Z", &p.z}}) {
                out << tag << ": max row weight " << w->max_row << ", mean " << w->mean_row << "; max column weight "
                    << w->max_col << ", mean " << w->mean_col;
                if (!w->degenerate_rows.empty()) {
                    out << "; " << w->degenerate_rows.size() << " empty check(s)";
                }
                out << "\n";
            }
        } else if (builtin_cmd->parsed()) {
            write_output(out_path, serialize_acc(builtin(name, param)), out);
        } else if (tensor_cmd->parsed() || sum_cmd->parsed()) {
            CellComplex a = load_complex(file, glue);
            CellComplex b = load_complex(file_b, glue);
            CellComplex r = tensor_cmd->parsed() ? tensor_product_1d(a, b) : direct_sum(a, b);
            write_output(out_path, serialize_acc(r), out);
        } else if (table_cmd->parsed() || metrics_cmd->parsed()) {
            ClassicalCode cc;
            try {
                cc = parse_parity_csv(read_file(file));
            } catch (const Error &e) {
                throw FileError(file + ": " + e.what());
            }
            if (metrics_cmd->parsed()) {
                out << classical_metrics(cc).to_string() << "\n";
            } else {
                for (const auto &group : classical_syndrome_table(cc)) {
                    out << "syndrome (";
                    for (size_t i = 0; i < group.syndrome.size(); i++) {
                        out << (i ? "," : "") << group.syndrome[i];
                    }
                    out << "):";
                    for (const auto &w : group.words) {
                        out << " ";
                        for (int64_t bit : w) {
                            out << bit;
                        }
                    }
                    out << "\n";
                }
            }
        }
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const FileError &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace cellcss
