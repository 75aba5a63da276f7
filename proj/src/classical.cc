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

#include <algorithm>
#include <map>
#include <sstream>

#include "cellcss/csscode.h"
#include "cellcss/error.h"

namespace cellcss {

namespace {

constexpr size_t kMaxClassicalLength = 20;

void require_binary_enumerable(const ClassicalCode &cc) {
    if (cc.parity.modulus() != 2) {
        throw Error(ErrorCode::BadModulus, "classical codes are handled over Z_2 only");
    }
    if (cc.parity.cols() > kMaxClassicalLength) {
        throw Error(ErrorCode::TooLarge, "enumerating 2^" + std::to_string(cc.parity.cols()) +
                                             " words exceeds the limit of 2^" + std::to_string(kMaxClassicalLength));
    }
}

// Word i has bit (n - 1 - j) as its j-th letter, so numeric order is lexicographic order.
std::vector<int64_t> word_of(uint64_t bits, size_t n) {
    std::vector<int64_t> w(n);
    for (size_t j = 0; j < n; j++) {
        w[j] = static_cast<int64_t>((bits >> (n - 1 - j)) & 1);
    }
    return w;
}

}  // namespace

std::vector<SyndromeGroup> classical_syndrome_table(const ClassicalCode &cc) {
    require_binary_enumerable(cc);
    const size_t n = cc.parity.cols();
    std::map<std::vector<int64_t>, std::vector<std::vector<int64_t>>> groups;
    for (uint64_t bits = 0; bits < (uint64_t{1} << n); bits++) {
        std::vector<int64_t> w = word_of(bits, n);
        groups[cc.parity * std::span<const int64_t>(w)].push_back(std::move(w));
    }
    std::vector<SyndromeGroup> out;
    for (auto &[syndrome, words] : groups) {
        std::stable_sort(words.begin(), words.end(), [](const auto &a, const auto &b) {
            return std::count(a.begin(), a.end(), 1) < std::count(b.begin(), b.end(), 1);
        });
        out.push_back({syndrome, std::move(words)});
    }
    return out;
}

std::string ClassicalMetrics::to_string() const {
    return "[" + std::to_string(n) + "," + std::to_string(k) + "," +
           (distance ? std::to_string(*distance) : std::string("-")) + "]";
}

ClassicalMetrics classical_metrics(const ClassicalCode &cc) {
    require_binary_enumerable(cc);
    ClassicalMetrics out;
    out.n = cc.parity.cols();
    out.k = out.n - rank_mod_prime(cc.parity);
    for (uint64_t bits = 1; bits < (uint64_t{1} << out.n); bits++) {
        std::vector<int64_t> w = word_of(bits, out.n);
        std::vector<int64_t> s = cc.parity * std::span<const int64_t>(w);
        if (std::all_of(s.begin(), s.end(), [](int64_t v) { return v == 0; })) {
            size_t weight = static_cast<size_t>(std::count(w.begin(), w.end(), 1));
            if (!out.distance || weight < *out.distance) {
                out.distance = weight;
            }
        }
    }
    return out;
}

ClassicalCode parse_parity_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<int64_t>> rows;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r,") == std::string::npos) {
            continue;
        }
        std::vector<int64_t> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            auto b = cell.find_first_not_of(" \t\r");
            auto e = cell.find_last_not_of(" \t\r");
            std::string t = b == std::string::npos ? "" : cell.substr(b, e - b + 1);
            if (t != "0" && t != "1") {
                throw Error(ErrorCode::ParseError,
                            "line " + std::to_string(line_no) + ": expected 0 or 1, got '" + t + "'");
            }
            row.push_back(t == "1");
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": row has " +
                                                   std::to_string(row.size()) + " entries, expected " +
                                                   std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw Error(ErrorCode::ParseError, "parity file has no rows");
    }
    return {ModMatrix::from_rows(2, rows, rows.front().size())};
}

}  // namespace cellcss
