// Copyright 2026 The hidenorm Authors
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

#include "hidenorm/operator_io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hidenorm {

using nlohmann::json;

namespace {

std::string read_file(const std::string &path, const char *kind) {
    std::ifstream in(path);
    if (!in) {
        throw FileAccessError(std::string(kind) + " not found or unreadable: " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_text(const std::string &text, const char *kind) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw FileFormatError(std::string(kind) + " is not valid JSON: " + e.what());
    }
}

std::size_t read_dim(const json &j, const char *field, const std::string &ctx) {
    if (!j.contains(field)) {
        throw FileFormatError(ctx + ": missing field '" + field + "'");
    }
    const json &v = j.at(field);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
        throw FileFormatError(ctx + ": field '" + field + "' must be a positive integer");
    }
    return v.get<std::size_t>();
}

std::vector<double> read_array(const json &j, const char *field, std::size_t expected, const std::string &ctx) {
    if (!j.contains(field)) {
        throw FileFormatError(ctx + ": missing field '" + field + "'");
    }
    const json &v = j.at(field);
    if (!v.is_array()) {
        throw FileFormatError(ctx + ": field '" + field + "' must be an array of numbers");
    }
    if (v.size() != expected) {
        throw FileFormatError(
            ctx + ": field '" + field + "' has length " + std::to_string(v.size()) + ", expected " +
            std::to_string(expected));
    }
    std::vector<double> out;
    out.reserve(expected);
    for (const json &x : v) {
        if (!x.is_number()) {
            throw FileFormatError(ctx + ": field '" + field + "' contains a non-numeric entry");
        }
        out.push_back(x.get<double>());
    }
    return out;
}

ComplexMatrix read_matrix(const json &j, std::size_t n, const std::string &ctx) {
    std::vector<double> re = read_array(j, "re", n * n, ctx);
    std::vector<double> im = read_array(j, "im", n * n, ctx);
    ComplexMatrix m(n, n);
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            m(r, c) = Complex(re[r * n + c], im[r * n + c]);
        }
    }
    if (!m.allFinite()) {
        throw FileFormatError(ctx + ": fields 're'/'im' contain non-finite values");
    }
    return m;
}

HermitianMatrix read_hermitian(const json &j, std::size_t n, const std::string &ctx, const WarningSink &warn) {
    HermitianMatrix h(read_matrix(j, n, ctx));
    double asym = h.input_asymmetry();
    if (asym > kFileAsymmetryLimit) {
        throw FileFormatError(
            ctx + ": fields 're'/'im' are not Hermitian (asymmetry " + std::to_string(asym) + " exceeds 1e-6)");
    }
    if (h.asymmetry_warning() && warn) {
        warn(ctx + ": symmetrized operator with asymmetry " + std::to_string(asym));
    }
    return h;
}

void put_matrix(json &j, const ComplexMatrix &m) {
    std::vector<double> re;
    std::vector<double> im;
    re.reserve(m.size());
    im.reserve(m.size());
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            re.push_back(m(r, c).real());
            im.push_back(m(r, c).imag());
        }
    }
    j["re"] = std::move(re);
    j["im"] = std::move(im);
}

void write_text(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) {
        throw FileAccessError("cannot open for writing: " + path);
    }
    out << text << '\n';
}

}  // namespace

BipartiteOperator parse_operator_json(const std::string &text, const WarningSink &warn) {
    const std::string ctx = "operator file";
    json j = parse_text(text, "operator file");
    if (!j.is_object()) {
        throw FileFormatError(ctx + ": top level must be a JSON object");
    }
    std::size_t n_a = read_dim(j, "n_a", ctx);
    std::size_t n_b = read_dim(j, "n_b", ctx);
    bool hermitian = true;
    if (j.contains("hermitian")) {
        if (!j.at("hermitian").is_boolean()) {
            throw FileFormatError(ctx + ": field 'hermitian' must be a boolean");
        }
        hermitian = j.at("hermitian").get<bool>();
    }
    if (hermitian) {
        return BipartiteOperator(n_a, n_b, read_hermitian(j, n_a * n_b, ctx, warn));
    }
    return BipartiteOperator(n_a, n_b, read_matrix(j, n_a * n_b, ctx));
}

BipartiteOperator parse_operator_file(const std::string &path, const WarningSink &warn) {
    return parse_operator_json(read_file(path, "operator file"), warn);
}

std::string operator_to_json(const BipartiteOperator &op) {
    json j;
    j["n_a"] = op.n_a();
    j["n_b"] = op.n_b();
    put_matrix(j, op.matrix());
    if (!op.is_hermitian()) {
        j["hermitian"] = false;
    }
    return j.dump();
}

void write_operator_file(const std::string &path, const BipartiteOperator &op) {
    write_text(path, operator_to_json(op));
}

QuantumXorGame parse_game_json(const std::string &text, const WarningSink &warn) {
    const std::string ctx = "game file";
    json j = parse_text(text, "game file");
    if (!j.is_object()) {
        throw FileFormatError(ctx + ": top level must be a JSON object");
    }
    std::size_t n_a = read_dim(j, "n_a", ctx);
    std::size_t n_b = read_dim(j, "n_b", ctx);
    if (!j.contains("states") || !j.at("states").is_array()) {
        throw FileFormatError(ctx + ": field 'states' must be an array of operator blocks");
    }
    const json &blocks = j.at("states");
    std::vector<HermitianMatrix> states;
    for (std::size_t x = 0; x < blocks.size(); x++) {
        states.push_back(read_hermitian(blocks[x], n_a * n_b, ctx + " states[" + std::to_string(x) + "]", warn));
    }
    std::vector<double> probs = read_array(j, "probs", blocks.size(), ctx);
    if (!j.contains("signs") || !j.at("signs").is_array() || j.at("signs").size() != blocks.size()) {
        throw FileFormatError(ctx + ": field 'signs' must be an array with one entry per state");
    }
    std::vector<int> signs;
    for (const json &s : j.at("signs")) {
        if (!s.is_number_integer()) {
            throw FileFormatError(ctx + ": field 'signs' must contain the integers +1 or -1");
        }
        signs.push_back(s.get<int>());
    }
    return QuantumXorGame(n_a, n_b, std::move(states), std::move(signs), std::move(probs));
}

QuantumXorGame parse_game_file(const std::string &path, const WarningSink &warn) {
    return parse_game_json(read_file(path, "game file"), warn);
}

std::string game_to_json(const QuantumXorGame &game) {
    json j;
    j["n_a"] = game.n_a();
    j["n_b"] = game.n_b();
    json blocks = json::array();
    for (const HermitianMatrix &s : game.states()) {
        json b;
        put_matrix(b, s.matrix());
        blocks.push_back(std::move(b));
    }
    j["states"] = std::move(blocks);
    j["signs"] = game.signs();
    j["probs"] = game.probs();
    return j.dump();
}

}  // namespace hidenorm
