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

// Python bindings. Operators cross the boundary as complex numpy arrays together with
// the local dimensions.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hidenorm/darwinism.h"
#include "hidenorm/dist_norms.h"
#include "hidenorm/errors.h"
#include "hidenorm/experiments.h"
#include "hidenorm/linalg.h"
#include "hidenorm/states.h"
#include "hidenorm/xor_games.h"

namespace py = pybind11;
using namespace hidenorm;

namespace {

BipartiteOperator make_operator(const ComplexMatrix &m, std::size_t n_a, std::size_t n_b, bool hermitian) {
    if (hermitian) {
        return BipartiteOperator(n_a, n_b, HermitianMatrix(m));
    }
    return BipartiteOperator(n_a, n_b, m);
}

Subsystem parse_subsystem(const std::string &s) {
    if (s == "A" || s == "a") {
        return Subsystem::A;
    }
    if (s == "B" || s == "b") {
        return Subsystem::B;
    }
    throw ContractError("subsystem must be 'A' or 'B', got '" + s + "'");
}

SeeSawConfig make_config(int restarts, int max_iters, double rel_tol, std::uint64_t seed, const std::string &field) {
    SeeSawConfig c;
    c.restarts = restarts;
    c.max_iters = max_iters;
    c.rel_tol = rel_tol;
    c.seed = RngSeed{seed};
    if (field == "hermitian") {
        c.field = Field::hermitian;
    } else if (field == "complex") {
        c.field = Field::complex;
    } else {
        throw ContractError("field must be 'hermitian' or 'complex', got '" + field + "'");
    }
    c.validate();
    return c;
}

}  // namespace

#define HIDENORM_SEESAW_ARGS                                                                               \
    py::arg("restarts") = 32, py::arg("max_iters") = 500, py::arg("rel_tol") = 1e-10, py::arg("seed") = 0, \
        py::arg("field") = "hermitian"

PYBIND11_MODULE(_core, m) {
    m.doc() = "Distinguishability norms, data hiding ratios, XOR game biases and Darwinism coefficients.";

    py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<DegenerateInputError>(m, "DegenerateInputError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<NormEstimate>(m, "NormEstimate")
        .def_readonly("value", &NormEstimate::value)
        .def_readonly("is_lower_bound", &NormEstimate::is_lower_bound)
        .def_readonly("iterations_used", &NormEstimate::iterations_used)
        .def_readonly("converged", &NormEstimate::converged)
        .def_readonly("best_f", &NormEstimate::best_f)
        .def_readonly("best_g", &NormEstimate::best_g)
        .def_readonly("history", &NormEstimate::history)
        .def_readonly("restart_index", &NormEstimate::restart_index)
        .def("__repr__", [](const NormEstimate &e) {
            return "NormEstimate(value=" + format_double(e.value) + ", converged=" + (e.converged ? "True" : "False") +
                   ")";
        });

    py::class_<RatioReport>(m, "RatioReport")
        .def_readonly("trace_norm", &RatioReport::trace_norm)
        .def_readonly("eps_estimate", &RatioReport::eps_estimate)
        .def_readonly("ratio", &RatioReport::ratio)
        .def_readonly("bound", &RatioReport::bound)
        .def_readonly("satisfied", &RatioReport::satisfied)
        .def_readonly("margin", &RatioReport::margin);

    py::class_<FieldComparison>(m, "FieldComparison")
        .def_readonly("complex_value", &FieldComparison::complex_value)
        .def_readonly("hermitian_value", &FieldComparison::hermitian_value)
        .def_readonly("ratio", &FieldComparison::ratio);

    py::class_<GameReport>(m, "GameReport")
        .def_readonly("beta_all", &GameReport::beta_all)
        .def_readonly("beta_product", &GameReport::beta_product)
        .def_readonly("ratio", &GameReport::ratio)
        .def_readonly("bound", &GameReport::bound)
        .def_readonly("satisfied", &GameReport::satisfied);

    m.def(
        "trace_norm",
        [](const ComplexMatrix &a, bool hermitian) {
            return hermitian ? trace_norm(HermitianMatrix(a)) : trace_norm(a);
        },
        py::arg("a"), py::arg("hermitian") = true);
    m.def("hermitian_sign", [](const ComplexMatrix &a) { return ComplexMatrix(hermitian_sign(HermitianMatrix(a)).matrix()); },
          py::arg("a"));
    m.def(
        "partial_trace",
        [](const ComplexMatrix &z, std::size_t n_a, std::size_t n_b, const std::string &keep) {
            return partial_trace(z, n_a, n_b, parse_subsystem(keep));
        },
        py::arg("z"), py::arg("n_a"), py::arg("n_b"), py::arg("keep"));

    m.def(
        "werner_operator", [](std::size_t d) { return ComplexMatrix(discrimination_operator(werner_hiding_pair(d)).matrix()); },
        py::arg("d"));
    m.def(
        "generate_operator",
        [](const std::string &name, std::size_t n_a, std::size_t n_b, std::uint64_t seed) {
            return ComplexMatrix(generate_operator(parse_generator(name), n_a, n_b, RngSeed{seed}).matrix());
        },
        py::arg("generator"), py::arg("n_a"), py::arg("n_b"), py::arg("seed") = 0);
    m.def(
        "random_density_matrix",
        [](std::size_t n, std::size_t env, std::uint64_t seed) {
            return ComplexMatrix(random_density_matrix(n, env, RngSeed{seed}).matrix());
        },
        py::arg("n"), py::arg("env"), py::arg("seed") = 0);

    m.def(
        "epsilon_norm",
        [](const ComplexMatrix &z, std::size_t n_a, std::size_t n_b, int restarts, int max_iters, double rel_tol,
           std::uint64_t seed, const std::string &field) {
            SeeSawConfig c = make_config(restarts, max_iters, rel_tol, seed, field);
            return epsilon_norm(make_operator(z, n_a, n_b, c.field == Field::hermitian), c);
        },
        py::arg("z"), py::arg("n_a"), py::arg("n_b"), HIDENORM_SEESAW_ARGS);
    m.def(
        "hiding_ratio",
        [](const ComplexMatrix &z, std::size_t n_a, std::size_t n_b, int restarts, int max_iters, double rel_tol,
           std::uint64_t seed) {
            return hiding_ratio(make_operator(z, n_a, n_b, true), make_config(restarts, max_iters, rel_tol, seed, "hermitian"));
        },
        py::arg("z"), py::arg("n_a"), py::arg("n_b"), py::arg("restarts") = 32, py::arg("max_iters") = 500,
        py::arg("rel_tol") = 1e-10, py::arg("seed") = 0);
    m.def(
        "complex_vs_hermitian_check",
        [](const ComplexMatrix &z, std::size_t n_a, std::size_t n_b, int restarts, int max_iters, double rel_tol,
           std::uint64_t seed) {
            return complex_vs_hermitian_check(
                make_operator(z, n_a, n_b, true), make_config(restarts, max_iters, rel_tol, seed, "hermitian"));
        },
        py::arg("z"), py::arg("n_a"), py::arg("n_b"), py::arg("restarts") = 32, py::arg("max_iters") = 500,
        py::arg("rel_tol") = 1e-10, py::arg("seed") = 0);
    m.def("error_probability", &error_probability, py::arg("norm_value"));
    m.def("hiding_bound", &hiding_bound, py::arg("n_a"), py::arg("n_b"));

    m.def(
        "evaluate_game",
        [](std::size_t n_a, std::size_t n_b, const std::vector<ComplexMatrix> &states, std::vector<int> signs,
           std::vector<double> probs, int restarts, int max_iters, double rel_tol, std::uint64_t seed) {
            std::vector<HermitianMatrix> hs;
            hs.reserve(states.size());
            for (const ComplexMatrix &s : states) {
                hs.emplace_back(s);
            }
            QuantumXorGame game(n_a, n_b, std::move(hs), std::move(signs), std::move(probs));
            return evaluate_game(game, make_config(restarts, max_iters, rel_tol, seed, "hermitian"));
        },
        py::arg("n_a"), py::arg("n_b"), py::arg("states"), py::arg("signs"), py::arg("probs"),
        py::arg("restarts") = 32, py::arg("max_iters") = 500, py::arg("rel_tol") = 1e-10, py::arg("seed") = 0);

    m.def("omega_new", &omega_new, py::arg("d_a"), py::arg("d_r"));
    m.def("omega_ranard", &omega_ranard, py::arg("d_a"), py::arg("d_r"));
    m.def(
        "diamond_bound_rhs",
        [](std::int64_t d_a, std::int64_t d_r, std::int64_t r_size, std::int64_t q_size) {
            return diamond_bound_rhs(DarwinismParams{d_a, d_r, r_size, q_size});
        },
        py::arg("d_a"), py::arg("d_r"), py::arg("r_size"), py::arg("q_size"));
}
