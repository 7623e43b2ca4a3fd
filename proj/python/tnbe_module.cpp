// Copyright 2026 The tnbe Authors
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


#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "tnbe/io.hpp"
#include "tnbe/qubo.hpp"
#include "tnbe/random.hpp"
#include "tnbe/report.hpp"
#include "tnbe/sweep.hpp"
#include "tnbe/unitary_svd.hpp"
#include "tnbe/verify.hpp"

namespace py = pybind11;
using namespace tnbe;

namespace {

DenseLimit limit_of(std::optional<int> qubits) {
    return qubits ? DenseLimit::from_qubits(*qubits) : DenseLimit::from_env();
}

// JSON documents cross the boundary as Python dicts.
py::object to_python(const json &j) { return py::module_::import("json").attr("loads")(j.dump()); }

json from_python(const py::object &o) {
    return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

Qubo make_qubo(int n, const std::vector<double> &linear, const std::map<std::pair<int, int>, double> &couplings,
               double c_const) {
    Qubo q(n);
    q.c_const = c_const;
    if (!linear.empty()) q.linear = linear;
    for (const auto &[ij, a] : couplings) q.add_coupling(ij.first, ij.second, a);
    q.check();
    return q;
}

} // namespace

PYBIND11_MODULE(tnbe, m) {
    m.doc() = "Block encodings of tensor networks by per-site unitary dilation";

    py::register_exception<Error>(m, "TnbeError");

    py::class_<TensorNetwork>(m, "TensorNetwork")
        .def_static(
            "from_dict", [](const py::object &o) { return network_from_json(from_python(o)); }, py::arg("doc"))
        .def_static("load", &read_network, py::arg("path"))
        .def("to_dict", [](const TensorNetwork &tn) { return to_python(network_to_json(tn)); })
        .def("dumps", &dump_network)
        .def_readonly("d", &TensorNetwork::d)
        .def_property_readonly("vertex_ids", &TensorNetwork::vertex_ids)
        .def("__len__", [](const TensorNetwork &tn) { return tn.vertices.size(); });

    py::class_<CompilationResult>(m, "CompilationResult")
        .def_static(
            "from_dict", [](const py::object &o) { return result_from_json(from_python(o)); }, py::arg("doc"))
        .def_static("load", &read_result, py::arg("path"))
        .def("to_dict", [](const CompilationResult &r) { return to_python(result_to_json(r)); })
        .def("dumps", &dump_result)
        .def_readonly("gamma", &CompilationResult::gamma)
        .def_readonly("order", &CompilationResult::order)
        .def_readonly("zero_vertex", &CompilationResult::zero_vertex)
        .def_property_readonly("status",
                               [](const CompilationResult &r) {
                                   return r.status == CompileStatus::ok ? "ok" : "zero_operator";
                               })
        .def_property_readonly("betas", &CompilationResult::betas)
        .def_property_readonly("num_ops", [](const CompilationResult &r) { return r.ops.size(); })
        .def_property_readonly("register_names",
                               [](const CompilationResult &r) {
                                   std::vector<std::string> names;
                                   for (const auto &reg : r.layout.registers) names.push_back(reg.name);
                                   return names;
                               })
        .def_property_readonly("peak_coupling", &peak_coupling);

    m.def(
        "compile",
        [](const TensorNetwork &tn, const std::string &pad, std::optional<std::vector<int>> order) {
            SweepOptions opts;
            opts.policy = parse_pad_policy(pad);
            opts.order = std::move(order);
            return graph_sweep(tn, opts);
        },
        py::arg("network"), py::arg("pad") = "identity", py::arg("order") = py::none(),
        "Compile a network into a sequence of local unitaries.");

    m.def(
        "contract", [](const TensorNetwork &tn, std::optional<int> qubits) {
            return contract_dense(tn, limit_of(qubits)).matrix;
        },
        py::arg("network"), py::arg("dense_limit") = py::none(), "Dense contraction H of the network.");

    m.def(
        "encoded_block",
        [](const CompilationResult &r, std::optional<int> qubits) {
            SimulationOptions opts;
            opts.limit = limit_of(qubits);
            return encoded_block(r, opts).matrix;
        },
        py::arg("result"), py::arg("dense_limit") = py::none(), "The block B with gamma B = H.");

    m.def(
        "verify",
        [](const TensorNetwork &tn, const CompilationResult &r, double tol, std::optional<int> qubits) {
            return to_python(verification_to_json(verify_block_encoding(tn, r, tol, limit_of(qubits))));
        },
        py::arg("network"), py::arg("result"), py::arg("tol") = 1e-10, py::arg("dense_limit") = py::none());

    m.def(
        "report",
        [](const CompilationResult &r, std::optional<TensorNetwork> tn, std::optional<int> qubits) {
            return to_python(report_to_json(resource_report(r, tn ? &*tn : nullptr, limit_of(qubits))));
        },
        py::arg("result"), py::arg("network") = py::none(), py::arg("dense_limit") = py::none());

    m.def(
        "dilate",
        [](const Matrix &a, const std::string &pad) {
            const SiteFactors f = unitary_svd(a, parse_pad_policy(pad));
            py::dict out;
            out["beta"] = f.beta;
            out["degenerate"] = f.degenerate;
            out["trivial"] = f.core.trivial;
            out["k"] = f.core.k;
            out["s_k"] = f.core.s_k;
            out["unitary"] = assemble_site_unitary(f).matrix;
            std::vector<double> angles;
            for (const auto &c : f.core.angles) angles.push_back(c.theta);
            out["angles"] = angles;
            return out;
        },
        py::arg("matrix"), py::arg("pad") = "identity",
        "Unitary Q on (flag, core) whose flag-|0> block is the padded A / beta.");

    m.def("spectral_norm", &spectral_norm, py::arg("matrix"));

    m.def(
        "success_probability",
        [](const Matrix &block, const Vector &psi) {
            const auto p = success_probability(block, psi);
            return py::make_tuple(p.probability, p.bound);
        },
        py::arg("block"), py::arg("psi"), "(||B psi||^2, ||B||^2)");

    m.def(
        "error_bound",
        [](const std::vector<double> &betas, const std::vector<double> &eps) {
            const auto b = error_bound(betas, eps);
            return py::make_tuple(b.exact, b.first_order);
        },
        py::arg("betas"), py::arg("epsilons"), "(exact, first_order) bound on ||H - H_hat||");

    m.def(
        "random_chain",
        [](const std::vector<int> &dims, int d, std::uint64_t seed) {
            Rng rng(seed);
            return random_chain(dims, d, rng);
        },
        py::arg("dims"), py::arg("d") = 2, py::arg("seed") = 0);

    m.def(
        "random_tree",
        [](int n, int max_dim, int d, std::uint64_t seed) {
            Rng rng(seed);
            return random_tree(n, max_dim, d, rng);
        },
        py::arg("n"), py::arg("max_dim") = 2, py::arg("d") = 2, py::arg("seed") = 0);

    m.def(
        "qubo_network",
        [](int n, const std::vector<double> &linear, const std::map<std::pair<int, int>, double> &couplings,
           double c_const, const std::string &method, const std::string &order) {
            const Qubo q = make_qubo(n, linear, couplings, c_const);
            if (method == "sweep") return register_sweep_mpo(q, suggest_order(q, parse_order_heuristic(order)));
            if (method == "sum") return tensor_sum_mpo(q);
            if (method == "graph") return tensor_graph(q);
            throw Error(ErrorCode::invalid, "unknown method '" + method + "' (expected sweep|sum|graph)");
        },
        py::arg("n"), py::arg("linear") = std::vector<double>{},
        py::arg("couplings") = std::map<std::pair<int, int>, double>{}, py::arg("c_const") = 0.0,
        py::arg("method") = "sweep", py::arg("order") = "natural",
        "Network for c + sum l_i Z_i + sum a_ij Z_i Z_j.");

    m.def(
        "qubo_diagonal",
        [](int n, const std::vector<double> &linear, const std::map<std::pair<int, int>, double> &couplings,
           double c_const) {
            const Matrix h = qubo_dense(make_qubo(n, linear, couplings, c_const)).matrix;
            std::vector<double> diag(h.rows());
            for (Eigen::Index i = 0; i < h.rows(); ++i) diag[i] = h(i, i).real();
            return diag;
        },
        py::arg("n"), py::arg("linear") = std::vector<double>{},
        py::arg("couplings") = std::map<std::pair<int, int>, double>{}, py::arg("c_const") = 0.0);
}
