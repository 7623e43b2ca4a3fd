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


#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "support.hpp"
#include "tnbe/random.hpp"
#include "tnbe/sweep.hpp"
#include "tnbe/verify.hpp"

using namespace tnbe;

namespace {

Vector random_state(int dim, Rng &rng) {
    std::normal_distribution<double> g;
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = cplx(g(rng), g(rng));
    return v.normalized();
}

} // namespace

TEST_SUITE("dense-verifier") {

TEST_CASE("empty op list composes to the identity") {
    CompilationResult r;
    r.layout = layout_registers(support::identity_mpo(2), {0, 1}, {false, false});
    const auto u = compose_global(r);
    CHECK(oracle::max_abs(u.matrix - Matrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("single X compilation") {
    const auto r = graph_sweep(support::single_site(support::pauli_x()));
    const auto u = compose_global(r);
    const auto b = project_encoded_block(u, r.layout);
    CHECK(oracle::max_abs(b.matrix - support::pauli_x()) <= 1e-14);
}

TEST_CASE("projection of the identity") {
    RegisterLayout layout = layout_registers(support::single_site(support::pauli_x()), {0});
    const DenseOperator u{Matrix::Identity(4, 4), {}, {}};
    CHECK(oracle::max_abs(project_encoded_block(u, layout).matrix - Matrix::Identity(2, 2)) == 0.0);
}

TEST_CASE("diag(1, 0.5) block") {
    const auto r = graph_sweep(support::single_site(support::diag2(1.0, 0.5)));
    const auto b = project_encoded_block(compose_global(r), r.layout);
    CHECK(oracle::max_abs(b.matrix - support::diag2(1.0, 0.5)) <= 1e-14);
    CHECK(spectral_norm(b.matrix) <= 1.0 + 1e-10);
}

TEST_CASE("left fold, right fold and explicit embedding agree") {
    Rng rng(41);
    for (int trial = 0; trial < 4; ++trial) {
        const auto r = graph_sweep(random_chain({2}, 2, rng));
        const Matrix u = compose_global(r).matrix;
        CHECK(oracle::max_abs(u - oracle::compose_left(r)) <= 1e-12);
        CHECK(oracle::max_abs(u - oracle::compose_right_adjoint(r)) <= 1e-12);
        CHECK(unitarity_error(u) <= 1e-12);
        CHECK(oracle::max_abs(project_encoded_block({u, {}, {}}, r.layout).matrix - oracle::project(u, r.layout)) <= 1e-14);
    }
}

TEST_CASE("simulated block matches the composed block") {
    Rng rng(42);
    const auto r = graph_sweep(random_tree(4, 2, 2, rng));
    const Matrix full = project_encoded_block(compose_global(r), r.layout).matrix;
    SimulationOptions late;
    late.early_projection = false;
    CHECK(oracle::max_abs(encoded_block(r).matrix - full) <= 1e-12);
    CHECK(oracle::max_abs(encoded_block(r, late).matrix - full) <= 1e-12);
}

TEST_CASE("verify identity MPO") {
    const auto tn = support::identity_mpo(3);
    const auto rep = verify_block_encoding(tn, graph_sweep(tn));
    CHECK(rep.pass);
    CHECK(rep.block_error <= 1e-14);
}

TEST_CASE("verify random 3-site chain") {
    Rng rng(43);
    const auto tn = random_chain({2, 2}, 2, rng);
    const auto rep = verify_block_encoding(tn, graph_sweep(tn));
    CHECK(rep.pass);
    for (double e : rep.unitarity_errors) CHECK(e <= 1e-12);
}

TEST_CASE("corrupted op fails verification") {
    Rng rng(44);
    const auto tn = random_chain({2, 2}, 2, rng);
    auto r = graph_sweep(tn);
    r.ops[1].matrix(0, 0) += 1e-3;
    const auto rep = verify_block_encoding(tn, r);
    CHECK_FALSE(rep.pass);
    CHECK(rep.block_error > 1e-5);
}

TEST_CASE("verify respects the dense limit") {
    Rng rng(45);
    const auto tn = random_chain({2, 2}, 2, rng);
    CHECK_THROWS_AS(verify_block_encoding(tn, graph_sweep(tn), 1e-10, DenseLimit::from_qubits(2)), Error);
}

TEST_CASE("success probability examples") {
    Rng rng(46);
    const auto psi = random_state(4, rng);
    auto p = success_probability(Matrix::Identity(4, 4), psi);
    CHECK(p.probability == doctest::Approx(1.0).epsilon(1e-12));
    Vector zero = Vector::Zero(2);
    zero(0) = 1.0;
    p = success_probability(support::pauli_z() / 2.0, zero);
    CHECK(p.probability == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(p.bound == doctest::Approx(0.25).epsilon(1e-14));
    CHECK_THROWS_AS(success_probability(Matrix::Identity(2, 2), 2.0 * zero), Error);
}

TEST_CASE("post-selected simulation matches the block") {
    Rng rng(47);
    for (int trial = 0; trial < 5; ++trial) {
        const auto tn = random_chain({2, 3}, 2, rng);
        const auto r = graph_sweep(tn);
        const auto psi = random_state(8, rng);
        const Matrix h = contract_dense(tn).matrix;
        const double want = (h * psi).squaredNorm() / (r.gamma * r.gamma);
        const double got = simulate_postselection(r, psi);
        CHECK(std::abs(got - want) <= 1e-10);
        CHECK(got <= std::pow(spectral_norm(h) / r.gamma, 2) + 1e-10);
    }
}

TEST_CASE("error bound examples") {
    auto b = error_bound({1.0, 1.0}, {0.0, 0.0});
    CHECK(b.exact == 0.0);
    CHECK(b.first_order == 0.0);
    b = error_bound({1.0, 1.0}, {0.1, 0.1});
    CHECK(b.exact == doctest::Approx(0.21).epsilon(1e-14));
    CHECK(b.first_order == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(b.first_order <= b.exact);
    CHECK_THROWS_AS(error_bound({0.0}, {0.1}), Error);
    CHECK_THROWS_AS(error_bound({1.0}, {-0.1}), Error);
    CHECK_THROWS_AS(error_bound({1.0, 1.0}, {0.1}), Error);
}

TEST_CASE("site block is A over beta") {
    Rng rng(48);
    const auto tn = random_chain({2}, 2, rng);
    const auto r = graph_sweep(tn);
    for (int v : r.order) {
        const auto &rec = r.site(v);
        const Matrix b = site_block(r, v);
        CHECK(b.rows() == rec.m);
        CHECK(b.cols() == rec.n);
        CHECK(spectral_norm(b) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("chaining examples") {
    const auto one = support::single_site(support::diag2(1.0, 0.5));
    CHECK(verify_chaining(one, graph_sweep(one)).pass);

    Rng rng(49);
    const auto apart = random_network(2, {}, {}, 2, rng);
    const auto ra = graph_sweep(apart);
    const auto ca = verify_chaining(apart, ra);
    CHECK(ca.pass);
    CHECK(ca.error <= 1e-10);

    const auto chain = random_chain({2, 2}, 2, rng);
    CHECK(verify_chaining(chain, graph_sweep(chain)).pass);
}

TEST_CASE("appending an identity site tensors the block with I") {
    Rng rng(50);
    auto tn = random_chain({2}, 2, rng);
    const Matrix b = encoded_block(graph_sweep(tn)).matrix;
    SiteTensor id;
    id.id = 2;
    id.legs = {Leg::phys_out(2), Leg::phys_in(2)};
    id.data = {1.0, 0.0, 0.0, 1.0};
    tn.vertices.push_back(id);
    const Matrix b2 = encoded_block(graph_sweep(tn)).matrix;
    CHECK(oracle::max_abs(b2 - support::kron(b, Matrix::Identity(2, 2))) <= 1e-12);
}

TEST_CASE("spectral norm above the dense threshold") {
    Rng rng(51);
    Matrix m = 0.01 * random_matrix(600, 600, rng);
    m(0, 0) += 5.0;
    const double want = Eigen::BDCSVD<Matrix>(m).singularValues()(0);
    CHECK(std::abs(spectral_norm(m) - want) <= 1e-9 * want);
}

} // TEST_SUITE
