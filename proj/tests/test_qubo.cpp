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

#include <random>

#include "oracles.hpp"
#include "tnbe/network.hpp"
#include "tnbe/qubo.hpp"

using namespace tnbe;

namespace {

Qubo random_qubo(int n, double density, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::bernoulli_distribution coin(density);
    Qubo q(n);
    q.c_const = u(rng);
    for (auto &l : q.linear) l = u(rng);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) q.add_coupling(i, j, u(rng));
    return q;
}

double diagonal_error(const Matrix &h, const Qubo &q) {
    const auto want = oracle::ising_diagonal(q);
    Matrix d = Matrix::Zero(want.size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) d(i, i) = want[i];
    return oracle::max_abs(h - d);
}

Qubo chain_qubo(int n) {
    Qubo q(n);
    for (int i = 0; i + 1 < n; ++i) q.add_coupling(i, i + 1, 1.0);
    return q;
}

} // namespace

TEST_SUITE("qubo-frontend") {

TEST_CASE("dense examples") {
    Qubo z(1);
    z.linear[0] = 1.0;
    CHECK(diagonal_error(qubo_dense(z).matrix, z) == 0.0);
    CHECK(qubo_dense(z).matrix(1, 1) == cplx(-1.0, 0.0));

    Qubo zz(2);
    zz.add_coupling(0, 1, 1.0);
    const Matrix h = qubo_dense(zz).matrix;
    CHECK(h(0, 0) == cplx(1.0));
    CHECK(h(1, 1) == cplx(-1.0));
    CHECK(h(2, 2) == cplx(-1.0));
    CHECK(h(3, 3) == cplx(1.0));

    std::mt19937_64 rng(61);
    const auto q = random_qubo(4, 0.7, rng);
    CHECK(diagonal_error(qubo_dense(q).matrix, q) <= 1e-14);
}

TEST_CASE("binary form converts to spins") {
    const std::vector<std::vector<double>> b{{1.0, 2.0, 0.0}, {0.5, -1.0, 3.0}, {0.0, 0.0, 0.25}};
    const auto q = qubo_from_binary(b, 0.75);
    const auto e = oracle::ising_diagonal(q);
    for (int x = 0; x < 8; ++x) {
        double want = 0.75;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) want += b[i][j] * ((x >> (2 - i)) & 1) * ((x >> (2 - j)) & 1);
        CHECK(e[x] == doctest::Approx(want).epsilon(1e-14));
    }
}

TEST_CASE("slot requirement examples") {
    const auto natural = [](int n) {
        std::vector<int> o(n);
        for (int i = 0; i < n; ++i) o[i] = i;
        return o;
    };
    CHECK(slot_requirement(chain_qubo(5), natural(5)).s == 1);
    Qubo all(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) all.add_coupling(i, j, 1.0);
    CHECK(slot_requirement(all, natural(4)).s == 3);
    CHECK(slot_requirement(Qubo(3), natural(3)).s == 0);
    CHECK_THROWS_AS(slot_requirement(Qubo(3), {0, 1}), Error);
}

TEST_CASE("register sweep examples") {
    Qubo zz(2);
    zz.add_coupling(0, 1, 1.0);
    const auto tn = register_sweep_mpo(zz, {0, 1});
    CHECK(tn.vertices.size() == 2);
    for (const auto &e : tn.edges) CHECK(e.dim == 3);
    CHECK(diagonal_error(contract_dense(tn).matrix, zz) <= 1e-14);

    Qubo chain = chain_qubo(3);
    chain.linear = {1.0, 2.0, 3.0};
    CHECK(diagonal_error(contract_dense(register_sweep_mpo(chain, {0, 1, 2})).matrix, chain) <= 1e-14);

    Qubo c(2);
    c.c_const = 5.0;
    CHECK(oracle::max_abs(contract_dense(register_sweep_mpo(c, {0, 1})).matrix - 5.0 * Matrix::Identity(4, 4)) <= 1e-14);
}

TEST_CASE("tensor sum examples") {
    Qubo lin(2);
    lin.linear = {1.0, 1.0};
    CHECK(tensor_sum_terms(lin) == 2);
    const Matrix h = contract_dense(tensor_sum_mpo(lin)).matrix;
    CHECK(oracle::max_abs(h - Matrix(Eigen::Vector4cd(2.0, 0.0, 0.0, -2.0).asDiagonal())) <= 1e-14);

    Qubo zz(2);
    zz.add_coupling(0, 1, 2.0);
    CHECK(tensor_sum_terms(zz) == 1);
    const auto tn = tensor_sum_mpo(zz);
    CHECK(tn.edges.back().cyclic);
    CHECK(diagonal_error(contract_dense(tn).matrix, zz) <= 1e-14);

    Qubo three(3);
    three.c_const = 0.5;
    three.linear[1] = -1.0;
    three.add_coupling(0, 2, 0.25);
    three.add_coupling(1, 2, 2.0);
    CHECK(tensor_sum_terms(three) == 4);
    CHECK(diagonal_error(contract_dense(tensor_sum_mpo(three)).matrix, three) <= 1e-14);

    try {
        tensor_sum_mpo(Qubo(2));
        FAIL("expected an error");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::empty_operator);
    }
}

TEST_CASE("tensor graph examples") {
    Qubo zz(2);
    zz.add_coupling(0, 1, 1.0);
    auto tn = tensor_graph(zz);
    CHECK(tn.vertices.size() == 2);
    CHECK(diagonal_error(contract_dense(tn).matrix, zz) <= 1e-14);

    Qubo tri(3);
    tri.add_coupling(0, 1, 1.0);
    tri.add_coupling(1, 2, -0.5);
    tri.add_coupling(0, 2, 2.0);
    tn = tensor_graph(tri);
    CHECK(tn.vertices.size() == 3);
    CHECK(tn.edges.size() == 3);
    CHECK(diagonal_error(contract_dense(tn).matrix, tri) <= 1e-14);

    Qubo one(1);
    one.linear[0] = 1.0;
    one.c_const = 2.0;
    tn = tensor_graph(one);
    REQUIRE(tn.vertices.size() == 1);
    CHECK(tn.vertices[0].data == std::vector<cplx>{3.0, 0.0, 0.0, 1.0});

    Qubo star(14);
    for (int leaf = 1; leaf < 14; ++leaf) star.add_coupling(0, leaf, 1.0);
    try {
        tensor_graph(star);
        FAIL("expected an error");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::too_large);
    }
}

TEST_CASE("constructions agree with the diagonal on random instances") {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 6;
        const auto q = random_qubo(n, 0.5, rng);
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        const auto sweep = register_sweep_mpo(q, order);
        CHECK(diagonal_error(contract_dense(sweep).matrix, q) <= 1e-12);
        const int s = slot_requirement(q, order).s;
        for (const auto &e : sweep.edges) CHECK(e.dim == s + 2);
        CHECK(diagonal_error(contract_dense(tensor_sum_mpo(q)).matrix, q) <= 1e-12);
        CHECK(diagonal_error(contract_dense(tensor_graph(q)).matrix, q) <= 1e-12);
    }
}

TEST_CASE("order heuristics") {
    auto order = suggest_order(chain_qubo(5), OrderHeuristic::min_degree);
    CHECK((order.front() == 0 || order.front() == 4));
    CHECK(suggest_order(Qubo(4), OrderHeuristic::min_fill) == std::vector<int>{0, 1, 2, 3});
    CHECK(suggest_order(Qubo(4), OrderHeuristic::min_degree) == std::vector<int>{0, 1, 2, 3});
    Qubo star(4);
    for (int leaf = 0; leaf < 3; ++leaf) star.add_coupling(leaf, 3, 1.0);
    order = suggest_order(star, OrderHeuristic::min_degree);
    CHECK(order.back() == 3);
    CHECK(parse_order_heuristic("min_fill") == OrderHeuristic::min_fill);
    CHECK(to_string(OrderHeuristic::natural) == "natural");
}

} // TEST_SUITE
