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

#include "tnbe/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace tnbe {

namespace {

constexpr int kResultVersion = 1;

/// A JSON node together with its path, for diagnostics.
class Field {
  public:
    Field(const json &node, std::string path, const std::string &source)
        : node_(node), path_(std::move(path)), source_(source) {}

    [[noreturn]] void fail(const std::string &what) const {
        throw Error(ErrorCode::parse, source_ + ": " + (path_.empty() ? "<root>" : path_) + ": " + what);
    }

    bool has(const std::string &key) const { return node_.is_object() && node_.contains(key); }
    bool is_null() const { return node_.is_null(); }
    bool is_array() const { return node_.is_array(); }

    Field at(const std::string &key) const {
        if (!node_.is_object()) fail("expected an object");
        if (!node_.contains(key)) Field(node_, child(key), source_).fail("missing field");
        return Field(node_.at(key), child(key), source_);
    }

    std::size_t size() const {
        if (!node_.is_array()) fail("expected an array");
        return node_.size();
    }

    Field operator[](std::size_t i) const {
        if (!node_.is_array() || i >= node_.size()) fail("index out of range");
        return Field(node_.at(i), path_ + "[" + std::to_string(i) + "]", source_);
    }

    int as_int() const {
        if (!node_.is_number_integer()) fail("expected an integer");
        return node_.get<int>();
    }

    double as_double() const {
        if (!node_.is_number()) fail("expected a number");
        return node_.get<double>();
    }

    bool as_bool() const {
        if (!node_.is_boolean()) fail("expected true or false");
        return node_.get<bool>();
    }

    std::string as_string() const {
        if (!node_.is_string()) fail("expected a string");
        return node_.get<std::string>();
    }

    std::vector<int> ints() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i].as_int());
        return out;
    }

    std::vector<double> doubles() const {
        std::vector<double> out;
        for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i].as_double());
        return out;
    }

    const std::string &path() const { return path_; }
    const json &node() const { return node_; }

  private:
    std::string child(const std::string &key) const { return path_.empty() ? key : path_ + "." + key; }

    const json &node_;
    std::string path_;
    const std::string &source_;
};

/// Infinity and NaN have no JSON form; they are written as null.
json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double number_or_inf(const Field &f) { return f.is_null() ? std::numeric_limits<double>::infinity() : f.as_double(); }

std::string leg_kind_name(LegKind k) {
    switch (k) {
    case LegKind::phys_in: return "phys_in";
    case LegKind::phys_out: return "phys_out";
    case LegKind::bond: return "bond";
    }
    return "bond";
}

json complex_array(const cplx *data, std::size_t size) {
    json re = json::array(), im = json::array();
    for (std::size_t i = 0; i < size; ++i) {
        re.push_back(data[i].real());
        im.push_back(data[i].imag());
    }
    return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

std::vector<cplx> read_complex_array(const Field &f, std::size_t expected) {
    const auto re = f.at("re").doubles();
    std::vector<double> im(re.size(), 0.0);
    if (f.has("im")) im = f.at("im").doubles();
    if (re.size() != expected) f.at("re").fail("expected " + std::to_string(expected) + " entries, got " +
                                               std::to_string(re.size()));
    if (im.size() != re.size()) f.at("im").fail("length differs from re");
    std::vector<cplx> out(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) out[i] = {re[i], im[i]};
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Files

json parse_json(const std::string &text, const std::string &source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        std::size_t line = 1, column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string what = e.what();
        if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
        throw Error(ErrorCode::parse, source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what);
    }
}

json read_json_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::parse, path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str(), path);
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::parse, path + ": cannot write file");
    out << text;
    if (!out) throw Error(ErrorCode::parse, path + ": write failed");
}

// ---------------------------------------------------------------------------
// Networks

TensorNetwork network_from_json(const json &j, const std::string &source) {
    const Field root(j, "", source);
    TensorNetwork tn;
    tn.d = root.at("d").as_int();
    if (tn.d < 2) root.at("d").fail("physical dimension must be at least 2");

    const Field vertices = root.at("vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Field fv = vertices[i];
        SiteTensor s;
        s.id = fv.at("id").as_int();
        const Field legs = fv.at("legs");
        for (std::size_t a = 0; a < legs.size(); ++a) {
            const Field fl = legs[a];
            const std::string kind = fl.at("kind").as_string();
            Leg leg;
            leg.dim = fl.at("dim").as_int();
            if (leg.dim < 1) fl.at("dim").fail("dimension must be positive");
            if (kind == "phys_in") leg.kind = LegKind::phys_in;
            else if (kind == "phys_out") leg.kind = LegKind::phys_out;
            else if (kind == "bond") {
                leg.kind = LegKind::bond;
                leg.edge = fl.at("edge").as_int();
            } else fl.at("kind").fail("unknown leg kind '" + kind + "' (expected phys_in|phys_out|bond)");
            s.legs.push_back(leg);
        }
        const Field data = fv.at("data");
        if (data.has("shape")) {
            const auto shape = data.at("shape").ints();
            if (shape != s.shape()) data.at("shape").fail("shape does not match the leg dimensions");
        }
        s.data = read_complex_array(data, s.expected_size());
        tn.vertices.push_back(std::move(s));
    }

    const Field edges = root.at("edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Field fe = edges[i];
        Edge e;
        e.id = fe.at("id").as_int();
        e.u = fe.at("u").as_int();
        if (fe.has("v") && !fe.at("v").is_null()) e.v = fe.at("v").as_int();
        e.dim = fe.at("dim").as_int();
        if (e.dim < 1) fe.at("dim").fail("dimension must be positive");
        if (fe.has("cyclic")) e.cyclic = fe.at("cyclic").as_bool();
        tn.edges.push_back(e);
    }

    if (root.has("boundary")) {
        const Field b = root.at("boundary");
        if (!b.node().is_object()) b.fail("expected an object keyed by edge id");
        for (const auto &[key, value] : b.node().items()) {
            const Field fb(value, b.path() + "." + key, source);
            int edge = 0;
            try {
                std::size_t used = 0;
                edge = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception &) {
                fb.fail("boundary keys must be edge ids");
            }
            std::vector<cplx> vec;
            for (std::size_t k = 0; k < fb.size(); ++k) {
                const Field pair = fb[k];
                if (pair.size() != 2) pair.fail("expected [re, im]");
                vec.emplace_back(pair[0].as_double(), pair[1].as_double());
            }
            tn.boundary[edge] = std::move(vec);
        }
    }
    return tn;
}

json network_to_json(const TensorNetwork &tn) {
    json vertices = json::array();
    for (const auto &s : tn.vertices) {
        json legs = json::array();
        for (const auto &l : s.legs) {
            json leg{{"kind", leg_kind_name(l.kind)}, {"dim", l.dim}};
            if (l.kind == LegKind::bond) leg["edge"] = l.edge;
            legs.push_back(std::move(leg));
        }
        json data = complex_array(s.data.data(), s.data.size());
        data["shape"] = s.shape();
        vertices.push_back(json{{"id", s.id}, {"legs", std::move(legs)}, {"data", std::move(data)}});
    }
    json edges = json::array();
    for (const auto &e : tn.edges) {
        json je{{"id", e.id}, {"u", e.u}, {"v", e.v ? json(*e.v) : json(nullptr)}, {"dim", e.dim}};
        if (e.cyclic) je["cyclic"] = true;
        edges.push_back(std::move(je));
    }
    json out{{"d", tn.d}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
    if (!tn.boundary.empty()) {
        json b = json::object();
        for (const auto &[edge, vec] : tn.boundary) {
            json arr = json::array();
            for (const auto &c : vec) arr.push_back(json::array({c.real(), c.imag()}));
            b[std::to_string(edge)] = std::move(arr);
        }
        out["boundary"] = std::move(b);
    }
    return out;
}

std::string dump_network(const TensorNetwork &tn) { return network_to_json(tn).dump(2) + "\n"; }

TensorNetwork read_network(const std::string &path) { return network_from_json(read_json_file(path), path); }

// ---------------------------------------------------------------------------
// QUBO

Qubo qubo_from_json(const json &j, const std::string &source) {
    const Field root(j, "", source);
    if (root.has("matrix")) {
        const Field m = root.at("matrix");
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < m.size(); ++i) rows.push_back(m[i].doubles());
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].size() != rows.size()) m[i].fail("matrix must be square");
        const double offset = root.has("offset") ? root.at("offset").as_double() : 0.0;
        Qubo q = qubo_from_binary(rows, offset);
        q.check();
        return q;
    }
    const int n = root.at("n").as_int();
    if (n < 1) root.at("n").fail("need at least one site");
    Qubo q(n);
    if (root.has("c_const")) q.c_const = root.at("c_const").as_double();
    if (root.has("linear")) {
        q.linear = root.at("linear").doubles();
        if (static_cast<int>(q.linear.size()) != n) root.at("linear").fail("expected n entries");
    }
    if (root.has("quadratic")) {
        const Field quad = root.at("quadratic");
        for (std::size_t k = 0; k < quad.size(); ++k) {
            const Field t = quad[k];
            const int i = t.at("i").as_int(), jj = t.at("j").as_int();
            if (i == jj) t.fail("self-coupling is not allowed");
            if (i < 0 || jj < 0 || i >= n || jj >= n) t.fail("site index out of range");
            q.add_coupling(i, jj, t.at("alpha").as_double());
        }
    }
    return q;
}

json qubo_to_json(const Qubo &q) {
    json quad = json::array();
    for (const auto &[key, a] : q.quadratic) quad.push_back(json{{"i", key.first}, {"j", key.second}, {"alpha", a}});
    return json{{"n", q.n}, {"c_const", q.c_const}, {"linear", q.linear}, {"quadratic", std::move(quad)}};
}

Qubo read_qubo(const std::string &path) { return qubo_from_json(read_json_file(path), path); }

// ---------------------------------------------------------------------------
// Compilation results

json result_to_json(const CompilationResult &r) {
    json layout = json::array();
    for (const auto &reg : r.layout.registers) {
        json jr{{"id", reg.id}, {"name", reg.name}, {"kind", to_string(reg.kind)}, {"dim", reg.dim},
                {"postselect", reg.postselect}};
        if (reg.vertex >= 0) jr["vertex"] = reg.vertex;
        if (reg.edge >= 0) jr["edge"] = reg.edge;
        layout.push_back(std::move(jr));
    }
    json sites = json::array();
    for (const auto &s : r.sites) {
        json angles = json::array();
        for (const auto &a : s.angles) angles.push_back(json{{"theta", a.theta}, {"count", a.count}});
        sites.push_back(json{{"vertex", s.vertex},
                             {"in_edges", s.in_edges},
                             {"out_edges", s.out_edges},
                             {"m", s.m},
                             {"n", s.n},
                             {"k", s.k},
                             {"p", s.p},
                             {"q", s.q},
                             {"drop", s.drop},
                             {"trivial", s.trivial},
                             {"beta", s.beta},
                             {"condition", number_or_null(s.condition)},
                             {"singular_values", s.singular_values},
                             {"s_k", s.s_k},
                             {"angles", std::move(angles)}});
    }
    json ops = json::array();
    for (const auto &op : r.ops) {
        json jo = complex_array(op.matrix.data(), static_cast<std::size_t>(op.matrix.size()));
        jo["site"] = op.vertex;
        jo["role"] = to_string(op.role);
        jo["registers"] = op.registers;
        jo["dim"] = op.matrix.rows();
        ops.push_back(std::move(jo));
    }
    return json{{"format", "tnbe-result"},
                {"version", kResultVersion},
                {"status", r.status == CompileStatus::ok ? "ok" : "zero_operator"},
                {"d", r.d},
                {"pad", to_string(r.policy)},
                {"gamma", r.gamma},
                {"zero_vertex", r.zero_vertex ? json(*r.zero_vertex) : json(nullptr)},
                {"order", r.order},
                {"layout", std::move(layout)},
                {"sites", std::move(sites)},
                {"ops", std::move(ops)}};
}

CompilationResult result_from_json(const json &j, const std::string &source) {
    const Field root(j, "", source);
    if (root.at("format").as_string() != "tnbe-result") root.at("format").fail("not a compilation result");
    if (root.at("version").as_int() != kResultVersion) root.at("version").fail("unsupported version");

    CompilationResult r;
    const std::string status = root.at("status").as_string();
    if (status == "ok") r.status = CompileStatus::ok;
    else if (status == "zero_operator") r.status = CompileStatus::zero_operator;
    else root.at("status").fail("unknown status '" + status + "'");
    r.d = root.at("d").as_int();
    try {
        r.policy = parse_pad_policy(root.at("pad").as_string());
    } catch (const Error &e) {
        root.at("pad").fail(e.what());
    }
    r.gamma = root.at("gamma").as_double();
    if (root.has("zero_vertex") && !root.at("zero_vertex").is_null()) r.zero_vertex = root.at("zero_vertex").as_int();
    r.order = root.at("order").ints();

    const Field layout = root.at("layout");
    for (std::size_t i = 0; i < layout.size(); ++i) {
        const Field f = layout[i];
        Register reg;
        reg.id = f.at("id").as_int();
        if (reg.id != static_cast<int>(i)) f.at("id").fail("register ids must equal their layout position");
        reg.name = f.at("name").as_string();
        try {
            reg.kind = parse_register_kind(f.at("kind").as_string());
        } catch (const Error &e) {
            f.at("kind").fail(e.what());
        }
        reg.dim = f.at("dim").as_int();
        if (reg.dim < 1) f.at("dim").fail("dimension must be positive");
        reg.postselect = f.at("postselect").as_bool();
        if (f.has("vertex")) reg.vertex = f.at("vertex").as_int();
        if (f.has("edge")) reg.edge = f.at("edge").as_int();
        r.layout.registers.push_back(std::move(reg));
    }

    const Field sites = root.at("sites");
    for (std::size_t i = 0; i < sites.size(); ++i) {
        const Field f = sites[i];
        SiteRecord s;
        s.vertex = f.at("vertex").as_int();
        s.in_edges = f.at("in_edges").ints();
        s.out_edges = f.at("out_edges").ints();
        s.m = f.at("m").as_int();
        s.n = f.at("n").as_int();
        s.k = f.at("k").as_int();
        s.p = f.at("p").as_int();
        s.q = f.at("q").as_int();
        s.drop = f.at("drop").as_bool();
        s.trivial = f.at("trivial").as_bool();
        s.beta = f.at("beta").as_double();
        s.condition = number_or_inf(f.at("condition"));
        s.singular_values = f.at("singular_values").doubles();
        s.s_k = f.at("s_k").doubles();
        const Field angles = f.at("angles");
        for (std::size_t a = 0; a < angles.size(); ++a)
            s.angles.push_back(AngleCount{angles[a].at("theta").as_double(), angles[a].at("count").as_int()});
        r.sites.push_back(std::move(s));
    }

    const Field ops = root.at("ops");
    const int nregs = static_cast<int>(r.layout.registers.size());
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const Field f = ops[i];
        Op op;
        op.vertex = f.at("site").as_int();
        try {
            op.role = parse_op_role(f.at("role").as_string());
        } catch (const Error &e) {
            f.at("role").fail(e.what());
        }
        op.registers = f.at("registers").ints();
        std::size_t expected = 1;
        for (int reg : op.registers) {
            if (reg < 0 || reg >= nregs) f.at("registers").fail("unknown register " + std::to_string(reg));
            expected *= static_cast<std::size_t>(r.layout.registers[reg].dim);
        }
        const int dim = f.at("dim").as_int();
        if (static_cast<std::size_t>(dim) != expected) f.at("dim").fail("does not match the register dimensions");
        const auto data = read_complex_array(f, expected * expected);
        op.matrix = Eigen::Map<const Matrix>(data.data(), dim, dim);
        r.ops.push_back(std::move(op));
    }
    return r;
}

std::string dump_result(const CompilationResult &r) { return result_to_json(r).dump() + "\n"; }

CompilationResult read_result(const std::string &path) { return result_from_json(read_json_file(path), path); }

// ---------------------------------------------------------------------------
// Reports

json verification_to_json(const VerificationReport &r) {
    double worst = 0.0;
    for (double u : r.unitarity_errors) worst = std::max(worst, u);
    json unit = json::array();
    for (double u : r.unitarity_errors) unit.push_back(number_or_null(u));
    return json{{"format", "tnbe-verification"},
                {"block_error", number_or_null(r.block_error)},
                {"max_unitarity_error", worst},
                {"unitarity_errors", std::move(unit)},
                {"gamma", r.gamma},
                {"tolerance", r.tolerance},
                {"pass", r.pass}};
}

json report_to_json(const ResourceReport &r) {
    json sites = json::array();
    for (const auto &s : r.sites)
        sites.push_back(json{{"vertex", s.vertex},
                             {"m", s.m},
                             {"n", s.n},
                             {"trivial", s.trivial},
                             {"distinct_angles", s.distinct_angles},
                             {"condition", number_or_null(s.condition)}});
    return json{{"format", "tnbe-resources"},
                {"status", r.status},
                {"peak_coupling_qudits", r.peak_coupling_qudits},
                {"flag_count_dedicated", r.flag_count_dedicated},
                {"flag_count_sequential", r.flag_count_sequential},
                {"distinct_angles_total", r.distinct_angles_total},
                {"gamma", r.gamma},
                {"success_prob_bound", r.success_prob_bound ? json(*r.success_prob_bound) : json(nullptr)},
                {"classical_time_estimate", r.classical_time_estimate},
                {"sites", std::move(sites)}};
}

json slot_plan_to_json(const SlotPlan &plan) {
    return json{{"order", plan.order}, {"s", plan.s}, {"slot", plan.slot}, {"width", plan.width}};
}

} // namespace tnbe
