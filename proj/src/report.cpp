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

#include "tnbe/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tnbe/verify.hpp"

namespace tnbe {

ResourceReport resource_report(const CompilationResult &result, const TensorNetwork *tn, const DenseLimit &limit) {
    ResourceReport rep;
    rep.status = result.status == CompileStatus::ok ? "ok" : "zero_operator";
    rep.gamma = result.gamma;
    rep.peak_coupling_qudits = peak_coupling(result);
    for (const auto &s : result.sites) {
        SiteResources sr;
        sr.vertex = s.vertex;
        sr.m = s.m;
        sr.n = s.n;
        sr.trivial = s.trivial;
        sr.distinct_angles = s.trivial ? 0 : static_cast<int>(s.angles.size());
        sr.condition = s.condition;
        rep.distinct_angles_total += sr.distinct_angles;
        if (!s.trivial && s.beta > 0.0) ++rep.flag_count_dedicated;
        rep.classical_time_estimate += static_cast<double>(std::max(s.m, s.n)) * s.m * s.n;
        rep.sites.push_back(sr);
    }
    rep.flag_count_sequential = std::min(rep.flag_count_dedicated, 1);

    if (result.status != CompileStatus::ok) {
        rep.success_prob_bound = 0.0;
        return rep;
    }
    try {
        double norm;
        if (tn) norm = spectral_norm(contract_dense(*tn, limit).matrix) / result.gamma;
        else norm = spectral_norm(encoded_block(result, SimulationOptions{true, limit}).matrix);
        rep.success_prob_bound = norm * norm;
    } catch (const Error &e) {
        if (e.code() != ErrorCode::too_large) throw;
    }
    return rep;
}

std::string format_report(const ResourceReport &r) {
    std::ostringstream out;
    out.precision(6);
    out << "status                   " << r.status << "\n";
    out << "gamma                    " << r.gamma << "\n";
    out << "peak coupling (qudits)   " << r.peak_coupling_qudits << "\n";
    out << "flags (dedicated)        " << r.flag_count_dedicated << "\n";
    out << "flags (sequential reuse) " << r.flag_count_sequential << "\n";
    out << "distinct angles (total)  " << r.distinct_angles_total << "\n";
    out << "success prob. bound      ";
    if (r.success_prob_bound) out << *r.success_prob_bound << "\n";
    else out << "n/a (too large)\n";
    out << "classical time estimate  " << r.classical_time_estimate << "\n";
    out << "sites\n";
    for (const auto &s : r.sites) {
        out << "  v" << s.vertex << "  " << s.m << "x" << s.n << (s.trivial ? "  trivial" : "") << "  angles "
            << s.distinct_angles << "  cond ";
        if (std::isinf(s.condition)) out << "inf";
        else out << s.condition;
        out << "\n";
    }
    return out.str();
}

} // namespace tnbe
