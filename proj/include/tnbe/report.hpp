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

#ifndef TNBE_REPORT_HPP
#define TNBE_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "tnbe/network.hpp"
#include "tnbe/sweep.hpp"

namespace tnbe {

struct SiteResources {
    int vertex = 0;
    int m = 0, n = 0;
    bool trivial = false;
    int distinct_angles = 0; ///< 0 for trivial cores
    double condition = 0.0;
};

struct ResourceReport {
    std::string status = "ok";
    int peak_coupling_qudits = 0;
    int flag_count_dedicated = 0;  ///< one per nontrivial core
    int flag_count_sequential = 0; ///< a single reused flag, if any is needed
    int distinct_angles_total = 0; ///< sum over sites
    double gamma = 0.0;
    std::optional<double> success_prob_bound; ///< ||H||^2 / gamma^2
    double classical_time_estimate = 0.0;     ///< sum of max(m, n) m n
    std::vector<SiteResources> sites;
};

/// With `tn` the bound uses the contraction oracle; without it the encoded
/// block is simulated. The bound is left empty when either is too large.
ResourceReport resource_report(const CompilationResult &result, const TensorNetwork *tn = nullptr,
                               const DenseLimit &limit = {});

std::string format_report(const ResourceReport &report);

} // namespace tnbe

#endif // TNBE_REPORT_HPP
