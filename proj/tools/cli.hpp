// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "docanno/metrics.hpp"

namespace docanno::cli {

/// Runs one invocation. Returns 0 on success, 1 on a domain error and 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Pairwise matrix in the "textual / non-textual" cell layout, rows as ground truth.
std::string format_agreement_table(const AgreementMatrix& matrix);

std::string agreement_csv(const AgreementMatrix& matrix);
std::string agreement_json(const AgreementMatrix& matrix);

}  // namespace docanno::cli
