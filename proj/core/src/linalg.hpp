// Copyright 2026 The seqent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Core>

#include <vector>

namespace seqent::detail {

// Singular values only (LAPACK ?gesdd, jobz = 'N'), descending. The input is
// overwritten. Throws NumericalError when the decomposition fails.
std::vector<double> singular_values(Eigen::MatrixXd& a);
std::vector<double> singular_values(Eigen::MatrixXcd& a);

} // namespace seqent::detail
