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

#include "linalg.hpp"

#include "seqent/error.hpp"

#include <complex>
#include <string>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace seqent::detail {

namespace {

void check_info(lapack_int info, const char* routine) {
    if (info < 0)
        throw NumericalError(std::string(routine) + ": illegal argument " + std::to_string(-info));
    if (info > 0)
        throw NumericalError(std::string(routine) + ": singular value iteration did not converge");
}

} // namespace

std::vector<double> singular_values(Eigen::MatrixXd& a) {
    const auto m = static_cast<lapack_int>(a.rows());
    const auto n = static_cast<lapack_int>(a.cols());
    std::vector<double> s(static_cast<std::size_t>(std::min(m, n)));
    const lapack_int info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'N', m, n, a.data(), std::max<lapack_int>(m, 1),
                                           s.data(), nullptr, 1, nullptr, 1);
    check_info(info, "dgesdd");
    return s;
}

std::vector<double> singular_values(Eigen::MatrixXcd& a) {
    const auto m = static_cast<lapack_int>(a.rows());
    const auto n = static_cast<lapack_int>(a.cols());
    std::vector<double> s(static_cast<std::size_t>(std::min(m, n)));
    const lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', m, n, a.data(), std::max<lapack_int>(m, 1),
                                           s.data(), nullptr, 1, nullptr, 1);
    check_info(info, "zgesdd");
    return s;
}

} // namespace seqent::detail
