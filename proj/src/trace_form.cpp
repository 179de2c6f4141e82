// Copyright 2026 The lucheck Authors
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

#include "lucheck/trace_form.hpp"

namespace lucheck {

std::vector<bool> TraceForm::maximally_mixed_mask() const {
  std::vector<bool> mask;
  mask.reserve(frames.size());
  for (const auto& f : frames) {
    mask.push_back(f.maximally_mixed);
  }
  return mask;
}

std::vector<LocalEigenframe> local_eigenframes(const NQubitState& s,
                                               double degeneracy_tol) {
  std::vector<LocalEigenframe> frames;
  frames.reserve(static_cast<std::size_t>(s.num_qubits()));
  for (int q = 0; q < s.num_qubits(); ++q) {
    const ComplexMatrix marginal = reduced_qubit(s, q);
    const EigenPair2 eig = eig_hermitian_2x2(marginal, degeneracy_tol);
    LocalEigenframe f;
    f.qubit = q;
    f.eigenvalues[0] = eig.eigenvalues[0];
    f.eigenvalues[1] = eig.eigenvalues[1];
    f.V = eig.vectors;
    f.bloch = bloch_vector(marginal);
    f.maximally_mixed = eig.degenerate;
    frames.push_back(f);
  }
  return frames;
}

ComplexMatrix conjugate_local(const ComplexMatrix& rho, std::span<const Matrix2c> factors) {
  const ComplexMatrix u = kron_all(factors, rho.rows());
  return u * rho * u.adjoint();
}

TraceForm to_trace_form(const NQubitState& s, double degeneracy_tol) {
  std::vector<LocalEigenframe> frames = local_eigenframes(s, degeneracy_tol);
  std::vector<Matrix2c> adjoints;
  adjoints.reserve(frames.size());
  for (const auto& f : frames) {
    adjoints.push_back(f.V.adjoint());
  }
  const ComplexMatrix rho_t = conjugate_local(s.matrix(), adjoints);
  return TraceForm{validate_state(rho_t, s.num_qubits()), std::move(frames)};
}

}  // namespace lucheck
