/*
 * Copyright 2026 The Sealed Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SEALED_HARNESS_BENCH_HPP
#define SEALED_HARNESS_BENCH_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace sealed::harness {

struct BenchRow {
  std::string config;
  double mean_ms = 0;
  double stddev_ms = 0;
  std::size_t samples = 0;
};

struct BenchOptions {
  std::size_t iterations = 50;
  std::size_t warmup = 5;
};

struct BenchReport {
  // ifc_on, ifc_off, attestation_off, attestation_on, client_sig_off,
  // client_sig_on, in that order.
  std::vector<BenchRow> rows;
  // Raw response bytes of the IFC on and off variants matched on every call.
  bool ifc_payloads_identical = false;
};

// Times checkpwd gateway calls against one in-process enclave per
// configuration. Samples of all configurations are interleaved so drift in
// machine load hits them equally. The attestation and client-signature
// groups open a fresh connection and handshake per call. Throws
// std::invalid_argument when iterations is zero.
BenchReport run_bench(const BenchOptions& opts = {});

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace sealed::harness

#endif  // SEALED_HARNESS_BENCH_HPP
