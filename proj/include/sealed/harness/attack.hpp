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

#ifndef SEALED_HARNESS_ATTACK_HPP
#define SEALED_HARNESS_ATTACK_HPP

#include <string>
#include <vector>

namespace sealed::harness {

struct AttackOutcome {
  std::string id;
  std::string scenario;
  bool blocked = false;
  std::string detail;
};

struct AttackOptions {
  // Off: the enclave stops checking client signatures, so the unknown
  // client gets through. Used as a control.
  bool client_auth = true;
};

// Runs a password-checker enclave (with the leaky function) in-process and
// attacks it: (a) in-flight record tampering, (b) an unknown client,
// (c) the leaky function, (d) replayed handshakes in both directions.
std::vector<AttackOutcome> run_attack_suite(const AttackOptions& opts = {});

}  // namespace sealed::harness

#endif  // SEALED_HARNESS_ATTACK_HPP
