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

#ifndef SEALED_HARNESS_MITM_HPP
#define SEALED_HARNESS_MITM_HPP

#include <functional>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "sealed/channel/net.hpp"

namespace sealed::harness {

enum class Direction { kToEnclave, kToClient };

// Called for every frame in flight; may rewrite it. `index` counts frames
// per direction within one connection.
using FrameHook = std::function<void(Direction, std::size_t index, Bytes& frame)>;

struct RecordedFrame {
  Direction direction;
  Bytes frame;
};

// A frame-aware proxy standing where a malicious host OS would: between a
// client and the enclave, able to read, record and rewrite every frame.
class Mitm {
 public:
  explicit Mitm(net::Endpoint upstream, FrameHook hook = {});
  ~Mitm();
  Mitm(const Mitm&) = delete;
  Mitm& operator=(const Mitm&) = delete;

  net::Endpoint endpoint() const { return listener_.endpoint(); }
  // Frames as received, before the hook ran.
  std::vector<RecordedFrame> transcript() const;

 private:
  void relay(net::Socket client);
  void pump(net::Socket& from, net::Socket& to, Direction dir);

  net::Endpoint upstream_;
  FrameHook hook_;
  net::Listener listener_;
  mutable std::mutex mu_;
  std::vector<RecordedFrame> transcript_;
  std::jthread thread_;
};

}  // namespace sealed::harness

#endif  // SEALED_HARNESS_MITM_HPP
