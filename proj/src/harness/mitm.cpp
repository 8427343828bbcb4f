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

#include "sealed/harness/mitm.hpp"

#include "sealed/error.hpp"

namespace sealed::harness {

Mitm::Mitm(net::Endpoint upstream, FrameHook hook)
    : upstream_(std::move(upstream)), hook_(std::move(hook)), listener_(net::Endpoint{"127.0.0.1", 0}) {
  thread_ = std::jthread([this](std::stop_token st) {
    while (!st.stop_requested()) {
      std::optional<net::Socket> s;
      try {
        s = listener_.accept(std::chrono::milliseconds(20));
      } catch (const TransportError&) {
        continue;
      }
      if (s) relay(std::move(*s));
    }
  });
}

Mitm::~Mitm() {
  thread_.request_stop();
  thread_.join();
}

std::vector<RecordedFrame> Mitm::transcript() const {
  std::lock_guard lock(mu_);
  return transcript_;
}

void Mitm::pump(net::Socket& from, net::Socket& to, Direction dir) {
  try {
    for (std::size_t i = 0;; ++i) {
      Bytes f = from.read_frame();
      {
        std::lock_guard lock(mu_);
        transcript_.push_back({dir, f});
      }
      if (hook_) hook_(dir, i, f);
      to.write_frame(f);
    }
  } catch (const TransportError&) {
  }
  from.shutdown();
  to.shutdown();
}

void Mitm::relay(net::Socket client) {
  net::Socket server;
  try {
    server = net::connect_tcp(upstream_);
  } catch (const TransportError&) {
    return;
  }
  client.set_timeout(std::chrono::seconds(10));
  server.set_timeout(std::chrono::seconds(10));
  std::thread back([&] { pump(server, client, Direction::kToClient); });
  pump(client, server, Direction::kToEnclave);
  back.join();
}

}  // namespace sealed::harness
