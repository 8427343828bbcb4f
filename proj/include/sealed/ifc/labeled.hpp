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

#ifndef SEALED_IFC_LABELED_HPP
#define SEALED_IFC_LABELED_HPP

#include <mutex>

#include "sealed/bytes.hpp"
#include "sealed/label/dclabel.hpp"

namespace sealed::ifc {

using label::DCLabel;
using label::Privilege;

// A label attached to a codec-encoded payload. The payload stays encoded so
// the value crosses serialization boundaries with its label unchanged.
// Construction does no flow check; IfcContext::label is the guarded path.
struct LabeledValue {
  DCLabel label;
  Bytes payload;

  friend bool operator==(const LabeledValue&, const LabeledValue&) = default;
};

// A mutable cell whose label is fixed at allocation. Shared across enclave
// calls; the cell is guarded by a mutex.
class LabeledRef {
 public:
  LabeledRef(DCLabel label, Bytes cell) : label_(std::move(label)), cell_(std::move(cell)) {}

  LabeledRef(const LabeledRef&) = delete;
  LabeledRef& operator=(const LabeledRef&) = delete;

  const DCLabel& label() const { return label_; }

  // Raw cell access for the IFC runtime; no flow checks here.
  Bytes load() const {
    std::lock_guard lock(mu_);
    return cell_;
  }
  void store(Bytes cell) {
    std::lock_guard lock(mu_);
    cell_ = std::move(cell);
  }

 private:
  const DCLabel label_;
  mutable std::mutex mu_;
  Bytes cell_;
};

}  // namespace sealed::ifc

#endif  // SEALED_IFC_LABELED_HPP
