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

#ifndef SEALED_IFC_CONTEXT_HPP
#define SEALED_IFC_CONTEXT_HPP

#include <memory>

#include "sealed/core/traits.hpp"
#include "sealed/core/value.hpp"
#include "sealed/ifc/labeled.hpp"
#include "sealed/label/dclabel.hpp"

namespace sealed::ifc {

// Floating-label state of one enclave computation.
//
// The current label only ever rises (by joins) and always stays below the
// clearance. Clearance, output label and privilege are fixed once the
// context exists. Every failed guard throws IfcViolation, whose message is
// the same fixed string for every label.
class IfcContext {
 public:
  // Throws std::invalid_argument unless current ⊑ clearance.
  IfcContext(DCLabel current, DCLabel clearance, DCLabel output, Privilege privilege);

  // current = public, clearance = top, output = public.
  static IfcContext default_state(Privilege privilege = Privilege::none());

  const DCLabel& current_label() const { return current_; }
  const DCLabel& clearance() const { return clearance_; }
  const DCLabel& output_label() const { return output_; }
  const Privilege& privilege() const { return privilege_; }

  // With enforcement off every guard passes and labels never move. Used by
  // the benchmark's no-IFC variant.
  void set_enforcing(bool on) { enforcing_ = on; }
  bool enforcing() const { return enforcing_; }

  LabeledValue label(const DCLabel& l, const core::Value& v) const;
  LabeledValue label_p(const Privilege& p, const DCLabel& l, const core::Value& v) const;

  core::Value unlabel(const LabeledValue& lv);
  core::Value unlabel_p(const Privilege& p, const LabeledValue& lv);

  template <class T>
  T unlabel_as(const LabeledValue& lv) {
    return core::from_value<T>(unlabel(lv));
  }
  template <class T>
  T unlabel_p_as(const Privilege& p, const LabeledValue& lv) {
    return core::from_value<T>(unlabel_p(p, lv));
  }

  void taint(const DCLabel& l);
  void taint_p(const Privilege& p, const DCLabel& l);

  std::shared_ptr<LabeledRef> new_ref(const DCLabel& l, const core::Value& v) const;
  core::Value read_ref(const LabeledRef& r);
  // No write-down: requires current ⊑ ref label.
  void write_ref(LabeledRef& r, const core::Value& v) const;

  // True when a result may leave on the output channel.
  bool output_gate() const;

 private:
  void check(bool allowed) const;
  void raise_to(const DCLabel& l);

  DCLabel current_;
  DCLabel clearance_;
  DCLabel output_;
  Privilege privilege_;
  bool enforcing_ = true;
};

}  // namespace sealed::ifc

#endif  // SEALED_IFC_CONTEXT_HPP
