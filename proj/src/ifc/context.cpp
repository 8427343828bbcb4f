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

#include "sealed/ifc/context.hpp"

#include <stdexcept>

#include "sealed/error.hpp"

namespace sealed::ifc {

using label::can_flow_to;
using label::can_flow_to_p;

IfcContext::IfcContext(DCLabel current, DCLabel clearance, DCLabel output, Privilege privilege)
    : current_(std::move(current)),
      clearance_(std::move(clearance)),
      output_(std::move(output)),
      privilege_(std::move(privilege)) {
  if (!can_flow_to(current_, clearance_))
    throw std::invalid_argument("current label must flow to the clearance");
}

IfcContext IfcContext::default_state(Privilege privilege) {
  return IfcContext(DCLabel::public_label(), DCLabel::top(), DCLabel::public_label(),
                    std::move(privilege));
}

void IfcContext::check(bool allowed) const {
  if (enforcing_ && !allowed) throw IfcViolation();
}

void IfcContext::raise_to(const DCLabel& l) {
  if (!enforcing_) return;
  DCLabel raised = label::join(current_, l);
  check(can_flow_to(raised, clearance_));
  current_ = std::move(raised);
}

LabeledValue IfcContext::label(const DCLabel& l, const core::Value& v) const {
  if (enforcing_) check(can_flow_to(current_, l) && can_flow_to(l, clearance_));
  return {l, core::encode_value(v)};
}

LabeledValue IfcContext::label_p(const Privilege& p, const DCLabel& l, const core::Value& v) const {
  if (enforcing_) check(can_flow_to_p(p, current_, l) && can_flow_to(l, clearance_));
  return {l, core::encode_value(v)};
}

core::Value IfcContext::unlabel(const LabeledValue& lv) {
  raise_to(lv.label);
  return core::decode_value(lv.payload);
}

core::Value IfcContext::unlabel_p(const Privilege& p, const LabeledValue& lv) {
  if (enforcing_) raise_to(label::downgrade(p, lv.label));
  return core::decode_value(lv.payload);
}

void IfcContext::taint(const DCLabel& l) { raise_to(l); }

void IfcContext::taint_p(const Privilege& p, const DCLabel& l) {
  if (enforcing_) raise_to(label::downgrade(p, l));
}

std::shared_ptr<LabeledRef> IfcContext::new_ref(const DCLabel& l, const core::Value& v) const {
  if (enforcing_) check(can_flow_to(current_, l) && can_flow_to(l, clearance_));
  return std::make_shared<LabeledRef>(l, core::encode_value(v));
}

core::Value IfcContext::read_ref(const LabeledRef& r) {
  raise_to(r.label());
  return core::decode_value(r.load());
}

void IfcContext::write_ref(LabeledRef& r, const core::Value& v) const {
  if (enforcing_) check(can_flow_to(current_, r.label()));
  r.store(core::encode_value(v));
}

bool IfcContext::output_gate() const { return !enforcing_ || can_flow_to(current_, output_); }

}  // namespace sealed::ifc
