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

#include "sealed/apps/password.hpp"

#include <istream>
#include <ostream>

namespace sealed::apps {

PasswordApi register_password_checker(core::App& app, const PasswordOptions& opts) {
  using label::Privilege;
  auto pwd = app.labeled_constant(label::owned_by(opts.owner), core::Value::string(opts.secret));
  Privilege priv(label::cnf_from_principal(opts.owner));

  PasswordApi api{
      app.in_enclave<bool(std::string)>(
          "checkpwd", ifc::IfcContext::default_state(priv),
          [pwd](ifc::IfcContext& ctx, const std::string& guess) {
            return ctx.unlabel_p_as<std::string>(ctx.privilege(), pwd.get()) == guess;
          }),
      std::nullopt};

  if (opts.with_leak) {
    api.leakpwd = app.in_enclave<bool(std::string)>(
        "leakpwd", ifc::IfcContext::default_state(priv), [pwd](ifc::IfcContext& ctx, const std::string& guess) {
          return ctx.unlabel_as<std::string>(pwd.get()) == guess;
        });
  }
  return api;
}

void build_password_checker(core::App& app, std::istream& in, std::ostream& out, const PasswordOptions& opts) {
  PasswordApi api = register_password_checker(app, opts);
  app.run_client(std::string(kPasswordClientRole), [&](core::Client& client) {
    out << "Enter your password:" << std::endl;
    std::string guess;
    std::getline(in, guess);
    bool ok = client.gateway(api.checkpwd.apply(guess));
    out << "Login returned " << (ok ? "True" : "False") << std::endl;
  });
}

}  // namespace sealed::apps
