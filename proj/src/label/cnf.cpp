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

#include "sealed/label/cnf.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sealed/error.hpp"

namespace sealed::label {

Principal::Principal(std::string name) : name_(std::move(name)) {
  if (name_.empty()) throw InvalidPrincipal("principal name is empty");
  if (name_.find('\0') != std::string::npos) throw InvalidPrincipal("principal name contains NUL");
  if (name_.size() > std::numeric_limits<std::uint16_t>::max())
    throw InvalidPrincipal("principal name too long");
  if (!is_valid_utf8(as_bytes(name_))) throw InvalidPrincipal("principal name is not UTF-8");
}

Clause::Clause(std::vector<Principal> principals) : principals_(std::move(principals)) {
  std::sort(principals_.begin(), principals_.end());
  principals_.erase(std::unique(principals_.begin(), principals_.end()), principals_.end());
}

Clause::Clause(std::initializer_list<std::string_view> names) {
  std::vector<Principal> ps;
  ps.reserve(names.size());
  for (auto n : names) ps.emplace_back(std::string(n));
  *this = Clause(std::move(ps));
}

bool Clause::subset_of(const Clause& other) const {
  return std::includes(other.principals_.begin(), other.principals_.end(), principals_.begin(),
                       principals_.end());
}

Clause Clause::unite(const Clause& other) const {
  Clause out;
  out.principals_.reserve(principals_.size() + other.principals_.size());
  std::set_union(principals_.begin(), principals_.end(), other.principals_.begin(),
                 other.principals_.end(), std::back_inserter(out.principals_));
  return out;
}

void encode_clause(const Clause& c, ByteWriter& out) {
  if (c.size() > std::numeric_limits<std::uint16_t>::max())
    throw std::length_error("clause has too many principals to encode");
  out.u16(static_cast<std::uint16_t>(c.size()));
  for (const auto& p : c.principals()) {
    out.u16(static_cast<std::uint16_t>(p.name().size()));
    out.raw(p.name());
  }
}

bool clause_encoding_less(const Clause& a, const Clause& b) {
  // Both encodings start with the principal count. With equal counts each
  // principal is (u16 length, bytes), so comparing principal by principal on
  // (length, bytes) is the same as comparing the encodings.
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string& x = a.principals()[i].name();
    const std::string& y = b.principals()[i].name();
    if (x.size() != y.size()) return x.size() < y.size();
    if (int c = x.compare(y); c != 0) return c < 0;
  }
  return false;
}

Cnf Cnf::falsity() {
  Cnf f;
  f.clauses_.emplace_back();
  return f;
}

Cnf Cnf::from_clauses(std::vector<Clause> clauses) { return cnf_reduce(std::move(clauses)); }

Cnf cnf_reduce(std::vector<Clause> clauses) {
  if (std::any_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.empty(); }))
    return Cnf::falsity();

  // Sorting by size first means any subset of a clause precedes it.
  std::sort(clauses.begin(), clauses.end(), clause_encoding_less);
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());

  std::vector<Clause> kept;
  kept.reserve(clauses.size());
  for (auto& c : clauses) {
    bool absorbed = std::any_of(kept.begin(), kept.end(),
                                [&](const Clause& k) { return k.subset_of(c); });
    if (!absorbed) kept.push_back(std::move(c));
  }

  // Filtering preserves the encoding order.
  Cnf out;
  out.clauses_ = std::move(kept);
  return out;
}

Cnf cnf_from_principal(std::string_view name) {
  return Cnf::from_clauses({Clause({Principal(std::string(name))})});
}

Cnf cnf_and(const Cnf& a, const Cnf& b) {
  std::vector<Clause> all = a.clauses();
  all.insert(all.end(), b.clauses().begin(), b.clauses().end());
  return cnf_reduce(std::move(all));
}

Cnf cnf_or(const Cnf& a, const Cnf& b) {
  // (∧ x_i) ∨ (∧ y_j) = ∧_{i,j} (x_i ∨ y_j); an empty side is True.
  std::vector<Clause> product;
  product.reserve(a.clauses().size() * b.clauses().size());
  for (const auto& x : a.clauses())
    for (const auto& y : b.clauses()) product.push_back(x.unite(y));
  return cnf_reduce(std::move(product));
}

bool cnf_implies(const Cnf& a, const Cnf& b) {
  return std::all_of(b.clauses().begin(), b.clauses().end(), [&](const Clause& c) {
    return std::any_of(a.clauses().begin(), a.clauses().end(),
                       [&](const Clause& d) { return d.subset_of(c); });
  });
}

void encode_cnf(const Cnf& a, ByteWriter& out) {
  if (a.clauses().size() > std::numeric_limits<std::uint16_t>::max())
    throw std::length_error("CNF has too many clauses to encode");
  out.u16(static_cast<std::uint16_t>(a.clauses().size()));
  for (const auto& c : a.clauses()) encode_clause(c, out);
}

Bytes encode_cnf(const Cnf& a) {
  Bytes b;
  ByteWriter w(b);
  encode_cnf(a, w);
  return b;
}

Cnf decode_cnf(ByteReader& in) {
  std::vector<Clause> clauses;
  try {
    std::uint16_t n_clauses = in.u16();
    clauses.reserve(std::min<std::size_t>(n_clauses, in.remaining() / 2));
    for (std::uint16_t i = 0; i < n_clauses; ++i) {
      std::uint16_t n_principals = in.u16();
      std::vector<Principal> ps;
      ps.reserve(std::min<std::size_t>(n_principals, in.remaining() / 3));
      for (std::uint16_t k = 0; k < n_principals; ++k) {
        std::uint16_t len = in.u16();
        auto name = in.raw(len);
        if (!is_valid_utf8(name)) throw MalformedLabel("principal is not UTF-8");
        try {
          ps.emplace_back(sealed::to_string(name));
        } catch (const InvalidPrincipal& e) {
          throw MalformedLabel(e.what());
        }
        if (ps.size() > 1 && !(ps[ps.size() - 2] < ps.back()))
          throw MalformedLabel("principals out of canonical order");
      }
      clauses.emplace_back(std::move(ps));
      if (clauses.size() > 1 && !clause_encoding_less(clauses[clauses.size() - 2], clauses.back()))
        throw MalformedLabel("clauses out of canonical order");
    }
  } catch (const MalformedLabel&) {
    throw;
  } catch (const DecodeError& e) {
    throw MalformedLabel(e.what());
  }
  Cnf out = cnf_reduce(clauses);
  if (out.clauses() != clauses) throw MalformedLabel("clause set is not an antichain");
  return out;
}

Cnf decode_cnf(ByteView bytes) {
  ByteReader in(bytes);
  Cnf out = decode_cnf(in);
  if (!in.empty()) throw MalformedLabel("trailing bytes");
  return out;
}

std::ostream& operator<<(std::ostream& os, const Clause& c) {
  os << '{';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c.principals()[i].name();
  return os << '}';
}

std::ostream& operator<<(std::ostream& os, const Cnf& a) {
  if (a.is_true()) return os << "True";
  if (a.is_false()) return os << "False";
  os << '{';
  for (std::size_t i = 0; i < a.clauses().size(); ++i) os << (i ? "," : "") << a.clauses()[i];
  return os << '}';
}

std::string to_string(const Cnf& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

}  // namespace sealed::label
