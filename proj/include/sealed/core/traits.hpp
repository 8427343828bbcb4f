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

#ifndef SEALED_CORE_TRAITS_HPP
#define SEALED_CORE_TRAITS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sealed/core/value.hpp"
#include "sealed/error.hpp"

namespace sealed::core {

// Maps a C++ type onto the boundary value grammar. Specialize for
// application types; from_value throws DecodeError on a shape mismatch.
template <class T>
struct ValueTraits;

template <>
struct ValueTraits<Value> {
  static Value to_value(const Value& v) { return v; }
  static Value from_value(const Value& v) { return v; }
};

template <>
struct ValueTraits<Unit> {
  static Value to_value(Unit) { return Value::unit(); }
  static Unit from_value(const Value& v) {
    if (v.tag() != Tag::kUnit) throw DecodeError("type mismatch: expected unit");
    return {};
  }
};

template <>
struct ValueTraits<bool> {
  static Value to_value(bool b) { return Value::boolean(b); }
  static bool from_value(const Value& v) { return v.as_bool(); }
};

template <>
struct ValueTraits<std::int64_t> {
  static Value to_value(std::int64_t i) { return Value::integer(i); }
  static std::int64_t from_value(const Value& v) { return v.as_int(); }
};

template <>
struct ValueTraits<double> {
  static Value to_value(double d) { return Value::real(d); }
  static double from_value(const Value& v) { return v.as_real(); }
};

template <>
struct ValueTraits<std::string> {
  static Value to_value(const std::string& s) { return Value::string(s); }
  static std::string from_value(const Value& v) { return v.as_string(); }
};

template <>
struct ValueTraits<Bytes> {
  static Value to_value(const Bytes& b) { return Value::bytes(b); }
  static Bytes from_value(const Value& v) { return v.as_bytes(); }
};

template <>
struct ValueTraits<LabeledValue> {
  static Value to_value(const LabeledValue& lv) { return Value::labeled(lv); }
  static LabeledValue from_value(const Value& v) { return v.as_labeled(); }
};

template <class T>
struct ValueTraits<std::vector<T>> {
  static Value to_value(const std::vector<T>& xs) {
    Value::List items;
    items.reserve(xs.size());
    for (const auto& x : xs) items.push_back(ValueTraits<T>::to_value(x));
    return Value::list(std::move(items));
  }
  static std::vector<T> from_value(const Value& v) {
    std::vector<T> out;
    out.reserve(v.as_list().size());
    for (const auto& item : v.as_list()) out.push_back(ValueTraits<T>::from_value(item));
    return out;
  }
};

// Pairs travel as two-element lists.
template <class A, class B>
struct ValueTraits<std::pair<A, B>> {
  static Value to_value(const std::pair<A, B>& p) {
    return Value::list({ValueTraits<A>::to_value(p.first), ValueTraits<B>::to_value(p.second)});
  }
  static std::pair<A, B> from_value(const Value& v) {
    const auto& items = v.as_list();
    if (items.size() != 2) throw DecodeError("type mismatch: expected pair");
    return {ValueTraits<A>::from_value(items[0]), ValueTraits<B>::from_value(items[1])};
  }
};

template <class T>
Value to_value(const T& x) {
  return ValueTraits<T>::to_value(x);
}

template <class T>
T from_value(const Value& v) {
  return ValueTraits<T>::from_value(v);
}

template <class T>
Bytes encode(const T& x) {
  return encode_value(to_value(x));
}

template <class T>
T decode(ByteView b) {
  return from_value<T>(decode_value(b));
}

}  // namespace sealed::core

#endif  // SEALED_CORE_TRAITS_HPP
