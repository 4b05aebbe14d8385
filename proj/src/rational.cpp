// Copyright 2026 The rfgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rfg/rational.hpp"

#include <cctype>

#include "rfg/error.hpp"

namespace rfg {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownIdentifier: return "unknown identifier";
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Disconnected: return "disconnected play prefix";
    case ErrorCode::NotSeparated: return "not interaction-separated";
    case ErrorCode::NotUniform: return "not uniform";
    case ErrorCode::IncompatibleWitness: return "incompatible witness";
    case ErrorCode::NotCompleteObservation: return "not complete-observation";
    case ErrorCode::NotMdp: return "not an MDP";
    case ErrorCode::NotPomdp: return "not a POMDP";
    case ErrorCode::HorizonMismatch: return "horizon mismatch";
    case ErrorCode::Inadmissible: return "inadmissible strategy";
    case ErrorCode::UndefinedHistory: return "undefined history";
    case ErrorCode::OutOfRange: return "out of range";
    case ErrorCode::Parse: return "parse error";
  }
  return "error";
}

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace rfg
