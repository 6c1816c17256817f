#include "sparsetree/rational.hpp"

#include <ostream>

#include "sparsetree/error.hpp"

namespace sparsetree {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::MissingTerminal: return "MissingTerminal";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::NonpositiveCapacity: return "NonpositiveCapacity";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::WeightSumNotOne: return "WeightSumNotOne";
    case ErrorKind::VertexSetMismatch: return "VertexSetMismatch";
    case ErrorKind::NonInjectiveCorrespondence: return "NonInjectiveCorrespondence";
    case ErrorKind::UnknownTerminal: return "UnknownTerminal";
    case ErrorKind::IdentifierCollision: return "IdentifierCollision";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::NotUnitCapacities: return "NotUnitCapacities";
    case ErrorKind::NotLeafTerminalForm: return "NotLeafTerminalForm";
    case ErrorKind::NoNonterminalAvailable: return "NoNonterminalAvailable";
    case ErrorKind::UnmappedVertex: return "UnmappedVertex";
    case ErrorKind::TooManyExtensions: return "TooManyExtensions";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::SameTerminal: return "SameTerminal";
    case ErrorKind::NotALeafTerminal: return "NotALeafTerminal";
    case ErrorKind::NonterminalAdjacency: return "NonterminalAdjacency";
    case ErrorKind::SingleRay: return "SingleRay";
    case ErrorKind::OverlappingSets: return "OverlappingSets";
    case ErrorKind::EmptySide: return "EmptySide";
    case ErrorKind::TooManyTerminals: return "TooManyTerminals";
    case ErrorKind::ZeroDemand: return "ZeroDemand";
  }
  return "Unknown";
}

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.value_ == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  value_ /= other.value_;
  return *this;
}

namespace {

bool is_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw Error(ErrorKind::ParseError, "not an integer or p/q rational: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

}  // namespace sparsetree
