#include "eqbif/euler_ring.hpp"

#include <algorithm>
#include <sstream>

#include "eqbif/error.hpp"

namespace eqbif {

namespace {

using Term = EulerElement::Term;

// Merge two sorted term lists, combining coefficients with `op`, dropping zeros.
template <class Op>
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, Op op) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      BigInt c = op(ia->second, BigInt(0));
      if (c != 0) out.emplace_back(ia->first, std::move(c));
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      BigInt c = op(BigInt(0), ib->second);
      if (c != 0) out.emplace_back(ib->first, std::move(c));
      ++ib;
    } else {
      BigInt c = op(ia->second, ib->second);
      if (c != 0) out.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

EulerElement EulerElement::unit() { return monomial(0, 1); }

EulerElement EulerElement::monomial(Index index, BigInt c) {
  EulerElement e;
  if (c != 0) e.terms_.emplace_back(index, std::move(c));
  return e;
}

EulerElement EulerElement::dense(std::initializer_list<long long> coeffs) {
  EulerElement e;
  Index i = 0;
  for (long long c : coeffs) {
    if (c != 0) e.terms_.emplace_back(i, BigInt(c));
    ++i;
  }
  return e;
}

EulerElement EulerElement::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& x, const Term& y) { return x.first < y.first; });
  EulerElement e;
  for (auto& [index, c] : terms) {
    if (!e.terms_.empty() && e.terms_.back().first == index) {
      e.terms_.back().second += c;
    } else {
      e.terms_.emplace_back(index, std::move(c));
    }
  }
  std::erase_if(e.terms_, [](const Term& t) { return t.second == 0; });
  return e;
}

BigInt EulerElement::coeff(Index index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, Index i) { return t.first < i; });
  if (it != terms_.end() && it->first == index) return it->second;
  return 0;
}

std::optional<EulerElement::Index> EulerElement::top_index() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().first;
}

bool EulerElement::is_unit() const {
  BigInt a0 = coeff(0);
  return a0 == 1 || a0 == -1;
}

EulerElement& EulerElement::operator+=(const EulerElement& rhs) {
  terms_ = merge(terms_, rhs.terms_, [](const BigInt& x, const BigInt& y) { return BigInt(x + y); });
  return *this;
}

EulerElement& EulerElement::operator-=(const EulerElement& rhs) {
  terms_ = merge(terms_, rhs.terms_, [](const BigInt& x, const BigInt& y) { return BigInt(x - y); });
  return *this;
}

EulerElement EulerElement::operator-() const {
  EulerElement e = *this;
  for (auto& t : e.terms_) t.second = -t.second;
  return e;
}

EulerElement operator*(const EulerElement& lhs, const EulerElement& rhs) {
  const BigInt a0 = lhs.coeff(0);
  const BigInt b0 = rhs.coeff(0);
  // Coordinates i >= 1: a_i b0 + a0 b_i. Coordinate 0: a0 b0.
  EulerElement out;
  out.terms_ = merge(lhs.terms_, rhs.terms_, [&](const BigInt& ai, const BigInt& bi) {
    return BigInt(ai * b0 + a0 * bi);
  });
  BigInt c0 = a0 * b0;
  if (!out.terms_.empty() && out.terms_.front().first == 0) {
    if (c0 == 0) {
      out.terms_.erase(out.terms_.begin());
    } else {
      out.terms_.front().second = std::move(c0);
    }
  } else if (c0 != 0) {
    out.terms_.insert(out.terms_.begin(), Term{0, std::move(c0)});
  }
  return out;
}

std::string EulerElement::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [i, c] : terms_) {
    if (!first) os << ", ";
    os << i << ": " << c;
    first = false;
  }
  os << '}';
  return os.str();
}

EulerElement pow(const EulerElement& a, std::uint64_t p) {
  EulerElement result = EulerElement::unit();
  EulerElement base = a;
  while (p > 0) {
    if (p & 1U) result = result * base;
    p >>= 1U;
    if (p > 0) base = base * base;
  }
  return result;
}

EulerElement inverse(const EulerElement& a) {
  if (!a.is_unit()) {
    throw Error(ErrorCode::invalid_argument,
                "element " + a.to_string() + " is not invertible (coordinate 0 must be +-1)");
  }
  // With a0 = +-1: (a0; -a_i) * (a0; a_i) = (1; -a_i a0 + a0 a_i) = I.
  std::vector<EulerElement::Term> terms;
  for (const auto& [i, c] : a.terms()) terms.emplace_back(i, i == 0 ? c : BigInt(-c));
  return EulerElement::from_terms(std::move(terms));
}

EulerElement pow_signed(const EulerElement& a, std::int64_t p) {
  if (p >= 0) return pow(a, static_cast<std::uint64_t>(p));
  return pow(inverse(a), static_cast<std::uint64_t>(-(p + 1)) + 1U);
}

const char* to_string(Cone cone) noexcept {
  switch (cone) {
    case Cone::theta: return "theta";
    case Cone::plus_cone: return "plus_cone";
    case Cone::minus_cone: return "minus_cone";
    case Cone::mixed: return "mixed";
  }
  return "unknown";
}

Cone classify(const EulerElement& a) {
  if (a.is_zero()) return Cone::theta;
  const auto terms = a.terms();
  const bool all_nonpos = std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second < 0; });
  if (all_nonpos) return Cone::minus_cone;
  const bool all_nonneg = std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second > 0; });
  if (all_nonneg) return Cone::plus_cone;
  return Cone::mixed;
}

bool in_minus_cone(const EulerElement& a) {
  const Cone c = classify(a);
  return c == Cone::theta || c == Cone::minus_cone;
}

bool in_plus_cone(const EulerElement& a) {
  const Cone c = classify(a);
  return c == Cone::theta || c == Cone::plus_cone;
}

}  // namespace eqbif
