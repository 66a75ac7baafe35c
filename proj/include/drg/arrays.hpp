#pragma once

// Intersection arrays {b0,...,b_{D-1}; c1,...,cD}: parsing, formatting,
// derived parameters and the elementary feasibility conditions.

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "drg/error.hpp"

namespace drg {

/// An intersection array. Feasibility is a predicate on this value, not a
/// construction constraint: infeasible arrays are representable so that they
/// can be analyzed and reported on.
class IntersectionArray {
 public:
  IntersectionArray() = default;
  IntersectionArray(std::vector<std::int64_t> b, std::vector<std::int64_t> c)
      : b_(std::move(b)), c_(std::move(c)) {
    if (b_.empty() || b_.size() != c_.size())
      throw ParseError("intersection array sequences must be non-empty and of equal length");
    for (auto v : b_)
      if (v <= 0) throw ParseError("intersection numbers must be positive");
    for (auto v : c_)
      if (v <= 0) throw ParseError("intersection numbers must be positive");
    if (c_.front() != 1) throw ParseError("c1 must equal 1");
  }

  int diameter() const { return static_cast<int>(b_.size()); }
  std::int64_t valency() const { return b_.front(); }

  /// b_i for 0 <= i <= D, with b_D = 0.
  std::int64_t b(int i) const { return i >= 0 && i < diameter() ? b_[i] : 0; }
  /// c_i for 0 <= i <= D, with c_0 = 0.
  std::int64_t c(int i) const { return i >= 1 && i <= diameter() ? c_[i - 1] : 0; }
  /// a_i = k - b_i - c_i, with a_0 = 0.
  std::int64_t a(int i) const { return i == 0 ? 0 : valency() - b(i) - c(i); }

  const std::vector<std::int64_t>& b_seq() const { return b_; }
  const std::vector<std::int64_t>& c_seq() const { return c_; }

  /// Diameter one: the complete graph K_{k+1}.
  bool is_complete() const { return diameter() == 1; }

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;

 private:
  std::vector<std::int64_t> b_{1};
  std::vector<std::int64_t> c_{1};
};

struct DerivedQuantities {
  std::int64_t k = 0;
  std::vector<std::int64_t> a;      // a_1 .. a_D
  std::vector<std::int64_t> kseq;   // k_0 .. k_D
  std::int64_t n = 0;
};

inline std::string format_array(const IntersectionArray& ia) {
  std::string out = "{";
  for (int i = 0; i < ia.diameter(); ++i) {
    if (i) out += ",";
    out += std::to_string(ia.b(i));
  }
  out += ";";
  for (int i = 1; i <= ia.diameter(); ++i) {
    if (i > 1) out += ",";
    out += std::to_string(ia.c(i));
  }
  return out + "}";
}

namespace detail {

inline std::vector<std::int64_t> parse_int_list(std::string_view s, std::string_view which) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  while (true) {
    skip_ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("expected an integer in the " + std::string(which) + " sequence");
    std::int64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10)
        throw ParseError("integer too large in the " + std::string(which) + " sequence");
      v = v * 10 + (s[i] - '0');
      ++i;
    }
    out.push_back(neg ? -v : v);
    skip_ws();
    if (i == s.size()) break;
    if (s[i] != ',') throw ParseError("unexpected character '" + std::string(1, s[i]) + "'");
    ++i;
  }
  return out;
}

}  // namespace detail

/// Parses "{b0,...,b_{D-1};c1,...,cD}". Braces and whitespace are optional.
/// Feasibility is not checked here.
inline IntersectionArray parse_array(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  std::size_t last = text.find_last_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty intersection array");
  text = text.substr(first, last - first + 1);
  if (text.front() == '{') {
    if (text.back() != '}') throw ParseError("unbalanced braces");
    text = text.substr(1, text.size() - 2);
  } else if (text.back() == '}') {
    throw ParseError("unbalanced braces");
  }
  std::size_t semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos)
    throw ParseError("expected exactly one ';' separating the b and c sequences");
  auto b = detail::parse_int_list(text.substr(0, semi), "b");
  auto c = detail::parse_int_list(text.substr(semi + 1), "c");
  if (b.size() != c.size())
    throw ParseError("unequal sequence lengths: " + std::to_string(b.size()) + " b-entries vs " +
                     std::to_string(c.size()) + " c-entries");
  return IntersectionArray(std::move(b), std::move(c));
}

/// k, the a-sequence, the k_i and n. Throws NonIntegralError (with the index
/// i of the first non-integral k_i) when the recursion leaves the integers.
inline DerivedQuantities derive(const IntersectionArray& ia) {
  DerivedQuantities d;
  d.k = ia.valency();
  const int D = ia.diameter();
  for (int i = 1; i <= D; ++i) d.a.push_back(ia.a(i));
  d.kseq.push_back(1);
  d.n = 1;
  for (int i = 1; i <= D; ++i) {
    __int128 num = static_cast<__int128>(d.kseq.back()) * ia.b(i - 1);
    if (num % ia.c(i) != 0)
      throw NonIntegralError(i, "k_" + std::to_string(i) + " = " +
                                    std::to_string(static_cast<long long>(num)) + "/" +
                                    std::to_string(ia.c(i)) + " is not an integer");
    __int128 ki = num / ia.c(i);
    if (ki > std::numeric_limits<std::int64_t>::max() / 2 ||
        d.n > std::numeric_limits<std::int64_t>::max() / 2)
      throw CapExceeded("vertex count overflows 63 bits");
    d.kseq.push_back(static_cast<std::int64_t>(ki));
    d.n += static_cast<std::int64_t>(ki);
  }
  return d;
}

enum class ViolationKind { BMonotone, CMonotone, Cross, ASign, Integrality };

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::BMonotone: return "b-monotone";
    case ViolationKind::CMonotone: return "c-monotone";
    case ViolationKind::Cross: return "cross";
    case ViolationKind::ASign: return "a-sign";
    case ViolationKind::Integrality: return "integrality";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  std::string detail;
};

/// Every violated elementary condition, reported in the fixed order
/// b-monotone, c-monotone, cross, a-sign, integrality.
inline std::vector<Violation> basic_feasibility(const IntersectionArray& ia) {
  std::vector<Violation> out;
  const int D = ia.diameter();
  auto s = [](std::int64_t v) { return std::to_string(v); };
  if (D >= 2 && !(ia.b(0) > ia.b(1)))
    out.push_back({ViolationKind::BMonotone, "b0 > b1 fails (" + s(ia.b(0)) + " <= " + s(ia.b(1)) + ")"});
  for (int i = 1; i + 1 < D; ++i)
    if (ia.b(i) < ia.b(i + 1))
      out.push_back({ViolationKind::BMonotone,
                     "b" + s(i) + " >= b" + s(i + 1) + " fails (" + s(ia.b(i)) + " < " + s(ia.b(i + 1)) + ")"});
  for (int i = 1; i < D; ++i)
    if (ia.c(i) > ia.c(i + 1))
      out.push_back({ViolationKind::CMonotone,
                     "c" + s(i) + " <= c" + s(i + 1) + " fails (" + s(ia.c(i)) + " > " + s(ia.c(i + 1)) + ")"});
  for (int i = 1; i < D; ++i)
    for (int j = 1; i + j <= D; ++j)
      if (ia.b(i) < ia.c(j))
        out.push_back({ViolationKind::Cross,
                       "b" + s(i) + " >= c" + s(j) + " fails (" + s(ia.b(i)) + " < " + s(ia.c(j)) + ")"});
  for (int i = 1; i <= D; ++i)
    if (ia.a(i) < 0) out.push_back({ViolationKind::ASign, "a" + s(i) + " = " + s(ia.a(i)) + " < 0"});
  try {
    (void)derive(ia);
  } catch (const NonIntegralError& e) {
    out.push_back({ViolationKind::Integrality, e.what()});
  }
  return out;
}

inline bool is_feasible(const IntersectionArray& ia) { return basic_feasibility(ia).empty(); }

}  // namespace drg
