// Copyright 2026 The fmzv Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FMZV_IDENTITIES_HPP
#define FMZV_IDENTITIES_HPP

#include "fmzv/adelic.hpp"
#include "fmzv/bernoulli.hpp"
#include "fmzv/combination.hpp"
#include "fmzv/combinatorics.hpp"
#include "fmzv/harmonic.hpp"
#include "fmzv/index.hpp"
#include "fmzv/rational.hpp"
#include "fmzv/residue.hpp"
#include "fmzv/shuffle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fmzv {

enum class IdentityKind { symbolic_exact, adelic_a1, adelic_a2 };

inline std::string to_string(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::symbolic_exact: return "symbolic-exact";
    case IdentityKind::adelic_a1: return "adelic-A1";
    case IdentityKind::adelic_a2: return "adelic-A2";
  }
  return "unknown";
}

class UnknownIdentity : public std::invalid_argument {
 public:
  explicit UnknownIdentity(const std::string& id) : std::invalid_argument("unknown identity id '" + id + "'") {}
};

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using ParamValue = std::variant<std::int64_t, Index>;
using Params = std::map<std::string, ParamValue>;

inline std::string to_string(const ParamValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  return "(" + to_string(std::get<Index>(v)) + ")";
}

/// "a=1;b=3"; empty for no parameters.
inline std::string to_string(const Params& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ';';
    out += name + "=" + to_string(value);
  }
  return out;
}

inline std::int64_t int_param(const Params& params, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end()) throw InvalidParams("missing parameter '" + name + "'");
  const auto* v = std::get_if<std::int64_t>(&it->second);
  if (!v) throw InvalidParams("parameter '" + name + "' must be an integer");
  return *v;
}

inline const Index& index_param(const Params& params, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end()) throw InvalidParams("missing parameter '" + name + "'");
  const auto* v = std::get_if<Index>(&it->second);
  if (!v) throw InvalidParams("parameter '" + name + "' must be an index");
  return *v;
}

struct PrimeRecord {
  u64 p;
  Residue lhs;
  Residue rhs;
  bool pass;
  bool gated;
};

struct SkippedPrime {
  u64 p;
  std::string reason;
};

struct SymbolicOutcome {
  std::string lhs;
  std::string rhs;
  std::string difference;  // "0" when equal
  bool equal = false;
};

/// Outcome of one identity instance. For adelic identities the verdict is
/// pass iff no prime above `threshold` fails; smaller primes are recorded
/// with gated = false.
struct VerificationReport {
  std::string id;
  IdentityKind kind = IdentityKind::symbolic_exact;
  Params params;
  std::optional<PrimeRange> range;
  u64 threshold = 0;
  std::vector<PrimeRecord> records;
  std::vector<SkippedPrime> skipped;
  std::optional<SymbolicOutcome> symbolic;
  bool pass = false;

  std::size_t gated_count() const {
    std::size_t n = 0;
    for (const auto& r : records) n += r.gated;
    return n;
  }
  std::size_t gated_failures() const {
    std::size_t n = 0;
    for (const auto& r : records) n += r.gated && !r.pass;
    return n;
  }
};

struct AdelicSides {
  AdelicElement lhs;
  AdelicElement rhs;
};

struct IdentityDescriptor {
  std::string id;
  IdentityKind kind = IdentityKind::symbolic_exact;
  std::string statement;
  std::vector<std::string> param_names;
  std::function<void(const Params&)> validate;
  std::function<u64(const Params&)> weight;
  std::function<SymbolicOutcome(const Params&)> symbolic;
  std::function<AdelicSides(const Params&, const PrimeRange&)> adelic;

  /// Gating threshold: only primes p > weight + 2 decide the verdict.
  u64 threshold(const Params& params) const { return weight(params) + 2; }
};

class Registry {
 public:
  void add(IdentityDescriptor descriptor) {
    const std::string id = descriptor.id;
    if (!entries_.emplace(id, std::move(descriptor)).second) {
      throw std::invalid_argument("identity '" + id + "' registered twice");
    }
  }
  bool contains(const std::string& id) const { return entries_.count(id) != 0; }
  const IdentityDescriptor& at(const std::string& id) const {
    auto it = entries_.find(id);
    if (it == entries_.end()) throw UnknownIdentity(id);
    return it->second;
  }
  std::vector<std::string> ids() const {
    std::vector<std::string> out;
    for (const auto& [id, d] : entries_) out.push_back(id);
    return out;
  }

  /// Registry holding every catalogued identity.
  static const Registry& standard();

 private:
  std::map<std::string, IdentityDescriptor> entries_;
};

// Closed-form coefficients of the right-hand sides.

/// (-1)^m { (-1)^l 2^{1-2l} C(l+m, l) - 4 C(2l+m, 2l) }: the interleaving
/// sum of zeta_{A_2} values divided by beta_{4l+2m+1} p.
inline Rational mt1_coefficient(std::int64_t l, std::int64_t m) {
  const Rational inner = Rational(sign_power(l)) * power_of_two(1 - 2 * l) * Rational(binomial(l + m, l)) -
                         Rational(4 * binomial(2 * l + m, 2 * l));
  return Rational(sign_power(m)) * inner;
}

/// (-1)^l 2^{1-2l} C(l+m, l): the same for zeta-star values.
inline Rational mt2_coefficient(std::int64_t l, std::int64_t m) {
  return Rational(sign_power(l)) * power_of_two(1 - 2 * l) * Rational(binomial(l + m, l));
}

/// zeta_{A_2}({2}^r) = (-1)^{r-1} 2 beta_{2r+1} p.
inline Rational zc_coefficient(std::int64_t r) { return Rational(2 * sign_power(r - 1)); }

/// zeta*_{A_2}({2}^r) = 2 beta_{2r+1} p.
inline Rational zc_star_coefficient(std::int64_t) { return Rational(2); }

/// zeta_{A_1}({2}^a, 3, {2}^b) = (-1)^{a+b} 2(a-b)/(a+1) C(2a+2b+3, 2b+2) beta_{2a+2b+3}.
inline Rational two_three_coefficient(std::int64_t a, std::int64_t b) {
  return Rational(sign_power(a + b)) * Rational(BigInt(2 * (a - b)), BigInt(a + 1)) *
         Rational(binomial(2 * a + 2 * b + 3, 2 * b + 2));
}

/// zeta_{A_2}(({2}^{l+m}) sh ({2}^l)) = (-1)^m 2 {1 - 2 C(4l+2m, 2l)} beta_{4l+2m+1} p.
inline Rational aaa_coefficient(std::int64_t l, std::int64_t m) {
  return Rational(sign_power(m)) * Rational(2) * (Rational(1) - Rational(2 * binomial(4 * l + 2 * m, 2 * l)));
}

/// Right-hand side of the A_2 shuffle relation for k sh l, with l = (l_1..l_s):
///   (-1)^{|l|} sum_{e_1+..+e_s in {0,1}} prod_j C(l_j+e_j-1, e_j)
///       zeta(k, l_s+e_s, ..., l_1+e_1) p^{e_1+..+e_s}.
/// Returns the coefficient combinations of p^0 and p^1.
inline std::pair<IndexCombination, IndexCombination> shuffle_a2_expansion(const Index& k, const Index& l) {
  const std::size_t s = l.depth();
  const Rational sign(sign_power(static_cast<long>(l.weight())));
  auto reversed_with_bump = [&](std::optional<std::size_t> bumped) {
    Index out = k;
    for (std::size_t j = s; j-- > 0;) out.append(l[j] + (bumped == j ? 1 : 0));
    return out;
  };
  IndexCombination unit(reversed_with_bump(std::nullopt), sign);
  IndexCombination p_part;
  // e = unit vector at j: C(l_j, 1) = l_j.
  for (std::size_t j = 0; j < s; ++j) p_part.add(reversed_with_bump(j), sign * Rational(l[j]));
  return {std::move(unit), std::move(p_part)};
}

inline BigInt vdm1_sum(std::int64_t l, std::int64_t m) {
  BigInt s = 0;
  for (std::int64_t k = 0; k <= l; ++k) {
    const BigInt t = binomial(2 * l + m - 2 * k, l - k) * binomial(2 * l + m - k, k);
    s += (k % 2 == 0) ? t : BigInt(-t);
  }
  return s;
}

inline BigInt vdm2_sum(std::int64_t l, std::int64_t m) {
  BigInt s = 0;
  for (std::int64_t k = 0; k <= l; ++k) {
    s += (BigInt(1) << static_cast<unsigned>(2 * k)) * binomial(2 * l + m - 2 * k, l - k) * binomial(2 * l + m, 2 * k);
  }
  return s;
}

namespace detail {

inline void require_nonneg(const Params& params, std::initializer_list<const char*> names) {
  for (const char* n : names) {
    if (int_param(params, n) < 0) throw InvalidParams(std::string("parameter '") + n + "' must be >= 0");
  }
}

inline void require_not_both_zero(const Params& params) {
  if (int_param(params, "l") == 0 && int_param(params, "m") == 0) {
    throw InvalidParams("(l, m) must differ from (0, 0)");
  }
}

inline void validate_lm_nonzero(const Params& params) {
  require_nonneg(params, {"l", "m"});
  require_not_both_zero(params);
}

inline void validate_lm(const Params& params) { require_nonneg(params, {"l", "m"}); }

inline u64 weight_4l2m(const Params& params) {
  return static_cast<u64>(4 * int_param(params, "l") + 2 * int_param(params, "m"));
}

inline Index twos(std::int64_t count) { return repeat(Index{2}, static_cast<std::size_t>(count)); }

inline std::size_t as_size(std::int64_t v) { return static_cast<std::size_t>(v); }

/// RHS = c * beta_k * p over the range.
inline AdelicElement beta_times_p(const Rational& c, long k, const PrimeRange& range,
                                  BernoulliConvention convention) {
  return beta(k, range, convention).scaled(c) * p_element(range);
}

inline IdentityDescriptor lm_theorem(std::string id, SumKind kind, std::string statement,
                                     Rational (*coefficient)(std::int64_t, std::int64_t),
                                     BernoulliConvention convention) {
  IdentityDescriptor d;
  d.id = std::move(id);
  d.kind = IdentityKind::adelic_a2;
  d.statement = std::move(statement);
  d.param_names = {"l", "m"};
  d.validate = validate_lm_nonzero;
  d.weight = weight_4l2m;
  d.adelic = [kind, coefficient, convention](const Params& params, const PrimeRange& range) {
    const auto l = int_param(params, "l");
    const auto m = int_param(params, "m");
    AdelicElement lhs = eval(bb_shuffle(as_size(l), as_size(m)), kind, range, 2);
    AdelicElement rhs = beta_times_p(coefficient(l, m), static_cast<long>(4 * l + 2 * m + 1), range, convention);
    return AdelicSides{std::move(lhs), std::move(rhs)};
  };
  return d;
}

inline IdentityDescriptor sw_identity(std::string id, SumKind kind, std::string statement) {
  IdentityDescriptor d;
  d.id = std::move(id);
  d.kind = IdentityKind::adelic_a1;
  d.statement = std::move(statement);
  d.param_names = {"a", "b", "c", "l", "m"};
  d.validate = [](const Params& params) {
    const auto a = int_param(params, "a");
    const auto b = int_param(params, "b");
    const auto c = int_param(params, "c");
    if (a < 1 || a % 2 == 0 || b < 1 || b % 2 == 0) throw InvalidParams("a and b must be odd positive integers");
    if (c < 2 || c % 2 != 0) throw InvalidParams("c must be an even positive integer");
    validate_lm_nonzero(params);
  };
  d.weight = [](const Params& params) {
    return static_cast<u64>((int_param(params, "a") + int_param(params, "b")) * int_param(params, "l") +
                            int_param(params, "c") * int_param(params, "m"));
  };
  d.adelic = [kind](const Params& params, const PrimeRange& range) {
    const Index pattern{static_cast<Index::value_type>(int_param(params, "a")),
                        static_cast<Index::value_type>(int_param(params, "b"))};
    const auto filler = static_cast<Index::value_type>(int_param(params, "c"));
    const auto combination =
        interleave_blocks(pattern, as_size(int_param(params, "l")), filler, as_size(int_param(params, "m")));
    return AdelicSides{eval(combination, kind, range, 1), AdelicElement::constant(range, 1, Rational(0))};
  };
  return d;
}

inline IdentityDescriptor zc_identity(std::string id, SumKind kind, std::string statement,
                                      Rational (*coefficient)(std::int64_t), BernoulliConvention convention) {
  IdentityDescriptor d;
  d.id = std::move(id);
  d.kind = IdentityKind::adelic_a2;
  d.statement = std::move(statement);
  d.param_names = {"r"};
  d.validate = [](const Params& params) {
    if (int_param(params, "r") < 1) throw InvalidParams("r must be a positive integer");
  };
  d.weight = [](const Params& params) { return static_cast<u64>(2 * int_param(params, "r")); };
  d.adelic = [kind, coefficient, convention](const Params& params, const PrimeRange& range) {
    const auto r = int_param(params, "r");
    return AdelicSides{eval(IndexCombination(twos(r)), kind, range, 2),
                       beta_times_p(coefficient(r), static_cast<long>(2 * r + 1), range, convention)};
  };
  return d;
}

}  // namespace detail

/// Registry of every catalogued identity; `convention` fixes B_1 for the beta
/// constants on right-hand sides.
inline Registry make_registry(BernoulliConvention convention = BernoulliConvention::seki) {
  using namespace detail;
  Registry reg;

  reg.add(lm_theorem("mt1", SumKind::strict,
                     "zeta_A2(({1,3}^l) ~sh ({2}^m)) = (-1)^m {(-1)^l 2^(1-2l) C(l+m,l) - 4 C(2l+m,2l)} "
                     "beta_(4l+2m+1) p",
                     mt1_coefficient, convention));
  reg.add(lm_theorem("mt2", SumKind::star,
                     "zeta*_A2(({1,3}^l) ~sh ({2}^m)) = (-1)^l 2^(1-2l) C(l+m,l) beta_(4l+2m+1) p",
                     mt2_coefficient, convention));

  reg.add(sw_identity("sw", SumKind::strict, "zeta_A1(({a,b}^l) ~sh ({c}^m)) = 0 for a, b odd and c even"));
  reg.add(sw_identity("sw_star", SumKind::star, "zeta*_A1(({a,b}^l) ~sh ({c}^m)) = 0 for a, b odd and c even"));

  {
    IdentityDescriptor d;
    d.id = "muneta";
    d.kind = IdentityKind::symbolic_exact;
    d.statement =
        "4^l (({1,3}^l) ~sh ({2}^m)) = ({2}^(l+m)) sh ({2}^l) - sum_(k<l) 4^k C(2l+m-2k,l-k) "
        "(({1,3}^k) ~sh ({2}^(2l+m-2k)))";
    d.param_names = {"l", "m"};
    d.validate = validate_lm;
    d.weight = weight_4l2m;
    d.symbolic = [](const Params& params) {
      auto [lhs, rhs] = muneta_sides(as_size(int_param(params, "l")), as_size(int_param(params, "m")));
      const IndexCombination diff = lhs - rhs;
      return SymbolicOutcome{to_string(lhs), to_string(rhs), to_string(diff), diff.empty()};
    };
    reg.add(std::move(d));
  }

  {
    IdentityDescriptor d;
    d.id = "shuffle_a2";
    d.kind = IdentityKind::adelic_a2;
    d.statement =
        "zeta_A2(k sh l) = (-1)^|l| sum_(e in {0,1}) prod C(l_j+e_j-1,e_j) zeta_A2(k,l_s+e_s,...,l_1+e_1) p^|e|";
    d.param_names = {"left", "right"};
    d.validate = [](const Params& params) {
      index_param(params, "left");
      index_param(params, "right");
    };
    d.weight = [](const Params& params) {
      return index_param(params, "left").weight() + index_param(params, "right").weight();
    };
    d.adelic = [](const Params& params, const PrimeRange& range) {
      const Index& k = index_param(params, "left");
      const Index& l = index_param(params, "right");
      AdelicElement lhs = eval(shuffle_sh(k, l), SumKind::strict, range, 2);
      auto [unit, p_part] = shuffle_a2_expansion(k, l);
      AdelicElement rhs =
          eval(unit, SumKind::strict, range, 2) + eval(p_part, SumKind::strict, range, 2) * p_element(range);
      return AdelicSides{std::move(lhs), std::move(rhs)};
    };
    reg.add(std::move(d));
  }

  reg.add(zc_identity("zc", SumKind::strict, "zeta_A2({2}^r) = (-1)^(r-1) 2 beta_(2r+1) p", zc_coefficient, convention));
  reg.add(zc_identity("zc_star", SumKind::star, "zeta*_A2({2}^r) = 2 beta_(2r+1) p", zc_star_coefficient, convention));

  {
    IdentityDescriptor d;
    d.id = "two_three";
    d.kind = IdentityKind::adelic_a1;
    d.statement = "zeta_A1({2}^a,3,{2}^b) = (-1)^(a+b) 2(a-b)/(a+1) C(2a+2b+3,2b+2) beta_(2a+2b+3)";
    d.param_names = {"a", "b"};
    d.validate = [](const Params& params) { require_nonneg(params, {"a", "b"}); };
    d.weight = [](const Params& params) {
      return static_cast<u64>(2 * int_param(params, "a") + 2 * int_param(params, "b") + 3);
    };
    d.adelic = [convention](const Params& params, const PrimeRange& range) {
      const auto a = int_param(params, "a");
      const auto b = int_param(params, "b");
      const Index index = concat(concat(twos(a), Index{3}), twos(b));
      AdelicElement lhs = eval(IndexCombination(index), SumKind::strict, range, 1);
      AdelicElement rhs = beta(static_cast<long>(2 * a + 2 * b + 3), range, convention).projected().scaled(two_three_coefficient(a, b));
      return AdelicSides{std::move(lhs), std::move(rhs)};
    };
    reg.add(std::move(d));
  }

  {
    IdentityDescriptor d;
    d.id = "aaa";
    d.kind = IdentityKind::adelic_a2;
    d.statement = "zeta_A2(({2}^(l+m)) sh ({2}^l)) = (-1)^m 2 {1 - 2 C(4l+2m,2l)} beta_(4l+2m+1) p";
    d.param_names = {"l", "m"};
    d.validate = validate_lm_nonzero;
    d.weight = weight_4l2m;
    d.adelic = [convention](const Params& params, const PrimeRange& range) {
      const auto l = int_param(params, "l");
      const auto m = int_param(params, "m");
      AdelicElement lhs = eval(shuffle_sh(twos(l + m), twos(l)), SumKind::strict, range, 2);
      AdelicElement rhs =
          beta_times_p(aaa_coefficient(l, m), static_cast<long>(4 * l + 2 * m + 1), range, convention);
      return AdelicSides{std::move(lhs), std::move(rhs)};
    };
    reg.add(std::move(d));
  }

  auto vdm = [&](std::string id, std::string statement, bool second) {
    IdentityDescriptor d;
    d.id = std::move(id);
    d.kind = IdentityKind::symbolic_exact;
    d.statement = std::move(statement);
    d.param_names = {"l", "m"};
    d.validate = validate_lm;
    d.weight = [](const Params&) { return u64{0}; };
    d.symbolic = [second](const Params& params) {
      const auto l = int_param(params, "l");
      const auto m = int_param(params, "m");
      const BigInt lhs = second ? vdm2_sum(l, m) : vdm1_sum(l, m);
      const BigInt rhs = second ? binomial(4 * l + 2 * m, 2 * l) : BigInt(1);
      return SymbolicOutcome{lhs.str(), rhs.str(), BigInt(lhs - rhs).str(), lhs == rhs};
    };
    reg.add(std::move(d));
  };
  vdm("vdm1", "sum_(k=0..l) (-1)^k C(2l+m-2k,l-k) C(2l+m-k,k) = 1", false);
  vdm("vdm2", "sum_(k=0..l) 4^k C(2l+m-2k,l-k) C(2l+m,2k) = C(4l+2m,2l)", true);

  {
    IdentityDescriptor d;
    d.id = "yam";
    d.kind = IdentityKind::adelic_a2;
    d.statement =
        "zeta*_A2(({1,3}^l) ~sh ({2}^m)) = sum_(2i+k+u=2l, j+n+v=m) (-1)^(j+k) C(k+n,k) C(u+v,u) "
        "zeta_A2(({1,3}^i) ~sh ({2}^j)) zeta*_A2({2}^(k+n)) zeta*_A2({2}^(u+v))";
    d.param_names = {"l", "m"};
    d.validate = validate_lm;
    d.weight = weight_4l2m;
    d.adelic = [](const Params& params, const PrimeRange& range) {
      const auto l = int_param(params, "l");
      const auto m = int_param(params, "m");
      AdelicElement lhs = eval(bb_shuffle(as_size(l), as_size(m)), SumKind::star, range, 2);

      std::map<std::pair<std::int64_t, std::int64_t>, AdelicElement> strict_bb;
      std::map<std::int64_t, AdelicElement> star_twos;
      auto bb_value = [&](std::int64_t i, std::int64_t j) -> const AdelicElement& {
        auto it = strict_bb.find({i, j});
        if (it == strict_bb.end()) {
          it = strict_bb.emplace(std::make_pair(i, j), eval(bb_shuffle(as_size(i), as_size(j)), SumKind::strict, range, 2))
                   .first;
        }
        return it->second;
      };
      auto twos_value = [&](std::int64_t r) -> const AdelicElement& {
        auto it = star_twos.find(r);
        if (it == star_twos.end()) {
          it = star_twos.emplace(r, eval(IndexCombination(twos(r)), SumKind::star, range, 2)).first;
        }
        return it->second;
      };

      AdelicElement rhs = AdelicElement::constant(range, 2, Rational(0));
      for (std::int64_t i = 0; 2 * i <= 2 * l; ++i) {
        for (std::int64_t k = 0; k <= 2 * l - 2 * i; ++k) {
          const std::int64_t u = 2 * l - 2 * i - k;
          for (std::int64_t j = 0; j <= m; ++j) {
            for (std::int64_t n = 0; n <= m - j; ++n) {
              const std::int64_t v = m - j - n;
              const Rational c = Rational(sign_power(j + k)) * Rational(binomial(k + n, k) * binomial(u + v, u));
              rhs += (bb_value(i, j) * twos_value(k + n) * twos_value(u + v)).scaled(c);
            }
          }
        }
      }
      return AdelicSides{std::move(lhs), std::move(rhs)};
    };
    reg.add(std::move(d));
  }

  {
    IdentityDescriptor d;
    d.id = "wolstenholme";
    d.kind = IdentityKind::adelic_a2;
    d.statement = "zeta_A2(1) = 0";
    d.param_names = {};
    d.validate = [](const Params&) {};
    d.weight = [](const Params&) { return u64{1}; };
    d.adelic = [](const Params&, const PrimeRange& range) {
      return AdelicSides{eval(IndexCombination(Index{1}), SumKind::strict, range, 2),
                         AdelicElement::constant(range, 2, Rational(0))};
    };
    reg.add(std::move(d));
  }

  return reg;
}

namespace detail {

inline void check_params(const IdentityDescriptor& d, const Params& params) {
  for (const auto& name : d.param_names) {
    if (!params.count(name)) throw InvalidParams("identity '" + d.id + "' needs parameter '" + name + "'");
  }
  for (const auto& [name, value] : params) {
    if (std::find(d.param_names.begin(), d.param_names.end(), name) == d.param_names.end()) {
      throw InvalidParams("identity '" + d.id + "' takes no parameter '" + name + "'");
    }
  }
  d.validate(params);
}

}  // namespace detail

inline const Registry& Registry::standard() {
  static const Registry registry = make_registry();
  return registry;
}

/// Exact check over Q or in the space of index combinations.
inline VerificationReport verify_symbolic(const Registry& registry, const std::string& id, const Params& params) {
  const IdentityDescriptor& d = registry.at(id);
  if (d.kind != IdentityKind::symbolic_exact) throw InvalidParams("identity '" + id + "' is not symbolic");
  detail::check_params(d, params);
  VerificationReport report;
  report.id = id;
  report.kind = d.kind;
  report.params = params;
  report.symbolic = d.symbolic(params);
  report.pass = report.symbolic->equal;
  return report;
}

/// Builds both sides over the range and compares them prime by prime.
inline VerificationReport verify_adelic(const Registry& registry, const std::string& id, const Params& params,
                                        const PrimeRange& range) {
  const IdentityDescriptor& d = registry.at(id);
  if (d.kind == IdentityKind::symbolic_exact) throw InvalidParams("identity '" + id + "' is not adelic");
  detail::check_params(d, params);
  VerificationReport report;
  report.id = id;
  report.kind = d.kind;
  report.params = params;
  report.range = range;
  report.threshold = d.threshold(params);

  const AdelicSides sides = d.adelic(params, range);
  for (u64 p : all_primes_in(range.lo, range.hi)) {
    const auto lhs = sides.lhs.at(p);
    const auto rhs = sides.rhs.at(p);
    if (lhs && rhs) {
      report.records.push_back(PrimeRecord{p, *lhs, *rhs, *lhs == *rhs, p > report.threshold});
      continue;
    }
    std::string lhs_reason, rhs_reason;
    if (auto it = sides.lhs.skipped().find(p); it != sides.lhs.skipped().end()) lhs_reason = it->second;
    if (auto it = sides.rhs.skipped().find(p); it != sides.rhs.skipped().end()) rhs_reason = it->second;
    std::string reason;
    if (!lhs_reason.empty() && lhs_reason == rhs_reason) reason = lhs_reason;
    else if (!lhs_reason.empty() && !rhs_reason.empty()) reason = "lhs: " + lhs_reason + "; rhs: " + rhs_reason;
    else if (!lhs_reason.empty()) reason = "lhs: " + lhs_reason;
    else if (!rhs_reason.empty()) reason = "rhs: " + rhs_reason;
    report.skipped.push_back(SkippedPrime{p, reason.empty() ? "not computed" : reason});
  }
  report.pass = report.gated_failures() == 0;
  return report;
}

/// Dispatches on the identity kind; `range` is ignored for symbolic ones.
inline VerificationReport verify(const Registry& registry, const std::string& id, const Params& params,
                                 const PrimeRange& range) {
  if (registry.at(id).kind == IdentityKind::symbolic_exact) return verify_symbolic(registry, id, params);
  return verify_adelic(registry, id, params, range);
}

}  // namespace fmzv

#endif  // FMZV_IDENTITIES_HPP
