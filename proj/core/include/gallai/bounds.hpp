#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gallai {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(std::int64_t n, std::int64_t k);

/// Three-way comparison of `lhs` against coeff * radicand^(1/root), exact
/// for every root >= 1 (both sides are raised to the root-th power).
/// radicand must be non-negative.
std::strong_ordering compare_with_root(const Rational& lhs, const Rational& coeff,
                                       const Rational& radicand, unsigned root);

/// Rational interval containing coeff * radicand^(1/root) + offset. Exact
/// (lower == upper) for root 1; width about 1e-15 * |coeff| for root 2;
/// std::nullopt for larger roots.
struct RationalBracket {
  Rational lower;
  Rational upper;
};
std::optional<RationalBracket> bracket_root(const Rational& coeff, const Rational& radicand,
                                            unsigned root, const Rational& offset = 0);

// --- Extremal graph theory -------------------------------------------------

/// Kovari-Sos-Turan: (s-1)^(1/t) (n-t+1) m^(1-1/t) + (t-1) m, an upper bound
/// (strict) on the Zarankiewicz number z(m, n; s, t).
double zarankiewicz_bound(std::int64_t m, std::int64_t n, std::int64_t s, std::int64_t t);

/// Exact test of z < zarankiewicz_bound(m, n, s, t).
bool below_zarankiewicz_bound(const BigInt& z, std::int64_t m, std::int64_t n, std::int64_t s,
                              std::int64_t t);

/// (m / (s-1))^(1/t) (k - t + 1): a K_{s,t}-free graph with m vertices of
/// degree >= k on one side has strictly more vertices than this on the other.
double size_bound_rhs(std::int64_t m, std::int64_t k, std::int64_t s, std::int64_t t);

/// Exact test of (m / (s-1))^(1/t) (d - t + 1) > n.
bool check_lemma_condition(const BigInt& m, const BigInt& d, const BigInt& n, std::int64_t s,
                           std::int64_t t);

// --- Bipartite Gallai-Ramsey sizes ------------------------------------------

/// n = 3 (s-1) s^(2t) t^(2t) r. The constant C_{s,t} = n / r is the value
/// fixed by the probabilistic argument, not a tight one.
BigInt main_theorem_n(std::int64_t s, std::int64_t t, std::int64_t r);

struct MainTheoremParams {
  BigInt m;  // (s-1) s^(2t) t^(2t)
  BigInt d;  // 4 (s-1) s^(2(t-1)) t^(2(t-1)) r
};
MainTheoremParams main_theorem_md(std::int64_t s, std::int64_t t, std::int64_t r);

/// binom(st, 2) * d / (n - m r) = (2 / (s^2 t^2)) binom(st, 2), the union
/// bound on a repeated color among st random edges.
Rational union_bound(std::int64_t s, std::int64_t t);

/// (p-1)(q-1) + 1.
BigInt star_bound(std::int64_t p, std::int64_t q);

struct K2tSizes {
  BigInt n1;  // (6(t-1) - 1) r + 2
  BigInt n2;  // 2(t-1) binom(6(t-1), 2) + 3(t-1)(r+1) + 1
};
K2tSizes k2t_sizes(std::int64_t t, std::int64_t r);

/// (t-1) r, side length of the block coloring that avoids both patterns.
BigInt lower_bound_size(std::int64_t t, std::int64_t r);

// --- Euclidean dimensions ----------------------------------------------------

enum class EuclidKind { simplex_pair, prism, product };

const char* to_string(EuclidKind kind) noexcept;
EuclidKind parse_euclid_kind(std::string_view name);  // throws Errc::unknown_kind

/// Number of parameters each kind takes: (p, q), (t, r), (s, t, r).
std::size_t euclid_arity(EuclidKind kind) noexcept;

/// Ambient dimension: pq + 2 for simplex pairs; n1 + n2 of k2t_sizes for
/// prisms; 2 main_theorem_n(s, t, r) for simplex products.
BigInt euclid_dims(EuclidKind kind, std::span<const std::int64_t> params);

// --- Reports -----------------------------------------------------------------

enum class FormulaId {
  zarankiewicz,
  size_bound,
  lemma_condition,
  main_n,
  main_md,
  union_bound,
  star,
  k2t,
  lower_bound,
  euclid_dims,
};

const char* to_string(FormulaId id) noexcept;
FormulaId parse_formula_id(std::string_view name);  // throws Errc::unknown_kind

/// Input names, in order, that evaluate_bound expects for a formula. Empty
/// for euclid_dims, whose inputs depend on the kind.
std::vector<std::string> formula_inputs(FormulaId id);

struct RealValue {
  double approx;
  std::optional<Rational> lower;
  std::optional<Rational> upper;

  friend bool operator==(const RealValue&, const RealValue&) = default;
};

using QuantityValue = std::variant<BigInt, Rational, RealValue, bool>;

struct Quantity {
  std::string name;
  QuantityValue value;

  friend bool operator==(const Quantity&, const Quantity&) = default;
};

using InputValue = std::variant<std::int64_t, std::string>;

struct BoundReport {
  FormulaId formula;
  std::vector<std::pair<std::string, InputValue>> inputs;
  std::vector<Quantity> values;
  /// True when the formula is a strict inequality rather than an attained size.
  bool strict;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Evaluates a formula from inputs listed in formula_inputs(id) order.
BoundReport evaluate_bound(FormulaId id, std::span<const std::int64_t> inputs);
BoundReport evaluate_euclid_dims(EuclidKind kind, std::span<const std::int64_t> params);

/// First line "name=value ..." followed by an aligned key/value block.
std::string format_text(const BoundReport& report);
std::string to_json(const BoundReport& report);
BoundReport report_from_json(std::string_view text);

}  // namespace gallai
