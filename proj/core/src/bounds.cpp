#include "gallai/bounds.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "gallai/errors.hpp"
#include "json.hpp"

namespace gallai {

namespace mp = boost::multiprecision;

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::invalid_argument, what);
}

BigInt ipow(std::int64_t base, std::int64_t exp) {
  return mp::pow(BigInt(base), static_cast<unsigned>(exp));
}

Rational rpow(const Rational& x, unsigned e) {
  return Rational(mp::pow(mp::numerator(x), e), mp::pow(mp::denominator(x), e));
}

int sign(const Rational& x) { return x.sign(); }

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

std::strong_ordering compare_with_root(const Rational& lhs, const Rational& coeff,
                                       const Rational& radicand, unsigned root) {
  require(root >= 1, "root must be positive");
  require(sign(radicand) >= 0, "radicand must be non-negative");
  const int rhs_sign = sign(radicand) == 0 ? 0 : sign(coeff);
  const int lhs_sign = sign(lhs);
  if (lhs_sign != rhs_sign || lhs_sign == 0) return lhs_sign <=> rhs_sign;
  // Same nonzero sign: compare magnitudes raised to the root-th power.
  const Rational lhs_pow = rpow(lhs_sign > 0 ? lhs : Rational(-lhs), root);
  const Rational rhs_pow = rpow(rhs_sign > 0 ? coeff : Rational(-coeff), root) * radicand;
  if (lhs_pow == rhs_pow) return std::strong_ordering::equal;
  const bool lhs_bigger = lhs_pow > rhs_pow;
  return (lhs_bigger == (lhs_sign > 0)) ? std::strong_ordering::greater
                                        : std::strong_ordering::less;
}

std::optional<RationalBracket> bracket_root(const Rational& coeff, const Rational& radicand,
                                            unsigned root, const Rational& offset) {
  require(sign(radicand) >= 0, "radicand must be non-negative");
  if (root == 1) {
    const Rational v = coeff * radicand + offset;
    return RationalBracket{v, v};
  }
  if (root != 2) return std::nullopt;
  // sqrt(p/q) = sqrt(p q) / q, bracketed on a 10^-15 grid.
  const BigInt scale = mp::pow(BigInt(10), 15);
  const BigInt pq = mp::numerator(radicand) * mp::denominator(radicand);
  const BigInt scaled = pq * scale * scale;
  const BigInt floor_root = mp::sqrt(scaled);
  const BigInt denom = mp::denominator(radicand) * scale;
  Rational lo(floor_root, denom);
  Rational hi = floor_root * floor_root == scaled ? lo : Rational(floor_root + 1, denom);
  lo *= coeff;
  hi *= coeff;
  if (lo > hi) std::swap(lo, hi);
  return RationalBracket{lo + offset, hi + offset};
}

double zarankiewicz_bound(std::int64_t m, std::int64_t n, std::int64_t s, std::int64_t t) {
  require(m >= 1 && n >= 1 && s >= 2 && t >= 1, "zarankiewicz_bound needs m, n, t >= 1, s >= 2");
  const double dt = static_cast<double>(t);
  return std::pow(static_cast<double>(s - 1), 1.0 / dt) * static_cast<double>(n - t + 1) *
             std::pow(static_cast<double>(m), 1.0 - 1.0 / dt) +
         static_cast<double>((t - 1) * m);
}

bool below_zarankiewicz_bound(const BigInt& z, std::int64_t m, std::int64_t n, std::int64_t s,
                              std::int64_t t) {
  require(m >= 1 && n >= 1 && s >= 2 && t >= 1, "zarankiewicz bound needs m, n, t >= 1, s >= 2");
  // z - (t-1) m < (n-t+1) * ((s-1) m^(t-1))^(1/t)
  const Rational lhs = Rational(z) - Rational((t - 1) * m);
  const Rational radicand = Rational((s - 1) * ipow(m, t - 1));
  return compare_with_root(lhs, Rational(n - t + 1), radicand, static_cast<unsigned>(t)) < 0;
}

double size_bound_rhs(std::int64_t m, std::int64_t k, std::int64_t s, std::int64_t t) {
  require(m >= 1 && k >= 1 && s >= 2 && t >= 1, "size_bound_rhs needs m, k, t >= 1, s >= 2");
  return std::pow(static_cast<double>(m) / static_cast<double>(s - 1),
                  1.0 / static_cast<double>(t)) *
         static_cast<double>(k - t + 1);
}

bool check_lemma_condition(const BigInt& m, const BigInt& d, const BigInt& n, std::int64_t s,
                           std::int64_t t) {
  require(s >= 2 && t >= 1, "lemma condition needs s >= 2, t >= 1");
  require(m >= 1 && d >= 1 && n >= 1, "lemma condition needs positive m, d, n");
  // n < (d - t + 1) * (m / (s-1))^(1/t)
  return compare_with_root(Rational(n), Rational(d - t + 1), Rational(m, BigInt(s - 1)),
                           static_cast<unsigned>(t)) < 0;
}

BigInt main_theorem_n(std::int64_t s, std::int64_t t, std::int64_t r) {
  require(s >= 2 && t >= 1 && r >= 1, "main theorem needs s >= 2, t >= 1, r >= 1");
  return 3 * (s - 1) * ipow(s, 2 * t) * ipow(t, 2 * t) * r;
}

MainTheoremParams main_theorem_md(std::int64_t s, std::int64_t t, std::int64_t r) {
  require(s >= 2 && t >= 1 && r >= 1, "main theorem needs s >= 2, t >= 1, r >= 1");
  return {(s - 1) * ipow(s, 2 * t) * ipow(t, 2 * t),
          4 * (s - 1) * ipow(s, 2 * (t - 1)) * ipow(t, 2 * (t - 1)) * r};
}

Rational union_bound(std::int64_t s, std::int64_t t) {
  require(s >= 1 && t >= 1, "union bound needs s, t >= 1");
  return Rational(2 * binomial(s * t, 2), ipow(s, 2) * ipow(t, 2));
}

BigInt star_bound(std::int64_t p, std::int64_t q) {
  require(p >= 1 && q >= 1, "star bound needs p, q >= 1");
  return BigInt(p - 1) * (q - 1) + 1;
}

K2tSizes k2t_sizes(std::int64_t t, std::int64_t r) {
  require(t >= 2 && r >= 1, "K_{2,t} sizes need t >= 2, r >= 1");
  const std::int64_t k = 6 * (t - 1);
  return {BigInt(k - 1) * r + 2, 2 * (t - 1) * binomial(k, 2) + BigInt(3 * (t - 1)) * (r + 1) + 1};
}

BigInt lower_bound_size(std::int64_t t, std::int64_t r) {
  require(t >= 2 && r >= 1, "lower bound size needs t >= 2, r >= 1");
  return BigInt(t - 1) * r;
}

const char* to_string(EuclidKind kind) noexcept {
  switch (kind) {
    case EuclidKind::simplex_pair: return "simplex_pair";
    case EuclidKind::prism: return "prism";
    case EuclidKind::product: return "product";
  }
  return "?";
}

EuclidKind parse_euclid_kind(std::string_view name) {
  for (auto kind : {EuclidKind::simplex_pair, EuclidKind::prism, EuclidKind::product}) {
    if (name == to_string(kind)) return kind;
  }
  throw Error(Errc::unknown_kind, "unknown Euclidean configuration kind '" + std::string(name) +
                                      "' (expected simplex_pair, prism or product)");
}

std::size_t euclid_arity(EuclidKind kind) noexcept {
  return kind == EuclidKind::product ? 3 : 2;
}

BigInt euclid_dims(EuclidKind kind, std::span<const std::int64_t> params) {
  if (params.size() != euclid_arity(kind)) {
    throw Error(Errc::invalid_argument, std::string(to_string(kind)) + " takes " +
                                            std::to_string(euclid_arity(kind)) + " parameters");
  }
  switch (kind) {
    case EuclidKind::simplex_pair:
      require(params[0] >= 1 && params[1] >= 1, "simplex pair needs p, q >= 1");
      return BigInt(params[0]) * params[1] + 2;
    case EuclidKind::prism: {
      const std::int64_t t = params[0], r = params[1];
      require(t >= 2 && r >= 1, "prism needs t >= 2, r >= 1");
      return BigInt(6 * (t - 1) - 1) * r + BigInt(3 * (t - 1)) * (r + 1) +
             2 * (t - 1) * binomial(6 * (t - 1), 2) + 3;
    }
    case EuclidKind::product:
      return 2 * main_theorem_n(params[0], params[1], params[2]);
  }
  throw Error(Errc::unknown_kind, "unknown Euclidean configuration kind");
}

// --- Reports -----------------------------------------------------------------

namespace {

struct FormulaEntry {
  FormulaId id;
  const char* name;
  std::vector<std::string> inputs;
};

const std::vector<FormulaEntry>& catalog() {
  static const std::vector<FormulaEntry> entries = {
      {FormulaId::zarankiewicz, "zarankiewicz", {"m", "n", "s", "t"}},
      {FormulaId::size_bound, "size-bound", {"m", "k", "s", "t"}},
      {FormulaId::lemma_condition, "lemma-condition", {"m", "d", "n", "s", "t"}},
      {FormulaId::main_n, "main-n", {"s", "t", "r"}},
      {FormulaId::main_md, "main-md", {"s", "t", "r"}},
      {FormulaId::union_bound, "union-bound", {"s", "t"}},
      {FormulaId::star, "star", {"p", "q"}},
      {FormulaId::k2t, "k2t", {"t", "r"}},
      {FormulaId::lower_bound, "lower-bound", {"t", "r"}},
      {FormulaId::euclid_dims, "euclid-dims", {}},
  };
  return entries;
}

const FormulaEntry& entry(FormulaId id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
  }
  throw Error(Errc::unknown_kind, "unknown formula id");
}

RealValue real_value(double approx, std::optional<RationalBracket> bracket) {
  RealValue v{approx, std::nullopt, std::nullopt};
  if (bracket) {
    v.lower = bracket->lower;
    v.upper = bracket->upper;
  }
  return v;
}

}  // namespace

const char* to_string(FormulaId id) noexcept {
  for (const auto& e : catalog()) {
    if (e.id == id) return e.name;
  }
  return "?";
}

FormulaId parse_formula_id(std::string_view name) {
  for (const auto& e : catalog()) {
    if (name == e.name) return e.id;
  }
  throw Error(Errc::unknown_kind, "unknown formula '" + std::string(name) + "'");
}

std::vector<std::string> formula_inputs(FormulaId id) { return entry(id).inputs; }

BoundReport evaluate_bound(FormulaId id, std::span<const std::int64_t> in) {
  const auto& e = entry(id);
  if (id == FormulaId::euclid_dims) {
    throw Error(Errc::invalid_argument, "use evaluate_euclid_dims for euclid-dims");
  }
  if (in.size() != e.inputs.size()) {
    throw Error(Errc::invalid_argument, std::string(e.name) + " takes " +
                                            std::to_string(e.inputs.size()) + " inputs");
  }
  BoundReport report{id, {}, {}, false};
  for (std::size_t k = 0; k < in.size(); ++k) report.inputs.emplace_back(e.inputs[k], in[k]);

  switch (id) {
    case FormulaId::zarankiewicz: {
      const auto m = in[0], n = in[1], s = in[2], t = in[3];
      const double approx = zarankiewicz_bound(m, n, s, t);
      std::optional<RationalBracket> bracket;
      if (t <= 2) {
        bracket = bracket_root(Rational(n - t + 1), Rational((s - 1) * ipow(m, t - 1)),
                               static_cast<unsigned>(t), Rational((t - 1) * m));
      }
      report.values.push_back({"bound", real_value(approx, bracket)});
      report.strict = true;
      break;
    }
    case FormulaId::size_bound: {
      const auto m = in[0], k = in[1], s = in[2], t = in[3];
      const double approx = size_bound_rhs(m, k, s, t);
      std::optional<RationalBracket> bracket;
      if (t <= 2) {
        bracket = bracket_root(Rational(k - t + 1), Rational(BigInt(m), BigInt(s - 1)),
                               static_cast<unsigned>(t));
      }
      report.values.push_back({"rhs", real_value(approx, bracket)});
      report.strict = true;
      break;
    }
    case FormulaId::lemma_condition:
      report.values.push_back(
          {"holds", check_lemma_condition(in[0], in[1], in[2], in[3], in[4])});
      report.strict = true;
      break;
    case FormulaId::main_n:
      report.values.push_back({"n", main_theorem_n(in[0], in[1], in[2])});
      break;
    case FormulaId::main_md: {
      auto md = main_theorem_md(in[0], in[1], in[2]);
      report.values.push_back({"m", md.m});
      report.values.push_back({"d", md.d});
      break;
    }
    case FormulaId::union_bound: {
      const Rational u = union_bound(in[0], in[1]);
      report.values.push_back({"probability", u});
      report.values.push_back({"below_one", u < 1});
      report.strict = true;
      break;
    }
    case FormulaId::star:
      report.values.push_back({"n", star_bound(in[0], in[1])});
      break;
    case FormulaId::k2t: {
      auto sizes = k2t_sizes(in[0], in[1]);
      report.values.push_back({"n1", sizes.n1});
      report.values.push_back({"n2", sizes.n2});
      break;
    }
    case FormulaId::lower_bound:
      report.values.push_back({"size", lower_bound_size(in[0], in[1])});
      break;
    case FormulaId::euclid_dims:
      break;
  }
  return report;
}

BoundReport evaluate_euclid_dims(EuclidKind kind, std::span<const std::int64_t> params) {
  BoundReport report{FormulaId::euclid_dims, {}, {}, false};
  report.inputs.emplace_back("kind", std::string(to_string(kind)));
  static const std::array<const char*, 2> pq = {"p", "q"};
  static const std::array<const char*, 2> tr = {"t", "r"};
  static const std::array<const char*, 3> str = {"s", "t", "r"};
  const BigInt dim = euclid_dims(kind, params);
  for (std::size_t k = 0; k < params.size(); ++k) {
    const char* name = kind == EuclidKind::simplex_pair ? pq[k]
                       : kind == EuclidKind::prism      ? tr[k]
                                                        : str[k];
    report.inputs.emplace_back(name, params[k]);
  }
  report.values.push_back({"dim", dim});
  return report;
}

namespace {

std::string format_double(double x) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

std::string format_value(const QuantityValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, BigInt>) {
          return x.str();
        } else if constexpr (std::is_same_v<T, Rational>) {
          return x.str();
        } else if constexpr (std::is_same_v<T, RealValue>) {
          return format_double(x.approx);
        } else {
          return x ? "true" : "false";
        }
      },
      v);
}

std::string format_input(const InputValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  return std::get<std::string>(v);
}

}  // namespace

std::string format_text(const BoundReport& report) {
  std::ostringstream out;
  for (std::size_t k = 0; k < report.values.size(); ++k) {
    if (k > 0) out << ' ';
    out << report.values[k].name << '=' << format_value(report.values[k].value);
  }
  out << '\n';

  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("formula", to_string(report.formula));
  for (const auto& [name, value] : report.inputs) rows.emplace_back(name, format_input(value));
  for (const auto& q : report.values) {
    if (const auto* real = std::get_if<RealValue>(&q.value); real && real->lower) {
      rows.emplace_back(q.name + ".lower", real->lower->str());
      rows.emplace_back(q.name + ".upper", real->upper->str());
    }
  }
  rows.emplace_back("strict", report.strict ? "yes" : "no");
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  for (const auto& [key, value] : rows) {
    out << "  " << key << std::string(width - key.size() + 2, ' ') << value << '\n';
  }
  return out.str();
}

namespace {

using ojson = nlohmann::ordered_json;

ojson big_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max()) {
    return ojson(static_cast<std::int64_t>(x));
  }
  return ojson{{"integer", x.str()}};
}

BigInt big_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  return BigInt(j.at("integer").get<std::string>());
}

Rational rational_from_string(const std::string& text) { return Rational(text); }

}  // namespace

std::string to_json(const BoundReport& report) {
  ojson doc;
  doc["formula"] = to_string(report.formula);
  ojson inputs = ojson::object();
  for (const auto& [name, value] : report.inputs) {
    if (const auto* i = std::get_if<std::int64_t>(&value)) {
      inputs[name] = *i;
    } else {
      inputs[name] = std::get<std::string>(value);
    }
  }
  doc["inputs"] = std::move(inputs);
  ojson values = ojson::object();
  for (const auto& q : report.values) {
    values[q.name] = std::visit(
        [](const auto& x) -> ojson {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, BigInt>) {
            return big_to_json(x);
          } else if constexpr (std::is_same_v<T, Rational>) {
            return ojson{{"rational", x.str()}};
          } else if constexpr (std::is_same_v<T, RealValue>) {
            ojson real{{"real", x.approx}};
            if (x.lower) {
              real["lower"] = x.lower->str();
              real["upper"] = x.upper->str();
            }
            return real;
          } else {
            return ojson(x);
          }
        },
        q.value);
  }
  doc["values"] = std::move(values);
  doc["strict"] = report.strict;
  return doc.dump() + "\n";
}

BoundReport report_from_json(std::string_view text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
    BoundReport report{parse_formula_id(doc.at("formula").get<std::string>()), {}, {},
                       doc.at("strict").get<bool>()};
    for (const auto& [name, value] : doc.at("inputs").items()) {
      if (value.is_string()) {
        report.inputs.emplace_back(name, value.get<std::string>());
      } else {
        report.inputs.emplace_back(name, value.get<std::int64_t>());
      }
    }
    for (const auto& [name, value] : doc.at("values").items()) {
      if (value.is_boolean()) {
        report.values.push_back({name, value.get<bool>()});
      } else if (value.is_object() && value.contains("rational")) {
        report.values.push_back({name, rational_from_string(value["rational"].get<std::string>())});
      } else if (value.is_object() && value.contains("real")) {
        RealValue real{value["real"].get<double>(), std::nullopt, std::nullopt};
        if (value.contains("lower")) {
          real.lower = rational_from_string(value["lower"].get<std::string>());
          real.upper = rational_from_string(value["upper"].get<std::string>());
        }
        report.values.push_back({name, real});
      } else {
        report.values.push_back({name, big_from_json(value)});
      }
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, 1, std::string("bound report: ") + e.what());
  }
}

}  // namespace gallai
