#include "gallai/cnf.hpp"

#include <charconv>
#include <cstdlib>
#include <map>

#include "gallai/errors.hpp"

namespace gallai {

namespace {

// Calls visit(sorted subset) for every k-subset of 0..n-1 in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t a = 0; a < k; ++a) idx[a] = a;
  while (true) {
    visit(idx);
    std::size_t a = k;
    while (a > 0 && idx[a - 1] == n - k + a - 1) --a;
    if (a == 0) return;
    ++idx[a - 1];
    for (std::size_t b = a; b < k; ++b) idx[b] = idx[b - 1] + 1;
  }
}

}  // namespace

CnfFormula build_avoidance_cnf(std::size_t n1, std::size_t n2, Color r, BicliquePattern rainbow,
                               BicliquePattern mono) {
  if (n1 == 0 || n2 == 0 || r == 0) {
    throw Error(Errc::invalid_argument, "CNF export needs positive n1, n2, r");
  }
  CnfFormula f{n1, n2, r, 0, {}, {}, {}};
  const std::size_t edges = n1 * n2;
  auto edge_of = [&](std::size_t i, std::size_t j) { return i * n2 + j + 1; };

  f.comments.push_back("gallai-ramsey avoidance instance");
  f.comments.push_back("n1=" + std::to_string(n1) + " n2=" + std::to_string(n2) +
                       " r=" + std::to_string(r));
  f.comments.push_back("rainbow=" + std::to_string(rainbow.s) + "," + std::to_string(rainbow.t) +
                       " mono=" + std::to_string(mono.s) + "," + std::to_string(mono.t));
  f.comments.push_back("x(e,c) = (e-1)*" + std::to_string(r) +
                       " + c for edge e in row-major order");

  // (a) exactly one color per edge
  for (std::size_t e = 1; e <= edges; ++e) {
    std::vector<int> alo;
    for (Color c = 1; c <= r; ++c) alo.push_back(f.primary_var(e, c));
    f.clauses.push_back(std::move(alo));
    for (Color c = 1; c <= r; ++c) {
      for (Color d = c + 1; d <= r; ++d) {
        f.clauses.push_back({-f.primary_var(e, c), -f.primary_var(e, d)});
      }
    }
  }

  // (b) no monochromatic block
  for_each_subset(n1, mono.s, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(n2, mono.t, [&](const std::vector<std::size_t>& cols) {
      for (Color c = 1; c <= r; ++c) {
        std::vector<int> clause;
        for (std::size_t i : rows) {
          for (std::size_t j : cols) clause.push_back(-f.primary_var(edge_of(i, j), c));
        }
        f.clauses.push_back(std::move(clause));
      }
    });
  });

  // (c) equality auxiliaries for edge pairs that share a rainbow selection
  int next_var = f.num_primary() + 1;
  std::map<std::pair<std::size_t, std::size_t>, int> pair_base;
  if (rainbow.s <= n1 && rainbow.t <= n2) {
    for (std::size_t e1 = 1; e1 <= edges; ++e1) {
      for (std::size_t e2 = e1 + 1; e2 <= edges; ++e2) {
        const bool same_row = (e1 - 1) / n2 == (e2 - 1) / n2;
        const bool same_col = (e1 - 1) % n2 == (e2 - 1) % n2;
        if ((same_row ? 1u : 2u) > rainbow.s || (same_col ? 1u : 2u) > rainbow.t) continue;
        pair_base[{e1, e2}] = next_var;
        for (Color c = 1; c <= r; ++c) f.eq_vars.push_back({e1, e2, c, next_var++});
      }
    }
  }
  f.num_vars = next_var - 1;
  if (!f.eq_vars.empty()) {
    f.comments.push_back("eq(e1,e2,c) auxiliaries " + std::to_string(f.num_primary() + 1) + ".." +
                         std::to_string(f.num_vars) + " ordered by (e1, e2, c)");
  }
  for (const auto& eq : f.eq_vars) {
    const int a = f.primary_var(eq.e1, eq.color);
    const int b = f.primary_var(eq.e2, eq.color);
    f.clauses.push_back({-eq.var, a});
    f.clauses.push_back({-eq.var, b});
    f.clauses.push_back({-a, -b, eq.var});
  }

  // (d) every rainbow selection repeats some color
  for_each_subset(n1, rainbow.s, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(n2, rainbow.t, [&](const std::vector<std::size_t>& cols) {
      std::vector<std::size_t> sel;
      for (std::size_t i : rows) {
        for (std::size_t j : cols) sel.push_back(edge_of(i, j));
      }
      std::vector<int> clause;
      for (std::size_t a = 0; a < sel.size(); ++a) {
        for (std::size_t b = a + 1; b < sel.size(); ++b) {
          const int base = pair_base.at({sel[a], sel[b]});
          for (Color c = 0; c < r; ++c) clause.push_back(base + static_cast<int>(c));
        }
      }
      f.clauses.push_back(std::move(clause));
    });
  });
  return f;
}

std::string write_dimacs(const CnfFormula& f) {
  std::string out;
  for (const auto& line : f.comments) out += "c " + line + "\n";
  out += "p cnf " + std::to_string(f.num_vars) + " " + std::to_string(f.clauses.size()) + "\n";
  for (const auto& clause : f.clauses) {
    for (int lit : clause) {
      out += std::to_string(lit);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

std::string export_cnf(std::size_t n1, std::size_t n2, Color r, BicliquePattern rainbow,
                       BicliquePattern mono) {
  return write_dimacs(build_avoidance_cnf(n1, n2, r, rainbow, mono));
}

std::vector<int> encode_model(const CnfFormula& f, const BipartiteColoring& coloring) {
  if (coloring.n1() != f.n1 || coloring.n2() != f.n2 || coloring.r() != f.r) {
    throw Error(Errc::dimension_mismatch, "coloring does not match the CNF instance");
  }
  std::vector<int> model;
  model.reserve(static_cast<std::size_t>(f.num_vars));
  const auto cells = coloring.cells();
  for (std::size_t e = 1; e <= cells.size(); ++e) {
    for (Color c = 1; c <= f.r; ++c) {
      const int v = f.primary_var(e, c);
      model.push_back(cells[e - 1] == c ? v : -v);
    }
  }
  for (const auto& eq : f.eq_vars) {
    const bool on = cells[eq.e1 - 1] == eq.color && cells[eq.e2 - 1] == eq.color;
    model.push_back(on ? eq.var : -eq.var);
  }
  return model;
}

std::vector<int> parse_model(std::string_view text) {
  std::vector<int> model;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && (line.front() == 'c' || line.front() == 's')) continue;

    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
        ++pos;
      }
      if (pos >= line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') {
        ++end;
      }
      const std::string_view token = line.substr(pos, end - pos);
      if (token != "v") {
        int lit = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), lit);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
          throw ParseError(line_no, pos + 1, "expected a signed integer literal");
        }
        if (lit != 0) model.push_back(lit);
      }
      pos = end;
    }
  }
  return model;
}

BipartiteColoring decode_model(std::size_t n1, std::size_t n2, Color r,
                               std::span<const int> model) {
  if (n1 == 0 || n2 == 0 || r == 0) {
    throw Error(Errc::invalid_argument, "model decoding needs positive n1, n2, r");
  }
  const std::size_t edges = n1 * n2;
  const std::size_t primary = edges * r;
  std::vector<signed char> value(primary, 0);  // 0 unset, 1 true, -1 false
  for (int lit : model) {
    const std::size_t var = static_cast<std::size_t>(std::abs(lit));
    if (var == 0 || var > primary) continue;
    const signed char v = lit > 0 ? 1 : -1;
    if (value[var - 1] != 0 && value[var - 1] != v) {
      throw Error(Errc::inconsistent_model,
                  "variable " + std::to_string(var) + " assigned both true and false");
    }
    value[var - 1] = v;
  }
  std::vector<Color> cells(edges, 0);
  for (std::size_t e = 0; e < edges; ++e) {
    for (Color c = 1; c <= r; ++c) {
      if (value[e * r + (c - 1)] != 1) continue;
      if (cells[e] != 0) {
        throw Error(Errc::inconsistent_model,
                    "edge " + std::to_string(e + 1) + " has more than one true color");
      }
      cells[e] = c;
    }
    if (cells[e] == 0) {
      throw Error(Errc::inconsistent_model, "edge " + std::to_string(e + 1) + " has no color");
    }
  }
  return BipartiteColoring(n1, n2, r, std::move(cells));
}

}  // namespace gallai
