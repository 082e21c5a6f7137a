#include "lkrep/lie_dims.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "lkrep/errors.hpp"

namespace lkrep {

namespace {

int expected_positive_roots(const Diagram& d) {
  switch (d.type) {
    case DiagramType::A:
      return d.rank * (d.rank + 1) / 2;
    case DiagramType::D:
      return d.rank * (d.rank - 1);
    case DiagramType::E:
      return 36;
  }
  return 0;
}

void validate(const Diagram& d) {
  if (d.type == DiagramType::A && d.rank < 1) throw DomainError("A_r needs r >= 1");
  if (d.type == DiagramType::D && d.rank < 4) throw DomainError("D_r needs r >= 4");
  if (d.type == DiagramType::E && d.rank != 6) throw DomainError("only E6 is supported among E types");
}

Rational inner(const std::vector<std::vector<Rational>>& gram, const std::vector<Rational>& a,
               const std::vector<int>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) s += a[i] * gram[i][j] * b[j];
    }
  }
  return s;
}

BigInt to_integer(const Rational& r, const char* what) {
  if (boost::multiprecision::denominator(r) != 1) {
    throw ComputationError(std::string(what) + " is not an integer");
  }
  return boost::multiprecision::numerator(r);
}

void check_labels(const Diagram& d, const std::vector<int>& labels) {
  if (static_cast<int>(labels.size()) != d.rank) {
    throw DomainError(to_string(d) + " needs " + std::to_string(d.rank) + " labels, got " +
                      std::to_string(labels.size()));
  }
  for (int a : labels) {
    if (a < 0) throw DomainError("labels must be non-negative");
  }
}

}  // namespace

Diagram parse_diagram(std::string_view text) {
  if (text.size() < 2) throw ParseError("bad diagram '" + std::string(text) + "'");
  Diagram d;
  switch (std::toupper(static_cast<unsigned char>(text.front()))) {
    case 'A':
      d.type = DiagramType::A;
      break;
    case 'D':
      d.type = DiagramType::D;
      break;
    case 'E':
      d.type = DiagramType::E;
      break;
    default:
      throw ParseError("bad diagram '" + std::string(text) + "'");
  }
  const auto digits = text.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d.rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParseError("bad diagram '" + std::string(text) + "'");
  }
  validate(d);
  return d;
}

std::string to_string(const Diagram& d) {
  const char letter = d.type == DiagramType::A ? 'A' : d.type == DiagramType::D ? 'D' : 'E';
  return letter + std::to_string(d.rank);
}

std::vector<std::pair<int, int>> edges(const Diagram& d) {
  validate(d);
  std::vector<std::pair<int, int>> out;
  switch (d.type) {
    case DiagramType::A:
      for (int i = 1; i < d.rank; ++i) out.emplace_back(i, i + 1);
      break;
    case DiagramType::D:
      for (int i = 1; i < d.rank - 2; ++i) out.emplace_back(i, i + 1);
      out.emplace_back(d.rank - 2, d.rank - 1);
      out.emplace_back(d.rank - 2, d.rank);
      break;
    case DiagramType::E:
      for (int i = 1; i < 5; ++i) out.emplace_back(i, i + 1);
      out.emplace_back(3, 6);
      break;
  }
  return out;
}

DynkinLabeling parse_labeling(const Diagram& d, std::string_view text) {
  DynkinLabeling l{d, {}};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
      throw ParseError("bad label '" + std::string(token) + "'");
    }
    l.labels.push_back(value);
    pos = comma + 1;
  }
  if (static_cast<int>(l.labels.size()) != d.rank) {
    throw ParseError(to_string(d) + " needs " + std::to_string(d.rank) + " labels, got " +
                     std::to_string(l.labels.size()));
  }
  return l;
}

std::string labels_to_string(const DynkinLabeling& l) {
  std::string out;
  for (std::size_t i = 0; i < l.labels.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(l.labels[i]);
  }
  return out;
}

RootSystem positive_roots(const Diagram& d) {
  validate(d);
  const int r = d.rank;
  RootSystem rs;
  rs.diagram = d;
  rs.gram.assign(static_cast<std::size_t>(r), std::vector<Rational>(static_cast<std::size_t>(r), 0));
  for (int i = 0; i < r; ++i) rs.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  for (auto [a, b] : edges(d)) {
    rs.gram[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = Rational(-1, 2);
    rs.gram[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = Rational(-1, 2);
  }

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(static_cast<std::size_t>(r), 0);
    e[static_cast<std::size_t>(i)] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  const Rational minus_half(-1, 2);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& b : frontier) {
      std::vector<Rational> br(b.begin(), b.end());
      for (int i = 0; i < r; ++i) {
        std::vector<int> e(static_cast<std::size_t>(r), 0);
        e[static_cast<std::size_t>(i)] = 1;
        if (inner(rs.gram, br, e) != minus_half) continue;
        std::vector<int> sum = b;
        ++sum[static_cast<std::size_t>(i)];
        if (seen.insert(sum).second) next.push_back(sum);
      }
    }
    frontier = std::move(next);
  }
  rs.positive_roots.assign(seen.begin(), seen.end());
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [](const auto& a, const auto& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    return ha != hb ? ha < hb : a < b;
  });
  if (static_cast<int>(rs.positive_roots.size()) != expected_positive_roots(d)) {
    throw ComputationError("root closure for " + to_string(d) + " produced " +
                           std::to_string(rs.positive_roots.size()) + " positive roots");
  }
  rs.half_sum.assign(static_cast<std::size_t>(r), 0);
  for (const auto& b : rs.positive_roots) {
    for (int i = 0; i < r; ++i) rs.half_sum[static_cast<std::size_t>(i)] += b[static_cast<std::size_t>(i)];
  }
  for (auto& x : rs.half_sum) x /= 2;
  return rs;
}

BigInt weyl_dimension(const RootSystem& roots, const std::vector<int>& labels) {
  check_labels(roots.diagram, labels);
  Rational num = 1;
  Rational den = 1;
  for (const auto& b : roots.positive_roots) {
    // (L, b) = sum_i c_i a_i (a_i, a_i) / 2 with (a_i, a_i) = 1.
    Rational lb = 0;
    for (std::size_t i = 0; i < b.size(); ++i) lb += Rational(b[i] * labels[i], 2);
    const Rational gb = inner(roots.gram, roots.half_sum, b);
    num *= lb + gb;
    den *= gb;
  }
  return to_integer(num / den, "Weyl dimension");
}

BigInt weyl_dimension(const DynkinLabeling& l) {
  // Root systems are small but rebuilt often by enumeration; cache them.
  static std::mutex mutex;
  static std::map<std::pair<int, int>, RootSystem> cache;
  const std::pair<int, int> key{static_cast<int>(l.diagram.type), l.diagram.rank};
  const RootSystem* rs = nullptr;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, positive_roots(l.diagram)).first;
    rs = &it->second;
  }
  return weyl_dimension(*rs, l.labels);
}

BigInt e6_dimension_direct(const std::vector<int>& labels) {
  check_labels(Diagram{DiagramType::E, 6}, labels);
  std::vector<Rational> a(7, 0);
  for (int i = 1; i <= 6; ++i) a[static_cast<std::size_t>(i)] = labels[static_cast<std::size_t>(i - 1)];

  std::vector<Rational> l(7, 0);
  std::vector<Rational> g(7, 0);
  Rational weighted = 0;
  for (int i = 1; i <= 5; ++i) weighted += i * a[static_cast<std::size_t>(i)];
  l[6] = -weighted / 6;
  g[6] = Rational(-5, 2);
  for (int k = 1; k <= 5; ++k) {
    Rational tail = 0;
    for (int i = k; i <= 5; ++i) tail += a[static_cast<std::size_t>(i)];
    l[static_cast<std::size_t>(k)] = l[6] + tail;
    g[static_cast<std::size_t>(k)] = Rational(7 - 2 * k, 2);
  }
  const Rational l0 = a[1] + 2 * a[2] + 3 * a[3] + 2 * a[4] + a[5] + 2 * a[6];
  const Rational g0 = 11;
  std::vector<Rational> m(7, 0);
  for (int k = 1; k <= 6; ++k) m[static_cast<std::size_t>(k)] = l[static_cast<std::size_t>(k)] + g[static_cast<std::size_t>(k)];
  const Rational m0 = l0 + g0;

  Rational n = m0 / g0;
  for (int p = 1; p <= 6; ++p) {
    for (int q = p + 1; q <= 6; ++q) {
      n *= (m[static_cast<std::size_t>(p)] - m[static_cast<std::size_t>(q)]) /
           (g[static_cast<std::size_t>(p)] - g[static_cast<std::size_t>(q)]);
    }
  }
  for (int p = 1; p <= 6; ++p) {
    for (int q = p + 1; q <= 6; ++q) {
      for (int r = q + 1; r <= 6; ++r) {
        const auto P = static_cast<std::size_t>(p);
        const auto Q = static_cast<std::size_t>(q);
        const auto R = static_cast<std::size_t>(r);
        n *= (m[P] + m[Q] + m[R] + m0 / 2) / (g[P] + g[Q] + g[R] + g0 / 2);
      }
    }
  }
  return to_integer(n, "E6 closed-form dimension");
}

DynkinLabeling diagram_flip(const DynkinLabeling& l) {
  check_labels(l.diagram, l.labels);
  DynkinLabeling out = l;
  const int r = l.diagram.rank;
  switch (l.diagram.type) {
    case DiagramType::A:
      std::reverse(out.labels.begin(), out.labels.end());
      break;
    case DiagramType::D:
      if (r % 2 == 1) std::swap(out.labels[static_cast<std::size_t>(r - 2)], out.labels[static_cast<std::size_t>(r - 1)]);
      break;
    case DiagramType::E:
      std::swap(out.labels[0], out.labels[4]);
      std::swap(out.labels[1], out.labels[3]);
      break;
  }
  return out;
}

bool is_asymmetric(const DynkinLabeling& l) { return diagram_flip(l).labels != l.labels; }

std::vector<LabeledDimension> enumerate_irreps_below(const Diagram& d, const BigInt& bound,
                                                     bool asymmetric_only) {
  validate(d);
  if (bound < 1) throw DomainError("dimension bound must be >= 1");
  const RootSystem rs = positive_roots(d);
  std::vector<LabeledDimension> out;
  std::vector<int> labels(static_cast<std::size_t>(d.rank), 0);

  // Depth-first over nodes. Within one node the dimension is increasing in
  // the label, so the loop stops at the first label exceeding the bound;
  // later nodes start at 0, the smallest dimension for that prefix.
  auto walk = [&](auto&& self, int node) -> void {
    if (node == d.rank) {
      if (std::all_of(labels.begin(), labels.end(), [](int a) { return a == 0; })) return;
      DynkinLabeling l{d, labels};
      const bool asym = is_asymmetric(l);
      if (!asymmetric_only || asym) out.push_back({l, weyl_dimension(rs, labels), asym});
      return;
    }
    for (int a = 0;; ++a) {
      labels[static_cast<std::size_t>(node)] = a;
      // Remaining nodes at 0 give the minimum dimension for this prefix.
      if (weyl_dimension(rs, labels) > bound) break;
      self(self, node + 1);
    }
    labels[static_cast<std::size_t>(node)] = 0;
  };
  walk(walk, 0);
  std::sort(out.begin(), out.end(), [](const LabeledDimension& a, const LabeledDimension& b) {
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    return a.labeling.labels < b.labeling.labels;
  });
  return out;
}

std::string irreps_csv(const std::vector<LabeledDimension>& rows) {
  std::string out = "diagram,labels,dimension,asymmetric\n";
  for (const auto& r : rows) {
    out += to_string(r.labeling.diagram) + ",\"" + labels_to_string(r.labeling) + "\"," +
           r.dimension.str() + ',' + (r.asymmetric ? "true" : "false") + '\n';
  }
  return out;
}

}  // namespace lkrep
