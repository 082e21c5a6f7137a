#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lkrep/laurent.hpp"

namespace lkrep {

using Rational = boost::multiprecision::cpp_rational;

enum class DiagramType { A, D, E };

/// Simply-laced Dynkin diagram. Node orders (1-based):
///   A_r: the path 1 - 2 - ... - r.
///   D_r: the path 1 - ... - (r-2), with both fork nodes r-1 and r joined to
///        r-2. Requires r >= 4.
///   E_6: the path 1 - 2 - 3 - 4 - 5 with node 6 joined to node 3.
struct Diagram {
  DiagramType type = DiagramType::A;
  int rank = 1;

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

/// "A5", "D5", "E6" (case-insensitive letter).
Diagram parse_diagram(std::string_view text);
std::string to_string(const Diagram& d);

/// Unordered node pairs joined by an edge.
std::vector<std::pair<int, int>> edges(const Diagram& d);

struct DynkinLabeling {
  Diagram diagram;
  std::vector<int> labels;

  friend bool operator==(const DynkinLabeling&, const DynkinLabeling&) = default;
};

/// Comma-separated non-negative integers, one per node.
DynkinLabeling parse_labeling(const Diagram& d, std::string_view text);
std::string labels_to_string(const DynkinLabeling& l);

/// Positive roots in simple-root coordinates, with the inner product
/// normalized to (a_i, a_i) = 1 and (a_i, a_j) = -1/2 on edges.
struct RootSystem {
  Diagram diagram;
  std::vector<std::vector<Rational>> gram;   // rank x rank
  std::vector<std::vector<int>> positive_roots;
  std::vector<Rational> half_sum;            // g in simple-root coordinates
};

/// Closure from the simple roots: b + a_i is a root exactly when
/// (b, a_i) = -1/2. Verifies the expected number of positive roots.
RootSystem positive_roots(const Diagram& d);

/// Weyl's product over positive roots of (L + g, a) / (g, a), exact.
BigInt weyl_dimension(const DynkinLabeling& l);
BigInt weyl_dimension(const RootSystem& roots, const std::vector<int>& labels);

/// Closed-form E6 dimension in the coordinates l_k, g_k, m_k,
/// evaluated exactly. labels follow the E6 node
/// order above.
BigInt e6_dimension_direct(const std::vector<int>& labels);

/// True iff the labeling is not fixed by the diagram automorphism: A not a
/// palindrome, D of odd rank with unequal fork labels, E6 not invariant
/// under 1<->5, 2<->4. D of even rank is never asymmetric.
bool is_asymmetric(const DynkinLabeling& l);

/// Labeling permuted by the diagram automorphism (identity for even D).
DynkinLabeling diagram_flip(const DynkinLabeling& l);

struct LabeledDimension {
  DynkinLabeling labeling;
  BigInt dimension;
  bool asymmetric = false;
};

/// Every nonzero labeling of dimension <= bound. Raising a label never
/// lowers the dimension, so each label is increased only while the bound
/// holds. Sorted by dimension, then labels.
std::vector<LabeledDimension> enumerate_irreps_below(const Diagram& d, const BigInt& bound,
                                                     bool asymmetric_only);

/// Columns: diagram, labels, dimension, asymmetric.
std::string irreps_csv(const std::vector<LabeledDimension>& rows);

}  // namespace lkrep
