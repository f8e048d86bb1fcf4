#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcode/z2.hpp"

namespace gcode {

/// A point in the two-parameter grid. x is the horizontal (within-slice)
/// scale, y the vertical (slice) scale.
struct Bigrade {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Bigrade&) const = default;
  // componentwise order
  bool leq(const Bigrade& other) const {
    return x <= other.x && y <= other.y;
  }
};

struct Simplex {
  std::vector<int> vertices;  // strictly increasing, nonempty

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
  bool operator==(const Simplex&) const = default;
};

/// All facets of a simplex, obtained by dropping one vertex (in
/// increasing vertex position). Vertices yield an empty sequence.
std::vector<Simplex> boundary(const Simplex& s);

/// 1-critical bifiltered simplicial complex: every simplex carries a
/// unique entry bigrade.
struct BifilteredComplex {
  std::vector<std::pair<Simplex, Bigrade>> simplices;
};

struct ValidationIssue {
  enum class Kind { malformed, non_finite_grade, duplicate, missing_face, non_monotone };
  Kind kind;
  std::size_t simplex_index;  // offending simplex in input order
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Report every 1-criticality / closure / monotonicity violation.
ValidationReport validate(const BifilteredComplex& complex);

/// Rows (generators / p-simplices) and Z2 columns (relations /
/// (p+1)-simplex boundaries), each with a bigrade. Rows and columns are
/// sorted by (x, y, input order); column supports index into rows.
struct GradedMatrix {
  enum class Mode { simplicial, presentation };

  struct Row {
    std::int64_t id;  // simplex index / original generator index
    Bigrade grade;
  };
  struct Column {
    std::int64_t id;
    Z2Column col;
    Bigrade grade;
  };

  std::vector<Row> rows;
  std::vector<Column> columns;
  Mode mode = Mode::simplicial;
  int degree = -1;       // homology degree (simplicial mode)
  bool capped = false;
  double sentinel = 0.0;  // valid once capped

  // True iff every column's grade dominates each support row's grade.
  bool admissible() const;
};

/// Boundary matrix of a validated complex in homology degree p:
/// rows are the p-simplices, columns the (p+1)-simplex boundaries.
GradedMatrix build_graded_matrix(const BifilteredComplex& complex, int p);

/// Make every homology class die at a sentinel grade S = max x + 1.
/// Simplicial mode appends a cone (apex simplices at horizontal value S);
/// presentation mode appends one unit relation per generator at (S, y_g).
/// The source complex is required in simplicial mode.
GradedMatrix cap(const GradedMatrix& matrix,
                 const BifilteredComplex* source = nullptr);

/// Swap the two grade axes (the "primary-parameter" option).
BifilteredComplex transpose_grades(const BifilteredComplex& complex);
GradedMatrix transpose_grades(const GradedMatrix& matrix);

}  // namespace gcode
