#include "gcode/complex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gcode {

std::vector<Simplex> boundary(const Simplex& s) {
  std::vector<Simplex> facets;
  if (s.dim() < 1) return facets;
  facets.reserve(s.vertices.size());
  for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
    Simplex f;
    f.vertices.reserve(s.vertices.size() - 1);
    for (std::size_t i = 0; i < s.vertices.size(); ++i)
      if (i != drop) f.vertices.push_back(s.vertices[i]);
    facets.push_back(std::move(f));
  }
  return facets;
}

ValidationReport validate(const BifilteredComplex& complex) {
  ValidationReport report;
  std::map<std::vector<int>, std::size_t> index_of;

  for (std::size_t i = 0; i < complex.simplices.size(); ++i) {
    const auto& [s, g] = complex.simplices[i];
    if (s.vertices.empty() ||
        !std::is_sorted(s.vertices.begin(), s.vertices.end()) ||
        std::adjacent_find(s.vertices.begin(), s.vertices.end()) !=
            s.vertices.end()) {
      report.issues.push_back({ValidationIssue::Kind::malformed, i,
                               "vertices must be strictly increasing and nonempty"});
      continue;
    }
    if (!std::isfinite(g.x) || !std::isfinite(g.y)) {
      report.issues.push_back(
          {ValidationIssue::Kind::non_finite_grade, i, "grade must be finite"});
      continue;
    }
    auto [it, inserted] = index_of.emplace(s.vertices, i);
    if (!inserted) {
      report.issues.push_back({ValidationIssue::Kind::duplicate, i,
                               "simplex appears more than once"});
    }
  }

  for (std::size_t i = 0; i < complex.simplices.size(); ++i) {
    const auto& [s, g] = complex.simplices[i];
    if (s.dim() < 1) continue;
    for (const Simplex& f : boundary(s)) {
      auto it = index_of.find(f.vertices);
      if (it == index_of.end()) {
        std::string verts;
        for (int v : f.vertices) verts += (verts.empty() ? "" : " ") + std::to_string(v);
        report.issues.push_back({ValidationIssue::Kind::missing_face, i,
                                 "missing facet {" + verts + "}"});
        continue;
      }
      const Bigrade& fg = complex.simplices[it->second].second;
      if (!fg.leq(g)) {
        report.issues.push_back({ValidationIssue::Kind::non_monotone, i,
                                 "grade below facet grade"});
      }
    }
  }
  return report;
}

bool GradedMatrix::admissible() const {
  for (const auto& c : columns)
    for (RowIndex r : c.col.support)
      if (r >= rows.size() || !rows[r].grade.leq(c.grade)) return false;
  return true;
}

namespace {

bool grade_less(const Bigrade& a, const Bigrade& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

// Stable-sort rows by (x, y, input order) and remap column supports.
void sort_rows_and_remap(GradedMatrix& m) {
  std::vector<std::size_t> perm(m.rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return grade_less(m.rows[a].grade, m.rows[b].grade);
  });
  std::vector<RowIndex> old_to_new(m.rows.size());
  std::vector<GradedMatrix::Row> sorted;
  sorted.reserve(m.rows.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    old_to_new[perm[k]] = static_cast<RowIndex>(k);
    sorted.push_back(m.rows[perm[k]]);
  }
  m.rows = std::move(sorted);
  for (auto& c : m.columns) {
    for (auto& r : c.col.support) r = old_to_new[r];
    std::sort(c.col.support.begin(), c.col.support.end());
  }
}

void sort_columns(GradedMatrix& m) {
  std::stable_sort(m.columns.begin(), m.columns.end(),
                   [](const auto& a, const auto& b) {
                     return grade_less(a.grade, b.grade);
                   });
}

void finalize(GradedMatrix& m) {
  sort_rows_and_remap(m);
  sort_columns(m);
}

}  // namespace

GradedMatrix build_graded_matrix(const BifilteredComplex& complex, int p) {
  if (p < 0) throw std::invalid_argument("homology degree must be non-negative");
  GradedMatrix m;
  m.mode = GradedMatrix::Mode::simplicial;
  m.degree = p;

  std::map<std::vector<int>, RowIndex> row_of;
  for (std::size_t i = 0; i < complex.simplices.size(); ++i) {
    const auto& [s, g] = complex.simplices[i];
    if (s.dim() == p) {
      row_of.emplace(s.vertices, static_cast<RowIndex>(m.rows.size()));
      m.rows.push_back({static_cast<std::int64_t>(i), g});
    }
  }
  for (std::size_t i = 0; i < complex.simplices.size(); ++i) {
    const auto& [s, g] = complex.simplices[i];
    if (s.dim() != p + 1) continue;
    GradedMatrix::Column c;
    c.id = static_cast<std::int64_t>(i);
    c.grade = g;
    for (const Simplex& f : boundary(s)) {
      auto it = row_of.find(f.vertices);
      if (it == row_of.end())
        throw std::invalid_argument("complex is not closed; run validate()");
      c.col.support.push_back(it->second);
    }
    std::sort(c.col.support.begin(), c.col.support.end());
    m.columns.push_back(std::move(c));
  }
  finalize(m);
  return m;
}

GradedMatrix cap(const GradedMatrix& matrix, const BifilteredComplex* source) {
  GradedMatrix m = matrix;
  if (m.capped) return m;

  double max_x = -std::numeric_limits<double>::infinity();
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  for (const auto& r : m.rows) {
    max_x = std::max(max_x, r.grade.x);
    min_x = std::min(min_x, r.grade.x);
    min_y = std::min(min_y, r.grade.y);
  }
  for (const auto& c : m.columns) max_x = std::max(max_x, c.grade.x);
  if (m.rows.empty()) {
    max_x = 0.0;
    min_x = min_y = 0.0;
  }
  const double S = max_x + 1.0;

  if (m.mode == GradedMatrix::Mode::presentation) {
    for (RowIndex r = 0; r < m.rows.size(); ++r) {
      GradedMatrix::Column c;
      c.id = -1 - static_cast<std::int64_t>(r);
      c.grade = {S, m.rows[r].grade.y};
      c.col.support = {r};
      m.columns.push_back(std::move(c));
    }
    sort_columns(m);
    m.capped = true;
    m.sentinel = S;
    return m;
  }

  if (!source)
    throw std::invalid_argument("cap in simplicial mode needs the source complex");
  const int p = m.degree;
  if (p < 0) throw std::invalid_argument("matrix carries no homology degree");

  if (p == 0) {
    // One apex vertex, first in row order, joined to every vertex by a
    // cone edge at horizontal value S. All components merge at S.
    m.rows.insert(m.rows.begin(), {-1, {min_x, min_y}});
    for (auto& c : m.columns)
      for (auto& r : c.col.support) ++r;
    const std::size_t n_vertices = m.rows.size() - 1;
    for (RowIndex v = 0; v < n_vertices; ++v) {
      GradedMatrix::Column c;
      c.id = -1 - static_cast<std::int64_t>(v);
      c.grade = {S, m.rows[v + 1].grade.y};
      c.col.support = {0, v + 1};
      m.columns.push_back(std::move(c));
    }
  } else {
    // Cone rows over the (p-1)-simplices, cone columns over the
    // p-simplices with support sigma + cone(boundary sigma).
    std::map<std::vector<int>, RowIndex> cone_row_of;
    const RowIndex n_rows = static_cast<RowIndex>(m.rows.size());
    for (std::size_t i = 0; i < source->simplices.size(); ++i) {
      const auto& [s, g] = source->simplices[i];
      if (s.dim() != p - 1) continue;
      cone_row_of.emplace(s.vertices,
                          static_cast<RowIndex>(m.rows.size()));
      m.rows.push_back({-1 - static_cast<std::int64_t>(i), {S, g.y}});
    }
    for (RowIndex r = 0; r < n_rows; ++r) {
      const Simplex& sigma =
          source->simplices[static_cast<std::size_t>(m.rows[r].id)].first;
      GradedMatrix::Column c;
      c.id = -1 - static_cast<std::int64_t>(r);
      c.grade = {S, m.rows[r].grade.y};
      c.col.support.push_back(r);
      for (const Simplex& f : boundary(sigma))
        c.col.support.push_back(cone_row_of.at(f.vertices));
      std::sort(c.col.support.begin(), c.col.support.end());
      m.columns.push_back(std::move(c));
    }
  }
  finalize(m);
  m.capped = true;
  m.sentinel = S;
  return m;
}

BifilteredComplex transpose_grades(const BifilteredComplex& complex) {
  BifilteredComplex out = complex;
  for (auto& [s, g] : out.simplices) std::swap(g.x, g.y);
  return out;
}

GradedMatrix transpose_grades(const GradedMatrix& matrix) {
  if (matrix.capped)
    throw std::invalid_argument("transpose grades before capping");
  GradedMatrix m = matrix;
  for (auto& r : m.rows) std::swap(r.grade.x, r.grade.y);
  for (auto& c : m.columns) std::swap(c.grade.x, c.grade.y);
  finalize(m);
  return m;
}

}  // namespace gcode
