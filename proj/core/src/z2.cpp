#include "gcode/z2.hpp"

#include <algorithm>
#include <unordered_map>

namespace gcode {

Z2Column column_add(const Z2Column& a, const Z2Column& b) {
  Z2Column out;
  out.support.reserve(a.support.size() + b.support.size());
  std::set_symmetric_difference(a.support.begin(), a.support.end(),
                                b.support.begin(), b.support.end(),
                                std::back_inserter(out.support));
  return out;
}

std::vector<Z2Column> reduce(std::vector<Z2Column> columns,
                             ReductionLog* log) {
  std::unordered_map<RowIndex, std::size_t> owner;
  owner.reserve(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    while (!columns[j].is_zero()) {
      const RowIndex p = *columns[j].pivot();
      auto it = owner.find(p);
      if (it == owner.end()) {
        owner.emplace(p, j);
        break;
      }
      const std::size_t i = it->second;
      columns[j] = column_add(columns[i], columns[j]);
      if (log) log->events.push_back({j, i});
    }
  }
  return columns;
}

}  // namespace gcode
