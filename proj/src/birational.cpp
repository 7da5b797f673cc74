#include "qtoric/birational.hpp"

#include <utility>

namespace qtoric {

const char* to_string(SmoothSide side) {
  return side == SmoothSide::first ? "first" : "second";
}

NotAdmissibleError::NotAdmissibleError(Reason r, const std::string& msg)
    : Error(msg), reason(r) {}

const char* to_string(NotAdmissibleError::Reason reason) {
  switch (reason) {
    case NotAdmissibleError::Reason::no_smooth_endpoint: return "noSmoothEndpoint";
    case NotAdmissibleError::Reason::neighbors_dependent: return "neighborsDependent";
    case NotAdmissibleError::Reason::inequality_fails: return "inequalityFails";
  }
  return "unknown";
}

BlowdownSite blowdown_site(const QuasitoricModel& model, std::size_t edge_index) {
  require_positively_omnioriented(model);
  const std::size_t m = model.size();
  if (m < 4) {
    throw TooFewEdgesError("blowdown: model has " + std::to_string(m) +
                           " edges; deleting one needs at least 4");
  }
  if (edge_index >= m) {
    throw IndexOutOfRange("blowdown: edge index " + std::to_string(edge_index) +
                          " out of range [0," + std::to_string(m) + ")");
  }
  BlowdownSite site;
  site.edge_index = edge_index;
  site.lambda1 = model.edges[(edge_index + m - 1) % m];
  site.lambda2 = model.edges[edge_index];
  site.lambda3 = model.edges[(edge_index + 1) % m];
  const Int d12 = det2(site.lambda1, site.lambda2);
  const Int d23 = det2(site.lambda2, site.lambda3);
  const Int d13 = det2(site.lambda1, site.lambda3);
  if (d12 != 1 && d23 != 1) {
    throw NotAdmissibleError(NotAdmissibleError::Reason::no_smooth_endpoint,
                             "edge " + std::to_string(edge_index) +
                                 ": neither endpoint is a smooth point");
  }
  if (d13 == 0) {
    throw NotAdmissibleError(NotAdmissibleError::Reason::neighbors_dependent,
                             "edge " + std::to_string(edge_index) + ": neighbors " +
                                 to_string(site.lambda1) + " and " + to_string(site.lambda3) +
                                 " are dependent");
  }
  site.m = d13;
  if (d12 == 1 && d23 >= 1 && d23 <= d13) {
    site.smooth_side = SmoothSide::first;
    site.k = d23;
    return site;
  }
  if (d23 == 1 && d12 >= 1 && d12 <= d13) {
    site.smooth_side = SmoothSide::second;
    site.k = d12;
    return site;
  }
  throw NotAdmissibleError(NotAdmissibleError::Reason::inequality_fails,
                           "edge " + std::to_string(edge_index) +
                               ": determinant inequality 0 < k <= m fails (dets " +
                               to_string(d12) + ", " + to_string(d23) + ", " + to_string(d13) +
                               ")");
}

QuasitoricModel blowdown(const QuasitoricModel& model, const BlowdownSite& site) {
  const std::size_t m = model.size();
  if (site.edge_index >= m || model.edges[site.edge_index] != site.lambda2 ||
      model.edges[(site.edge_index + m - 1) % m] != site.lambda1 ||
      model.edges[(site.edge_index + 1) % m] != site.lambda3) {
    throw DomainError("blowdown: site does not belong to this model");
  }
  QuasitoricModel out = model;
  out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(site.edge_index));
  return out;
}

bool is_crepant(const BlowdownSite& site) { return site.k + 1 == site.m; }

BlowupResult blowup(const QuasitoricModel& model, std::size_t vertex_index, SmoothSide side) {
  require_positively_omnioriented(model);
  const std::size_t m = model.size();
  if (vertex_index >= m) {
    throw IndexOutOfRange("blowup: vertex index " + std::to_string(vertex_index) +
                          " out of range [0," + std::to_string(m) + ")");
  }
  const LatticeVector l1 = model.edges[vertex_index];
  const LatticeVector l3 = model.edges[(vertex_index + 1) % m];
  const Int det = det2(l1, l3);
  // base is unimodular on the smooth side; shifting by the smooth-side edge
  // leaves that determinant fixed and moves the other by multiples of det.
  LatticeVector base, shift;
  Int c;
  if (side == SmoothSide::first) {
    base = unimodular_complement(l1);
    shift = l1;
    c = det2(base, l3);
  } else {
    base = -unimodular_complement(l3);
    shift = l3;
    c = det2(l1, base);
  }
  const Int t = floor_div(det - c, det);  // unique t with c + t*det in [1, det]
  BlowupResult result;
  result.inserted = base + t * shift;
  result.model = model;
  result.model.edges.insert(result.model.edges.begin() + static_cast<std::ptrdiff_t>(vertex_index) + 1,
                            result.inserted);
  return result;
}

std::optional<BlowupResult> crepant_blowup(const QuasitoricModel& model, std::size_t vertex_index) {
  if (vertex_index >= model.size()) {
    throw IndexOutOfRange("blowup: vertex index " + std::to_string(vertex_index) +
                          " out of range [0," + std::to_string(model.size()) + ")");
  }
  const LatticeVector l1 = model.edges[vertex_index];
  const LatticeVector l3 = model.edges[(vertex_index + 1) % model.size()];
  const Int det = det2(l1, l3);
  for (const SmoothSide side : {SmoothSide::first, SmoothSide::second}) {
    BlowupResult result = blowup(model, vertex_index, side);
    const Int k = side == SmoothSide::first ? det2(result.inserted, l3)
                                            : det2(l1, result.inserted);
    if (k + 1 == det) {
      return result;
    }
  }
  return std::nullopt;
}

ResolutionResult resolve_vertex(const QuasitoricModel& model, std::size_t vertex_index) {
  require_positively_omnioriented(model);
  if (vertex_index >= model.size()) {
    throw IndexOutOfRange("resolve: vertex index " + std::to_string(vertex_index) +
                          " out of range [0," + std::to_string(model.size()) + ")");
  }
  ResolutionResult result;
  result.model = model;
  std::size_t idx = vertex_index;
  while (det2(result.model.edges[idx], result.model.edges[(idx + 1) % result.model.size()]) != 1) {
    BlowupResult step = blowup(result.model, idx, SmoothSide::first);
    result.inserted.push_back(step.inserted);
    result.model = std::move(step.model);
    // The new smooth vertex is (l1, inserted); the singular remainder
    // descends to (inserted, l3) one slot to the right.
    idx += 1;
  }
  return result;
}

McKayReport mckay_check(const QuasitoricModel& model_x, const QuasitoricModel& model_y) {
  McKayReport report;
  report.table_x = cr_betti(model_x);
  report.table_y = cr_betti(model_y);
  for (const auto& [degree, dim] : report.table_x) {
    const auto it = report.table_y.find(degree);
    const Int diff = dim - (it == report.table_y.end() ? Int(0) : it->second);
    if (diff != 0) {
      report.degreewise_diff[degree] = diff;
    }
  }
  for (const auto& [degree, dim] : report.table_y) {
    if (!report.table_x.contains(degree)) {
      report.degreewise_diff[degree] = -dim;
    }
  }
  report.equal = report.degreewise_diff.empty();
  report.total_diff = total_dimension(report.table_x) - total_dimension(report.table_y);
  return report;
}

}  // namespace qtoric
