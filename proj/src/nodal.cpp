#include "hamnodal/nodal.hpp"

#include <string>

#include "hamnodal/spectra.hpp"

namespace hamnodal {

namespace {

void require_nonzero(const GridFunction& f) {
  if (f.is_zero()) {
    throw ZeroFunction("nodal domains are undefined for the zero function");
  }
}

// Components of the closed support of one sign, filtered to those containing
// a strictly signed vertex. This matches the definition verbatim.
std::vector<VertexSet> weak_side(const GridFunction& f, int sign) {
  VertexSet closed(f.params());
  VertexSet strict(f.params());
  for (VertexIndex x = 0; x < f.size(); ++x) {
    const int s = f.at(x).sign();
    if (s == sign) {
      closed.set(x);
      strict.set(x);
    } else if (s == 0) {
      closed.set(x);
    }
  }
  std::vector<VertexSet> out;
  for (auto& comp : induced_components(closed)) {
    if (comp.intersects(strict)) out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

NodalReport strong_domains(const GridFunction& f) {
  require_nonzero(f);
  NodalReport report;
  report.positive_strong = induced_components(positive_support(f));
  report.negative_strong = induced_components(negative_support(f));
  report.snd = static_cast<std::int64_t>(report.positive_strong.size() +
                                         report.negative_strong.size());
  return report;
}

NodalReport weak_domains(const GridFunction& f) {
  require_nonzero(f);
  NodalReport report;
  report.positive_weak = weak_side(f, +1);
  report.negative_weak = weak_side(f, -1);
  report.wnd = static_cast<std::int64_t>(report.positive_weak.size() +
                                         report.negative_weak.size());
  return report;
}

NodalReport nodal_report(const GridFunction& f) {
  NodalReport report = strong_domains(f);
  NodalReport weak = weak_domains(f);
  report.positive_weak = std::move(weak.positive_weak);
  report.negative_weak = std::move(weak.negative_weak);
  report.wnd = weak.wnd;
  return report;
}

std::int64_t count_strong_domains(const GridFunction& f) {
  return strong_domains(f).snd;
}

std::int64_t count_weak_domains(const GridFunction& f) {
  return weak_domains(f).wnd;
}

CourantReport check_courant(const GridFunction& f, int i) {
  const Rational lambda(eigenvalue(f.params(), i));
  if (!is_eigenfunction(f, lambda)) {
    throw NotAnEigenfunction("function is not a " + rational_to_string(lambda) +
                             "-eigenfunction");
  }
  const CourantPosition pos = courant_position(f.params(), i);
  const NodalReport report = nodal_report(f);
  CourantReport out;
  out.k = pos.k;
  out.r = pos.r;
  out.snd = report.snd;
  out.wnd = report.wnd;
  out.snd_slack = pos.k + pos.r - 1 - report.snd;
  out.wnd_slack = pos.k - report.wnd;
  out.snd_bound_ok = out.snd_slack >= 0;
  out.wnd_bound_ok = out.wnd_slack >= 0;
  return out;
}

}  // namespace hamnodal
