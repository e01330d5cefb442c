#ifndef HAMNODAL_NODAL_HPP
#define HAMNODAL_NODAL_HPP

#include <cstdint>
#include <vector>

#include "hamnodal/core.hpp"

namespace hamnodal {

// Decomposition of a function's supports into nodal domains. Strong domains
// are the connected components of {f > 0} and {f < 0}; weak domains are the
// components of {f >= 0} (resp. {f <= 0}) that contain at least one vertex
// with nonzero value of the matching sign. Zero vertices may appear in both a
// positive and a negative weak domain.
struct NodalReport {
  std::vector<VertexSet> positive_strong;
  std::vector<VertexSet> negative_strong;
  std::vector<VertexSet> positive_weak;
  std::vector<VertexSet> negative_weak;
  std::int64_t snd = 0;
  std::int64_t wnd = 0;
};

// Strong part only. Throws ZeroFunction if f is identically zero.
NodalReport strong_domains(const GridFunction& f);

// Weak part only. Throws ZeroFunction if f is identically zero.
NodalReport weak_domains(const GridFunction& f);

// Both parts in one report.
NodalReport nodal_report(const GridFunction& f);

std::int64_t count_strong_domains(const GridFunction& f);
std::int64_t count_weak_domains(const GridFunction& f);

// Courant-type bounds for a q*i-eigenfunction: WND <= k and SND <= k+r-1,
// where (k,r) is the eigenvalue's position in the spectrum. Throws
// NotAnEigenfunction if f does not satisfy the eigenfunction equation.
struct CourantReport {
  bool snd_bound_ok = false;
  bool wnd_bound_ok = false;
  std::int64_t k = 0;
  std::int64_t r = 0;
  std::int64_t snd = 0;
  std::int64_t wnd = 0;
  std::int64_t snd_slack = 0;  // (k+r-1) - snd
  std::int64_t wnd_slack = 0;  // k - wnd
};

CourantReport check_courant(const GridFunction& f, int i);

}  // namespace hamnodal

#endif
