#include "bcg/layout.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace bcg {

namespace {
constexpr double kEps = 1e-9;
}

void GeometryConfig::check() const {
  if (!(unit_scale > 0.0)) throw Error(ErrorCode::InvalidArgument, "unit_scale must be positive");
  if (!(roof_taper >= 0.0 && roof_taper < 0.5))
    throw Error(ErrorCode::InvalidArgument, "roof_taper must lie in [0, 0.5)");
  if (!(overlap_ratio > 0.0 && overlap_ratio <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "overlap_ratio must lie in (0, 1]");
}

double quantize(double v) {
  // the nudge sends binary near-ties (x.xx5 stored as x.xx4999...) upward
  const double scaled = std::abs(v) * 100.0;
  const double r = std::floor(scaled + 0.5 + 1e-7) / 100.0;
  if (r == 0.0) return 0.0;
  return v < 0 ? -r : r;
}

std::vector<std::string> level_violations(const Level& level) {
  std::vector<std::string> out;
  const auto& bs = level.blocks;
  if (bs.empty()) out.push_back("level has no blocks");
  for (std::size_t i = 0; i < bs.size(); ++i) {
    if (!(bs[i].w > 0.0) || !(bs[i].h > 0.0))
      out.push_back(fmt::format("block {} has a non-positive size", i));
    if (bs[i].y < level.meta.ground_y - kEps)
      out.push_back(fmt::format("block {} lies below ground", i));
    if (part_of(bs[i].element) != bs[i].part)
      out.push_back(fmt::format("block {} ({}) is tagged {}", i, to_string(bs[i].element),
                                to_string(bs[i].part)));
  }
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = i + 1; j < bs.size(); ++j) {
      const double ox = std::min(bs[i].right(), bs[j].right()) - std::max(bs[i].x, bs[j].x);
      const double oy = std::min(bs[i].top(), bs[j].top()) - std::max(bs[i].y, bs[j].y);
      if (ox > kEps && oy > kEps) out.push_back(fmt::format("blocks {} and {} overlap", i, j));
    }

  // Parts are horizontal bands: nothing of a lower part reaches above the
  // bottom of any block of a higher part.
  constexpr double inf = std::numeric_limits<double>::infinity();
  double top[3] = {-inf, -inf, -inf};
  double bottom[3] = {inf, inf, inf};
  for (const auto& b : bs) {
    const auto p = static_cast<std::size_t>(b.part);
    top[p] = std::max(top[p], b.top());
    bottom[p] = std::min(bottom[p], b.y);
  }
  for (std::size_t lo = 0; lo < 3; ++lo)
    for (std::size_t hi = lo + 1; hi < 3; ++hi)
      if (top[lo] > bottom[hi] + kEps)
        out.push_back(fmt::format("{} band reaches above the bottom of the {} band",
                                  to_string(static_cast<Part>(lo)), to_string(static_cast<Part>(hi))));
  return out;
}

void check_level(const Level& level) {
  const auto v = level_violations(level);
  if (!v.empty()) throw Error(ErrorCode::InvariantViolation, v.front());
}

Level layout(const BuildingPlan& plan, const StyleAssignment& a, const GeometryConfig& g) {
  g.check();
  if (plan.main.empty()) throw Error(ErrorCode::DegeneratePlan, "plan has an empty main part");
  const auto kinds = plan.kinds();
  if (a.size() != kinds.size())
    throw Error(ErrorCode::AssignmentMismatch, "assignment does not cover exactly the plan's elements");
  for (auto k : kinds) {
    auto it = a.find(k);
    if (it == a.end())
      throw Error(ErrorCode::AssignmentMismatch, fmt::format("no model assigned for {}", to_string(k)));
    if (it->second.element != k)
      throw Error(ErrorCode::AssignmentMismatch,
                  fmt::format("model '{}' cannot stand in for {}", it->second.id, to_string(k)));
  }

  Level level;
  level.meta.ground_y = g.ground_y;
  level.meta.unit_scale = g.unit_scale;

  double row_width = 0.0;
  for (auto e : plan.main) row_width = quantize(row_width + a.at(e).width);
  const double origin = quantize(g.origin_x);
  double y = quantize(g.ground_y);

  int row = 0;
  for (auto e : plan.base) {
    const auto& m = a.at(e);
    const double h = quantize(m.height);
    level.blocks.push_back({e, m.id, origin, y, row_width, h, Part::Base, row++});
    y = quantize(y + h);
  }

  double x = origin, row_height = 0.0;
  for (auto e : plan.main) {
    const auto& m = a.at(e);
    const double w = quantize(m.width), h = quantize(m.height);
    level.blocks.push_back({e, m.id, x, y, w, h, Part::Main, 0});
    x = quantize(x + w);
    row_height = std::max(row_height, h);
  }
  y = quantize(y + row_height);

  double factor = 1.0;
  row = 0;
  for (auto e : plan.roofs) {
    const auto& m = a.at(e);
    const double w = quantize(row_width * factor);
    const double h = quantize(m.height);
    const double left = quantize(origin + (row_width - w) / 2.0);
    level.blocks.push_back({e, m.id, left, y, w, h, Part::Roofs, row++});
    y = quantize(y + h);
    factor *= 1.0 - g.roof_taper;
  }
  return level;
}

SupportReport check_support(const Level& level, const GeometryConfig& g) {
  SupportReport report;
  const auto& bs = level.blocks;
  for (const auto& b : bs) {
    BlockSupport s;
    if (std::abs(b.y - g.ground_y) <= kEps) {
      s.supported = true;
      s.contact = b.w;
      s.span = std::make_pair(b.x, b.right());
    } else {
      for (const auto& under : bs) {
        if (&under == &b || std::abs(under.top() - b.y) > kEps) continue;
        const double lo = std::max(under.x, b.x);
        const double hi = std::min(under.right(), b.right());
        if (hi - lo <= kEps) continue;
        s.contact += hi - lo;
        if (!s.span)
          s.span = std::make_pair(lo, hi);
        else
          s.span = std::make_pair(std::min(s.span->first, lo), std::max(s.span->second, hi));
      }
      s.supported = s.contact + kEps >= g.overlap_ratio * b.w;
    }
    report.stable = report.stable && s.supported;
    report.blocks.push_back(s);
  }
  return report;
}

}  // namespace bcg
