#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unimd/landmarks.hpp"

namespace unimd {

enum class Config { A, B, C, D, E };

inline char config_name(Config c) { return static_cast<char>('A' + static_cast<int>(c)); }

/// One occurrence of a configuration; index is canonical.
struct ConfigHit {
  Config config = Config::A;
  int index = 0;
  std::optional<Thread> thread;
  std::optional<int> twice_j;  // 2 * (g/2 + k - i) for C and E; odd when g is odd
};

struct ConfigurationReport {
  std::optional<ConfigHit> A, B, C, D, E;
  std::optional<std::pair<Vertex, Vertex>> vertex_witness;
  std::optional<std::pair<Edge, Edge>> edge_witness;

  bool blocks_vertex() const { return A || B || C; }
  bool blocks_edge() const { return A || D || E; }
  const std::optional<ConfigHit>& get(Config c) const {
    switch (c) {
      case Config::A: return A;
      case Config::B: return B;
      case Config::C: return C;
      case Config::D: return D;
      case Config::E: return E;
    }
    return A;
  }
  /// Names of the present configurations among those listed, e.g. "AC".
  std::string names(const std::vector<Config>& which) const {
    std::string out;
    for (Config c : which)
      if (get(c)) out += config_name(c);
    return out;
  }
};

class ConfigError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline bool in_range(int i, int lo, int hi) { return lo <= i && i <= hi; }

inline const Thread* longest(const std::vector<Thread>& threads, int min_length = 0, const Thread* skip = nullptr) {
  const Thread* best = nullptr;
  for (const Thread& t : threads)
    if (&t != skip && t.length() >= min_length && (!best || t.length() > best->length())) best = &t;
  return best;
}

inline bool in_B_range(const LandmarkContext& ctx, int i) {
  const int g = ctx.g, k = ctx.k;
  return i == 0 || in_range(i, k, g / 2 - 1) || in_range(i, (g + 1) / 2 + k + 1, g - 1);
}

inline bool in_D_range(const LandmarkContext& ctx, int i) {
  const int g = ctx.g, k = ctx.k;
  return i == 0 || in_range(i, k, (g + 1) / 2 - 1) || in_range(i, g / 2 + k + 1, g - 1);
}

}  // namespace detail

/// a_S = 2, g even, k = g/2.
inline std::vector<ConfigHit> hits_A(const LandmarkContext& ctx) {
  if (ctx.a_S == 2 && ctx.g % 2 == 0 && 2 * ctx.k == ctx.g) return {ConfigHit{Config::A, 0, std::nullopt, std::nullopt}};
  return {};
}

inline std::vector<ConfigHit> hits_B(const LandmarkContext& ctx) {
  std::vector<ConfigHit> out;
  if (ctx.k > ctx.g / 2 - 1) return out;
  for (int i = 0; i < ctx.g; ++i)
    if (detail::in_B_range(ctx, i))
      if (const Thread* t = detail::longest(ctx.free_at(i))) out.push_back({Config::B, i, *t, std::nullopt});
  return out;
}

inline std::vector<ConfigHit> hits_C(const LandmarkContext& ctx) {
  std::vector<ConfigHit> out;
  const int g = ctx.g, k = ctx.k;
  if (ctx.a_S != 2 || g % 2 != 0 || 2 * k > g) return out;
  for (int i = 0; i <= k; ++i)
    if (const Thread* t = detail::longest(ctx.free_at(i), g / 2 - k))
      out.push_back({Config::C, i, *t, g + 2 * k - 2 * i});
  return out;
}

inline std::vector<ConfigHit> hits_D(const LandmarkContext& ctx) {
  std::vector<ConfigHit> out;
  if (ctx.k > (ctx.g + 1) / 2 - 1) return out;
  for (int i = 0; i < ctx.g; ++i)
    if (detail::in_D_range(ctx, i))
      if (const Thread* t = detail::longest(ctx.free_at(i))) out.push_back({Config::D, i, *t, std::nullopt});
  return out;
}

/// For even g the partner position j = g/2 + k - i must also carry a free thread.
inline std::vector<ConfigHit> hits_E(const LandmarkContext& ctx) {
  std::vector<ConfigHit> out;
  const int g = ctx.g, k = ctx.k;
  if (ctx.a_S != 2) return out;
  for (int i = 0; i <= k; ++i) {
    const Thread* t = detail::longest(ctx.free_at(i), g / 2 - k + 1);
    if (!t) continue;
    if (g % 2 == 0) {
      const int j = (g / 2 + k - i) % g;
      // j == i only when k = g/2; the partner thread must then differ from t.
      const Thread* partner = detail::longest(ctx.free_at(j), 0, j == i ? t : nullptr);
      if (!partner) continue;
    }
    out.push_back({Config::E, i, *t, g + 2 * k - 2 * i});
  }
  return out;
}

inline std::optional<ConfigHit> first_of(std::vector<ConfigHit> hits) {
  if (hits.empty()) return std::nullopt;
  return hits.front();
}

inline std::optional<ConfigHit> detect_A(const LandmarkContext& ctx) { return first_of(hits_A(ctx)); }
inline std::optional<ConfigHit> detect_B(const LandmarkContext& ctx) { return first_of(hits_B(ctx)); }
inline std::optional<ConfigHit> detect_C(const LandmarkContext& ctx) { return first_of(hits_C(ctx)); }
inline std::optional<ConfigHit> detect_D(const LandmarkContext& ctx) { return first_of(hits_D(ctx)); }
inline std::optional<ConfigHit> detect_E(const LandmarkContext& ctx) { return first_of(hits_E(ctx)); }

/// Vertex pair left undistinguished by S, built from A, then B, then C.
inline std::pair<Vertex, Vertex> vertex_witness(const LandmarkContext& ctx, const ConfigurationReport& report) {
  const int g = ctx.g, k = ctx.k;
  if (report.A) return {ctx.vertex_at(1), ctx.vertex_at(g - 1)};
  if (report.B) {
    const int i = report.B->index;
    const Vertex w = report.B->thread->vertices.front();
    if (i != 0 && detail::in_range(i, k, g / 2 - 1)) return {w, ctx.vertex_at(i + 1)};
    return {w, ctx.vertex_at(i - 1)};
  }
  if (report.C) {
    const int depth = g / 2 - k;
    const int i = report.C->index;
    const int j = report.C->twice_j.value() / 2;
    if (depth > 0) return {report.C->thread->vertices[depth - 1], ctx.vertex_at(j)};
    // k = g/2: the pair sits on the cycle and collapses to A's pair at the active ends.
    if (i % k != 0) return {ctx.vertex_at(i), ctx.vertex_at(j)};
    return {ctx.vertex_at(1), ctx.vertex_at(g - 1)};
  }
  throw ConfigError("no vertex configuration present");
}

/// Edge pair left undistinguished by S, built from A, then D, then E.
inline std::pair<Edge, Edge> edge_witness(const LandmarkContext& ctx, const ConfigurationReport& report) {
  const int g = ctx.g, k = ctx.k;
  if (report.A) return {Edge(ctx.vertex_at(0), ctx.vertex_at(1)), Edge(ctx.vertex_at(0), ctx.vertex_at(g - 1))};
  if (report.D) {
    const int i = report.D->index;
    const Vertex vi = ctx.vertex_at(i);
    const Edge pendant(report.D->thread->vertices.front(), vi);
    if (i != 0 && detail::in_range(i, k, (g + 1) / 2 - 1)) return {pendant, Edge(vi, ctx.vertex_at(i + 1))};
    return {pendant, Edge(vi, ctx.vertex_at(i - 1))};
  }
  if (report.E) {
    const int i = report.E->index;
    const Thread& t = *report.E->thread;
    const int depth = g / 2 - k;  // d(e, v_i)
    auto on_thread = [&](int m) { return m == 0 ? ctx.vertex_at(i) : t.vertices[m - 1]; };
    const Edge e(on_thread(depth), on_thread(depth + 1));
    const int floor_j = report.E->twice_j.value() / 2;
    if (g % 2 == 0) {
      const int j = floor_j % g;
      const Thread* partner = detail::longest(ctx.free_at(j), 0, nullptr);
      if (j == i)
        for (const Thread& cand : ctx.free_at(j))
          if (!(cand == t)) partner = &cand;
      return {e, Edge(ctx.vertex_at(j), partner->vertices.front())};
    }
    return {e, Edge(ctx.vertex_at(floor_j), ctx.vertex_at(floor_j + 1))};
  }
  throw ConfigError("no edge configuration present");
}

/// Detects every configuration and attaches the witness pairs.
inline ConfigurationReport analyze_configurations(const LandmarkContext& ctx) {
  ConfigurationReport r;
  r.A = detect_A(ctx);
  r.B = detect_B(ctx);
  r.C = detect_C(ctx);
  r.D = detect_D(ctx);
  r.E = detect_E(ctx);
  if (r.blocks_vertex()) r.vertex_witness = vertex_witness(ctx, r);
  if (r.blocks_edge()) r.edge_witness = edge_witness(ctx, r);
  return r;
}

}  // namespace unimd
