#include "detail/hull3.hpp"

#include <algorithm>
#include <cmath>

namespace gip::detail {

namespace {

Vec sub(const Vec& a, const Vec& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

struct Face {
  int a, b, c;
  Vec normal;    // (b-a) x (c-a), outward for CCW faces
  double offset; // normal . a
  bool alive = true;
};

Face make_face(const std::vector<Vec>& pts, int a, int b, int c) {
  Face f;
  f.a = a;
  f.b = b;
  f.c = c;
  f.normal = cross(sub(pts[b], pts[a]), sub(pts[c], pts[a]));
  f.offset = dot(f.normal, pts[a]);
  return f;
}

}  // namespace

std::vector<std::array<int, 3>> convex_hull_3d(const std::vector<Vec>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 4) {
    throw Error(ErrorCode::InvalidSpec,
                "hull needs at least 4 points in dimension 3");
  }
  double scale = 0.0;
  for (const Vec& p : pts) {
    for (double c : p) scale = std::max(scale, std::abs(c));
  }
  const double eps = 1e-12 * std::max(1.0, scale * scale * scale);

  // Seed tetrahedron: spread apart by distance, then area, then volume.
  int p1 = -1;
  double best = -1.0;
  for (int t = 1; t < n; ++t) {
    const double d = norm(sub(pts[t], pts[0]));
    if (d > best) {
      best = d;
      p1 = t;
    }
  }
  int p2 = -1;
  best = -1.0;
  for (int t = 1; t < n; ++t) {
    if (t == p1) continue;
    const double d = norm(cross(sub(pts[p1], pts[0]), sub(pts[t], pts[0])));
    if (d > best) {
      best = d;
      p2 = t;
    }
  }
  if (p2 == -1 || best <= eps) {
    throw Error(ErrorCode::InvalidSpec, "hull points are collinear");
  }
  const Vec seed_normal = cross(sub(pts[p1], pts[0]), sub(pts[p2], pts[0]));
  int p3 = -1;
  best = 0.0;
  for (int t = 1; t < n; ++t) {
    if (t == p1 || t == p2) continue;
    const double d = std::abs(dot(seed_normal, sub(pts[t], pts[0])));
    if (d > best) {
      best = d;
      p3 = t;
    }
  }
  if (p3 == -1 || best <= eps) {
    throw Error(ErrorCode::InvalidSpec, "hull points are coplanar");
  }

  std::vector<Face> faces;
  {
    const int s[4] = {0, p1, p2, p3};
    const int tri[4][3] = {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
    for (const auto& t : tri) {
      Face f = make_face(pts, s[t[0]], s[t[1]], s[t[2]]);
      const int other = s[0] + s[1] + s[2] + s[3] - f.a - f.b - f.c;
      if (dot(f.normal, pts[other]) > f.offset) {
        std::swap(f.b, f.c);
        f = make_face(pts, f.a, f.b, f.c);
      }
      faces.push_back(f);
    }
  }

  for (int p = 0; p < n; ++p) {
    if (p == 0 || p == p1 || p == p2 || p == p3) continue;
    std::vector<int> visible;
    for (int t = 0; t < static_cast<int>(faces.size()); ++t) {
      if (faces[t].alive && dot(faces[t].normal, pts[p]) > faces[t].offset + eps) {
        visible.push_back(t);
      }
    }
    if (visible.empty()) continue;

    // Horizon: directed edges of visible faces whose reverse belongs to no
    // visible face.
    std::vector<std::pair<int, int>> edges;
    for (int t : visible) {
      const Face& f = faces[t];
      edges.push_back({f.a, f.b});
      edges.push_back({f.b, f.c});
      edges.push_back({f.c, f.a});
    }
    auto is_horizon = [&edges](std::pair<int, int> e) {
      return std::find(edges.begin(), edges.end(),
                       std::make_pair(e.second, e.first)) == edges.end();
    };
    for (int t : visible) faces[t].alive = false;
    for (const auto& e : edges) {
      if (is_horizon(e)) {
        faces.push_back(make_face(pts, e.first, e.second, p));
      }
    }
  }

  std::vector<std::array<int, 3>> out;
  for (const Face& f : faces) {
    if (f.alive) out.push_back({f.a, f.b, f.c});
  }
  return out;
}

}  // namespace gip::detail
