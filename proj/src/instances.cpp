#include "hfg/instances.hpp"

#include <stdexcept>
#include <string>

namespace hfg {

ChainComplex torus_2d(std::size_t lx, std::size_t ly) {
  if (lx < 2 || ly < 2) throw std::invalid_argument("torus_2d: need Lx, Ly >= 2");
  const std::size_t nv = lx * ly;
  const std::size_t ne = 2 * nv;  // x-edges [0, nv), y-edges [nv, 2nv)
  const std::size_t nf = nv;
  auto vid = [&](std::size_t x, std::size_t y) {
    return static_cast<uint32_t>((x % lx) + lx * (y % ly));
  };
  auto xe = [&](std::size_t x, std::size_t y) { return vid(x, y); };
  auto ye = [&](std::size_t x, std::size_t y) { return static_cast<uint32_t>(nv + vid(x, y)); };

  BitMatrix d1(nv, ne);
  for (std::size_t y = 0; y < ly; ++y) {
    for (std::size_t x = 0; x < lx; ++x) {
      d1.set(vid(x, y), xe(x, y), true);
      d1.set(vid(x + 1, y), xe(x, y), true);
      d1.set(vid(x, y), ye(x, y), true);
      d1.set(vid(x, y + 1), ye(x, y), true);
    }
  }
  BitMatrix d2(ne, nf);
  for (std::size_t y = 0; y < ly; ++y) {
    for (std::size_t x = 0; x < lx; ++x) {
      uint32_t f = vid(x, y);
      d2.set(xe(x, y), f, true);
      d2.set(xe(x, y + 1), f, true);
      d2.set(ye(x, y), f, true);
      d2.set(ye(x + 1, y), f, true);
    }
  }
  ChainComplex cx({nv, ne, nf}, {d1, d2});
  std::vector<std::string> edge_labels(ne);
  for (std::size_t y = 0; y < ly; ++y) {
    for (std::size_t x = 0; x < lx; ++x) {
      edge_labels[xe(x, y)] = "ex(" + std::to_string(x) + "," + std::to_string(y) + ")";
      edge_labels[ye(x, y)] = "ey(" + std::to_string(x) + "," + std::to_string(y) + ")";
    }
  }
  cx.set_labels(1, std::move(edge_labels));
  return cx;
}

ChainComplex torus_3d(std::size_t l) {
  if (l < 2) throw std::invalid_argument("torus_3d: need L >= 2");
  const std::size_t nc = l * l * l;
  auto vid = [&](std::size_t x, std::size_t y, std::size_t z) {
    return static_cast<uint32_t>((x % l) + l * ((y % l) + l * (z % l)));
  };
  auto shift = [&](std::size_t x, std::size_t y, std::size_t z, std::size_t dir) {
    std::size_t p[3] = {x, y, z};
    p[dir] += 1;
    return vid(p[0], p[1], p[2]);
  };
  auto eid = [&](std::size_t dir, std::size_t x, std::size_t y, std::size_t z) {
    return static_cast<uint32_t>(dir * nc + vid(x, y, z));
  };
  // Face with normal `dir` spans the two other directions.
  auto fid = [&](std::size_t dir, std::size_t x, std::size_t y, std::size_t z) {
    return static_cast<uint32_t>(dir * nc + vid(x, y, z));
  };

  BitMatrix d1(nc, 3 * nc);
  BitMatrix d2(3 * nc, 3 * nc);
  BitMatrix d3(3 * nc, nc);
  for (std::size_t z = 0; z < l; ++z) {
    for (std::size_t y = 0; y < l; ++y) {
      for (std::size_t x = 0; x < l; ++x) {
        for (std::size_t dir = 0; dir < 3; ++dir) {
          d1.set(vid(x, y, z), eid(dir, x, y, z), true);
          d1.set(shift(x, y, z, dir), eid(dir, x, y, z), true);
        }
        for (std::size_t normal = 0; normal < 3; ++normal) {
          std::size_t a = (normal + 1) % 3;
          std::size_t b = (normal + 2) % 3;
          std::size_t p[3] = {x, y, z};
          uint32_t f = fid(normal, x, y, z);
          d2.set(eid(a, p[0], p[1], p[2]), f, true);
          std::size_t pb[3] = {x, y, z};
          pb[b] += 1;
          d2.set(eid(a, pb[0], pb[1], pb[2]), f, true);
          d2.set(eid(b, p[0], p[1], p[2]), f, true);
          std::size_t pa[3] = {x, y, z};
          pa[a] += 1;
          d2.set(eid(b, pa[0], pa[1], pa[2]), f, true);
          // Cube at p is bounded by this face and its shift along the normal.
          d3.set(f, vid(x, y, z), true);
          std::size_t pn[3] = {x, y, z};
          pn[normal] += 1;
          std::size_t q[3] = {x, y, z};
          // The face at pn with the same normal bounds the cube at q = p.
          d3.set(fid(normal, pn[0], pn[1], pn[2]), vid(q[0], q[1], q[2]), true);
        }
      }
    }
  }
  return ChainComplex({nc, 3 * nc, 3 * nc, nc}, {d1, d2, d3});
}

ChainComplex interval_complex(std::size_t n) {
  BitMatrix d1(n + 1, n);
  for (uint32_t e = 0; e < n; ++e) {
    d1.set(e, e, true);
    d1.set(e + 1, e, true);
  }
  return ChainComplex({n + 1, n}, {d1});
}

}  // namespace hfg
