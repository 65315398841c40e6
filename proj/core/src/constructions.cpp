#include "nearcube/constructions.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "nearcube/error.hpp"
#include "nearcube/planar.hpp"

namespace nearcube {

namespace {

std::vector<Interval> intervals(std::initializer_list<std::pair<Rational, Rational>> parts) {
  std::vector<Interval> out;
  for (const auto& [lo, hi] : parts) out.push_back({lo, hi});
  return out;
}

Rational q(long long num, long long den) { return Rational(num, den); }

Rational total_length(const std::vector<Interval>& parts) {
  Rational sum(0);
  for (const auto& iv : parts) sum += iv.length();
  return sum;
}

PolyBox rect(const Rational& x0, const Rational& x1, const Rational& y0, const Rational& y1) {
  return PolyBox::from_box(Box({{x0, x1}, {y0, y1}}));
}

// Random subset of [lo, hi] made of alternating runs between random cuts on
// a grid of `steps` equal parts.
std::vector<Interval> random_runs(std::mt19937_64& rng, const Rational& lo, const Rational& hi, int steps,
                                  int max_cuts) {
  std::uniform_int_distribution<int> cut_count(1, max_cuts);
  std::uniform_int_distribution<int> cut_pos(1, steps - 1);
  std::vector<int> cuts{0, steps};
  const int n = cut_count(rng);
  for (int i = 0; i < n; ++i) cuts.push_back(cut_pos(rng));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  bool inside = std::bernoulli_distribution(0.5)(rng);
  std::vector<Interval> out;
  const Rational step = (hi - lo) / Rational(steps);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (inside) out.push_back({lo + step * Rational(cuts[i]), lo + step * Rational(cuts[i + 1])});
    inside = !inside;
  }
  return out;
}

std::vector<Interval> complement_runs(const std::vector<Interval>& runs, const Rational& lo, const Rational& hi) {
  std::vector<Interval> out;
  Rational cursor = lo;
  for (const auto& iv : runs) {
    if (cursor < iv.lo) out.push_back({cursor, iv.lo});
    cursor = iv.hi;
  }
  if (cursor < hi) out.push_back({cursor, hi});
  return out;
}

}  // namespace

PolyBox build_E_1d_example() {
  return PolyBox::make(1, std::vector<std::vector<Interval>>{{{q(0, 1), q(1, 2)}}, {{q(1, 1), q(3, 2)}}});
}

NearCube3DParams::NearCube3DParams(Rational epsilon) : epsilon_(std::move(epsilon)) {
  if (!(epsilon_.sign() > 0 && epsilon_ < Rational(1))) throw InvalidInput("epsilon must lie in (0, 1)");
}

const Segment& NearCube3DManifest::segment(const std::string& label) const {
  for (const auto& s : segments) {
    if (s.label == label) return s;
  }
  throw InvalidInput("no segment labelled " + label);
}

std::vector<Interval> vertical_pattern(const std::string& label) {
  if (label == "middle") return intervals({{q(0, 1), q(1, 1)}});
  if (label == "P" || label == "R") return intervals({{q(0, 1), q(1, 8)}, {q(1, 2), q(5, 8)}});
  if (label == "Q" || label == "S") {
    return intervals({{q(0, 1), q(1, 4)}, {q(3, 8), q(3, 4)}, {q(7, 8), q(1, 1)}});
  }
  if (label == "A") return intervals({{q(0, 1), q(1, 16)}});
  if (label == "B") return intervals({{q(5, 16), q(3, 4)}});
  if (label == "C") return intervals({{q(1, 2), q(9, 16)}});
  if (label == "D") return intervals({{q(0, 1), q(1, 4)}, {q(13, 16), q(1, 1)}});
  throw InvalidInput("unknown segment label " + label);
}

NearCube3D build_E_3d(const NearCube3DParams& params) {
  const Rational& e = params.epsilon();
  const Rational zero(0);
  const Rational one(1);
  const Rational top = one + e;

  struct Placement {
    const char* label;
    Rational x0, x1, y0, y1;
  };
  const std::vector<Placement> placements = {
      {"middle", e, one, e, one},  {"Q", e, one, zero, e},  {"P", e, one, one, top},
      {"S", zero, e, e, one},      {"R", one, top, e, one}, {"A", zero, e, zero, e},
      {"B", one, top, zero, e},    {"C", one, top, one, top}, {"D", zero, e, one, top},
  };

  NearCube3DManifest manifest;
  manifest.epsilon = e;
  std::vector<Box> boxes;
  for (const auto& p : placements) {
    Segment seg{p.label, Box({{p.x0, p.x1}, {p.y0, p.y1}}), vertical_pattern(p.label), Rational(0), Rational(0)};
    seg.pattern_measure = total_length(seg.pattern);
    seg.measure = seg.footprint.measure() * seg.pattern_measure;
    for (const auto& iv : seg.pattern) boxes.emplace_back(std::vector<Interval>{seg.footprint[0], seg.footprint[1], iv});
    manifest.segments.push_back(std::move(seg));
  }
  manifest.notes = {
      "corner C uses the pattern 1/2 <= x3 <= 9/16 on C itself (the source line reads 'A ∩ {...}', "
      "taken as a typo for 'C ∩ {...}')",
      "label placement Q bottom, P top, S left, R right, A,B,C,D counter-clockwise from the origin; "
      "certified by the checkerboard tiling check",
  };
  NearCube3D out{PolyBox::make(3, boxes), std::move(manifest)};
  out.manifest.total_measure = measure(out.set);
  return out;
}

bool ColumnTiling::adjacent_offsets_valid() const {
  const Rational quarter(1, 4);
  for (const auto& [ij, t] : offsets) {
    for (const auto& next : {std::pair{ij.first + 1, ij.second}, std::pair{ij.first, ij.second + 1}}) {
      const auto it = offsets.find(next);
      if (it != offsets.end() && abs(it->second - t) != quarter) return false;
    }
  }
  return true;
}

CheckerboardTiling build_checkerboard_tiling(const NearCube3DParams& /*params*/, int radius) {
  if (radius < 1) throw InvalidInput("checkerboard radius must be >= 1");
  const Rational quarter(1, 4);
  auto offset = [&](int i, int j) { return ((i + j) % 2 == 0) ? Rational(0) : quarter; };

  Lattice periods(Matrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 1}});
  ColumnTiling columns{radius, {}, periods};
  for (int i = -radius; i <= radius; ++i) {
    for (int j = -radius; j <= radius; ++j) columns.offsets[{i, j}] = offset(i, j);
  }
  std::vector<Vec> reps;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) reps.push_back({Rational(i), Rational(j), offset(i, j)});
  }
  return {std::move(columns), TranslationSystem(3, std::move(reps), periods)};
}

std::vector<LatticeConfig> enumerate_lattice_configs(const Rational& t) {
  const Rational z(0);
  const Rational two_t = Rational(2) * t;
  const std::array<std::array<std::array<Rational, 2>, 2>, 4> matrices = {{
      {{{z, t}, {t, two_t}}},
      {{{two_t, t}, {t, z}}},
      {{{z, t}, {-t, z}}},
      {{{z, -t}, {t, z}}},
  }};
  std::vector<LatticeConfig> out;
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    const auto& m = matrices[k];
    const Rational a = m[1][0] - m[0][0];  // step in i
    const Rational b = m[0][1] - m[0][0];  // step in j
    if (m[1][1] - m[0][0] != a + b) throw std::logic_error("offset matrix is not affine in (i, j)");
    Lattice lattice(Matrix{{1, 0, a}, {0, 1, b}, {0, 0, 1}});
    out.push_back({static_cast<int>(k) + 1, m, a, b, TranslationSystem::lattice_only(lattice)});
  }
  return out;
}

PolyBox lift_to_dim(const PolyBox& set, std::size_t n) {
  if (set.dim() != 3) throw InvalidInput("lift_to_dim expects a 3D set");
  if (n < 3) throw InvalidInput("lift_to_dim needs n >= 3");
  if (n == 3) return set;
  return product(set, PolyBox::from_box(Box::cube(n - 3, 0, 1)));
}

TranslationSystem lift_system(const TranslationSystem& system, std::size_t n) {
  if (n < system.dim()) throw InvalidInput("lift_system cannot lower the dimension");
  if (!system.lattice()) throw InvalidInput("lift_system needs a periodic system");
  const std::size_t extra = n - system.dim();
  std::vector<Vec> reps;
  for (auto r : system.reps()) {
    r.resize(n, Rational(0));
    reps.push_back(std::move(r));
  }
  Matrix gens;
  for (auto g : system.lattice()->generators()) {
    g.resize(n, Rational(0));
    gens.push_back(std::move(g));
  }
  for (std::size_t k = 0; k < extra; ++k) {
    Vec e = zero_vec(n);
    e[system.dim() + k] = Rational(1);
    gens.push_back(std::move(e));
  }
  return TranslationSystem(n, std::move(reps), Lattice(std::move(gens)));
}

NearSquareInstance build_near_square_2d(const Rational& eps, std::uint64_t seed) {
  if (!(eps.sign() > 0 && eps <= Rational(1, 33))) throw InvalidInput("near-square instances need 0 < eps <= 1/33");
  const Rational zero(0);
  const Rational one(1);

  auto finish = [&](PolyBox set, Vec u, Vec v) {
    Lattice lattice(Matrix{u, v});
    std::vector<Vec> patch;
    for (int k = -2; k <= 2; ++k) {
      for (int m = -2; m <= 2; ++m) patch.push_back(lattice.point({k, m}));
    }
    return NearSquareInstance{std::move(set), eps, std::move(u), std::move(v), std::move(lattice), std::move(patch)};
  };

  if (seed == 0) return finish(PolyBox::from_box(Box::cube(2, 0, 1)), {one, zero}, {zero, one});

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> quarter(1, 4);
  const Rational gx = eps * Rational(quarter(rng), 4);
  const Rational gy = eps * Rational(quarter(rng), 4);
  const Rational sigma = eps * Rational(quarter(rng) - 1, 4);
  const Vec u{one + gx, zero};
  const Vec v{sigma, one + gy};

  // side strips: R over Y on the right, L over [0,1] \ Y on the left
  const auto ys = random_runs(rng, zero, one, 32, 5);
  std::vector<Box> right;
  std::vector<Box> left;
  for (const auto& iv : ys) right.emplace_back(std::vector<Interval>{{one, one + gx}, iv});
  for (const auto& iv : complement_runs(ys, zero, one)) left.emplace_back(std::vector<Interval>{{-gx, zero}, iv});

  // horizontal strip cell [0,1+gx] x [1,1+gy], split into T (kept on top)
  // and the rest, which the tile above covers with its bottom strip
  const auto xs = random_runs(rng, zero, one + gx, 16, 4);
  const auto xs_rest = complement_runs(xs, zero, one + gx);
  const Rational mid_y = one + gy * Rational(quarter(rng), 4);
  std::vector<Box> top;
  std::vector<Box> bottom;
  for (const auto& iv : xs) top.emplace_back(std::vector<Interval>{iv, {one, mid_y}});
  for (const auto& iv : xs_rest) bottom.emplace_back(std::vector<Interval>{iv, {one, mid_y}});
  if (mid_y < one + gy) {
    for (const auto& iv : xs_rest) top.emplace_back(std::vector<Interval>{iv, {mid_y, one + gy}});
    for (const auto& iv : xs) bottom.emplace_back(std::vector<Interval>{iv, {mid_y, one + gy}});
  }
  const Vec minus_v{-v[0], -v[1]};
  for (auto& b : bottom) b = b.translated(minus_v);

  const PolyBox r = PolyBox::make(2, right);
  const PolyBox l = PolyBox::make(2, left);
  const PolyBox t = PolyBox::make(2, top);
  const PolyBox bt = PolyBox::make(2, bottom);

  const PolyBox side_gap = rect(one, one + gx, zero, one);
  const PolyBox top_cell = rect(zero, one + gx, one, one + gy);
  const PolyBox l_shifted = translate(l, u);
  const PolyBox b_shifted = translate(bt, v);
  if (!measure(intersect(r, l_shifted)).is_zero() || !equal_ae(unite(r, l_shifted), side_gap) ||
      !measure(intersect(t, b_shifted)).is_zero() || !equal_ae(unite(t, b_shifted), top_cell)) {
    throw std::logic_error("near-square boundary strips are not complementary");
  }

  std::vector<PolyBox> parts{rect(zero, one, zero, one), r, l, t, bt};
  PolyBox set = unite(parts);
  if (!is_near_square(set, eps)) throw std::logic_error("near-square instance escapes [-eps, 1+eps]^2");
  return finish(std::move(set), u, v);
}

ComplementConfig build_complement_config(const Rational& eps, std::uint64_t seed) {
  if (!(eps.sign() > 0 && eps < Rational(1, 2))) throw InvalidInput("complement configurations need 0 < eps < 1/2");
  std::mt19937_64 rng(seed);
  const Rational zero(0);
  const Rational one(1);

  const int n = std::uniform_int_distribution<int>(8, 12)(rng);
  const Rational period(1, n);
  const Rational shift = period * Rational(std::uniform_int_distribution<int>(1, 4)(rng), 4);
  const Rational step = eps * Rational(std::uniform_int_distribution<int>(1, 4)(rng), 8 * n);

  // periodic part h on [0, p): a few runs with heights in [0, eps/2]
  std::vector<int> cuts{0, 8};
  const int pieces = std::uniform_int_distribution<int>(1, 2)(rng);
  for (int i = 0; i < pieces; ++i) cuts.push_back(std::uniform_int_distribution<int>(1, 7)(rng));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<std::pair<Interval, Rational>> h;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational height = eps * Rational(std::uniform_int_distribution<int>(0, 4)(rng), 8);
    h.push_back({{period * Rational(cuts[i], 8), period * Rational(cuts[i + 1], 8)}, height});
  }

  // staircase g on [0,1]: g(x) = h(x mod p) + τ floor(x/p)
  std::vector<std::pair<Interval, Rational>> g;
  for (int m = 0; m < n; ++m) {
    const Rational base = period * Rational(m);
    for (const auto& [iv, height] : h) {
      g.push_back({{base + iv.lo, base + iv.hi}, height + step * Rational(m)});
    }
  }

  std::vector<Box> boxes{Box::cube(2, 0, 1)};
  for (const auto& [iv, height] : g) {
    if (height.sign() > 0) boxes.emplace_back(std::vector<Interval>{iv, {-height, zero}});
  }
  // upper boundary eps - g(x - c) over [c, 1]
  for (const auto& [iv, height] : g) {
    const Rational lo = iv.lo + shift;
    const Rational hi = min(iv.hi + shift, one);
    const Rational rise = eps - height;
    if (lo < hi && rise.sign() > 0) boxes.emplace_back(std::vector<Interval>{{lo, hi}, {one, one + rise}});
  }

  const int j_far = std::uniform_int_distribution<int>(2, 3)(rng);
  const int j_mid = std::uniform_int_distribution<int>(1, j_far - 1)(rng);
  ComplementConfig out{PolyBox::make(2, boxes), eps, zero, one, {}, {}};
  const std::array<int, 3> js{0, j_mid, j_far};
  for (std::size_t k = 0; k < 3; ++k) {
    const Rational c = shift + period * Rational(js[k]);
    out.widths[k] = one - c;
    out.expected_shifts[k] = {c, one + eps - step * Rational(js[k])};
  }
  return out;
}

CornerSqueeze corner_squeeze_check(const Rational& eps, const Vec& v) {
  if (!(eps.sign() > 0 && eps < Rational(1, 2))) throw InvalidInput("corner squeeze needs 0 < eps < 1/2");
  if (v.size() != 2) throw DimensionMismatch("corner squeeze shift must be planar");
  const Rational one(1);
  CornerSqueeze out;
  out.premise = true;
  for (std::size_t i = 0; i < 2; ++i) {
    if (max(eps, v[i]) > min(one - eps, one + v[i])) out.premise = false;
  }
  const PolyBox unit = PolyBox::from_box(Box::cube(2, 0, 1));
  out.overlap = measure(intersect(unit, translate(unit, v)));
  out.holds = !out.premise || out.overlap >= eps * eps;
  return out;
}

bool in_corner_column(const Vec& point, const Rational& eps) {
  if (point.size() < 2) throw DimensionMismatch("corner columns live in dimension >= 2");
  for (std::size_t i = 0; i < 2; ++i) {
    const Rational f = point[i].frac();
    if (!(f.sign() > 0 && f < eps)) return false;
  }
  return true;
}

bool Theorem3DReport::configs_falsified() const {
  return configs.size() == 4 &&
         std::all_of(configs.begin(), configs.end(), [](const LatticeConfigVerdict& c) { return c.falsified; });
}

Theorem3DReport verify_theorem_3d(const Rational& eps) {
  const NearCube3DParams params(eps);
  const NearCube3D e = build_E_3d(params);
  const auto board = build_checkerboard_tiling(params, 1);
  Theorem3DReport out{eps, measure(e.set), multiplicity_map(e.set, board.system, Box({{0, 2}, {0, 2}, {0, 1}})), {}};
  for (auto& config : enumerate_lattice_configs()) {
    auto report = multiplicity_map(e.set, config.system, config.system.lattice()->fundamental_window());
    const bool falsified = report.verdict != Verdict::tiling && report.witness &&
                           report.witness->count != 1 && in_corner_column(report.witness->box.midpoint(), eps);
    out.configs.push_back({std::move(config), std::move(report), falsified});
  }
  return out;
}

}  // namespace nearcube
