#include "progsimp/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace progsimp {

ShortcutIntervalSet::ShortcutIntervalSet(std::size_t n, double eps,
                                         std::vector<std::vector<Interval>> rows)
    : n_(n), eps_(eps) {
  if (rows.size() != n) throw InputError("interval set: expected one row per vertex");
  row_offsets_.reserve(n + 1);
  edge_offsets_.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t edges = 0;
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      const Interval iv = rows[i][k];
      if (iv.first <= i || iv.first > iv.last || iv.last >= n) {
        throw InputError("interval set: row " + std::to_string(i + 1) + " has an out-of-range interval");
      }
      if (k > 0 && rows[i][k - 1].last + 1 >= iv.first) {
        throw InputError("interval set: row " + std::to_string(i + 1) +
                         " intervals are not sorted, disjoint and maximal");
      }
      edges += iv.length();
      intervals_.push_back(iv);
    }
    row_offsets_.push_back(intervals_.size());
    edge_offsets_.push_back(edge_offsets_.back() + edges);
  }
}

std::optional<std::size_t> ShortcutIntervalSet::edge_index(std::size_t i, std::size_t j) const {
  if (i >= n_ || j <= i || j >= n_) return std::nullopt;
  std::size_t offset = edge_offsets_[i];
  for (const Interval& iv : intervals(i)) {
    if (j < iv.first) return std::nullopt;
    if (j <= iv.last) return offset + (j - iv.first);
    offset += iv.length();
  }
  return std::nullopt;
}

bool ShortcutIntervalSet::has_adjacent_edges() const {
  for (std::size_t i = 0; i + 1 < n_; ++i) {
    const auto row = intervals(i);
    if (row.empty() || row.front().first != i + 1) return false;
  }
  return true;
}

namespace {

std::vector<std::size_t> identity_members(std::size_t n) {
  std::vector<std::size_t> all(n);
  for (std::size_t k = 0; k < n; ++k) all[k] = k;
  return all;
}

void check_members(std::span<const std::size_t> members, std::size_t n) {
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (members[k] >= n || (k > 0 && members[k - 1] >= members[k])) {
      throw InputError("member list must be strictly increasing vertex indices");
    }
  }
}

// Intersection of angular wedges of admissible ray directions from an apex.
// A point q farther than eps from the apex admits the directions within
// asin(eps / |q - apex|) of its own bearing; nearer points admit all.
// Angles are inexact, so verdicts within kSlack of a boundary are Maybe and
// get settled by an exact distance check.
enum class Verdict { No, Maybe, Yes };

class Wedge {
 public:
  static constexpr double kSlack = 1e-6;

  Wedge(Point apex, double eps) : apex_(apex), eps_(eps) {}

  void add(Point q) {
    if (empty_) return;
    const Point d = q - apex_;
    const double len = std::hypot(d.x, d.y);
    if (std::abs(len - eps_) <= 1e-9 * std::max(eps_, len)) loose_ = true;
    if (len <= eps_) return;
    const double bearing = std::atan2(d.y, d.x);
    const double half = std::asin(std::min(1.0, eps_ / len));
    if (full_) {
      full_ = false;
      reference_ = bearing;
      lo_ = -half;
      hi_ = half;
      return;
    }
    const double rel = relative(bearing);
    lo_ = std::max(lo_, rel - half);
    hi_ = std::min(hi_, rel + half);
    if (lo_ > hi_ + 2 * kSlack) empty_ = true;
  }

  bool empty() const { return empty_; }

  /// Is the ray from the apex through q admissible?
  Verdict admits(Point q) const {
    if (empty_) return Verdict::No;
    const Point d = q - apex_;
    if (d.x == 0.0 && d.y == 0.0) return Verdict::Maybe;
    if (full_) return loose_ ? Verdict::Maybe : Verdict::Yes;
    const double rel = relative(std::atan2(d.y, d.x));
    if (rel < lo_ - kSlack || rel > hi_ + kSlack) return Verdict::No;
    if (!loose_ && lo_ + kSlack <= rel && rel <= hi_ - kSlack) return Verdict::Yes;
    return Verdict::Maybe;
  }

 private:
  double relative(double bearing) const {
    double rel = bearing - reference_;
    if (rel > std::numbers::pi) rel -= 2 * std::numbers::pi;
    if (rel <= -std::numbers::pi) rel += 2 * std::numbers::pi;
    return rel;
  }

  Point apex_;
  double eps_;
  bool full_ = true;
  bool empty_ = false;
  bool loose_ = false;
  double reference_ = 0.0;
  double lo_ = 0.0;
  double hi_ = 0.0;
};

// Interval rows for the pairs a sweep accepts for sure and for those it may
// accept.
struct SweepRows {
  std::vector<std::vector<Interval>> sure;
  std::vector<std::vector<Interval>> possible;
  explicit SweepRows(std::size_t r) : sure(r), possible(r) {}
};

}  // namespace

ShortcutIntervalSet build_graph_from_errors(const ErrorMatrix& em, double eps,
                                            std::span<const std::size_t> members) {
  if (!(eps >= 0.0)) throw InputError("epsilon must be >= 0");
  const std::size_t n = em.size();
  std::vector<std::size_t> all;
  if (members.empty()) {
    all = identity_members(n);
    members = all;
  }
  check_members(members, n);
  const std::size_t r = members.size();
  std::vector<std::vector<Interval>> rows(r);
  for (std::size_t a = 0; a < r; ++a) {
    RowBuilder row;
    const auto errors = em.row(members[a]);
    for (std::size_t b = a + 1; b < r; ++b) {
      if (errors[members[b] - members[a] - 1] <= eps) row.add(b);
    }
    rows[a] = row.take();
  }
  return ShortcutIntervalSet(r, eps, std::move(rows));
}

ShortcutIntervalSet build_graph_chan_chin(std::span<const Point> pts, double eps,
                                          std::span<const std::size_t> members) {
  if (!(eps >= 0.0)) throw InputError("epsilon must be >= 0");
  const std::size_t n = pts.size();
  std::vector<std::size_t> all;
  if (members.empty()) {
    all = identity_members(n);
    members = all;
  }
  check_members(members, n);
  const std::size_t r = members.size();

  // Forward sweep: rays from p_i through p_j, emitted row by row.
  SweepRows forward(r);
  for (std::size_t a = 0; a + 1 < r; ++a) {
    const std::size_t u = members[a];
    Wedge wedge(pts[u], eps);
    RowBuilder sure;
    RowBuilder possible;
    std::size_t b = a + 1;
    for (std::size_t k = u + 1; k < n && b < r && !wedge.empty(); ++k) {
      wedge.add(pts[k]);
      if (k == members[b]) {
        const Verdict v = wedge.admits(pts[k]);
        if (v == Verdict::Yes) sure.add(b);
        if (v != Verdict::No) possible.add(b);
        ++b;
      }
    }
    forward.sure[a] = sure.take();
    forward.possible[a] = possible.take();
  }

  // Backward sweep: rays from p_j through p_i, emitted column by column
  // (ascending ranges of a per column b).
  auto prepend = [](std::vector<Interval>& runs, std::size_t a) {
    if (!runs.empty() && runs.back().first == a + 1) {
      runs.back().first = a;
    } else {
      runs.push_back({a, a});
    }
  };
  SweepRows columns(r);
  for (std::size_t b = 1; b < r; ++b) {
    const std::size_t v = members[b];
    Wedge wedge(pts[v], eps);
    std::size_t a = b;  // next member below, as a count
    for (std::size_t k = v; k-- > 0 && a > 0 && !wedge.empty();) {
      wedge.add(pts[k]);
      if (k == members[a - 1]) {
        --a;
        const Verdict verdict = wedge.admits(pts[k]);
        if (verdict == Verdict::Yes) prepend(columns.sure[b], a);
        if (verdict != Verdict::No) prepend(columns.possible[b], a);
      }
    }
    std::reverse(columns.sure[b].begin(), columns.sure[b].end());
    std::reverse(columns.possible[b].begin(), columns.possible[b].end());
  }
  // Transpose the column runs into rows.
  auto transpose = [r](const std::vector<std::vector<Interval>>& cols) {
    std::vector<std::vector<Interval>> rows(r);
    std::vector<std::size_t> cursor(r, 0);
    for (std::size_t a = 0; a + 1 < r; ++a) {
      RowBuilder row;
      for (std::size_t b = a + 1; b < r; ++b) {
        const auto& col = cols[b];
        std::size_t& c = cursor[b];
        while (c < col.size() && col[c].last < a) ++c;
        if (c < col.size() && col[c].first <= a) row.add(b);
      }
      rows[a] = row.take();
    }
    return rows;
  };

  const auto sure = intersect_interval_sets(ShortcutIntervalSet(r, eps, std::move(forward.sure)),
                                            ShortcutIntervalSet(r, eps, transpose(columns.sure)));
  const auto possible =
      intersect_interval_sets(ShortcutIntervalSet(r, eps, std::move(forward.possible)),
                              ShortcutIntervalSet(r, eps, transpose(columns.possible)));
  // Settle near-boundary pairs with the exact vertex distances.
  std::vector<std::vector<Interval>> rows(r);
  for (std::size_t a = 0; a + 1 < r; ++a) {
    RowBuilder row;
    for (const Interval& iv : possible.intervals(a)) {
      for (std::size_t b = iv.first; b <= iv.last; ++b) {
        bool ok = sure.contains(a, b);
        if (!ok) {
          const std::size_t u = members[a];
          const std::size_t v = members[b];
          double worst = 0.0;
          for (std::size_t k = u + 1; k < v; ++k) {
            worst = std::max(worst, detail::segment_distance(pts[k], pts[u], pts[v]));
          }
          ok = worst <= eps;
        }
        if (ok) row.add(b);
      }
    }
    rows[a] = row.take();
  }
  return ShortcutIntervalSet(r, eps, std::move(rows));
}

ShortcutIntervalSet intersect_interval_sets(const ShortcutIntervalSet& a,
                                            const ShortcutIntervalSet& b) {
  if (a.size() != b.size()) throw InputError("intersect_interval_sets: vertex counts differ");
  const std::size_t n = a.size();
  std::vector<std::vector<Interval>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ra = a.intervals(i);
    const auto rb = b.intervals(i);
    RowBuilder row;
    std::size_t x = 0;
    std::size_t y = 0;
    while (x < ra.size() && y < rb.size()) {
      const std::size_t lo = std::max(ra[x].first, rb[y].first);
      const std::size_t hi = std::min(ra[x].last, rb[y].last);
      if (lo <= hi) row.add(Interval{lo, hi});
      if (ra[x].last < rb[y].last) {
        ++x;
      } else {
        ++y;
      }
    }
    rows[i] = row.take();
  }
  return ShortcutIntervalSet(n, std::min(a.epsilon(), b.epsilon()), std::move(rows));
}

ExplicitShortcutGraph to_explicit(const ShortcutIntervalSet& s) {
  ExplicitShortcutGraph g;
  g.n = s.size();
  g.eps = s.epsilon();
  g.successors.resize(g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    const auto row = s.intervals(i);
    if (row.empty() && i + 1 < g.n) {
      throw InputError("to_explicit: vertex " + std::to_string(i + 1) + " has no shortcuts");
    }
    for (const Interval& iv : row) {
      for (std::size_t j = iv.first; j <= iv.last; ++j) g.successors[i].push_back(j);
    }
  }
  return g;
}

ShortcutIntervalSet compress(const ExplicitShortcutGraph& g) {
  std::vector<std::vector<Interval>> rows(g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    auto succ = g.successors[i];
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    RowBuilder row;
    for (std::size_t j : succ) row.add(j);
    rows[i] = row.take();
  }
  return ShortcutIntervalSet(g.n, g.eps, std::move(rows));
}

IntervalStats stats(const ShortcutIntervalSet& s) {
  IntervalStats out;
  out.shortcut_count = s.shortcut_count();
  out.interval_count = s.interval_count();
  const double pairs = static_cast<double>(s.size()) * static_cast<double>(s.size() - 1) / 2.0;
  out.density = s.size() < 2 ? 0.0 : static_cast<double>(out.shortcut_count) / pairs;
  return out;
}

}  // namespace progsimp
