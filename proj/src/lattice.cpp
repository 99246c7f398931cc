#include "linearr/lattice.hpp"

#include <algorithm>

namespace linearr {

bool Flat::contains(int line) const { return std::binary_search(lines.begin(), lines.end(), line); }

int Census::t(int multiplicity) const {
  auto it = counts.find(multiplicity);
  return it == counts.end() ? 0 : it->second;
}

int Census::max_multiplicity() const { return counts.empty() ? 0 : counts.rbegin()->first; }

long Census::pair_count() const {
  long total = 0;
  for (auto [m, n] : counts) total += static_cast<long>(n) * m * (m - 1) / 2;
  return total;
}

std::string Census::to_string() const {
  std::string out;
  for (int m = std::max(max_multiplicity(), 3); m >= 2; --m) {
    if (!out.empty()) out += ' ';
    out += "t" + std::to_string(m) + "=" + std::to_string(t(m));
  }
  return out;
}

Lattice::Lattice(const Arrangement& a) : d_(a.size()), pair_(static_cast<std::size_t>(d_ * d_), -1) {
  // Each unassigned pair spawns a flat collecting every line through its point.
  std::vector<Flat> raw;
  for (int i = 0; i < d_; ++i) {
    for (int j = i + 1; j < d_; ++j) {
      if (pair_[static_cast<std::size_t>(i * d_ + j)] >= 0) continue;
      Point p = intersect(a.line(i), a.line(j));
      std::vector<int> through{i, j};
      for (int k = j + 1; k < d_; ++k)
        if (incident(p, a.line(k))) through.push_back(k);
      const int id = static_cast<int>(raw.size());
      for (int u : through)
        for (int v : through)
          if (u != v) pair_[static_cast<std::size_t>(u * d_ + v)] = id;
      raw.push_back(Flat{std::move(p), std::move(through)});
    }
  }
  // Sort canonically by line lists and remap pair table.
  std::vector<int> order(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return raw[static_cast<std::size_t>(x)].lines < raw[static_cast<std::size_t>(y)].lines;
  });
  std::vector<int> rank(raw.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[static_cast<std::size_t>(order[r])] = static_cast<int>(r);
  flats_.reserve(raw.size());
  for (int idx : order) flats_.push_back(std::move(raw[static_cast<std::size_t>(idx)]));
  for (int& f : pair_)
    if (f >= 0) f = rank[static_cast<std::size_t>(f)];

  on_line_.assign(static_cast<std::size_t>(d_), {});
  for (int f = 0; f < static_cast<int>(flats_.size()); ++f)
    for (int l : flats_[static_cast<std::size_t>(f)].lines) on_line_[static_cast<std::size_t>(l)].push_back(f);
}

Census Lattice::census() const {
  Census c;
  for (const Flat& f : flats_) ++c.counts[f.multiplicity()];
  return c;
}

int Lattice::max_multiplicity() const {
  int m = 0;
  for (const Flat& f : flats_) m = std::max(m, f.multiplicity());
  return m;
}

std::vector<Flat> compute_flats(const Arrangement& a) { return Lattice(a).flats(); }

Census census(const Arrangement& a) { return Lattice(a).census(); }

bool is_essential(const Arrangement& a) {
  if (a.size() < 3) return false;
  const Lattice lat(a);
  return lat.max_multiplicity() < a.size();
}

}  // namespace linearr
