#include <algorithm>
#include <set>

#include "linearr/lattice.hpp"

namespace linearr {

namespace {

// Entries for a pair whose flat is met for the first time.
constexpr int kFreshFlat = 1000;

using Signature = std::vector<int>;

// Multiplicities (>= 3) of the flats on a line, descending.
Signature line_signature(const Lattice& lat, int line) {
  Signature s;
  for (int f : lat.flats_on(line)) {
    const int m = lat.flats()[static_cast<std::size_t>(f)].multiplicity();
    if (m >= 3) s.push_back(m);
  }
  std::sort(s.rbegin(), s.rend());
  return s;
}

std::set<std::vector<int>> higher_flats(const Lattice& lat, const std::vector<int>& relabel) {
  std::set<std::vector<int>> out;
  for (const Flat& f : lat.flats()) {
    if (f.multiplicity() < 3) continue;
    std::vector<int> img;
    for (int l : f.lines) img.push_back(relabel[static_cast<std::size_t>(l)]);
    std::sort(img.begin(), img.end());
    out.insert(std::move(img));
  }
  return out;
}

// Branch-and-bound search for the lexicographically least code.
class Canonizer {
 public:
  explicit Canonizer(const Lattice& lat) : lat_(lat), d_(lat.line_count()) {
    std::vector<Signature> sigs;
    for (int i = 0; i < d_; ++i) sigs.push_back(line_signature(lat, i));
    std::vector<Signature> distinct = sigs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (const Signature& s : sigs)
      rank_.push_back(static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), s) - distinct.begin()));

    header_.push_back(d_);
    header_.push_back(static_cast<int>(distinct.size()));
    for (const Signature& s : distinct) {
      header_.push_back(static_cast<int>(s.size()));
      header_.insert(header_.end(), s.begin(), s.end());
    }

    // Twin classes: lines whose transposition preserves every higher flat.
    twin_.resize(static_cast<std::size_t>(d_));
    const auto base = higher_flats(lat, identity());
    for (int i = 0; i < d_; ++i) {
      twin_[static_cast<std::size_t>(i)] = i;
      for (int j = 0; j < i; ++j) {
        if (twin_[static_cast<std::size_t>(j)] != j || rank_[static_cast<std::size_t>(i)] != rank_[static_cast<std::size_t>(j)])
          continue;
        std::vector<int> swap = identity();
        std::swap(swap[static_cast<std::size_t>(i)], swap[static_cast<std::size_t>(j)]);
        if (higher_flats(lat, swap) == base) {
          twin_[static_cast<std::size_t>(i)] = j;
          break;
        }
      }
    }
    label_.assign(lat.flats().size(), 0);
    placed_.assign(static_cast<std::size_t>(d_), false);
  }

  void run() { search(); }

  IncidenceCode code() const {
    IncidenceCode c;
    c.lines = d_;
    c.code = header_;
    c.code.insert(c.code.end(), best_.begin(), best_.end());
    return c;
  }

  const std::vector<int>& ordering() const { return best_order_; }

 private:
  std::vector<int> identity() const {
    std::vector<int> v(static_cast<std::size_t>(d_));
    for (int i = 0; i < d_; ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
  }

  // Segment for placing `line` next; fresh flats get provisional labels
  // recorded in `fresh` so they can be committed or discarded.
  std::vector<int> segment(int line, std::vector<int>& fresh) const {
    std::vector<int> seg{rank_[static_cast<std::size_t>(line)]};
    for (int prev : order_) {
      const int f = lat_.flat_of(prev, line);
      const int m = lat_.flats()[static_cast<std::size_t>(f)].multiplicity();
      if (m == 2) {
        seg.push_back(0);
      } else if (label_[static_cast<std::size_t>(f)] > 0) {
        seg.push_back(label_[static_cast<std::size_t>(f)]);
      } else if (auto it = std::find(fresh.begin(), fresh.end(), f); it != fresh.end()) {
        seg.push_back(next_label_ + static_cast<int>(it - fresh.begin()));
      } else {
        fresh.push_back(f);
        seg.push_back(kFreshFlat + m);
      }
    }
    return seg;
  }

  void search() {
    const int depth = static_cast<int>(order_.size());
    if (depth == d_) {
      if (!have_best_ || prefix_ < best_) {
        best_ = prefix_;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }

    std::vector<int> best_seg;
    std::vector<int> candidates;
    std::vector<bool> tried_twin(static_cast<std::size_t>(d_), false);
    for (int c = 0; c < d_; ++c) {
      if (placed_[static_cast<std::size_t>(c)]) continue;
      const int root = twin_[static_cast<std::size_t>(c)];
      if (tried_twin[static_cast<std::size_t>(root)]) continue;
      tried_twin[static_cast<std::size_t>(root)] = true;
      std::vector<int> fresh;
      std::vector<int> seg = segment(c, fresh);
      if (candidates.empty() || seg < best_seg) {
        best_seg = std::move(seg);
        candidates.assign(1, c);
      } else if (seg == best_seg) {
        candidates.push_back(c);
      }
    }

    const std::size_t offset = prefix_.size();
    if (have_best_ && !strictly_below_) {
      const auto first = best_.begin() + static_cast<std::ptrdiff_t>(offset);
      const auto last = first + static_cast<std::ptrdiff_t>(best_seg.size());
      if (std::lexicographical_compare(first, last, best_seg.begin(), best_seg.end())) return;
    }

    for (int c : candidates) {
      const bool saved_below = strictly_below_;
      if (have_best_ && !strictly_below_) {
        const auto first = best_.begin() + static_cast<std::ptrdiff_t>(offset);
        const auto last = first + static_cast<std::ptrdiff_t>(best_seg.size());
        if (std::lexicographical_compare(first, last, best_seg.begin(), best_seg.end())) continue;
        if (std::lexicographical_compare(best_seg.begin(), best_seg.end(), first, last)) strictly_below_ = true;
      }
      std::vector<int> fresh;
      segment(c, fresh);
      for (std::size_t i = 0; i < fresh.size(); ++i)
        label_[static_cast<std::size_t>(fresh[i])] = next_label_ + static_cast<int>(i);
      next_label_ += static_cast<int>(fresh.size());
      prefix_.insert(prefix_.end(), best_seg.begin(), best_seg.end());
      order_.push_back(c);
      placed_[static_cast<std::size_t>(c)] = true;

      search();

      placed_[static_cast<std::size_t>(c)] = false;
      order_.pop_back();
      prefix_.resize(offset);
      next_label_ -= static_cast<int>(fresh.size());
      for (int f : fresh) label_[static_cast<std::size_t>(f)] = 0;
      strictly_below_ = saved_below;
    }
  }

  const Lattice& lat_;
  int d_;
  std::vector<int> rank_;
  std::vector<int> header_;
  std::vector<int> twin_;

  std::vector<int> label_;
  int next_label_ = 1;
  std::vector<bool> placed_;
  std::vector<int> order_;
  std::vector<int> prefix_;
  bool strictly_below_ = false;

  bool have_best_ = false;
  std::vector<int> best_;
  std::vector<int> best_order_;
};

}  // namespace

IncidenceCode incidence_code(const Arrangement& a) {
  const Lattice lat(a);
  Canonizer c(lat);
  c.run();
  return c.code();
}

std::vector<int> canonical_ordering(const Lattice& lattice) {
  Canonizer c(lattice);
  c.run();
  return c.ordering();
}

bool is_lattice_isomorphism(const Lattice& a, const Lattice& b, const std::vector<int>& map) {
  if (a.line_count() != b.line_count() || static_cast<int>(map.size()) != a.line_count()) return false;
  std::vector<bool> hit(map.size(), false);
  for (int v : map) {
    if (v < 0 || v >= b.line_count() || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  std::vector<int> identity(map.size());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
  return higher_flats(a, map) == higher_flats(b, identity);
}

std::optional<std::vector<int>> lattice_isomorphism(const Arrangement& a, const Arrangement& b) {
  if (a.size() != b.size()) return std::nullopt;
  const Lattice la(a);
  const Lattice lb(b);
  if (la.census() != lb.census()) return std::nullopt;
  Canonizer ca(la);
  Canonizer cb(lb);
  ca.run();
  cb.run();
  if (ca.code() != cb.code()) return std::nullopt;
  std::vector<int> map(static_cast<std::size_t>(a.size()));
  for (std::size_t t = 0; t < map.size(); ++t)
    map[static_cast<std::size_t>(ca.ordering()[t])] = cb.ordering()[t];
  if (!is_lattice_isomorphism(la, lb, map)) return std::nullopt;
  return map;
}

}  // namespace linearr
