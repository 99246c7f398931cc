#include "linearr/latin.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace linearr {

bool is_latin(const std::vector<std::vector<int>>& rows) {
  const std::size_t q = rows.size();
  if (q == 0) return false;
  for (std::size_t r = 0; r < q; ++r) {
    if (rows[r].size() != q) return false;
    std::vector<bool> row_seen(q + 1, false);
    std::vector<bool> col_seen(q + 1, false);
    for (std::size_t c = 0; c < q; ++c) {
      const int a = rows[r][c];
      const int b = rows[c].size() == q ? rows[c][r] : 0;
      if (a < 1 || a > static_cast<int>(q) || row_seen[static_cast<std::size_t>(a)]) return false;
      if (b < 1 || b > static_cast<int>(q) || col_seen[static_cast<std::size_t>(b)]) return false;
      row_seen[static_cast<std::size_t>(a)] = true;
      col_seen[static_cast<std::size_t>(b)] = true;
    }
  }
  return true;
}

LatinSquare::LatinSquare(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  if (!is_latin(rows_)) throw std::invalid_argument("not a Latin square");
}

LatinSquare LatinSquare::transpose() const { return conjugate({1, 0, 2}); }

LatinSquare LatinSquare::permuted(const std::vector<int>& rp, const std::vector<int>& cp,
                                  const std::vector<int>& sp) const {
  const std::size_t q = rows_.size();
  std::vector<std::vector<int>> out(q, std::vector<int>(q));
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t c = 0; c < q; ++c)
      out[static_cast<std::size_t>(rp[r])][static_cast<std::size_t>(cp[c])] =
          sp[static_cast<std::size_t>(rows_[r][c] - 1)] + 1;
  return LatinSquare(std::move(out));
}

LatinSquare LatinSquare::conjugate(const std::array<int, 3>& roles) const {
  const std::size_t q = rows_.size();
  std::vector<std::vector<int>> out(q, std::vector<int>(q));
  for (std::size_t r = 0; r < q; ++r) {
    for (std::size_t c = 0; c < q; ++c) {
      const std::array<int, 3> t{static_cast<int>(r), static_cast<int>(c), rows_[r][c] - 1};
      out[static_cast<std::size_t>(t[static_cast<std::size_t>(roles[0])])]
         [static_cast<std::size_t>(t[static_cast<std::size_t>(roles[1])])] = t[static_cast<std::size_t>(roles[2])] + 1;
    }
  }
  return LatinSquare(std::move(out));
}

std::string LatinSquare::to_string() const {
  std::string out;
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ' ';
      out += std::to_string(row[c]);
    }
    out += '\n';
  }
  return out;
}

namespace {

// Row-major entries of the square with rows/columns permuted, symbols
// renamed in order of first appearance (the least renaming).
std::vector<int> relabelled(const std::vector<std::vector<int>>& s, const std::vector<int>& rp,
                            const std::vector<int>& cp) {
  const std::size_t q = s.size();
  std::vector<int> name(q + 1, 0);
  int next = 1;
  std::vector<int> flat;
  flat.reserve(q * q);
  for (std::size_t r = 0; r < q; ++r) {
    for (std::size_t c = 0; c < q; ++c) {
      int& n = name[static_cast<std::size_t>(s[static_cast<std::size_t>(rp[r])][static_cast<std::size_t>(cp[c])])];
      if (n == 0) n = next++;
      flat.push_back(n);
    }
  }
  return flat;
}

}  // namespace

MainClassCode main_class_code(const LatinSquare& s) {
  const int q = s.order();
  std::vector<int> best;
  constexpr std::array<std::array<int, 3>, 6> kRoles{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  std::vector<int> rp(static_cast<std::size_t>(q));
  std::vector<int> cp(static_cast<std::size_t>(q));
  for (const auto& roles : kRoles) {
    const LatinSquare conj = s.conjugate(roles);
    std::iota(rp.begin(), rp.end(), 0);
    do {
      std::iota(cp.begin(), cp.end(), 0);
      do {
        std::vector<int> cand = relabelled(conj.rows(), rp, cp);
        if (best.empty() || cand < best) best = std::move(cand);
      } while (std::next_permutation(cp.begin(), cp.end()));
    } while (std::next_permutation(rp.begin(), rp.end()));
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(q));
  for (int r = 0; r < q; ++r)
    rows[static_cast<std::size_t>(r)].assign(best.begin() + r * q, best.begin() + (r + 1) * q);
  return MainClassCode{LatinSquare(std::move(rows))};
}

std::size_t LatinInventory::square_count() const {
  std::size_t n = 0;
  for (const auto& [code, squares] : classes) n += squares.size();
  return n;
}

namespace {

void fill(std::vector<std::vector<int>>& grid, int cell, int q, std::vector<LatinSquare>& out) {
  if (cell == q * q) {
    out.emplace_back(grid);
    return;
  }
  const int r = cell / q;
  const int c = cell % q;
  for (int v = 1; v <= q; ++v) {
    bool ok = true;
    for (int k = 0; k < c && ok; ++k) ok = grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != v;
    for (int k = 0; k < r && ok; ++k) ok = grid[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] != v;
    if (!ok) continue;
    grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
    fill(grid, cell + 1, q, out);
  }
  grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
}

}  // namespace

LatinInventory enumerate_latin_squares(int q) {
  if (q < 1 || q > 4) throw std::invalid_argument("Latin square enumeration supports orders 1..4");
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(q), 0));
  std::vector<LatinSquare> all;
  fill(grid, 0, q, all);
  LatinInventory inv{q, {}};
  for (LatinSquare& s : all) inv.classes[main_class_code(s)].push_back(std::move(s));
  return inv;
}

LatinSquare cyclic_square(int q) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(q)));
  for (int r = 0; r < q; ++r)
    for (int c = 0; c < q; ++c) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = (r + c) % q + 1;
  return LatinSquare(std::move(rows));
}

LatinSquare klein_square() {
  std::vector<std::vector<int>> rows(4, std::vector<int>(4));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = (r ^ c) + 1;
  return LatinSquare(std::move(rows));
}

}  // namespace linearr
