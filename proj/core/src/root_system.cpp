#include "bsdh/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace bsdh {
namespace {

void check_same_rank(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw DomainError(std::string(what) + ": mixed coordinate lengths " +
                      std::to_string(a) + " and " + std::to_string(b));
}

std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

std::vector<int> sub(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

// Fraction-free (Bareiss) determinant; fine for the tiny matrices here.
long long det_ll(std::vector<std::vector<long long>> m) {
  const std::size_t n = m.size();
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return n == 0 ? 1 : sign * m[n - 1][n - 1];
}

}  // namespace

Weight operator+(const Weight& a, const Weight& b) {
  check_same_rank(a.coords.size(), b.coords.size(), "Weight +");
  return Weight{add(a.coords, b.coords)};
}
Weight operator-(const Weight& a, const Weight& b) {
  check_same_rank(a.coords.size(), b.coords.size(), "Weight -");
  return Weight{sub(a.coords, b.coords)};
}
RootVector operator+(const RootVector& a, const RootVector& b) {
  check_same_rank(a.coords.size(), b.coords.size(), "RootVector +");
  return RootVector{add(a.coords, b.coords)};
}
RootVector operator-(const RootVector& a, const RootVector& b) {
  check_same_rank(a.coords.size(), b.coords.size(), "RootVector -");
  return RootVector{sub(a.coords, b.coords)};
}
RootVector operator-(const RootVector& a) {
  RootVector out = a;
  for (int& x : out.coords) x = -x;
  return out;
}

DynkinType DynkinType::of(Family family, int rank) {
  int lo = 0, hi = 0;
  switch (family) {
    case Family::A: lo = 1; hi = 10; break;
    case Family::B: lo = 2; hi = 10; break;
    case Family::C: lo = 3; hi = 10; break;
    case Family::D: lo = 4; hi = 10; break;
    case Family::E: lo = 6; hi = 8; break;
    case Family::F: lo = 4; hi = 4; break;
    case Family::G: lo = 2; hi = 2; break;
    default:
      throw DomainError("unknown family letter");
  }
  if (rank < lo || rank > hi)
    throw DomainError("type " + std::string(1, static_cast<char>(family)) +
                      " requires rank between " + std::to_string(lo) + " and " +
                      std::to_string(hi) + ", got " + std::to_string(rank));
  return DynkinType{family, rank};
}

DynkinType DynkinType::parse(std::string_view text) {
  if (text.size() < 2)
    throw std::invalid_argument("cannot parse Dynkin type from '" + std::string(text) +
                                "'; expected a family letter followed by a rank, e.g. A3");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (f < 'A' || f > 'G')
    throw std::invalid_argument("unknown family letter '" + std::string(1, text[0]) +
                                "'; expected one of A..G");
  int rank = 0;
  for (std::size_t k = 1; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw std::invalid_argument("bad rank in Dynkin type '" + std::string(text) + "'");
    rank = rank * 10 + (text[k] - '0');
  }
  return of(static_cast<Family>(f), rank);
}

std::string DynkinType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

RootSystem::RootSystem(DynkinType type)
    : type_(DynkinType::of(type.family, type.rank)), n_(type.rank) {
  build_cartan();
  close_roots();
  solve_setup();

  // Relative squared lengths: along an edge, (a_j,a_j)/(a_i,a_i) equals the
  // ratio of the two Cartan entries.  Seed 6 keeps everything integral.
  std::vector<long long> len(n_, 0);
  len[0] = 6;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n_; ++j) {
      if (j == i || cartan_[i][j] == 0 || len[j] != 0) continue;
      len[j] = len[i] * cartan_[i][j] / cartan_[j][i];
      stack.push_back(j);
    }
  }
  const long long shortest = *std::min_element(len.begin(), len.end());
  for (int i = 0; i < n_; ++i)
    if (len[i] == shortest) short_simples_.push_back(i + 1);
}

void RootSystem::build_cartan() {
  // h[a][b] = <alpha_{a+1}, alpha_{b+1}>; cartan_ stores the transpose.
  std::vector<std::vector<int>> h(n_, std::vector<int>(n_, 0));
  for (int a = 0; a < n_; ++a) h[a][a] = 2;
  auto edge = [&](int a, int b, int ab = -1, int ba = -1) {
    h[a - 1][b - 1] = ab;
    h[b - 1][a - 1] = ba;
  };
  switch (type_.family) {
    case Family::A:
      for (int a = 1; a < n_; ++a) edge(a, a + 1);
      break;
    case Family::B:
      for (int a = 1; a + 2 <= n_; ++a) edge(a, a + 1);
      edge(n_ - 1, n_, -2, -1);  // alpha_n short
      break;
    case Family::C:
      for (int a = 1; a + 2 <= n_; ++a) edge(a, a + 1);
      edge(n_ - 1, n_, -1, -2);  // alpha_n long
      break;
    case Family::D:
      for (int a = 1; a + 1 <= n_ - 1; ++a) edge(a, a + 1);
      edge(n_ - 2, n_);
      break;
    case Family::E:
      edge(1, 3);
      edge(3, 4);
      edge(4, 5);
      edge(5, 6);
      edge(2, 4);
      if (n_ >= 7) edge(6, 7);
      if (n_ == 8) edge(7, 8);
      break;
    case Family::F:
      edge(1, 2);
      edge(2, 3, -2, -1);  // alpha_3 short
      edge(3, 4);
      break;
    case Family::G:
      edge(1, 2, -1, -3);  // alpha_1 short
      break;
  }
  cartan_.assign(n_, std::vector<int>(n_, 0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) cartan_[i][j] = h[j][i];
}

void RootSystem::close_roots() {
  // Orbit closure from the simple roots; every positive root is reached by
  // simple reflections that keep all coordinates nonnegative.  Coroot
  // coordinates ride along under the contragredient reflection.
  std::map<std::vector<int>, std::vector<int>> found;
  std::vector<std::vector<int>> work;
  for (int i = 0; i < n_; ++i) {
    std::vector<int> e(n_, 0);
    e[i] = 1;
    found.emplace(e, e);
    work.push_back(e);
  }
  while (!work.empty()) {
    std::vector<int> v = work.back();
    work.pop_back();
    const std::vector<int> c = found.at(v);
    for (int i = 1; i <= n_; ++i) {
      RootVector rv{v};
      std::vector<int> v2 = reflect(i, rv).coords;
      if (std::any_of(v2.begin(), v2.end(), [](int x) { return x < 0; }))
        continue;
      if (found.count(v2)) continue;
      found.emplace(v2, reflect_coroot(i, c));
      work.push_back(v2);
    }
  }
  std::vector<std::pair<std::vector<int>, std::vector<int>>> items(found.begin(),
                                                                   found.end());
  auto height = [](const std::vector<int>& v) {
    return std::accumulate(v.begin(), v.end(), 0);
  };
  std::sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
    const int ha = height(a.first), hb = height(b.first);
    if (ha != hb) return ha < hb;
    return a.first > b.first;  // alpha_1 before alpha_2 within a height
  });
  for (std::size_t k = 0; k < items.size(); ++k) {
    roots_.push_back(RootVector{items[k].first});
    coroots_.push_back(items[k].second);
    root_index_.emplace(items[k].first, static_cast<int>(k));
  }
}

void RootSystem::solve_setup() {
  // to_weight is multiplication by cartan_; invert it exactly through the
  // adjugate so root_coordinates can detect non-root-lattice weights.
  std::vector<std::vector<long long>> m(n_, std::vector<long long>(n_, 0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m[i][j] = cartan_[i][j];
  cartan_det_ = det_ll(m);
  adjugate_.assign(n_, std::vector<long long>(n_, 0));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      std::vector<std::vector<long long>> minor;
      for (int a = 0; a < n_; ++a) {
        if (a == i) continue;
        std::vector<long long> row;
        for (int b = 0; b < n_; ++b)
          if (b != j) row.push_back(m[a][b]);
        minor.push_back(std::move(row));
      }
      const long long cof = ((i + j) % 2 ? -1 : 1) * det_ll(std::move(minor));
      adjugate_[j][i] = cof;
    }
  }
}

int RootSystem::cartan(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    throw DomainError("cartan(" + std::to_string(i) + "," + std::to_string(j) +
                      "): index out of range 1.." + std::to_string(n_));
  return cartan_[i - 1][j - 1];
}

const RootVector& RootSystem::positive_root(int k) const {
  if (k < 0 || k >= positive_root_count())
    throw DomainError("positive root index " + std::to_string(k) +
                      " out of range 0.." + std::to_string(positive_root_count() - 1));
  return roots_[k];
}

std::optional<int> RootSystem::positive_root_index(const RootVector& beta) const {
  auto it = root_index_.find(beta.coords);
  if (it == root_index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<int>& RootSystem::coroot(int k) const {
  positive_root(k);  // range check
  return coroots_[k];
}

int RootSystem::pairing(const Weight& lambda, int k) const {
  check_same_rank(lambda.coords.size(), static_cast<std::size_t>(n_), "pairing");
  const std::vector<int>& c = coroot(k);
  int out = 0;
  for (int t = 0; t < n_; ++t) out += lambda.coords[t] * c[t];
  return out;
}

int RootSystem::pair_with_simple(const RootVector& v, int i) const {
  check_same_rank(v.coords.size(), static_cast<std::size_t>(n_), "pair_with_simple");
  cartan(i, i);  // range check
  int out = 0;
  for (int j = 0; j < n_; ++j) out += cartan_[i - 1][j] * v.coords[j];
  return out;
}

Weight RootSystem::rho() const { return Weight{std::vector<int>(n_, 1)}; }

Weight RootSystem::fundamental_weight(int i) const {
  cartan(i, i);
  std::vector<int> v(n_, 0);
  v[i - 1] = 1;
  return Weight{v};
}

RootVector RootSystem::simple_root(int i) const {
  cartan(i, i);
  std::vector<int> v(n_, 0);
  v[i - 1] = 1;
  return RootVector{v};
}

Weight RootSystem::to_weight(const RootVector& v) const {
  check_same_rank(v.coords.size(), static_cast<std::size_t>(n_), "to_weight");
  std::vector<int> out(n_, 0);
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i) out[j] += cartan_[j][i] * v.coords[i];
  return Weight{out};
}

Weight RootSystem::reflect(int i, const Weight& lambda) const {
  check_same_rank(lambda.coords.size(), static_cast<std::size_t>(n_), "reflect");
  cartan(i, i);
  const int m = lambda.coords[i - 1];
  Weight out = lambda;
  for (int j = 0; j < n_; ++j) out.coords[j] -= m * cartan_[j][i - 1];
  return out;
}

RootVector RootSystem::reflect(int i, const RootVector& v) const {
  RootVector out = v;
  out.coords[i - 1] -= pair_with_simple(v, i);
  return out;
}

std::vector<int> RootSystem::reflect_coroot(int i, std::vector<int> c) const {
  check_same_rank(c.size(), static_cast<std::size_t>(n_), "reflect_coroot");
  cartan(i, i);
  int d = 0;
  for (int j = 0; j < n_; ++j) d += cartan_[j][i - 1] * c[j];
  c[i - 1] -= d;
  return c;
}

std::vector<int> RootSystem::minuscule_weight_indices() const {
  std::vector<int> out;
  for (int m = 0; m < n_; ++m) {
    bool ok = true;
    for (const std::vector<int>& c : coroots_)
      if (c[m] > 1) { ok = false; break; }
    if (ok) out.push_back(m + 1);
  }
  return out;
}

std::vector<int> RootSystem::short_simple_indices() const { return short_simples_; }

bool RootSystem::simply_laced() const {
  return static_cast<int>(short_simples_.size()) == n_;
}

long long RootSystem::weyl_order() const {
  auto factorial = [](int k) {
    long long f = 1;
    for (int t = 2; t <= k; ++t) f *= t;
    return f;
  };
  switch (type_.family) {
    case Family::A: return factorial(n_ + 1);
    case Family::B:
    case Family::C: return factorial(n_) << n_;
    case Family::D: return factorial(n_) << (n_ - 1);
    case Family::E:
      return n_ == 6 ? 51840LL : n_ == 7 ? 2903040LL : 696729600LL;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  throw DomainError("unknown family");
}

std::optional<RootVector> RootSystem::root_coordinates(const Weight& lambda) const {
  check_same_rank(lambda.coords.size(), static_cast<std::size_t>(n_),
                  "root_coordinates");
  std::vector<int> out(n_, 0);
  for (int i = 0; i < n_; ++i) {
    long long acc = 0;
    for (int j = 0; j < n_; ++j) acc += adjugate_[i][j] * lambda.coords[j];
    if (acc % cartan_det_ != 0) return std::nullopt;
    out[i] = static_cast<int>(acc / cartan_det_);
  }
  return RootVector{out};
}

}  // namespace bsdh
