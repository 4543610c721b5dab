#ifndef BSDH_ROOT_SYSTEM_HPP
#define BSDH_ROOT_SYSTEM_HPP

/*
  Exact integer model of the root systems of the simple types A..G.

  Simple roots are numbered 1..n along the Dynkin diagram in the standard
  textbook order:

    A_n   1 - 2 - ... - n
    B_n   1 - 2 - ... - (n-1) => n          (alpha_n short)
    C_n   1 - 2 - ... - (n-1) <= n          (alpha_n long, alpha_1..alpha_{n-1} short)
    D_n   1 - 2 - ... - (n-2) < (n-1, n)    (fork at n-2)
    E_n   1 - 3 - 4 - 5 - 6 (- 7 (- 8)),  2 attached to 4
    F_4   1 - 2 => 3 - 4                    (alpha_3, alpha_4 short)
    G_2   1 <= 2                            (alpha_1 short)

  Two coordinate systems are used everywhere:

    Weight      coefficients on the fundamental weights omega_1..omega_n
    RootVector  coefficients on the simple roots alpha_1..alpha_n

  The pairing normalizes by its second argument,

    <mu, beta> = 2 (mu, beta) / (beta, beta),

  so <omega_i, alpha_j> = delta_ij and <., alpha_j> reads off weight
  coordinates.  cartan(i, j) stores <alpha_j, alpha_i>; converting root
  coordinates to weight coordinates is left multiplication by that matrix.
*/

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bsdh {

// Violated domain precondition: invalid rank, a non-reduced word where a
// reduced one is required, an index out of range.  Unparseable input text
// throws std::invalid_argument instead.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family : char {
  A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G'
};

// Admissible ranks: A >= 1, B >= 2, C >= 3, D >= 4, E in {6,7,8}, F = 4,
// G = 2; the classical families are capped at rank 10.
struct DynkinType {
  Family family;
  int rank;

  static DynkinType of(Family family, int rank);   // validates
  static DynkinType parse(std::string_view text);  // "A3", "d4", ...
  std::string name() const;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

struct Weight {
  std::vector<int> coords;  // coords[k] multiplies omega_{k+1}

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

struct RootVector {
  std::vector<int> coords;  // coords[k] multiplies alpha_{k+1}

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

Weight operator+(const Weight&, const Weight&);
Weight operator-(const Weight&, const Weight&);
RootVector operator+(const RootVector&, const RootVector&);
RootVector operator-(const RootVector&, const RootVector&);
RootVector operator-(const RootVector&);

class RootSystem {
 public:
  explicit RootSystem(DynkinType type);

  DynkinType type() const { return type_; }
  int rank() const { return n_; }

  // <alpha_j, alpha_i>, both arguments 1-based.
  int cartan(int i, int j) const;

  // Positive roots sorted by height, then by coordinates so that
  // positive_root(i - 1) is the simple root alpha_i.
  int positive_root_count() const { return static_cast<int>(roots_.size()); }
  const RootVector& positive_root(int k) const;
  const std::vector<RootVector>& positive_roots() const { return roots_; }
  std::optional<int> positive_root_index(const RootVector& beta) const;

  // Coroot coordinates of positive_root(k): coefficients on the simple
  // coroots, used to pair arbitrary weights against that root.
  const std::vector<int>& coroot(int k) const;

  // <lambda, positive_root(k)>.
  int pairing(const Weight& lambda, int k) const;
  // <v, alpha_i> for v in root coordinates (linear in v).
  int pair_with_simple(const RootVector& v, int i) const;

  Weight rho() const;                      // all-ones weight vector
  Weight fundamental_weight(int i) const;  // omega_i
  RootVector simple_root(int i) const;     // alpha_i as a root vector
  Weight to_weight(const RootVector& v) const;

  // Simple reflection s_i acting on either coordinate system; the coroot
  // overload acts on coroot coordinate vectors.
  Weight reflect(int i, const Weight& lambda) const;
  RootVector reflect(int i, const RootVector& v) const;
  std::vector<int> reflect_coroot(int i, std::vector<int> c) const;

  // omega_m with <omega_m, beta> <= 1 for every positive root beta,
  // returned as sorted 1-based indices m.
  std::vector<int> minuscule_weight_indices() const;

  // Indices of the short simple roots.  In a simply-laced system all roots
  // have one length and every index is returned.
  std::vector<int> short_simple_indices() const;
  bool simply_laced() const;

  long long weyl_order() const;

  // Exact preimage under to_weight: the root coordinates of lambda if
  // lambda lies in the root lattice, nullopt otherwise.
  std::optional<RootVector> root_coordinates(const Weight& lambda) const;

 private:
  void build_cartan();
  void close_roots();
  void solve_setup();  // adjugate + determinant of the Cartan matrix

  DynkinType type_;
  int n_;
  std::vector<std::vector<int>> cartan_;  // cartan_[i][j] = <alpha_{j+1}, alpha_{i+1}>
  std::vector<RootVector> roots_;
  std::vector<std::vector<int>> coroots_;
  std::map<std::vector<int>, int> root_index_;
  std::vector<std::vector<long long>> adjugate_;
  long long cartan_det_ = 0;
  std::vector<int> short_simples_;
};

}  // namespace bsdh

#endif
