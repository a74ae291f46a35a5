#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace f4v {

/// Root in the simple-root basis, diagram α1 α2 ⇒ α3 α4 (long, long, short, short).
struct Root {
  std::array<int, 4> c{};

  int height() const { return c[0] + c[1] + c[2] + c[3]; }
  Root operator-() const { return {{-c[0], -c[1], -c[2], -c[3]}}; }
  auto operator<=>(const Root&) const = default;
  std::string to_string() const;
};

/// Cartan matrix A[i][j] = <α_i, α_j^∨>.
const std::array<std::array<int, 4>, 4>& cartan_matrix();

/// Simple reflection s_j.
Root reflect(const Root& r, int j);

/// All 48 roots by reflection closure of the simple roots, sorted.
std::vector<Root> generate_roots();

/// Cached copy of generate_roots().
const std::vector<Root>& all_roots();

Root highest_root();

/// Roots of height ≡ 1 mod m, ordered by height then coordinates.
std::vector<Root> grading_basis(int m);

/// Normalized Kac coordinates (a0..a4) of the shipped points.
struct KacPoint {
  int m = 0;
  std::array<int, 5> a{};
};

inline constexpr std::array<int, 5> kKacMarks = {1, 2, 3, 4, 2};

KacPoint kac_point(int m);
int kac_mark_sum(const KacPoint& k);

/// Degree of a root at the point: sum c_i a_i mod m.
int kac_degree(const KacPoint& k, const Root& r);

/// dim of each graded piece; degree 0 includes the 4-dimensional torus.
std::map<int, int> kac_grading_dims(const KacPoint& k);

enum class Frame { Omega, Diag };

/// For Omega frames λ = Σ s_i ω̌_i, so α(λ) = Σ c_i s_i. The Diag frame is the
/// diagonal torus of SL3 × SL3 with entries (s1, s2, -s1-s2) and (s3, s4, -s3-s4).
struct Cocharacter {
  Frame frame = Frame::Omega;
  std::array<int, 4> s{};

  bool trivial() const { return s == std::array<int, 4>{}; }
  bool operator==(const Cocharacter&) const = default;
};

Frame frame_for(int m);

/// Root of each basis label of V_m (m ∈ {4, 6, 8, 12}), in basis order.
const std::vector<Root>& label_roots(int m);

/// Per label, coefficients of s1..s4 in the weight (shipped tables, m ∈ {3,4,6,8}).
const std::vector<std::array<int, 4>>& weight_table(int m);

/// Weight of every basis label under λ. m=3 reads the shipped table; other m
/// use -α(λ) of the label roots.
std::vector<int> cochar_weights(int m, const Cocharacter& lambda);

/// Same quantity for m ∈ {4,6,8} computed from the shipped table instead.
std::vector<int> table_weights(int m, const Cocharacter& lambda);

}  // namespace f4v
