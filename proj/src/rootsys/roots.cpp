#include "f4v/rootsys/roots.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace f4v {

std::string Root::to_string() const {
  std::ostringstream os;
  os << "(" << c[0] << "," << c[1] << "," << c[2] << "," << c[3] << ")";
  return os.str();
}

const std::array<std::array<int, 4>, 4>& cartan_matrix() {
  static const std::array<std::array<int, 4>, 4> a = {{
      {2, -1, 0, 0},
      {-1, 2, -2, 0},
      {0, -1, 2, -1},
      {0, 0, -1, 2},
  }};
  return a;
}

Root reflect(const Root& r, int j) {
  const auto& a = cartan_matrix();
  int pairing = 0;
  for (int i = 0; i < 4; ++i) pairing += r.c[i] * a[i][j];
  Root out = r;
  out.c[j] -= pairing;
  return out;
}

std::vector<Root> generate_roots() {
  std::set<Root> seen;
  std::vector<Root> frontier;
  for (int i = 0; i < 4; ++i) {
    Root r;
    r.c[i] = 1;
    seen.insert(r);
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    Root r = frontier.back();
    frontier.pop_back();
    for (int j = 0; j < 4; ++j) {
      Root s = reflect(r, j);
      if (seen.insert(s).second) frontier.push_back(s);
    }
  }
  return {seen.begin(), seen.end()};
}

const std::vector<Root>& all_roots() {
  static const std::vector<Root> roots = generate_roots();
  return roots;
}

Root highest_root() {
  const auto& rs = all_roots();
  return *std::max_element(rs.begin(), rs.end(), [](const Root& a, const Root& b) { return a.height() < b.height(); });
}

static int mod_pos(int x, int m) { return ((x % m) + m) % m; }

std::vector<Root> grading_basis(int m) {
  if (m <= 0) throw std::invalid_argument("grading needs m >= 1");
  std::vector<Root> out;
  for (const auto& r : all_roots()) {
    if (mod_pos(r.height(), m) == 1 % m) out.push_back(r);
  }
  std::stable_sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.c > b.c;
  });
  return out;
}

KacPoint kac_point(int m) {
  switch (m) {
    case 3: return {3, {0, 0, 1, 0, 0}};
    case 4: return {4, {1, 0, 1, 0, 0}};
    case 6: return {6, {1, 0, 1, 0, 1}};
    case 8: return {8, {1, 1, 1, 0, 1}};
    case 12: return {12, {1, 1, 1, 1, 1}};
    default: throw std::invalid_argument("no Kac point shipped for m=" + std::to_string(m));
  }
}

int kac_mark_sum(const KacPoint& k) {
  int s = 0;
  for (int i = 0; i < 5; ++i) s += kKacMarks[i] * k.a[i];
  return s;
}

int kac_degree(const KacPoint& k, const Root& r) {
  int s = 0;
  for (int i = 0; i < 4; ++i) s += r.c[i] * k.a[i + 1];
  return mod_pos(s, k.m);
}

std::map<int, int> kac_grading_dims(const KacPoint& k) {
  if (kac_mark_sum(k) != k.m) throw std::invalid_argument("unknown Kac point");
  std::map<int, int> dims;
  for (int j = 0; j < k.m; ++j) dims[j] = 0;
  dims[0] = 4;
  for (const auto& r : all_roots()) dims[kac_degree(k, r)]++;
  return dims;
}

Frame frame_for(int m) {
  switch (m) {
    case 3: return Frame::Diag;
    case 4:
    case 6:
    case 8:
    case 12: return Frame::Omega;
    default: throw std::invalid_argument("unsupported m=" + std::to_string(m));
  }
}

namespace {

Root R(int a, int b, int c, int d) { return {{a, b, c, d}}; }

}  // namespace

const std::vector<Root>& label_roots(int m) {
  static const std::vector<Root> r4 = {
      R(0, 1, 0, 0), R(1, 1, 0, 0), R(0, 1, 2, 0), R(1, 1, 2, 0), R(0, 1, 2, 2), R(1, 1, 2, 2), R(0, 1, 1, 0),
      R(1, 1, 1, 0), R(0, 1, 1, 1), R(1, 1, 1, 1), R(0, 1, 2, 1), R(1, 1, 2, 1), -R(2, 3, 4, 2), -R(1, 3, 4, 2),
  };
  static const std::vector<Root> r6 = {
      R(0, 1, 0, 0), R(1, 1, 0, 0), R(0, 1, 2, 0), R(1, 1, 2, 0), -R(2, 3, 4, 2),
      -R(1, 3, 4, 2), R(0, 1, 1, 0), R(1, 1, 1, 0), R(0, 0, 0, 1), R(0, 0, 1, 1),
  };
  static const std::vector<Root> r8 = {
      R(0, 1, 0, 0), R(0, 1, 1, 0), R(0, 1, 2, 0), R(0, 0, 0, 1), R(0, 0, 1, 1), R(1, 0, 0, 0), -R(2, 3, 4, 2),
  };
  static const std::vector<Root> r12 = {R(1, 0, 0, 0), R(0, 1, 0, 0), R(0, 0, 1, 0), R(0, 0, 0, 1), -R(2, 3, 4, 2)};
  switch (m) {
    case 4: return r4;
    case 6: return r6;
    case 8: return r8;
    case 12: return r12;
    default: throw std::invalid_argument("no label roots for m=" + std::to_string(m));
  }
}

const std::vector<std::array<int, 4>>& weight_table(int m) {
  static const std::vector<std::array<int, 4>> t3 = {
      {1, 0, 2, 0},   {0, 1, 2, 0},   {-1, -1, 2, 0},  {1, 0, 0, 2},  {0, 1, 0, 2},  {-1, -1, 0, 2},
      {1, 0, -2, -2}, {0, 1, -2, -2}, {-1, -1, -2, -2}, {1, 0, 1, 1}, {0, 1, 1, 1},  {-1, -1, 1, 1},
      {1, 0, 0, -1},  {0, 1, 0, -1},  {-1, -1, 0, -1}, {1, 0, -1, 0}, {0, 1, -1, 0}, {-1, -1, -1, 0},
  };
  static const std::vector<std::array<int, 4>> t4 = {
      {0, -1, 0, 0},   {-1, -1, 0, 0},   {0, -1, -2, 0},  {-1, -1, -2, 0}, {0, -1, -2, -2},
      {-1, -1, -2, -2}, {0, -1, -1, 0},  {-1, -1, -1, 0}, {0, -1, -1, -1}, {-1, -1, -1, -1},
      {0, -1, -2, -1}, {-1, -1, -2, -1}, {2, 3, 4, 2},    {1, 3, 4, 2},
  };
  static const std::vector<std::array<int, 4>> t6 = {
      {0, -1, 0, 0}, {-1, -1, 0, 0}, {0, -1, -2, 0}, {-1, -1, -2, 0}, {2, 3, 4, 2},
      {1, 3, 4, 2},  {0, -1, -1, 0}, {-1, -1, -1, 0}, {0, 0, 0, -1},  {0, 0, -1, -1},
  };
  static const std::vector<std::array<int, 4>> t8 = {
      {0, -1, 0, 0}, {0, -1, -1, 0}, {0, -1, -2, 0}, {0, 0, 0, -1}, {0, 0, -1, -1}, {-1, 0, 0, 0}, {2, 3, 4, 2},
  };
  switch (m) {
    case 3: return t3;
    case 4: return t4;
    case 6: return t6;
    case 8: return t8;
    default: throw std::invalid_argument("no weight table for m=" + std::to_string(m));
  }
}

std::vector<int> table_weights(int m, const Cocharacter& lambda) {
  if (lambda.frame != frame_for(m)) throw std::invalid_argument("cocharacter frame does not match m");
  std::vector<int> out;
  for (const auto& row : weight_table(m)) {
    int w = 0;
    for (int i = 0; i < 4; ++i) w += row[i] * lambda.s[i];
    out.push_back(w);
  }
  return out;
}

std::vector<int> cochar_weights(int m, const Cocharacter& lambda) {
  if (lambda.frame != frame_for(m)) throw std::invalid_argument("cocharacter frame does not match m");
  if (m == 3) return table_weights(3, lambda);
  std::vector<int> out;
  for (const auto& r : label_roots(m)) {
    int pairing = 0;
    for (int i = 0; i < 4; ++i) pairing += r.c[i] * lambda.s[i];
    out.push_back(-pairing);
  }
  return out;
}

}  // namespace f4v
