#include "qcert/rayset.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qcert::ks {

using exact::QuadRat;
using exact::Vec3Exact;

int RaySet::add(Ray r) {
  auto it = index_.find(r);
  if (it != index_.end()) return it->second;
  const int id = size();
  index_.emplace(r, id);
  rays_.push_back(std::move(r));
  return id;
}

std::optional<int> RaySet::find(const Ray& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Basis Basis::of(int a, int b, int c) {
  std::array<int, 3> m{a, b, c};
  std::sort(m.begin(), m.end());
  if (m[0] == m[1] || m[1] == m[2]) {
    throw std::invalid_argument("Basis: repeated ray id");
  }
  return Basis{m};
}

RaySet peres_33() {
  const QuadRat zero = 0;
  const QuadRat one = 1;
  const QuadRat root = QuadRat::sqrt2();
  const std::array<Vec3Exact, 4> seeds{{
      {zero, zero, one},
      {zero, one, one},
      {zero, one, root},
      {one, one, root},
  }};

  RaySet out;
  // Permutations in lexicographic order, then the 8 sign patterns in
  // binary order; insertion order is what fixes the ray ids.
  std::array<int, 3> perm{0, 1, 2};
  for (const Vec3Exact& seed : seeds) {
    perm = {0, 1, 2};
    do {
      const std::array<QuadRat, 3> base{
          seed.x, seed.y, seed.z};
      for (int signs = 0; signs < 8; ++signs) {
        std::array<QuadRat, 3> c;
        for (int i = 0; i < 3; ++i) {
          c[i] = base[perm[i]];
          if (signs & (1 << i)) c[i] = -c[i];
        }
        Vec3Exact v{c[0], c[1], c[2]};
        out.add(canonicalize(v));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

BasisCompletion complete_bases(const RaySet& s) {
  BasisCompletion result;
  for (const Ray& r : s.rays()) result.rays.add(r);

  const int n = s.size();
  std::set<Basis> seen;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!dot(s[i].vec(), s[j].vec()).is_zero()) continue;
      const Ray w = canonicalize(cross(s[i].vec(), s[j].vec()));
      const int k = result.rays.add(w);
      const Basis basis = Basis::of(i, j, k);
      if (seen.insert(basis).second) result.bases.push_back(basis);
    }
  }
  return result;
}

std::vector<std::pair<int, int>> orthogonality_graph(const RaySet& s) {
  std::vector<std::pair<int, int>> edges;
  const int n = s.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (dot(s[i].vec(), s[j].vec()).is_zero()) edges.emplace_back(i, j);
    }
  }
  return edges;
}

RaySet parse_ray_set(std::istream& in) {
  RaySet out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string sx, sy, sz;
    if (!(fields >> sx)) continue;  // blank or comment-only line
    std::string extra;
    if (!(fields >> sy >> sz) || (fields >> extra)) {
      throw std::invalid_argument("ray file line " + std::to_string(lineno) +
                                  ": expected three components");
    }
    try {
      Vec3Exact v{QuadRat::parse(sx), QuadRat::parse(sy), QuadRat::parse(sz)};
      out.add(canonicalize(v));
    } catch (const std::exception& e) {
      throw std::invalid_argument("ray file line " + std::to_string(lineno) +
                                  ": " + e.what());
    }
  }
  return out;
}

void write_ray_set(std::ostream& out, const RaySet& s) {
  out << "# " << s.size() << " rays, one per line\n";
  for (const Ray& r : s.rays()) out << r.str() << "\n";
}

void write_dot(std::ostream& out, const RaySet& s,
               const std::vector<std::pair<int, int>>& edges) {
  out << "graph rays {\n";
  for (int i = 0; i < s.size(); ++i) {
    out << "  " << i << " [label=\"" << i << "\", tooltip=\"" << s[i].str()
        << "\"];\n";
  }
  for (const auto& [i, j] : edges) {
    out << "  " << i << " -- " << j << ";\n";
  }
  out << "}\n";
}

}  // namespace qcert::ks
