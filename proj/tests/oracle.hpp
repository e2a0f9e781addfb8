#pragma once

// Brute-force reference computations that use none of the library code.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

struct Frac {
  long long p = 0, q = 1;
  Frac(long long a = 0, long long b = 1) : p(a), q(b) {
    if (q < 0)
      p = -p, q = -q;
    long long d = std::gcd(p < 0 ? -p : p, q);
    if (d)
      p /= d, q /= d;
  }
  friend Frac operator+(Frac a, Frac b) { return {a.p * b.q + b.p * a.q, a.q * b.q}; }
  friend Frac operator-(Frac a, Frac b) { return {a.p * b.q - b.p * a.q, a.q * b.q}; }
  friend Frac operator*(Frac a, Frac b) { return {a.p * b.p, a.q * b.q}; }
  friend Frac operator/(Frac a, Frac b) { return {a.p * b.q, a.q * b.p}; }
  friend bool operator==(Frac a, Frac b) { return a.p == b.p && a.q == b.q; }
};

// eps*h - 2 + k + sum(1 - 1/m) + 1/2 sum(1 - 1/n)
inline Frac area(int h, bool plus, const std::vector<int>& periods,
                 const std::vector<std::vector<int>>& cycles) {
  Frac a((plus ? 2 : 1) * h - 2 + static_cast<long long>(cycles.size()));
  for (int m : periods)
    a = a + Frac(m - 1, m);
  for (const auto& c : cycles)
    for (int n : c)
      a = a + Frac(n - 1, 2 * n);
  return a;
}

inline std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int i = 1; i <= n; ++i)
    if (n % i == 0)
      d.push_back(i);
  return d;
}

// Periods m_i | N = 4g, with d_i = N/m_i: (r-2)N - sum d_i = 2g - 2, so
// r = 3 needs sum d = 2g+2 and r = 4 needs sum d = 6g+2; r >= 5 is impossible.
inline std::vector<std::vector<int>> signatures_4g(int g) {
  const int N = 4 * g;
  std::vector<int> ds;
  for (int d : divisors(N))
    if (N / d >= 2)
      ds.push_back(d);
  std::set<std::vector<int>> found;
  for (int r = 3; r <= 4; ++r) {
    const int target = (r - 2) * N - (2 * g - 2);
    std::vector<int> pick(r, 0);
    auto rec = [&](auto&& self, int i, int start, int sum) -> void {
      if (i == r) {
        if (sum == target) {
          std::vector<int> m;
          for (int d : pick)
            m.push_back(N / d);
          std::sort(m.begin(), m.end());
          found.insert(m);
        }
        return;
      }
      for (std::size_t j = start; j < ds.size(); ++j) {
        pick[i] = ds[j];
        self(self, i + 1, static_cast<int>(j), sum + ds[j]);
      }
    };
    rec(rec, 0, 0, 0);
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

inline bool is_family(const std::vector<int>& m, int g) {
  return m == std::vector<int>{2, 4 * g, 4 * g} || m == std::vector<int>{3, 6, 2 * g} ||
         m == std::vector<int>{4, 4, 2 * g} || m == std::vector<int>{2, 2, 2, 2 * g};
}

inline std::set<int> sporadic_genera(int limit) {
  std::set<int> out;
  for (int g = 2; g <= limit; ++g)
    for (const auto& m : signatures_4g(g))
      if (m.size() == 3 && !is_family(m, g))
        out.insert(g);
  return out;
}

// Dihedral group of order 2n, element k + n*f standing for r^k s^f.
struct Dihedral {
  int n;
  int size() const { return 2 * n; }
  int mul(int a, int b) const {
    int ka = a % n, fa = a / n, kb = b % n, fb = b / n;
    int k = ((ka + (fa ? -kb : kb)) % n + n) % n;
    return k + n * (fa ^ fb);
  }
  int inv(int a) const {
    int k = a % n, f = a / n;
    return f ? a : (n - k) % n;
  }
  int order(int a) const {
    int x = a, k = 1;
    while (x != 0)
      x = mul(x, a), ++k;
    return k;
  }
  int generated(const std::vector<int>& gens) const {
    std::vector<char> in(size(), 0);
    std::vector<int> todo{0};
    in[0] = 1;
    for (std::size_t i = 0; i < todo.size(); ++i)
      for (int s : gens) {
        int y = mul(todo[i], s);
        if (!in[y])
          in[y] = 1, todo.push_back(y);
      }
    return static_cast<int>(todo.size());
  }
};

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
  int components() {
    int c = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      c += find(static_cast<int>(i)) == static_cast<int>(i);
    return c;
  }
};

// Smooth (2,2,2,2g) vectors in the dihedral group of order 4g, in the given period order.
inline std::vector<std::vector<int>> dihedral_vectors(int g, const std::vector<int>& periods) {
  Dihedral D{2 * g};
  std::vector<std::vector<int>> out;
  std::vector<int> t(4);
  for (t[0] = 0; t[0] < D.size(); ++t[0])
    for (t[1] = 0; t[1] < D.size(); ++t[1])
      for (t[2] = 0; t[2] < D.size(); ++t[2]) {
        t[3] = D.inv(D.mul(D.mul(t[0], t[1]), t[2]));
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i)
          ok = D.order(t[i]) == periods[i];
        if (ok && D.generated(t) == D.size())
          out.push_back(t);
      }
  return out;
}

// Orbits of smooth vectors (every arrangement of the periods) under braid
// moves and automorphisms r -> r^u, s -> r^b s.
inline int dihedral_class_count(int g) {
  Dihedral D{2 * g};
  const int n = D.n;
  std::vector<int> base{2, 2, 2, 2 * g};
  std::sort(base.begin(), base.end());
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> all;
  do {
    for (auto& v : dihedral_vectors(g, base))
      if (!index.count(v)) {
        index[v] = static_cast<int>(all.size());
        all.push_back(v);
      }
  } while (std::next_permutation(base.begin(), base.end()));
  UnionFind uf(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& v = all[i];
    for (int p = 0; p < 3; ++p) {
      auto w = v;
      w[p] = D.mul(D.mul(v[p], v[p + 1]), D.inv(v[p]));
      w[p + 1] = v[p];
      uf.unite(static_cast<int>(i), index.at(w));
    }
    for (int u = 1; u < n; ++u) {
      if (std::gcd(u, n) != 1)
        continue;
      for (int b = 0; b < n; ++b) {
        auto w = v;
        for (auto& x : w) {
          int k = x % n, f = x / n;
          x = ((u * k + f * b) % n) + n * f;
        }
        uf.unite(static_cast<int>(i), index.at(w));
      }
    }
  }
  return uf.components();
}

// D_2g x C_2 as pairs (dihedral element, bit); orientation (-1)^(f + bit).
struct KindA {
  Dihedral D;
  explicit KindA(int g) : D{2 * g} {}
  int size() const { return 2 * D.size(); }
  int mul(int a, int b) const { return D.mul(a % D.size(), b % D.size()) + D.size() * ((a / D.size()) ^ (b / D.size())); }
  int order(int a) const {
    int x = a, k = 1;
    while (x != 0)
      x = mul(x, a), ++k;
    return k;
  }
  int sign(int a) const { return ((a % D.size()) / D.n + a / D.size()) % 2 ? -1 : 1; }
  int generated(const std::vector<int>& gens) const {
    std::vector<char> in(size(), 0);
    std::vector<int> todo{0};
    in[0] = 1;
    for (std::size_t i = 0; i < todo.size(); ++i)
      for (int s : gens) {
        int y = mul(todo[i], s);
        if (!in[y])
          in[y] = 1, todo.push_back(y);
      }
    return static_cast<int>(todo.size());
  }
};

// Reflection images (c0..c3) for the link periods (2,2,2,2g), c4 = c0.
inline int kind_a_assignments(int g) {
  KindA G(g);
  std::vector<int> refl;
  for (int a = 0; a < G.size(); ++a)
    if (G.order(a) == 2 && G.sign(a) == -1)
      refl.push_back(a);
  const int links[4] = {2, 2, 2, 2 * g};
  int count = 0;
  for (int c0 : refl)
    for (int c1 : refl)
      for (int c2 : refl)
        for (int c3 : refl) {
          int c[5] = {c0, c1, c2, c3, c0};
          bool ok = true;
          for (int j = 0; j < 4 && ok; ++j)
            ok = G.order(G.mul(c[j], c[j + 1])) == links[j];
          if (ok && G.generated({c0, c1, c2, c3}) == G.size())
            ++count;
        }
  return count;
}

} // namespace oracle
