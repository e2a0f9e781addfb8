#include "fourg/group.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

#include "fourg/errors.hpp"

namespace fourg {

namespace {

std::string power_name(const std::string& letter, long long i) {
  if (i == 0)
    return "";
  if (i == 1)
    return letter;
  return letter + "^" + std::to_string(i);
}

std::string join_or_one(const std::string& a, const std::string& b) {
  std::string s = a + b;
  return s.empty() ? "1" : s;
}

long long mod(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

std::string strip_one(const std::string& s) { return s == "1" ? "" : s; }

GroupPtr make_group(std::size_t n, std::vector<std::uint32_t> table,
                    std::vector<Element> gens, std::vector<std::string> names,
                    GroupTag tag) {
  return std::make_shared<FiniteGroup>(n, std::move(table), std::move(gens),
                                       std::move(names), std::move(tag));
}

} // namespace

GroupPtr cyclic(int n, std::string letter) {
  if (n < 1)
    throw std::invalid_argument("cyclic: order must be positive");
  std::vector<std::uint32_t> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    names.push_back(join_or_one(power_name(letter, i), ""));
    for (int j = 0; j < n; ++j)
      table[i * n + j] = static_cast<std::uint32_t>((i + j) % n);
  }
  std::vector<Element> gens;
  if (n > 1)
    gens.push_back(Element{1});
  return make_group(n, std::move(table), std::move(gens), std::move(names),
                    {Construction::cyclic, "cyclic(" + std::to_string(n) + ")"});
}

GroupPtr dihedral(int order, std::string rotation, std::string reflection) {
  if (order < 4 || order % 2)
    throw std::invalid_argument("dihedral: order must be even and >= 4");
  const int n = order / 2;
  std::vector<std::uint32_t> table(static_cast<std::size_t>(order) * order);
  std::vector<std::string> names(order);
  // index j*n + i  <->  D^i A^j
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < n; ++i) {
      names[j * n + i] = join_or_one(power_name(rotation, i), power_name(reflection, j));
      for (int l = 0; l < 2; ++l)
        for (int k = 0; k < n; ++k) {
          int ri = static_cast<int>(mod(i + (j ? -k : k), n));
          int rj = (j + l) % 2;
          table[(j * n + i) * order + (l * n + k)] = static_cast<std::uint32_t>(rj * n + ri);
        }
    }
  std::vector<Element> gens{Element{1 % static_cast<std::uint32_t>(n)},
                            Element{static_cast<std::uint32_t>(n)}};
  return make_group(order, std::move(table), std::move(gens), std::move(names),
                    {Construction::dihedral, "dihedral(" + std::to_string(order) + ")"});
}

GroupPtr metacyclic(int n, int k, int t, int u, std::string c_letter, std::string b_letter) {
  if (n < 1 || k < 1)
    throw std::invalid_argument("metacyclic: n and k must be positive");
  t = static_cast<int>(mod(t, n));
  u = static_cast<int>(mod(u, n));
  if (std::gcd(t, n) != 1 && n > 1)
    throw std::invalid_argument("metacyclic: t must be a unit mod n");
  long long tk = 1;
  for (int i = 0; i < k; ++i)
    tk = tk * t % n;
  if (tk % n != 1 % n)
    throw std::invalid_argument("metacyclic: t^k != 1 mod n");
  if (mod(static_cast<long long>(u) * (t - 1), n) != 0)
    throw std::invalid_argument("metacyclic: u(t-1) != 0 mod n");

  const std::size_t order = static_cast<std::size_t>(n) * k;
  if (order > kMaxTableOrder)
    throw std::invalid_argument("metacyclic: order exceeds table limit");
  std::vector<long long> tpow(k, 1);
  for (int j = 1; j < k; ++j)
    tpow[j] = tpow[j - 1] * t % n;
  std::vector<std::uint32_t> table(order * order);
  std::vector<std::string> names(order);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) {
      names[j * n + i] = join_or_one(power_name(c_letter, i), power_name(b_letter, j));
      for (int m = 0; m < k; ++m)
        for (int l = 0; l < n; ++l) {
          long long ci = i + l * tpow[j];
          int bj = j + m;
          if (bj >= k) {
            bj -= k;
            ci += u;
          }
          table[(j * n + i) * order + (m * n + l)] =
              static_cast<std::uint32_t>(bj * n + mod(ci, n));
        }
    }
  std::vector<Element> gens;
  if (n > 1)
    gens.push_back(Element{1});
  if (k > 1)
    gens.push_back(Element{static_cast<std::uint32_t>(n)});
  return make_group(order, std::move(table), std::move(gens), std::move(names),
                    {Construction::metacyclic, "metacyclic(" + std::to_string(n) + "," +
                                                   std::to_string(k) + "," +
                                                   std::to_string(t) + "," +
                                                   std::to_string(u) + ")"});
}

GroupPtr semidirect_cyclic(int n, int k, int t) {
  auto G = metacyclic(n, k, t, 0);
  return G->with_tag({Construction::semidirect, "semidirect(" + std::to_string(n) + "," +
                                                    std::to_string(k) + "," +
                                                    std::to_string(mod(t, n)) + ")"});
}

GroupPtr case3_group(int g) {
  if (g < 2)
    throw std::invalid_argument("case3_group: g must be >= 2");
  auto G = metacyclic(2 * g, 2, -1, g, "C", "A");
  G = G->with_generators({Element{static_cast<std::uint32_t>(2 * g)}, Element{1}});
  return G->with_tag({Construction::metacyclic, "case3(" + std::to_string(g) + ")"});
}

GroupPtr direct_product(const GroupPtr& G, const GroupPtr& H) {
  const std::size_t a = G->order(), b = H->order(), n = a * b;
  if (n > kMaxTableOrder)
    throw std::invalid_argument("direct_product: order exceeds table limit");
  std::vector<std::uint32_t> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    Element gx{static_cast<std::uint32_t>(x / b)}, hx{static_cast<std::uint32_t>(x % b)};
    names[x] = "(" + G->name(gx) + "," + H->name(hx) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      Element gy{static_cast<std::uint32_t>(y / b)}, hy{static_cast<std::uint32_t>(y % b)};
      table[x * n + y] = static_cast<std::uint32_t>(G->mul(gx, gy).id * b + H->mul(hx, hy).id);
    }
  }
  std::vector<Element> gens;
  for (Element g : G->generators())
    gens.push_back(Element{static_cast<std::uint32_t>(g.id * b + H->identity().id)});
  for (Element h : H->generators())
    gens.push_back(Element{static_cast<std::uint32_t>(G->identity().id * b + h.id)});
  return make_group(n, std::move(table), std::move(gens), std::move(names),
                    {Construction::direct_product, "direct_product(" + G->tag().description +
                                                       "," + H->tag().description + ")"});
}

GroupPtr semidirect_by_automorphism(const Automorphism& alpha, int k, std::string letter) {
  const GroupPtr& G = alpha.group;
  if (k < 1)
    throw std::invalid_argument("semidirect: k must be positive");
  const std::size_t m = G->order(), n = m * k;
  if (n > kMaxTableOrder)
    throw std::invalid_argument("semidirect: order exceeds table limit");
  // alpha^j as tables
  std::vector<std::vector<Element>> apow(k + 1);
  apow[0] = G->elements();
  for (int j = 1; j <= k; ++j) {
    apow[j].resize(m);
    for (std::size_t e = 0; e < m; ++e)
      apow[j][e] = alpha.map[apow[j - 1][e].id];
  }
  if (apow[k] != apow[0])
    throw std::invalid_argument("semidirect: automorphism order does not divide k");
  std::vector<std::uint32_t> table(n * n);
  std::vector<std::string> names(n);
  // index j*m + g  <->  g t^j
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t j = x / m;
    Element g{static_cast<std::uint32_t>(x % m)};
    names[x] = join_or_one(strip_one(G->name(g)), power_name(letter, j));
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t l = y / m;
      Element h{static_cast<std::uint32_t>(y % m)};
      Element prod = G->mul(g, apow[j][h.id]);
      table[x * n + y] = static_cast<std::uint32_t>(((j + l) % k) * m + prod.id);
    }
  }
  std::vector<Element> gens = G->generators();
  if (k > 1)
    gens.push_back(Element{static_cast<std::uint32_t>(m + G->identity().id)});
  return make_group(n, std::move(table), std::move(gens), std::move(names),
                    {Construction::semidirect, "semidirect(" + G->tag().description + "," +
                                                   std::to_string(k) + ")"});
}

GroupPtr extension_group_b(int g) {
  if (g < 2)
    throw std::invalid_argument("extension_group_b: g must be >= 2");
  const std::uint32_t n = 2 * g;
  auto base = dihedral(4 * g, "(zw)", "z");
  // generators of base: r = zw (index 1), z (index n)
  Element r{1}, z{n};
  auto phi = make_automorphism(base, {base->inv(r), base->mul(base->pow(r, g - 1), z)});
  if (!phi)
    throw InvariantViolation("extension_group_b: phi is not an automorphism");
  auto G = semidirect_by_automorphism(*phi, 2, "x");
  Element x{2 * n}, zz{n}, w = G->mul(zz, Element{1});  // w = z (zw)
  G = G->with_generators({x, zz, w});
  return G->with_tag({Construction::semidirect, "extension_b(" + std::to_string(g) + ")"});
}

std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i)
      continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first)
        out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

GroupPtr from_permutations(const std::vector<Permutation>& generators, std::string description) {
  std::size_t degree = 0;
  for (const auto& p : generators)
    degree = std::max(degree, p.size());
  auto normalize = [&](Permutation p) {
    for (std::size_t i = p.size(); i < degree; ++i)
      p.push_back(static_cast<std::uint32_t>(i));
    std::vector<char> hit(degree, 0);
    for (auto v : p) {
      if (v >= degree || hit[v])
        throw std::invalid_argument("not a permutation");
      hit[v] = 1;
    }
    return p;
  };
  std::vector<Permutation> gens;
  for (const auto& p : generators)
    gens.push_back(normalize(p));
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);

  // (a*b)(i) = a(b(i))
  auto compose = [&](const Permutation& a, const Permutation& b) {
    Permutation c(degree);
    for (std::size_t i = 0; i < degree; ++i)
      c[i] = a[b[i]];
    return c;
  };
  std::vector<Permutation> els{id};
  std::map<Permutation, std::uint32_t> index{{id, 0}};
  for (std::size_t q = 0; q < els.size(); ++q)
    for (const auto& s : gens) {
      Permutation next = compose(els[q], s);
      if (!index.count(next)) {
        if (els.size() >= kMaxTableOrder)
          throw std::invalid_argument("permutation group exceeds table limit");
        index.emplace(next, static_cast<std::uint32_t>(els.size()));
        els.push_back(std::move(next));
      }
    }
  const std::size_t n = els.size();
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = index.at(compose(els[a], els[b]));
  std::vector<std::string> names;
  for (const auto& p : els)
    names.push_back(cycle_notation(p));
  std::vector<Element> gen_elements;
  for (const auto& s : gens)
    gen_elements.push_back(Element{index.at(s)});
  return make_group(n, std::move(table), std::move(gen_elements), std::move(names),
                    {Construction::permutation, std::move(description)});
}

namespace {

GroupPtr symmetric_group(int n) {
  if (n < 2)
    throw std::invalid_argument("symmetric: degree must be >= 2");
  Permutation t(n), c(n);
  std::iota(t.begin(), t.end(), 0u);
  std::swap(t[0], t[1]);
  for (int i = 0; i < n; ++i)
    c[i] = (i + 1) % n;
  return from_permutations({t, c}, "symmetric(" + std::to_string(n) + ")");
}

GroupPtr alternating_group(int n) {
  if (n < 3)
    throw std::invalid_argument("alternating: degree must be >= 3");
  Permutation a(n), c(n);
  std::iota(a.begin(), a.end(), 0u);
  a[0] = 1, a[1] = 2, a[2] = 0;
  std::iota(c.begin(), c.end(), 0u);
  // (1 2 ... n) for n odd, (2 3 ... n) for n even
  int start = n % 2 ? 0 : 1;
  for (int i = start; i < n; ++i)
    c[i] = i + 1 < n ? i + 1 : start;
  return from_permutations({a, c}, "alternating(" + std::to_string(n) + ")");
}

// 2x2 matrices over F_p acting on the p^2 - 1 nonzero column vectors.
GroupPtr linear_group_2(int p, bool special) {
  if (p < 2)
    throw std::invalid_argument("linear group: p must be prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw std::invalid_argument("linear group: p must be prime");
  auto as_perm = [&](int a, int b, int c, int d) {
    Permutation out(p * p - 1);
    for (int v = 1; v < p * p; ++v) {
      int x = v / p, y = v % p;
      int nx = (a * x + b * y) % p, ny = (c * x + d * y) % p;
      out[v - 1] = static_cast<std::uint32_t>(nx * p + ny - 1);
    }
    return out;
  };
  std::vector<Permutation> gens{as_perm(1, 1, 0, 1), as_perm(1, 0, 1, 1)};
  if (!special) {
    int zeta = 1;
    for (int cand = 2; cand < p; ++cand) {
      int k = 1;
      long long v = cand;
      while (v != 1) {
        v = v * cand % p;
        ++k;
      }
      if (k == p - 1) {
        zeta = cand;
        break;
      }
    }
    if (p > 2)
      gens.push_back(as_perm(zeta, 0, 0, 1));
  }
  return from_permutations(gens, std::string(special ? "sl2(" : "gl2(") +
                                     std::to_string(p) + ")");
}

// Unit quaternions (1+i)/sqrt2 and (1+i+j+k)/2 as matrices over F_7,
// where i = [[0,1],[-1,0]] and j = [[3,2],[2,-3]].
GroupPtr binary_octahedral() {
  const int p = 7;
  auto as_perm = [&](int a, int b, int c, int d) {
    Permutation out(p * p - 1);
    for (int v = 1; v < p * p; ++v) {
      int x = v / p, y = v % p;
      out[v - 1] = static_cast<std::uint32_t>(((a * x + b * y) % p) * p + (c * x + d * y) % p - 1);
    }
    return out;
  };
  GroupPtr G = from_permutations({as_perm(5, 5, 2, 5), as_perm(3, 0, 6, 5)}, "binary_octahedral()");
  if (G->order() != 48)
    throw InvariantViolation("binary octahedral group has the wrong order");
  return G;
}

class DescriptionParser {
public:
  explicit DescriptionParser(std::string_view s) : s_(s) {}

  GroupPtr parse() {
    GroupPtr G = group();
    skip();
    if (pos_ != s_.size())
      throw ParseError("trailing characters in group description", pos_);
    return G;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "' in group description", pos_);
    ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_)
      throw ParseError("expected a group constructor name", pos_);
    return std::string(s_.substr(start, pos_ - start));
  }
  int integer() {
    skip();
    std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-')
      ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start || (pos_ == start + 1 && s_[start] == '-'))
      throw ParseError("expected an integer in group description", start);
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }
  std::vector<int> integers(std::size_t count) {
    std::vector<int> out;
    for (std::size_t i = 0; i < count; ++i) {
      if (i)
        expect(',');
      out.push_back(integer());
    }
    return out;
  }

  GroupPtr group() {
    std::size_t at = pos_;
    std::string name = identifier();
    expect('(');
    GroupPtr G;
    try {
      if (name == "cyclic") {
        G = cyclic(integers(1)[0]);
      } else if (name == "dihedral") {
        G = dihedral(integers(1)[0]);
      } else if (name == "metacyclic") {
        auto v = integers(4);
        G = metacyclic(v[0], v[1], v[2], v[3]);
      } else if (name == "semidirect") {
        auto v = integers(3);
        G = semidirect_cyclic(v[0], v[1], v[2]);
      } else if (name == "case3") {
        G = case3_group(integers(1)[0]);
      } else if (name == "extension_b") {
        G = extension_group_b(integers(1)[0]);
      } else if (name == "symmetric") {
        G = symmetric_group(integers(1)[0]);
      } else if (name == "alternating") {
        G = alternating_group(integers(1)[0]);
      } else if (name == "gl2") {
        G = linear_group_2(integers(1)[0], false);
      } else if (name == "sl2") {
        G = linear_group_2(integers(1)[0], true);
      } else if (name == "binary_octahedral") {
        G = binary_octahedral();
      } else if (name == "direct_product") {
        GroupPtr a = group();
        expect(',');
        GroupPtr b = group();
        G = direct_product(a, b);
      } else {
        throw ParseError("unknown group constructor '" + name + "'", at);
      }
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("invalid group parameters: ") + e.what());
    }
    expect(')');
    return G;
  }
};

} // namespace

GroupPtr construct(std::string_view description) {
  return DescriptionParser(description).parse();
}

} // namespace fourg
