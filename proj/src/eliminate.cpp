#include <algorithm>
#include <stdexcept>

#include "fourg/actions.hpp"
#include "fourg/catalog.hpp"
#include "fourg/errors.hpp"

namespace fourg {

std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::not_full: return "not-full";
  case Verdict::impossible: return "impossible";
  case Verdict::full_candidate: return "full-candidate";
  }
  return "unknown";
}

namespace {

FamilyOneResult family_one(int g, const std::vector<GroupPtr>& catalog,
                           const SearchOptions& options) {
  FamilyOneResult r;
  const int n = 4 * g;
  r.signature = fuchsian_signature(0, {2, n, n});

  auto cyc = cyclic(n, "C");
  Element C = cyc->generators().front();
  r.forced = GeneratingVector{cyc, {2, n, n}, {cyc->pow(C, 2 * g), cyc->pow(C, 2 * g - 1), C}};
  if (!is_smooth(r.forced))
    throw InvariantViolation("family 1: forced cyclic vector is not smooth");
  for (const auto& G : catalog)
    r.catalog_classes += classify(G, {2, n, n}, options).size();

  // <B, C | B^2 = C^{2g}, C^{4g} = 1, B^-1 C B = C^{2g-1}>
  auto Gp = metacyclic(n, 2, 2 * g - 1, 2 * g, "C", "B");
  r.extension_group = Gp;
  Element Cp = Gp->generators()[0], B = Gp->generators()[1];
  r.extension = GeneratingVector{Gp, {2, 4, n}, {Gp->mul(Gp->inv(Cp), Gp->inv(B)), B, Cp}};

  // x1 = x2'^2, x2 = x2'^-1 x3' x2', x3 = x3' must reproduce the forced vector
  // under C -> C.
  std::vector<Element> restricted{Gp->pow(B, 2), Gp->product({Gp->inv(B), Cp, B}), Cp};
  std::vector<Element> src{C}, img{Cp};
  auto embed = extend_to_homomorphism(*cyc, src, *Gp, img);
  bool consistent = embed.has_value() && is_smooth(r.extension);
  for (std::size_t i = 0; consistent && i < 3; ++i)
    consistent = (*embed)[r.forced.elements[i].id] == restricted[i];
  r.restriction_consistent = consistent;
  r.verdict = consistent ? Verdict::not_full : Verdict::full_candidate;
  return r;
}

FamilyTwoResult family_two(int g, const std::vector<GroupPtr>& catalog,
                           const SearchOptions& options) {
  FamilyTwoResult r;
  const int n = 4 * g;
  r.signature = fuchsian_signature(0, {3, 6, 2 * g});
  r.divisibility = n % 3 == 0 && n % 6 == 0;
  // <C> has index 2 and A^3 = 1; A^2 = C^t forces A = C^{-t} in <C>, so
  // <A, C> = <C> has order 2g, never 4g.
  auto cyc = cyclic(2 * g, "C");
  Element C = cyc->generators().front();
  for (int t = 0; t < 2 * g; ++t) {
    Element A = cyc->pow(C, -t);
    Element pair[] = {A, C};
    if (cyc->generated_order(pair) != static_cast<std::size_t>(n))
      r.contradictions.push_back(t);
  }
  std::size_t found = 0;
  for (const auto& G : catalog) {
    std::size_t k = smooth_vectors(G, r.signature.proper_periods, options).size();
    r.catalog.push_back({G->tag().description, k});
    found += k;
  }
  bool all = static_cast<int>(r.contradictions.size()) == 2 * g;
  r.verdict = all && found == 0 ? Verdict::impossible : Verdict::full_candidate;
  return r;
}

FamilyThreeResult family_three(int g, const std::vector<GroupPtr>& catalog,
                               const SearchOptions& options) {
  FamilyThreeResult r;
  const int m = 2 * g;
  r.signature = fuchsian_signature(0, {4, 4, m});
  for (int t = 0; t < m; ++t)
    if ((2 * (t + 1)) % m == 0)
      r.solutions.push_back(t);

  bool swap_branch = false;
  for (int t : r.solutions) {
    FamilyThreeResult::Branch br;
    br.t = t;
    GroupPtr G;
    try {
      // <C, A | C^{2g}, A^2 = C^g, A C A^-1 = C^t>
      G = metacyclic(m, 2, t, g, "C", "A");
      br.group_exists = true;
    } catch (const std::invalid_argument& e) {
      br.rejected = true;
      br.reason = std::string("relations inconsistent: ") + e.what();
      r.branches.push_back(br);
      continue;
    }
    Element C = G->generators()[0], A = G->generators()[1];
    Element B = G->mul(G->inv(A), G->inv(C));
    GeneratingVector v{G, {4, 4, m}, {A, B, C}};
    if (!is_smooth(v)) {
      br.rejected = true;
      br.reason = "A^-1 C^-1 has order " + std::to_string(G->element_order(B)) +
                  ", not 4 (A has order " + std::to_string(G->element_order(A)) + ")";
      r.branches.push_back(br);
      continue;
    }
    // A -> A^-1 C^-1, C -> C^-1
    Element srcs[] = {A, C};
    Element imgs[] = {B, G->inv(C)};
    auto alpha = make_automorphism(G, srcs, imgs);
    if (alpha && (*alpha)(B) == A && alpha->is_involution()) {
      br.swap_automorphism = true;
      auto Gp = semidirect_by_automorphism(*alpha, 2, "D");
      Element D = Gp->generators().back();
      // embed G in G' (same indices for the first |G| elements)
      GeneratingVector ext{Gp, {2, 4, 2 * m}, {D, B, Gp->mul(D, Gp->inv(A))}};
      bool ok = is_smooth(ext) && Gp->product({D, B, D}) == A &&
                Gp->pow(ext.elements[2], 2) == C;
      if (!ok)
        throw InvariantViolation("family 3: extension to (2,4,4g) failed");
      br.extension_group = Gp;
      swap_branch = true;
    } else {
      br.reason = "no swap automorphism";
    }
    r.branches.push_back(br);
  }

  for (const auto& G : catalog)
    for (const auto& v : smooth_vectors(G, {4, 4, m}, options)) {
      ++r.catalog_vectors;
      Element srcs[] = {v.elements[0], v.elements[1]};
      Element imgs[] = {v.elements[1], v.elements[0]};
      if (make_automorphism(G, srcs, imgs))
        ++r.catalog_vectors_with_swap;
    }
  if (swap_branch && r.catalog_vectors == r.catalog_vectors_with_swap)
    r.verdict = Verdict::not_full;
  return r;
}

} // namespace

EliminationReport eliminate_cases(int g, const SearchOptions& options) {
  if (g < 2)
    throw std::invalid_argument("eliminate_cases: g must be >= 2");
  EliminationReport rep;
  rep.genus = g;
  const auto catalog = groups_of_order(4 * g).groups;
  rep.family1 = family_one(g, catalog, options);
  rep.family2 = family_two(g, catalog, options);
  rep.family3 = family_three(g, catalog, options);
  return rep;
}

std::vector<ExceptionalCandidate> exceptional_search(int g, const std::vector<GroupPtr>& groups,
                                                     const SearchOptions& options) {
  for (const auto& G : groups)
    if (G->order() != static_cast<std::size_t>(4 * g))
      throw std::invalid_argument("exceptional_search: group " + G->tag().description +
                                  " has order " + std::to_string(G->order()) + ", expected " +
                                  std::to_string(4 * g));
  std::vector<ExceptionalCandidate> out;
  for (const auto& t : enumerate_4g_signatures(g)) {
    if (t.family != SignatureFamily::sporadic &&
        t.family != SignatureFamily::quadruple_exceptional)
      continue;
    for (const auto& G : groups)
      for (auto& cls : classify(G, t.signature.proper_periods, options))
        out.push_back({t.signature, t.family, G, std::move(cls)});
  }
  return out;
}

std::vector<Signature> candidate_full_signatures(int g, const std::vector<GroupPtr>& groups,
                                                 const SearchOptions& options) {
  const EliminationReport elim = eliminate_cases(g, options);
  std::vector<Signature> out;
  for (const auto& t : enumerate_4g_signatures(g)) {
    Verdict v = Verdict::full_candidate;
    if (t.family == SignatureFamily::family1)
      v = elim.family1.verdict;
    else if (t.family == SignatureFamily::family2)
      v = elim.family2.verdict;
    else if (t.family == SignatureFamily::family3)
      v = elim.family3.verdict;
    if (v != Verdict::full_candidate)
      continue;
    for (const auto& G : groups)
      if (!smooth_vectors(G, t.signature.proper_periods, options).empty()) {
        out.push_back(t.signature);
        break;
      }
  }
  return out;
}

} // namespace fourg
