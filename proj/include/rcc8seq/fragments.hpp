#pragma once

#include "rcc8seq/network.hpp"

namespace rcc8seq {

enum class FragmentName { H8, Q8, C8, Hntpp, Full };

inline constexpr std::array<FragmentName, 5> kAllFragments = {
    FragmentName::H8, FragmentName::Q8, FragmentName::C8, FragmentName::Hntpp,
    FragmentName::Full};

constexpr std::string_view fragment_name(FragmentName f) {
  switch (f) {
    case FragmentName::H8: return "H8";
    case FragmentName::Q8: return "Q8";
    case FragmentName::C8: return "C8";
    case FragmentName::Hntpp: return "HNTPP";
    case FragmentName::Full: return "FULL";
  }
  return "?";
}

constexpr bool fragment_contains(FragmentName f, Relation r) {
  switch (f) {
    case FragmentName::H8: return in_H8(r);
    case FragmentName::Q8: return in_Q8(r);
    case FragmentName::C8: return in_C8(r);
    case FragmentName::Hntpp: return in_Hntpp(r);
    case FragmentName::Full: return true;
  }
  return false;
}

/// A Cartesian fragment: one relation set per time index.
struct FragmentSpec {
  Semantics sem;
  std::vector<FragmentName> per_index;

  FragmentSpec(Semantics s, std::vector<FragmentName> names)
      : sem(s), per_index(std::move(names)) {
    if (static_cast<int>(per_index.size()) != sem.length())
      throw std::invalid_argument("fragment spec length does not match semantics");
  }

  FragmentName at(int i) const { return per_index.at(static_cast<std::size_t>(i - 1)); }
};

inline bool conforms(const SeqRelation& r, const FragmentSpec& spec) {
  r.check_compatible(SeqRelation::universal(spec.sem));
  for (int i = 1; i <= r.length(); ++i)
    if (!fragment_contains(spec.at(i), r.at(i))) return false;
  return true;
}

/// Componentwise refinement toward a basic tuple: h_H8 where the fragment is
/// inside H8 or Q8, h_C8 otherwise.
inline SeqRelation H_S_refine(const SeqRelation& r, const FragmentSpec& spec) {
  r.check_compatible(SeqRelation::universal(spec.sem));
  std::vector<Relation> out(r.parts());
  for (int i = 1; i <= r.length(); ++i) {
    FragmentName f = spec.at(i);
    bool use_h8 = f == FragmentName::H8 || f == FragmentName::Q8 || f == FragmentName::Hntpp;
    out[static_cast<std::size_t>(i - 1)] = use_h8 ? h_H8(r.at(i)) : h_C8(r.at(i));
  }
  return SeqRelation(r.semantics(), std::move(out));
}

enum class Pattern { Prop2, Prop3EvenHntpp, Prop3OddHntpp, Prop4, Theorem1 };

constexpr std::string_view pattern_name(Pattern p) {
  switch (p) {
    case Pattern::Prop2: return "PROP2";
    case Pattern::Prop3EvenHntpp: return "PROP3_EVEN_HNTPP";
    case Pattern::Prop3OddHntpp: return "PROP3_ODD_HNTPP";
    case Pattern::Prop4: return "PROP4";
    case Pattern::Theorem1: return "THEOREM1";
  }
  return "?";
}

struct FragmentReport {
  /// Per index (outer, 0-based storage for index 1..m): the fragment names
  /// containing every relation of that slice.
  std::vector<std::vector<FragmentName>> per_index;
  std::vector<Pattern> patterns;
};

inline FragmentReport classify(const Network& n) {
  const int m = n.semantics().length();
  const bool neighbour = n.semantics().kind() == SemanticsKind::NeighbourInstants;

  // all_in[f][i]: every stored relation's component i lies in fragment f.
  std::array<std::vector<bool>, 5> all_in;
  for (auto& v : all_in) v.assign(static_cast<std::size_t>(m) + 1, true);
  for (int x = 0; x < n.var_count(); ++x)
    for (int y = x + 1; y < n.var_count(); ++y)
      for (int i = 1; i <= m; ++i) {
        Relation r = n.rel(x, y).at(i);
        Relation rc = r.converse();
        for (std::size_t f = 0; f < kAllFragments.size(); ++f) {
          // Both orientations of the pair belong to the network.
          if (!fragment_contains(kAllFragments[f], r) ||
              !fragment_contains(kAllFragments[f], rc))
            all_in[f][static_cast<std::size_t>(i)] = false;
        }
      }

  FragmentReport report;
  report.per_index.resize(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i)
    for (std::size_t f = 0; f < kAllFragments.size(); ++f)
      if (all_in[f][static_cast<std::size_t>(i)])
        report.per_index[static_cast<std::size_t>(i - 1)].push_back(kAllFragments[f]);

  auto h = [&](int i) { return all_in[0][static_cast<std::size_t>(i)]; };
  auto q = [&](int i) { return all_in[1][static_cast<std::size_t>(i)]; };
  auto c = [&](int i) { return all_in[2][static_cast<std::size_t>(i)]; };
  auto hn = [&](int i) { return all_in[3][static_cast<std::size_t>(i)]; };

  if (neighbour) {
    bool prop2 = true;
    for (int i = 1; i <= m && prop2; ++i) prop2 = q(i) || h(i);
    for (int i = 1; i < m && prop2; ++i) prop2 = q(i) || q(i + 1);
    if (prop2) report.patterns.push_back(Pattern::Prop2);

    bool even_hn = true, odd_hn = true;
    for (int i = 1; i <= m; ++i) {
      if (i % 2 == 0) {
        even_hn = even_hn && hn(i);
        odd_hn = odd_hn && q(i);
      } else {
        even_hn = even_hn && q(i);
        odd_hn = odd_hn && hn(i);
      }
    }
    if (even_hn) report.patterns.push_back(Pattern::Prop3EvenHntpp);
    if (odd_hn) report.patterns.push_back(Pattern::Prop3OddHntpp);
  } else {
    bool prop4 = true, theorem1 = true;
    for (int i = 1; i <= m; ++i) {
      if (i % 2 == 1) {
        prop4 = prop4 && (h(i) || q(i));
        theorem1 = theorem1 && h(i);
      } else {
        bool any = h(i) || q(i) || c(i);
        prop4 = prop4 && any;
        theorem1 = theorem1 && any;
      }
    }
    if (prop4) report.patterns.push_back(Pattern::Prop4);
    if (theorem1) report.patterns.push_back(Pattern::Theorem1);
  }
  return report;
}

inline std::string to_string(const FragmentReport& report) {
  std::string out;
  for (std::size_t i = 0; i < report.per_index.size(); ++i) {
    out += "index " + std::to_string(i + 1) + ":";
    for (FragmentName f : report.per_index[i]) {
      out += ' ';
      out += fragment_name(f);
    }
    out += '\n';
  }
  for (Pattern p : report.patterns) {
    out += pattern_name(p);
    out += '\n';
  }
  return out;
}

enum class TractableVerdict { Sat, Unsat, NotCovered };

/// Closure-based polynomial decision for networks matching a pattern whose
/// fragment is closed under the reasoning operators (the alternating
/// Q8/HNTPP patterns at neighbouring instants, and the H8-instants pattern
/// over a time partition). Decides weak satisfiability there; everything
/// else is reported as not covered.
inline TractableVerdict decide_tractable(const Network& n,
                                         const CompositionTable& table = composition_table()) {
  FragmentReport report = classify(n);
  bool covered = false;
  for (Pattern p : report.patterns) {
    if (p == Pattern::Prop3EvenHntpp || p == Pattern::Prop3OddHntpp || p == Pattern::Theorem1)
      covered = true;
  }
  if (!covered) return TractableVerdict::NotCovered;
  Network closed = algebraic_closure(n, table);
  return closed.trivially_unsatisfiable() ? TractableVerdict::Unsat : TractableVerdict::Sat;
}

}  // namespace rcc8seq
