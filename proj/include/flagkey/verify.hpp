#pragma once
// Exhaustive property verification over bounded ranges: each suite sweeps a
// finite family of instances, records failures, and respects an optional
// instance budget.

#include <chrono>
#include <ostream>

#include "flagkey/crystal.hpp"
#include "flagkey/flagged.hpp"

namespace flagkey {

struct VerificationReport {
  std::string id;
  std::string params;
  long long instances = 0;
  long long failed = 0;
  std::vector<std::string> failures; // first few messages only
  double wall_ms = 0.0;
  bool aborted = false; // stopped early by the instance budget
  bool passed() const { return !aborted && failed == 0; }
};

namespace detail {

class SuiteRun {
public:
  SuiteRun(std::string id, std::string params, long long max_instances)
      : budget_(max_instances), start_(std::chrono::steady_clock::now()) {
    rep_.id = std::move(id);
    rep_.params = std::move(params);
  }

  // Counts one instance; false once the budget is exhausted.
  bool tick() {
    if (budget_ > 0 && rep_.instances >= budget_) {
      rep_.aborted = true;
      return false;
    }
    ++rep_.instances;
    return true;
  }
  bool out_of_budget() const { return rep_.aborted; }

  void check(bool ok, const std::string& msg) {
    if (ok) return;
    ++rep_.failed;
    if (rep_.failures.size() < 8) rep_.failures.push_back(msg);
  }

  VerificationReport finish() {
    rep_.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             start_)
                       .count();
    return rep_;
  }

private:
  VerificationReport rep_;
  long long budget_;
  std::chrono::steady_clock::time_point start_;
};

inline std::vector<WeakComposition> compositions_up_to(int len, int total) {
  std::vector<WeakComposition> out;
  WeakComposition cur(len, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == len) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

inline std::string show(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

inline std::string show(const IncreasingFactorization& f) {
  std::string s = "(";
  const auto& d = f.display();
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) s += "|";
    for (int x : d[i]) s += std::to_string(x);
  }
  return s + ")";
}

} // namespace detail

// pi_i either fixes a key polynomial or swaps the indexing composition,
// depending on how alpha_i compares with alpha_{i+1}.
inline VerificationReport verify_pi_recursion(long long max_instances = 0) {
  detail::SuiteRun run("pi-recursion", "|alpha|<=5, len 4, i<4", max_instances);
  for (const WeakComposition& a : detail::compositions_up_to(4, 5)) {
    IntPolynomial ka = key_polynomial(a);
    for (int i = 1; i <= 3 && run.tick(); ++i) {
      IntPolynomial lhs = isobaric(i, ka);
      IntPolynomial rhs = part(a, i) > part(a, i + 1) ? key_polynomial(act(a, Permutation::s(i))) : ka;
      run.check(lhs == rhs, "pi_" + std::to_string(i) + " on kappa_" + detail::show(a));
    }
    if (run.out_of_budget()) break;
  }
  return run.finish();
}

// The tableau, operator-chain, and flag-recursion routes produce the same
// flagged key polynomial.
inline VerificationReport verify_kappa_routes(long long max_instances = 0) {
  detail::SuiteRun run("kappa-routes", "|alpha|<=5, len 4, flag excess<=1", max_instances);
  for (const WeakComposition& a : detail::compositions_up_to(4, 5)) {
    for (const Flag& phi : flags_within(4, 1)) {
      if (!run.tick()) return run.finish();
      IntPolynomial by_enum = flagged_key_enum(a, phi);
      IntPolynomial by_chain = flagged_key_pichain(a, phi);
      IntPolynomial by_rec = flagged_key_recursive(a, phi);
      std::string tag = detail::show(a) + " " + detail::show(phi.values(4));
      run.check(by_enum == by_chain, "tableaux vs operator chain at " + tag);
      run.check(by_enum == by_rec, "tableaux vs recursion at " + tag);
    }
  }
  return run.finish();
}

// The weakly increasing factorization model matches the tableau route.
inline VerificationReport verify_rs_model(long long max_instances = 0) {
  detail::SuiteRun run("rs-model", "|alpha|<=5, len 3, flag excess<=2", max_instances);
  for (const WeakComposition& a : detail::compositions_up_to(3, 5)) {
    for (const Flag& phi : flags_within(3, 2)) {
      if (!run.tick()) return run.finish();
      run.check(flagged_key_rs(a, phi) == flagged_key_enum(a, phi),
                "factorization model at " + detail::show(a) + " " + detail::show(phi.values(3)));
    }
  }
  return run.finish();
}

// Insertion is a weight-compatible bijection onto pairs (descent tableau of a
// Yamanouchi word, flagged key tableau).
inline VerificationReport verify_flagged_bijection(long long max_instances = 0) {
  detail::SuiteRun run("weak-eg-bijection", "S_4, flag excess<=1, n=phi(3)", max_instances);
  for (const Permutation& w : symmetric_group(4)) {
    for (const Flag& phi : flags_within(3, 1)) {
      int n = phi(3);
      std::vector<std::pair<Tableau, Tableau>> lhs, rhs;
      bool ok = true;
      for (const IncreasingFactorization& f : enumerate_rfc(w, phi, n)) {
        if (!run.tick()) return run.finish();
        Tableau P = weak_p(f), Q = weak_q(f);
        run.check(trimmed(Q.weight()) == trimmed(f.weight()),
                  "recording weight differs from block lengths at " + detail::show(f));
        run.check(is_flagged(Q, phi), "recording tableau not flagged at " + detail::show(f));
        lhs.push_back({P, Q});
      }
      for (const Word& sigma : yamanouchi_words(w)) {
        Tableau D = weak_descent_tableau(sigma);
        auto des = weak_descent_composition(sigma);
        if (!des) {
          run.check(false, "virtual Yamanouchi word " + detail::show(sigma));
          ok = false;
          continue;
        }
        for (const Tableau& T : enumerate_sskt(*des, phi)) rhs.push_back({D, T});
      }
      if (!ok) continue;
      std::sort(lhs.begin(), lhs.end());
      std::sort(rhs.begin(), rhs.end());
      bool injective = std::adjacent_find(lhs.begin(), lhs.end()) == lhs.end();
      run.check(injective, "insertion not injective for w=" + detail::show(w.oneline()) +
                               " phi=" + detail::show(phi.values(3)));
      run.check(lhs == rhs, "image mismatch for w=" + detail::show(w.oneline()) +
                                " phi=" + detail::show(phi.values(3)));
    }
  }
  return run.finish();
}

// Raising operators commute with the recording tableau, including where each
// side vanishes, and preserve the flagged set.
inline VerificationReport verify_intertwining(long long max_instances = 0) {
  detail::SuiteRun run("crystal-intertwining", "S_4, flag excess<=1, n=phi(3)", max_instances);
  for (const Permutation& w : symmetric_group(4)) {
    for (const Flag& phi : flags_within(3, 1)) {
      int n = phi(3);
      auto list = enumerate_rfc(w, phi, n);
      std::set<IncreasingFactorization> members(list.begin(), list.end());
      for (const IncreasingFactorization& f : list) {
        Tableau Q = weak_q(f);
        for (int i = 1; i < n; ++i) {
          if (!run.tick()) return run.finish();
          auto up = rf_raise(f, i);
          auto upq = kt_raise(Q, i);
          std::string tag = "e_" + std::to_string(i) + " at " + detail::show(f);
          if (up) {
            run.check(members.count(*up) > 0, "raising left the flagged set, " + tag);
            run.check(weak_p(*up) == weak_p(f), "insertion tableau changed, " + tag);
            run.check(upq && weak_q(*up) == *upq, "recording tableaux do not intertwine, " + tag);
          } else {
            run.check(!upq, "vanishing disagrees, " + tag);
          }
        }
      }
    }
  }
  return run.finish();
}

// The flagged set is carried by the Demazure operator chain applied to the
// standard-flagged set inside the full factorization crystal.
inline VerificationReport verify_demazure_chain(long long max_instances = 0) {
  detail::SuiteRun run("demazure-chain", "S_4, flag excess<=1, n=phi(3)", max_instances);
  for (const Permutation& w : symmetric_group(4)) {
    for (const Flag& phi : flags_within(3, 1)) {
      if (!run.tick()) return run.finish();
      int n = phi(3);
      auto ambient = enumerate_rf(w, n);
      auto seed = enumerate_rfc(w, Flag::standard(), n);
      std::set<IncreasingFactorization> X(seed.begin(), seed.end());
      for (int i = n; i >= 1; --i) X = rf_demazure_descending(std::move(X), std::min(n, phi(i)), i, ambient);
      auto want = enumerate_rfc(w, phi, n);
      run.check(X == std::set<IncreasingFactorization>(want.begin(), want.end()),
                "operator chain misses the flagged set for w=" + detail::show(w.oneline()) +
                    " phi=" + detail::show(phi.values(3)));
    }
  }
  return run.finish();
}

// Characters of Demazure subcrystals obey the isobaric operator formula, and
// the generated set does not depend on the chosen reduced word.
inline VerificationReport verify_demazure_character(long long max_instances = 0) {
  detail::SuiteRun run("demazure-character", "S_4 factorizations, n=3, sigma in S_3", max_instances);
  for (const Permutation& w : symmetric_group(4)) {
    auto ambient = enumerate_rf(w, 3);
    for (const IncreasingFactorization& u : ambient) {
      if (!is_highest_weight_rf(u)) continue;
      for (const Permutation& sigma : symmetric_group(3)) {
        if (!run.tick()) return run.finish();
        auto D = demazure_subcrystal(u, sigma, ambient);
        IntPolynomial want =
            apply_pi_perm(sigma, IntPolynomial::monomial(trimmed(u.weight())));
        std::string tag = "u=" + detail::show(u) + " sigma=" + detail::show(sigma.oneline());
        run.check(character(D) == want, "character formula fails, " + tag);
        for (const Word& word : reduced_words(sigma))
          run.check(rf_demazure_word({u}, word, ambient) == D,
                    "word dependence in Demazure set, " + tag);
      }
    }
  }
  return run.finish();
}

// Schubert polynomials from flagged factorizations match the divided
// difference recursion, and expand into flagged key polynomials with
// Yamanouchi multiplicities.
inline VerificationReport verify_schubert(long long max_instances = 0) {
  detail::SuiteRun run("schubert", "S_4, flag excess<=1", max_instances);
  std::map<Permutation, IntPolynomial> oracle;
  oracle[Permutation::from_oneline({4, 3, 2, 1})] = IntPolynomial::monomial({3, 2, 1});
  auto schubert_oracle = [&](auto&& self, const Permutation& w) -> const IntPolynomial& {
    auto it = oracle.find(w);
    if (it != oracle.end()) return it->second;
    int i = 1;
    while (w.right_descent(i)) ++i; // w != w_0 has an ascent
    IntPolynomial val = divided_difference(i, self(self, w.times_s(i)));
    return oracle.emplace(w, std::move(val)).first->second;
  };
  for (const Permutation& w : symmetric_group(4)) {
    if (!run.tick()) return run.finish();
    run.check(schubert(w) == schubert_oracle(schubert_oracle, w),
              "divided difference recursion fails at w=" + detail::show(w.oneline()));
    auto expansion = key_expansion(w);
    for (const Flag& phi : flags_within(3, 1)) {
      if (!run.tick()) return run.finish();
      IntPolynomial sum;
      for (const auto& [alpha, mult] : expansion)
        sum += static_cast<long long>(mult) * flagged_key_pichain(alpha, phi);
      run.check(flagged_schubert(w, phi) == sum,
                "key expansion fails at w=" + detail::show(w.oneline()) +
                    " phi=" + detail::show(phi.values(3)));
    }
  }
  return run.finish();
}

// Each commutation class holds exactly one Yamanouchi word, and the insertion
// tableau of every member is that word's descent tableau.
inline VerificationReport verify_yamanouchi(long long max_instances = 0) {
  detail::SuiteRun run("yamanouchi", "S_4 reduced words", max_instances);
  for (const Permutation& w : symmetric_group(4)) {
    std::set<Word> seen;
    for (const Word& rho : reduced_words(w)) {
      if (seen.count(rho)) continue;
      std::set<Word> cls = ck_class(rho);
      seen.insert(cls.begin(), cls.end());
      std::vector<Word> reps;
      for (const Word& s : cls)
        if (is_yamanouchi(s)) reps.push_back(s);
      run.check(reps.size() == 1, "commutation class of " + detail::show(rho) + " has " +
                                      std::to_string(reps.size()) + " Yamanouchi words");
      if (reps.size() != 1) continue;
      Tableau D = weak_descent_tableau(reps[0]);
      for (const Word& s : cls) {
        if (!run.tick()) return run.finish();
        run.check(weak_p_word(s) == D,
                  "insertion tableau of " + detail::show(s) + " differs from the descent tableau");
      }
    }
  }
  return run.finish();
}

using SuiteFn = VerificationReport (*)(long long);

inline const std::vector<std::pair<std::string, SuiteFn>>& verification_suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"pi-recursion", &verify_pi_recursion},
      {"kappa-routes", &verify_kappa_routes},
      {"rs-model", &verify_rs_model},
      {"weak-eg-bijection", &verify_flagged_bijection},
      {"crystal-intertwining", &verify_intertwining},
      {"demazure-chain", &verify_demazure_chain},
      {"demazure-character", &verify_demazure_character},
      {"schubert", &verify_schubert},
      {"yamanouchi", &verify_yamanouchi},
  };
  return suites;
}

// Stable, time-free rendering (timings belong on a side channel).
inline void print_report(std::ostream& os, const VerificationReport& rep) {
  os << rep.id << ": ";
  if (rep.aborted)
    os << "ABORTED after " << rep.instances << " instances";
  else
    os << (rep.passed() ? "PASS" : "FAIL") << " (" << rep.instances << " instances, " << rep.failed
       << " failures)";
  os << " [" << rep.params << "]\n";
  for (const std::string& msg : rep.failures) os << "  " << msg << "\n";
  if (rep.failed > static_cast<long long>(rep.failures.size()))
    os << "  ... " << (rep.failed - rep.failures.size()) << " further failures\n";
}

} // namespace flagkey
