#include "nilorb/verify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <set>

#include "nilorb/combinatorics.hpp"
#include "nilorb/decomposition.hpp"
#include "nilorb/dynkin.hpp"
#include "nilorb/error.hpp"
#include "nilorb/exceptional.hpp"
#include "nilorb/jordan.hpp"
#include "nilorb/orbit_invariants.hpp"
#include "nilorb/springer.hpp"

namespace nilorb {

void SuiteResult::expect(bool condition, std::string failure) {
  ++checks;
  if (!condition) failures.push_back(std::move(failure));
}

bool VerifyReport::ok() const noexcept {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

std::size_t VerifyReport::total_checks() const noexcept {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.checks;
  return n;
}

namespace {

struct FamilyRange {
  Family family;
  int min_rank;
};

constexpr FamilyRange kClassical[] = {
    {Family::A, 1}, {Family::B, 2}, {Family::C, 2}, {Family::D, 3}};

template <typename Fn>
void for_each_subset(const LieType& type, Fn&& fn) {
  for (std::uint32_t mask = 0; mask < (1u << type.rank()); ++mask) {
    fn(SubsetJ::from_mask(mask, type.rank()));
  }
}

std::string where(const LieType& t, const SubsetJ& j) { return t.name() + " J=" + j.to_string(); }

}  // namespace

SuiteResult verify_lie_core(const VerifyOptions&) {
  SuiteResult s{"lie-core", 0, {}};
  for (int m = 0; m <= 10; ++m) {
    for (const auto& p : partitions_of(m)) {
      const auto h = conjugate_heights(p);
      s.expect(std::accumulate(h.begin(), h.end(), 0) == p.total(), p.to_string() + ": heights do not sum to total");
      const auto twice = conjugate_heights(Partition(h));
      s.expect(std::equal(twice.begin(), twice.end(), p.parts().begin(), p.parts().end()),
               p.to_string() + ": conjugating twice is not the identity");
      s.expect(syt_count(p) == syt_count(p.conjugate()), p.to_string() + ": SYT count not conjugation invariant");
    }
  }

  for (Family f : {Family::E6, Family::E7}) {
    const auto type = LieType::exceptional(f);
    const auto diagram = DynkinDiagram::of(type);
    for_each_subset(type, [&](const SubsetJ& j) {
      bool ok = true;
      try {
        const auto kept = j.complement();
        (void)classify_subdiagram(diagram, kept);
      } catch (const std::exception&) {
        ok = false;
      }
      s.expect(ok, where(type, j) + ": sub-diagram classification failed");
    });
  }
  const auto e7 = DynkinDiagram::of(LieType::exceptional(Family::E7));
  s.expect(classify_subdiagram(e7, SubsetJ({7}, 7).complement()).render() == "E_6", "E7 minus node 7 is not E_6");
  s.expect(classify_subdiagram(e7, SubsetJ({1}, 7).complement()).render() == "D_6", "E7 minus node 1 is not D_6");
  return s;
}

SuiteResult verify_formula_oracle(const VerifyOptions& options) {
  SuiteResult s{"formula-oracle", 0, {}};
  for (const auto& fr : kClassical) {
    for (int n = fr.min_rank; n <= options.max_rank; ++n) {
      const LieType type(fr.family, n);
      for_each_subset(type, [&](const SubsetJ& j) {
        const auto x = representative_matrix(type, j);
        const auto ranks = power_ranks(x);
        const auto oracle = jordan_partition(x);
        const auto formula = orbit_partition(type, j).partition;
        s.expect(oracle == formula, where(type, j) + ": Jordan type " + oracle.to_string() + " but formula gives " +
                                        formula.to_string());
        bool shape_ok = true;
        for (std::size_t k = 1; k < ranks.size(); ++k) {
          if (ranks[k] >= ranks[k - 1]) shape_ok = false;
          if (k + 1 < ranks.size() && ranks[k - 1] - ranks[k] < ranks[k] - ranks[k + 1]) shape_ok = false;
        }
        s.expect(shape_ok, where(type, j) + ": rank sequence not strictly decreasing and convex");
        if (fr.family == Family::A) {
          s.expect(x.is_strictly_upper_triangular(), where(type, j) + ": X_J not strictly upper triangular");
        }
      });
    }
  }
  return s;
}

SuiteResult verify_orbit_invariants(const VerifyOptions& options) {
  SuiteResult s{"orbit-invariants", 0, {}};
  for (const auto& fr : kClassical) {
    for (int n = fr.min_rank; n <= options.max_rank; ++n) {
      const LieType type(fr.family, n);
      std::map<Partition, std::uint64_t> z_by_orbit;
      for_each_subset(type, [&](const SubsetJ& j) {
        const auto z = center_fiber(type, j);
        const auto orbit = orbit_partition(type, j);
        const auto k = kernel_check(type, j);
        s.expect(k.holds, where(type, j) + ": |Z| * |A| = " + std::to_string(k.zj_order * k.a_order) +
                              " but |pi_1| = " + std::to_string(k.pi1_order));
        if (fr.family == Family::A) {
          s.expect(k.zj_order == k.pi1_order && k.a_order == 1, where(type, j) + ": Z(J) differs from pi_1 in type A");
        }
        s.expect(orbit.partition.total() == type.matrix_size(), where(type, j) + ": partition total mismatch");
        s.expect(center_order(type) % static_cast<int>(z.order()) == 0,
                 where(type, j) + ": |Z(J)| does not divide the center order");
        auto [it, fresh] = z_by_orbit.emplace(orbit.partition, z.order());
        s.expect(fresh || it->second == z.order(), where(type, j) + ": Z differs between J-sets of one orbit");
        s.expect(!orbit.orbit_label_ambiguous || (fr.family == Family::D && orbit.partition.very_even()),
                 where(type, j) + ": ambiguity flag outside very even type D");
      });
      const auto full = orbit_partition(type, SubsetJ::full(n)).partition;
      s.expect(full == Partition(std::vector<int>(static_cast<std::size_t>(type.matrix_size()), 1)),
               type.name() + ": full J is not the zero orbit");
    }
  }
  for (Family f : {Family::E6, Family::E7}) {
    const auto type = LieType::exceptional(f);
    for_each_subset(type, [&](const SubsetJ& j) {
      s.expect(center_order(type) % static_cast<int>(center_fiber(type, j).order()) == 0,
               where(type, j) + ": |Z(J)| does not divide the center order");
    });
  }
  return s;
}

SuiteResult verify_paving(const VerifyOptions& options) {
  SuiteResult s{"springer-paving", 0, {}};
  const int top = std::min({options.max_rank + 1, options.paving_bound, kMaxEnumerationBound});
  EnumerationOptions eo;
  eo.bound = std::max(1, top);
  eo.workers = options.workers;
  eo.keep_cells = false;

  for (int m = 1; m <= top; ++m) {
    for (const auto& p : partitions_of(m)) {
      const std::string tag = p.to_string();
      const auto paving = enumerate_cells(p, eo);
      int dmax = -1;
      try {
        dmax = max_cell_dimension(p);
      } catch (const DataIntegrityError& e) {
        s.expect(false, tag + ": " + e.what());
      }
      s.expect(BigInt(paving.cell_count()) == multinomial(p), tag + ": cell count is not the multinomial");
      s.expect(paving.max_dimension() == dmax, tag + ": top cell dimension differs from the fiber dimension");
      s.expect(BigInt(paving.top_cell_count()) == syt_count(p), tag + ": top cells differ from SYT count");

      const int n = m - 1;
      s.expect(std::int64_t{n} * (n + 1) - 2 * dmax == orbit_dimension_typeA(n, p),
               tag + ": fiber dimension and orbit dimension disagree");

      const auto data = labeled_diagrams(p);
      s.expect(is_nonempty_cell(data.sigma, p) && cell_dimension(data.sigma, p) == dmax,
               tag + ": sigma-cell missing or not maximal");

      const auto roots = phi_x(p);
      bool overlap = false;
      for (const auto& a : roots) {
        for (const auto& b : roots) {
          if (!(a == b) && a.i <= b.i && b.i < b.j && b.j <= a.j) overlap = true;
        }
      }
      s.expect(!overlap, tag + ": phi_x has overlapping roots");

      const auto mtym = pair_matrix(data.tym);
      const auto mstd = pair_matrix(data.standard);
      bool conj = true;
      for (int k = 1; k <= m; ++k) {
        for (int l = 1; l <= m; ++l) {
          if (mtym(data.sigma(k) - 1, data.sigma(l) - 1) != mstd(k - 1, l - 1)) conj = false;
        }
      }
      s.expect(conj, tag + ": sigma does not conjugate M^Std to M^Tym");

      if (m <= 6) {
        // Matrix route to the nonemptiness test: Ad(w^{-1}) x lies in Lie B.
        std::vector<int> w(static_cast<std::size_t>(m));
        std::iota(w.begin(), w.end(), 1);
        std::uint64_t upper = 0;
        bool agree = true;
        do {
          const TableauPermutation perm(w);
          std::vector<std::size_t> relabel(static_cast<std::size_t>(m));
          const auto inv = perm.inverse();
          for (int a = 1; a <= m; ++a) relabel[a - 1] = static_cast<std::size_t>(inv(a) - 1);
          const bool in_borel = mtym.permuted(relabel).is_strictly_upper_triangular();
          upper += in_borel;
          if (in_borel != is_nonempty_cell(perm, p)) agree = false;
        } while (std::next_permutation(w.begin(), w.end()));
        s.expect(agree && upper == paving.cell_count(), tag + ": matrix and tableau nonemptiness tests disagree");
      }

      const auto cover = graham_cover_components(p);
      bool free_transitive = cover.count == gcd_of_parts(p) &&
                             static_cast<int>(cover.component_ids.size()) == cover.count;
      for (int g = 1; g < cover.count; ++g) {
        for (int id : cover.component_ids) {
          if (cover.deck_action(g, id) == id) free_transitive = false;
        }
      }
      std::set<int> orbit;
      for (int g = 0; g < cover.count; ++g) orbit.insert(cover.deck_action(g, 0));
      free_transitive = free_transitive && static_cast<int>(orbit.size()) == cover.count;
      s.expect(free_transitive, tag + ": deck group does not act freely and transitively");
    }
  }
  return s;
}

SuiteResult verify_decomposition(const VerifyOptions& options) {
  SuiteResult s{"graham-decomposition", 0, {}};
  for (int n = 1; n <= options.max_rank; ++n) {
    const auto records = summand_report(n);
    std::int64_t total = 0;
    for (const auto& r : records) {
      const std::string tag = "rank " + std::to_string(n) + " " + r.partition.to_string();
      s.expect(!r.characters.empty() && r.characters.front() == 0, tag + ": trivial character missing");
      s.expect(static_cast<int>(r.characters.size()) == graham_cover_components(r.partition).count,
               tag + ": character count differs from cover component count");
      s.expect(2 * std::int64_t{r.fiber_dimension} == std::int64_t{n} * (n + 1) - r.orbit_dimension,
               tag + ": 2 d_x != dim N - dim O");
      s.expect(!r.multiplicity_known, tag + ": multiplicities claimed known");
      total += 2 * r.fiber_dimension + r.orbit_dimension;
    }
    s.expect(records.size() == partitions_of(n + 1).size(), "rank " + std::to_string(n) + ": record count");
    s.expect(total == static_cast<std::int64_t>(records.size()) * n * (n + 1),
             "rank " + std::to_string(n) + ": dimension sum identity fails");
    s.expect(std::is_sorted(records.begin(), records.end(),
                            [](const auto& a, const auto& b) { return a.orbit_dimension > b.orbit_dimension; }),
             "rank " + std::to_string(n) + ": records not sorted by orbit dimension");
  }
  return s;
}

SuiteResult verify_exceptional_tables(const VerifyOptions&) {
  SuiteResult s{"exceptional-tables", 0, {}};
  for (Family f : {Family::E6, Family::E7}) {
    const auto type = LieType::exceptional(f);
    const auto corrected = validate_tables(type);
    for (const auto& c : corrected.checks) {
      s.expect(c.passed(), type.name() + " " + c.name + ": " + std::to_string(c.failures.size()) + " failure(s)" +
                               (c.failures.empty() ? "" : ", first: " + c.failures.front()));
    }
    s.expect(corrected.records == (f == Family::E6 ? 17u : 32u), type.name() + ": unexpected record count");

    std::size_t listed = 0;
    for (const auto& r : orbit_table(type)) listed += r.j_sets.size();
    s.expect(listed == corrected.subsets, type.name() + ": listed subsets do not cover the power set");

    const auto printed = validate_tables(type, TableEdition::as_printed);
    std::set<std::uint32_t> errata;
    for (const auto& e : table_errata(f)) errata.insert(erratum_subset(e, type.rank()).mask());
    s.expect(printed.flagged_subsets == errata,
             type.name() + ": printed-table inconsistencies differ from the errata list");

    for (const auto& r : orbit_table(type)) {
      if (r.bala_carter.find('\'') == std::string::npos) continue;
      const auto base = r.base_label.render();
      s.expect(f == Family::E7 && (base == "3A_1" || base == "A_3 + A_1" || base == "A_5"),
               type.name() + ": unexpected prime decoration on " + r.bala_carter);
    }
  }
  return s;
}

VerifyReport verify_all(const VerifyOptions& options) {
  using Suite = SuiteResult (*)(const VerifyOptions&);
  constexpr Suite suites[] = {verify_lie_core,      verify_formula_oracle, verify_orbit_invariants,
                              verify_paving,        verify_decomposition,  verify_exceptional_tables};
  VerifyReport report;
  const unsigned workers = options.workers ? options.workers : default_worker_count();
  if (workers <= 1) {
    for (Suite suite : suites) report.suites.push_back(suite(options));
    return report;
  }
  std::vector<std::future<SuiteResult>> futures;
  for (Suite suite : suites) futures.push_back(std::async(std::launch::async, suite, std::cref(options)));
  for (auto& f : futures) report.suites.push_back(f.get());
  return report;
}

}  // namespace nilorb
