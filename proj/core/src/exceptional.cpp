#include "nilorb/exceptional.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <sstream>

#include "exceptional_data.hpp"
#include "nilorb/error.hpp"
#include "nilorb/orbit_invariants.hpp"

namespace nilorb {

namespace {

constexpr std::array<TableErratum, 1> kE6Errata{{
    {"1256", "2A_1", "A_2"},
}};

constexpr std::array<TableErratum, 5> kE7Errata{{
    {"24567", "2A_1", "A_2"},
    {"23567", "", "2A_1"},
    {"1567", "A_2 + A_1", "A_3"},
    {"3467", "A_2 + A_1", ""},
    {"3567", "", "A_2 + A_1"},
}};

void require_exceptional_table(const LieType& type) {
  if (type.family() != Family::E6 && type.family() != Family::E7) {
    throw UnsupportedFamilyError("orbit tables exist only for E6 and E7, not " + type.name());
  }
}

FiniteGroup from_tag(detail::GroupTag tag) {
  switch (tag) {
    case detail::GroupTag::one: return FiniteGroup::trivial();
    case detail::GroupTag::z2: return FiniteGroup::cyclic(2);
    case detail::GroupTag::z3: return FiniteGroup::cyclic(3);
    case detail::GroupTag::s2: return FiniteGroup::symmetric_2();
  }
  return FiniteGroup::trivial();
}

std::vector<OrbitRecord> build_printed(std::span<const detail::RawRecord> raw, int rank) {
  std::vector<OrbitRecord> out;
  for (const auto& r : raw) {
    OrbitRecord rec;
    rec.bala_carter = std::string(r.label);
    rec.base_label = ComponentLabel::parse(strip_decorations(r.label));
    rec.z_orbit = from_tag(r.z);
    rec.pi1 = from_tag(r.pi1);
    std::istringstream in{std::string(r.j_sets)};
    std::string token;
    while (in >> token) {
      std::vector<int> elems;
      if (token != "-") {
        for (char c : token) elems.push_back(c - '0');
      }
      rec.j_sets.emplace_back(std::move(elems), rank);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<OrbitRecord> apply_errata(std::vector<OrbitRecord> records, std::span<const TableErratum> errata,
                                      int rank) {
  auto find_record = [&](std::string_view label) -> OrbitRecord& {
    for (auto& r : records) {
      if (r.bala_carter == label) return r;
    }
    throw DataIntegrityError("erratum names unknown record " + std::string(label));
  };
  for (const auto& e : errata) {
    const SubsetJ j = erratum_subset(e, rank);
    if (!e.printed_in.empty()) {
      auto& sets = find_record(e.printed_in).j_sets;
      auto it = std::find(sets.begin(), sets.end(), j);
      if (it == sets.end()) throw DataIntegrityError("erratum subset " + j.to_string() + " not printed there");
      sets.erase(it);
    }
    if (!e.belongs_to.empty()) find_record(e.belongs_to).j_sets.push_back(j);
  }
  return records;
}

struct TableCache {
  std::once_flag once;
  std::vector<OrbitRecord> printed;
  std::vector<OrbitRecord> corrected;
};

const std::vector<OrbitRecord>& cached(Family family, TableEdition edition) {
  static TableCache e6, e7;
  TableCache& cache = family == Family::E6 ? e6 : e7;
  std::call_once(cache.once, [&] {
    if (family == Family::E6) {
      cache.printed = build_printed(detail::printed_e6(), 6);
      cache.corrected = apply_errata(cache.printed, kE6Errata, 6);
    } else {
      cache.printed = build_printed(detail::printed_e7(), 7);
      cache.corrected = apply_errata(cache.printed, kE7Errata, 7);
    }
  });
  return edition == TableEdition::as_printed ? cache.printed : cache.corrected;
}

}  // namespace

FiniteGroup OrbitRecord::a_group() const {
  if (z_orbit.order() == 1) return pi1;
  const bool z_factor = pi1.kind() == FiniteGroup::Kind::cyclic &&
                        (pi1.parameter() == 2 || pi1.parameter() == 3) && z_orbit == pi1;
  if (!z_factor) {
    throw DataIntegrityError(bala_carter + ": Z(O) = " + z_orbit.label() + " is not a factor of pi_1 = " +
                             pi1.label());
  }
  return FiniteGroup::trivial();
}

SubsetJ erratum_subset(const TableErratum& e, int rank) {
  std::vector<int> elems;
  for (char c : e.j) elems.push_back(c - '0');
  return SubsetJ(std::move(elems), rank);
}

std::span<const TableErratum> table_errata(Family family) {
  switch (family) {
    case Family::E6: return kE6Errata;
    case Family::E7: return kE7Errata;
    default: return {};
  }
}

const std::vector<OrbitRecord>& orbit_table(const LieType& type, TableEdition edition) {
  require_exceptional_table(type);
  return cached(type.family(), edition);
}

const OrbitRecord& table_lookup(const LieType& type, const SubsetJ& j, TableEdition edition) {
  if (j.rank() != type.rank()) throw InputError("J rank does not match " + type.name());
  const OrbitRecord* hit = nullptr;
  for (const auto& rec : orbit_table(type, edition)) {
    if (std::find(rec.j_sets.begin(), rec.j_sets.end(), j) == rec.j_sets.end()) continue;
    if (hit) {
      throw DataIntegrityError(j.to_string() + " is listed under both " + hit->bala_carter + " and " +
                               rec.bala_carter);
    }
    hit = &rec;
  }
  if (!hit) throw DataIntegrityError(j.to_string() + " is missing from the " + type.name() + " table");
  return *hit;
}

std::string strip_decorations(std::string_view label) {
  std::string out;
  for (char c : label) {
    if (c != '(' && c != ')' && c != '\'') out += c;
  }
  return out;
}

bool TableValidation::ok() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const TableCheck& c) { return c.passed(); });
}

std::vector<std::string> TableValidation::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    for (const auto& f : c.failures) out.push_back(c.name + ": " + f);
  }
  return out;
}

TableValidation validate_records(const LieType& type, std::span<const OrbitRecord> records) {
  require_exceptional_table(type);
  const int n = type.rank();
  const auto diagram = DynkinDiagram::of(type);

  TableValidation v;
  v.type = type.name();
  v.records = records.size();
  v.subsets = std::size_t{1} << n;

  TableCheck partition{"power-set partition", 0, {}};
  TableCheck center{"center fiber", 0, {}};
  TableCheck subdiagram{"sub-diagram label", 0, {}};
  TableCheck quotient{"quotient order", 0, {}};

  std::map<std::uint32_t, std::vector<const OrbitRecord*>> owners;
  for (const auto& rec : records) {
    if (rec.j_sets.empty()) partition.failures.push_back(rec.bala_carter + " lists no subsets");
    for (const auto& j : rec.j_sets) {
      if (j.rank() != n) {
        partition.failures.push_back(rec.bala_carter + " lists " + j.to_string() + " of the wrong rank");
        continue;
      }
      owners[j.mask()].push_back(&rec);

      ++center.checked;
      const auto z = center_fiber(type, j);
      if (z.order() != rec.z_orbit.order()) {
        v.flagged_subsets.insert(j.mask());
        center.failures.push_back(j.to_string() + " in " + rec.bala_carter + ": formula gives |Z| = " +
                                  std::to_string(z.order()) + ", table gives " +
                                  std::to_string(rec.z_orbit.order()));
      }

      ++subdiagram.checked;
      const auto kept = j.complement();
      const auto label = classify_subdiagram(diagram, kept);
      if (!(label == rec.base_label)) {
        v.flagged_subsets.insert(j.mask());
        subdiagram.failures.push_back(j.to_string() + " in " + rec.bala_carter + ": complement is " +
                                      label.render());
      }
    }

    ++quotient.checked;
    if (rec.pi1.order() % rec.z_orbit.order() != 0) {
      quotient.failures.push_back(rec.bala_carter + ": |Z(O)| does not divide |pi_1|");
    } else {
      try {
        const auto a = rec.a_group();
        if (a.order() != rec.pi1.order() / rec.z_orbit.order()) {
          quotient.failures.push_back(rec.bala_carter + ": |A(O)| = " + std::to_string(a.order()) +
                                      " but |pi_1|/|Z(O)| = " +
                                      std::to_string(rec.pi1.order() / rec.z_orbit.order()));
        }
      } catch (const DataIntegrityError& e) {
        quotient.failures.push_back(e.what());
      }
    }
  }

  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    ++partition.checked;
    auto it = owners.find(mask);
    const auto j = SubsetJ::from_mask(mask, n);
    if (it == owners.end()) {
      v.flagged_subsets.insert(mask);
      partition.failures.push_back(j.to_string() + " is missing");
    } else if (it->second.size() > 1) {
      v.flagged_subsets.insert(mask);
      std::string where;
      for (const auto* r : it->second) where += (where.empty() ? "" : ", ") + r->bala_carter;
      partition.failures.push_back(j.to_string() + " is listed " + std::to_string(it->second.size()) +
                                   " times (" + where + ")");
    }
  }

  v.checks = {std::move(partition), std::move(center), std::move(subdiagram), std::move(quotient)};
  return v;
}

TableValidation validate_tables(const LieType& type, TableEdition edition) {
  return validate_records(type, orbit_table(type, edition));
}

std::string dump_tsv(std::span<const OrbitRecord> records) {
  std::string out;
  for (const auto& rec : records) {
    auto sets = rec.j_sets;
    std::sort(sets.begin(), sets.end(), [](const SubsetJ& a, const SubsetJ& b) {
      return std::lexicographical_compare(a.elements().begin(), a.elements().end(), b.elements().begin(),
                                          b.elements().end());
    });
    std::string joined;
    for (const auto& j : sets) joined += (joined.empty() ? "" : ";") + j.to_string();
    out += rec.bala_carter + "\t" + joined + "\t" + std::to_string(rec.z_orbit.order()) + "\t" +
           std::to_string(rec.pi1.order()) + "\n";
  }
  return out;
}

}  // namespace nilorb
