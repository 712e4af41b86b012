#include "minrep/catalog.hpp"

#include <stdexcept>

namespace minrep::catalog {

namespace {

std::vector<FamilyEntry> build_entries() {
  std::vector<FamilyEntry> entries;
  entries.push_back(FamilyEntry{
      Family::Split,
      "split",
      {"sl(2k,R)", "so(2k,2k)", "so(p+1,q+1)", "e7(7)"},
      false,
      JosephAnnihilator::Yes,
      {"sl(2k,R)"},
      "simple split Jordan algebras; the annihilator is the Joseph ideal outside type A",
  });
  entries.push_back(FamilyEntry{
      Family::Euclidean,
      "euclidean",
      {"sp(k,R)", "su(k,k)", "so*(4k)", "so(2,k)", "e7(-25)"},
      true,
      JosephAnnihilator::Yes,
      {"su(k,k)"},
      "Euclidean Jordan algebras: automorphism groups of tube-type Hermitian symmetric "
      "spaces; two minimal nilpotent orbits, highest (or lowest) weight modules",
  });
  entries.push_back(FamilyEntry{
      Family::Complex,
      "complex",
      {"sp(k,C)", "sl(2k,C)", "so(4k,C)", "so(k+2,C)", "e7(C)"},
      false,
      JosephAnnihilator::Yes,
      {"sl(2k,C)"},
      "complex simple Jordan algebras",
  });
  entries.push_back(FamilyEntry{
      Family::Quaternionic,
      "quaternionic",
      {"sp(k,k)", "su*(4k)", "so(k,1)"},
      false,
      JosephAnnihilator::No,
      {},
      "the complex minimal orbit misses the real form; the representation is not a "
      "minimal representation (annihilator differs from the Joseph ideal) but still "
      "attains the minimal Gelfand-Kirillov dimension",
  });
  return entries;
}

}  // namespace

const std::vector<FamilyEntry>& all_entries() {
  static const std::vector<FamilyEntry> entries = build_entries();
  return entries;
}

const FamilyEntry& query(Family family) {
  for (const auto& e : all_entries())
    if (e.family == family) return e;
  throw std::logic_error("catalog: missing family");
}

const FamilyEntry& query(const std::string& name) {
  for (const auto& e : all_entries())
    if (e.name == name) return e;
  throw std::invalid_argument("catalog: unknown family tag '" + name + "'");
}

std::string to_string(Family family) { return query(family).name; }

std::string to_string(JosephAnnihilator j) {
  switch (j) {
    case JosephAnnihilator::Yes:
      return "yes";
    case JosephAnnihilator::No:
      return "no";
    case JosephAnnihilator::NotApplicable:
      return "notApplicable";
  }
  return "?";
}

}  // namespace minrep::catalog
