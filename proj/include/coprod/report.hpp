#pragma once

// Text and JSON renderings of analysis results. JSON objects keep insertion
// order and carry "schema": 1 at the top level.

#include <string>
#include <vector>

#include <json.hpp>

#include "coprod/catalog.hpp"
#include "coprod/classify.hpp"
#include "coprod/duality.hpp"

namespace coprod {

using Json = nlohmann::ordered_json;

constexpr int kReportSchema = 1;

std::string carrier_to_string(const GeneratorSet& g, const CarrierMap& w);

std::string classify_text(const ClassificationReport& r);
Json classify_json(const ClassificationReport& r);

std::string alter_ego_text(const AlterEgo& ego);
Json alter_ego_json(const AlterEgo& ego);

std::string coproduct_text(const CoproductResult& c, const std::vector<FiniteAlgebra>& family,
                           const GeneratorSet& ambient);
Json coproduct_json(const CoproductResult& c, const std::vector<FiniteAlgebra>& family,
                    const GeneratorSet& ambient);

std::string free_text(const FreeAlgebra& f);
Json free_json(const FreeAlgebra& f);

std::string reveng_text(const RevEngResult& r, const FiniteAlgebra& a);
Json reveng_json(const RevEngResult& r, const FiniteAlgebra& a);

struct Table1Result {
  std::string id;
  ExpectedVerdict expected;
  Tri E = Tri::Unknown;
  bool S = false;
  bool match = false;
  std::string note;  ///< error text when the case could not be run
};

Table1Result run_table1_case(const Table1Case& c, const Caps& caps = {});
std::string table1_text(const std::vector<Table1Result>& rows);
Json table1_json(const std::vector<Table1Result>& rows);

/// Tables of an algebra, one line per operation.
std::string algebra_tables_text(const FiniteAlgebra& a);
Json algebra_json(const FiniteAlgebra& a);

}  // namespace coprod
