#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "sumprod/lab/audit.hpp"
#include "sumprod/lab/sweep.hpp"

namespace sumprod::lab {

using Json = nlohmann::ordered_json;

/// Fixed six-decimal rendering used by text and CSV output.
std::string decimal(const Rational& q);

Json to_json(const SolutionSplit& s);
Json to_json(const AuditReport& r);
Json to_json(const InjectivityReport& r);
Json to_json(const CauchySchwarzReport& r);
Json to_json(const ExpansionReport& r);

/// Left-aligned columns separated by two spaces; the first row is the header.
void write_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows);

void write_text(std::ostream& os, const AuditReport& r);
void write_text(std::ostream& os, const InjectivityReport& r);
void write_text(std::ostream& os, const ExpansionReport& r);

/// Header "N,setsize,productset,K,image,ratio".
void write_csv(std::ostream& os, const ExpansionReport& r);

}  // namespace sumprod::lab
