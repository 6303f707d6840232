#ifndef VB1_REPORT_IO_HPP
#define VB1_REPORT_IO_HPP

#include <string>

#include "vb1/coinvariants.hpp"
#include "vb1/groebner.hpp"
#include "vb1/sigma.hpp"
#include "vb1/stability.hpp"

namespace vb1 {

// JSON serializers, one object per call; every object carries
// schema_version = 1 and a kind tag. Timing fields are omitted when
// with_timing is false so repeated runs are byte-identical.
std::string to_json(const DimReport& rep, bool with_timing);
std::string to_json(const SigmaReport& rep);
std::string to_json(const StabilizationReport& rep, bool with_timing);
std::string to_json(const M0Bound& rep);
std::string to_json(const CrosscheckReport& rep, bool with_timing);

// CSV. Column orders are fixed:
//   DimReport:           field,ideal,subgroup,index,dim,betti,engine,millis
//   StabilizationReport: m,index,dim
//   M0Bound:             s
std::string csv_header_dim();
std::string to_csv(const DimReport& rep, bool with_timing);
std::string to_csv(const StabilizationReport& rep);
std::string to_csv(const M0Bound& rep);

// Human tables.
std::string to_table(const DimReport& rep, bool with_timing);
std::string to_table(const SigmaReport& rep);
std::string to_table(const StabilizationReport& rep, bool claim2_section);
std::string to_table(const M0Bound& rep);
std::string to_table(const CrosscheckReport& rep, bool with_timing);

} // namespace vb1

#endif
