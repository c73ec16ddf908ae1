#ifndef CUSP_SERIALIZE_HPP
#define CUSP_SERIALIZE_HPP

#include "cusp/spectrum.hpp"
#include "cusp/zetadet.hpp"

#include <string>
#include <vector>

namespace cusp::io {

// One verification line of the verify suite.
struct VerifyReport {
    std::string check_id;
    enum class Status { pass, fail, skip } status = Status::pass;
    double measured = 0.0;
    double threshold = 0.0;
    std::string notes;
};

// All floating output is emitted at 17 significant digits so that every
// value round-trips bit-exactly through the text formats.
std::string format_double(double v);

std::string spectrum_to_csv(const spectrum::SpectrumSlice& slice);
std::string spectrum_to_json(const spectrum::SpectrumSlice& slice);
spectrum::SpectrumSlice spectrum_from_json(const std::string& text);

std::string zeta_pair_to_json(const zetadet::ZetaEval& direct,
                              const zetadet::ZetaEval& integral);

std::string mode0_to_json(const zetadet::Mode0DetPieces& pieces);
zetadet::Mode0DetPieces mode0_from_json(const std::string& text);

std::string asymp_report_to_json(const zetadet::AsympReport& rep);
zetadet::AsympReport asymp_report_from_json(const std::string& text);

std::string verify_reports_to_json(const std::vector<VerifyReport>& reports);

} // namespace cusp::io

#endif
