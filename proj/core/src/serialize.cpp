#include "cusp/serialize.hpp"
#include "cusp/errors.hpp"

#include <json.hpp>

#include <cstdio>

namespace cusp::io {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string spectrum_to_csv(const spectrum::SpectrumSlice& slice) {
    std::string out = "k,j,r,lambda,residual\n";
    for (const auto& rec : slice.records) {
        out += std::to_string(rec.k);
        out += ',';
        out += std::to_string(rec.j);
        out += ',';
        out += format_double(rec.r);
        out += ',';
        out += format_double(rec.lambda);
        out += ',';
        out += format_double(rec.residual);
        out += '\n';
    }
    return out;
}

namespace {

json record_to_json(const spectrum::EigenRecord& rec) {
    return json{{"k", rec.k},
                {"j", rec.j},
                {"r", rec.r},
                {"lambda", rec.lambda},
                {"residual", rec.residual}};
}

} // namespace

std::string spectrum_to_json(const spectrum::SpectrumSlice& slice) {
    json j;
    j["alpha"] = slice.bundle.alpha;
    j["a"] = slice.bundle.a;
    j["lambda_max"] = slice.lambda_max;
    j["kernel_present"] = slice.kernel_present;
    j["k_cutoff_used"] = slice.k_cutoff_used;
    j["records"] = json::array();
    for (const auto& rec : slice.records) j["records"].push_back(record_to_json(rec));
    return j.dump(2) + "\n";
}

spectrum::SpectrumSlice spectrum_from_json(const std::string& text) {
    json j = json::parse(text);
    charfn::CuspBundle bundle(j.at("alpha").get<double>(),
                              j.at("a").get<double>());
    spectrum::SpectrumSlice slice{bundle, j.at("lambda_max").get<double>(),
                                  {}, j.at("kernel_present").get<bool>(),
                                  j.at("k_cutoff_used").get<int>()};
    for (const auto& rj : j.at("records")) {
        slice.records.push_back({rj.at("k").get<int>(), rj.at("j").get<int>(),
                                 rj.at("r").get<double>(),
                                 rj.at("lambda").get<double>(),
                                 rj.at("residual").get<double>()});
    }
    return slice;
}

namespace {

json zeta_to_json(const zetadet::ZetaEval& z) {
    return json{{"s", {{"re", z.s.real()}, {"im", z.s.imag()}}},
                {"mu", z.mu},
                {"value", {{"re", z.value.real()}, {"im", z.value.imag()}}},
                {"truncation_estimate", z.truncation_estimate},
                {"route",
                 z.route == zetadet::ZetaRoute::direct ? "direct" : "integral"}};
}

} // namespace

std::string zeta_pair_to_json(const zetadet::ZetaEval& direct,
                              const zetadet::ZetaEval& integral) {
    json j;
    j["value_direct"] = zeta_to_json(direct);
    j["value_integral"] = zeta_to_json(integral);
    j["abs_diff"] = std::abs(direct.value - integral.value);
    j["combined_estimate"] =
        direct.truncation_estimate + integral.truncation_estimate;
    return j.dump(2) + "\n";
}

std::string mode0_to_json(const zetadet::Mode0DetPieces& p) {
    json j{{"mu", p.mu},           {"a_prime", p.a_prime},
           {"r_prime", p.r_prime}, {"mtilde_prime", p.mtilde_prime},
           {"b_prime", p.b_prime}, {"total", p.total}};
    return j.dump(2) + "\n";
}

zetadet::Mode0DetPieces mode0_from_json(const std::string& text) {
    json j = json::parse(text);
    zetadet::Mode0DetPieces p;
    p.mu = j.at("mu").get<double>();
    p.a_prime = j.at("a_prime").get<double>();
    p.r_prime = j.at("r_prime").get<double>();
    p.mtilde_prime = j.at("mtilde_prime").get<double>();
    p.b_prime = j.at("b_prime").get<double>();
    p.total = j.at("total").get<double>();
    return p;
}

namespace {

const char* theorem_name(zetadet::TheoremId id) {
    switch (id) {
        case zetadet::TheoremId::mu_alpha: return "mu-alpha";
        case zetadet::TheoremId::mu_alpha0: return "mu-alpha0";
        case zetadet::TheoremId::a_alpha: return "a-alpha";
        case zetadet::TheoremId::a_alpha0: return "a-alpha0";
    }
    return "unknown";
}

zetadet::TheoremId theorem_from_name(const std::string& name) {
    if (name == "mu-alpha") return zetadet::TheoremId::mu_alpha;
    if (name == "mu-alpha0") return zetadet::TheoremId::mu_alpha0;
    if (name == "a-alpha") return zetadet::TheoremId::a_alpha;
    if (name == "a-alpha0") return zetadet::TheoremId::a_alpha0;
    throw domain_error("unknown theorem id: " + name);
}

} // namespace

std::string asymp_report_to_json(const zetadet::AsympReport& rep) {
    json terms = json::object();
    for (const auto& [name, value] : rep.term_values) terms[name] = value;
    json j{{"theorem_id", theorem_name(rep.theorem_id)},
           {"alpha", rep.alpha},
           {"a", rep.a},
           {"mu", rep.mu},
           {"term_values", terms},
           {"constant", rep.constant},
           {"residual", rep.residual},
           {"total", rep.total()}};
    return j.dump(2) + "\n";
}

zetadet::AsympReport asymp_report_from_json(const std::string& text) {
    json j = json::parse(text);
    zetadet::AsympReport rep;
    rep.theorem_id = theorem_from_name(j.at("theorem_id").get<std::string>());
    rep.alpha = j.at("alpha").get<double>();
    rep.a = j.at("a").get<double>();
    rep.mu = j.at("mu").get<double>();
    for (auto it = j.at("term_values").begin(); it != j.at("term_values").end();
         ++it)
        rep.term_values.emplace_back(it.key(), it.value().get<double>());
    rep.constant = j.at("constant").get<double>();
    rep.residual = j.at("residual").get<double>();
    return rep;
}

std::string verify_reports_to_json(const std::vector<VerifyReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports) {
        const char* status = r.status == VerifyReport::Status::pass   ? "pass"
                             : r.status == VerifyReport::Status::fail ? "fail"
                                                                      : "skip";
        arr.push_back(json{{"check_id", r.check_id},
                           {"status", status},
                           {"measured", r.measured},
                           {"threshold", r.threshold},
                           {"notes", r.notes}});
    }
    return arr.dump(2) + "\n";
}

} // namespace cusp::io
