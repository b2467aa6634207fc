#include "compcode/report_io.hpp"

#include <cstdio>

namespace compcode {

std::string csv_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

std::string experiment_csv_header() {
    return "n,k1,k2,key_len,e_ab,e_ae,trials,recon_fail_rate,eve_match_rate_decode,"
           "eve_match_rate_ball,mean_candidates,theory_key_rate,theory_eve_bound,seed";
}

std::string experiment_csv_row(const ExperimentReport& r) {
    std::string row;
    row += std::to_string(r.n) + ',' + std::to_string(r.k1) + ',' + std::to_string(r.k2) + ',' +
           std::to_string(r.key_len) + ',';
    row += csv_double(r.params.e_ab) + ',' + csv_double(r.params.e_ae) + ',';
    row += std::to_string(r.trials) + ',';
    row += csv_double(r.recon_fail_rate()) + ',';
    row += csv_double(r.eve_match_rate_decode()) + ',';
    row += csv_double(r.eve_match_rate_ball()) + ',';
    row += csv_double(r.mean_candidates()) + ',';
    row += csv_double(r.theory.key_rate) + ',';
    row += csv_double(r.theory.eve_guess_bound) + ',';
    row += std::to_string(r.seed.seed);
    return row;
}

nlohmann::json experiment_to_json(const ExperimentReport& r) {
    return nlohmann::json{
        {"code", {{"n", r.n}, {"k1", r.k1}, {"k2", r.k2}, {"key_len", r.key_len}}},
        {"channel", {{"e_ab", r.params.e_ab}, {"e_ae", r.params.e_ae}}},
        {"trials", r.trials},
        {"aborted", r.aborted},
        {"counts",
         {{"reconciliation_failures", r.reconciliation_failures},
          {"eve_matches_decode", r.eve_matches_decode},
          {"eve_matches_ball", r.eve_matches_ball},
          {"eve_candidates_total", r.eve_candidates_total}}},
        {"rates",
         {{"recon_fail_rate", r.recon_fail_rate()},
          {"eve_match_rate_decode", r.eve_match_rate_decode()},
          {"eve_match_rate_ball", r.eve_match_rate_ball()},
          {"mean_candidates", r.mean_candidates()}}},
        {"theory",
         {{"key_rate", r.theory.key_rate},
          {"eve_guess_bound", r.theory.eve_guess_bound},
          {"recon_fail_predicted", r.theory.recon_fail_predicted}}},
        {"seed", {{"seed", r.seed.seed}, {"stream_id", r.seed.stream_id}}},
        {"sifting_enabled", r.sifting_enabled},
    };
}

nlohmann::json verification_to_json(const VerificationReport& r) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"check", v.check}, {"detail", v.detail}, {"center", v.center}});
    return nlohmann::json{{"checked", r.checked}, {"violations", violations}};
}

nlohmann::json code_info_json(const CompositeCode& cc) {
    return nlohmann::json{
        {"n", cc.n()},
        {"k1", cc.c1().k()},
        {"k2", cc.c2().k()},
        {"d1", cc.c1().min_distance()},
        {"d2", cc.c2().min_distance()},
        {"t1", cc.c1().t()},
        {"t2", cc.c2().t()},
        {"key_len", cc.key_len()},
    };
}

}  // namespace compcode
