#include "ggl/scan.hpp"

#include "ggl/error.hpp"
#include "ggl/numerical_semigroup.hpp"
#include "ggl/report.hpp"
#include "ggl/ulrich.hpp"
#include "ggl/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <istream>
#include <numeric>
#include <sstream>
#include <thread>

namespace ggl {

std::vector<std::vector<int>> three_generated_family(int max_gen) {
    std::vector<std::vector<int>> out;
    for (int a = 3; a <= max_gen; ++a) {
        for (int b = a + 1; b <= max_gen; ++b) {
            for (int c = b + 1; c <= max_gen; ++c) {
                if (std::gcd(std::gcd(a, b), c) != 1) continue;
                if (NumericalSemigroup({a, b, c}).embedding_dimension() != 3) continue;
                out.push_back({a, b, c});
            }
        }
    }
    return out;
}

ScanRow scan_one(const std::vector<int>& gens) {
    const NumericalSemigroup h(gens);
    ScanRow row;
    row.gens = gens;
    const auto checks = verify_all(h);
    row.route_consistent = all_passed(checks);
    row.failure = first_failed(checks);

    const auto rep = analyze(share(h));
    const auto& inv = rep.invariants;
    row.e = inv.multiplicity;
    row.v = inv.embedding_dimension;
    row.r = inv.type;
    row.f = inv.frobenius;
    row.genus = inv.genus;
    row.red_k = rep.canonical_reduction_number;
    row.ell_s_r = rep.e1;
    row.ell_r_c = rep.conductor_colength;
    row.gorenstein = rep.gorenstein;
    row.agl = rep.agl;
    row.ggl = rep.ggl;
    row.two_agl = rep.two_agl;
    row.ngl = rep.ngl;
    row.minmult = rep.minimal_multiplicity;
    row.tr_gens = rep.trace_generators;
    if (!rep.gorenstein) {
        row.tr_ulrich = is_ulrich(canonical_data(share(h)).trace).verdict;
    }
    return row;
}

std::vector<ScanRow> run_scan(std::vector<std::vector<int>> inputs, int jobs) {
    std::sort(inputs.begin(), inputs.end());
    std::vector<ScanRow> rows(inputs.size());
    std::vector<std::exception_ptr> errors(inputs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < inputs.size(); k = next++) {
            try {
                rows[k] = scan_one(inputs[k]);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    const int count = std::max(1, std::min<int>(jobs, static_cast<int>(inputs.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
    return rows;
}

namespace {

const char* flag(bool b) { return b ? "true" : "false"; }

bool parse_flag(const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    fail(ErrorKind::PreconditionFailed, "expected true/false, got '" + s + "'");
}

std::string join_comma(const std::vector<int>& values) {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(values[k]);
    }
    return out;
}

} // namespace

std::string to_csv(const ScanRow& row) {
    std::ostringstream out;
    out << join_comma(row.gens) << ';' << row.e << ';' << row.v << ';' << row.r << ';' << row.f << ';' << row.genus
        << ';' << row.red_k << ';' << row.ell_s_r << ';' << row.ell_r_c << ';' << flag(row.gorenstein) << ';'
        << flag(row.agl) << ';' << flag(row.ggl) << ';' << flag(row.two_agl) << ';' << flag(row.ngl) << ';'
        << flag(row.minmult) << ';' << join_bar(row.tr_gens) << ';' << flag(row.tr_ulrich) << ';'
        << flag(row.route_consistent);
    return out.str();
}

ScanRow row_from_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ';')) cells.push_back(cell);
    if (cells.size() != 18) {
        fail(ErrorKind::PreconditionFailed, "expected 18 CSV fields, got " + std::to_string(cells.size()));
    }
    ScanRow row;
    std::istringstream gens(cells[0]);
    std::string item;
    while (std::getline(gens, item, ',')) row.gens.push_back(std::stoi(item));
    row.e = std::stoi(cells[1]);
    row.v = std::stoi(cells[2]);
    row.r = std::stoi(cells[3]);
    row.f = std::stoi(cells[4]);
    row.genus = std::stoi(cells[5]);
    row.red_k = std::stoi(cells[6]);
    row.ell_s_r = std::stoi(cells[7]);
    row.ell_r_c = std::stoi(cells[8]);
    row.gorenstein = parse_flag(cells[9]);
    row.agl = parse_flag(cells[10]);
    row.ggl = parse_flag(cells[11]);
    row.two_agl = parse_flag(cells[12]);
    row.ngl = parse_flag(cells[13]);
    row.minmult = parse_flag(cells[14]);
    row.tr_gens = split_bar(cells[15]);
    row.tr_ulrich = parse_flag(cells[16]);
    row.route_consistent = parse_flag(cells[17]);
    return row;
}

std::string to_jsonl(const ScanRow& row) {
    Json j;
    j["gens"] = row.gens;
    j["e"] = row.e;
    j["v"] = row.v;
    j["r"] = row.r;
    j["f"] = row.f;
    j["genus"] = row.genus;
    j["red_K"] = row.red_k;
    j["ell_S_R"] = row.ell_s_r;
    j["ell_R_c"] = row.ell_r_c;
    j["gorenstein"] = row.gorenstein;
    j["agl"] = row.agl;
    j["ggl"] = row.ggl;
    j["two_agl"] = row.two_agl;
    j["ngl"] = row.ngl;
    j["minmult"] = row.minmult;
    j["tr_gens"] = row.tr_gens;
    j["tr_ulrich"] = row.tr_ulrich;
    j["route_consistent"] = row.route_consistent;
    if (!row.failure.empty()) j["failure"] = row.failure;
    return j.dump();
}

std::vector<std::vector<int>> read_gens_file(std::istream& in) {
    std::vector<std::vector<int>> out;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        std::vector<int> gens;
        std::string token;
        while (fields >> token) {
            try {
                std::size_t used = 0;
                const int value = std::stoi(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
                gens.push_back(value);
            } catch (const std::exception&) {
                fail(ErrorKind::PreconditionFailed,
                     "line " + std::to_string(number) + ": '" + token + "' is not an integer");
            }
        }
        out.push_back(std::move(gens));
    }
    return out;
}

} // namespace ggl
