#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ggl {

/// One line of a family scan.
struct ScanRow {
    std::vector<int> gens;
    int e = 0, v = 0, r = 0, f = 0, genus = 0;
    int red_k = 0;
    int ell_s_r = 0;
    int ell_r_c = 0;
    bool gorenstein = false, agl = false, ggl = false, two_agl = false, ngl = false, minmult = false;
    std::vector<int> tr_gens;
    bool tr_ulrich = false;
    bool route_consistent = false;
    std::string failure;  // first failed check, not serialized to CSV

    bool operator==(const ScanRow&) const = default;
};

inline constexpr const char* csv_header =
    "gens;e;v;r;f;genus;red_K;ell_S_R;ell_R_c;gorenstein;agl;ggl;two_agl;ngl;minmult;tr_gens;tr_ulrich;route_consistent";

/// Minimal generating triples a1 < a2 < a3 <= max_gen with gcd 1, in
/// lexicographic order.
std::vector<std::vector<int>> three_generated_family(int max_gen);

ScanRow scan_one(const std::vector<int>& gens);

/// Rows in lexicographic order of the input generator lists, identical for
/// every value of `jobs`.
std::vector<ScanRow> run_scan(std::vector<std::vector<int>> inputs, int jobs);

std::string to_csv(const ScanRow& row);
ScanRow row_from_csv(const std::string& line);
std::string to_jsonl(const ScanRow& row);

/// Generator lists, one per line, separated by commas or whitespace. Blank
/// lines and lines starting with '#' are skipped. Throws PreconditionFailed
/// on malformed lines.
std::vector<std::vector<int>> read_gens_file(std::istream& in);

} // namespace ggl
