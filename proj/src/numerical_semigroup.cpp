#include "ggl/numerical_semigroup.hpp"

#include "ggl/error.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

namespace ggl {

namespace {

// Shortest representation of each residue class mod e (Dijkstra on the
// residue graph). dist[i] is the smallest member congruent to i mod e.
std::vector<long long> residue_distances(int e, const std::vector<int>& gens) {
    constexpr long long inf = std::numeric_limits<long long>::max();
    std::vector<long long> dist(static_cast<std::size_t>(e), inf);
    using Item = std::pair<long long, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[0] = 0;
    queue.emplace(0, 0);
    while (!queue.empty()) {
        auto [d, r] = queue.top();
        queue.pop();
        if (d != dist[static_cast<std::size_t>(r)]) continue;
        for (int g : gens) {
            int next = static_cast<int>((r + g) % e);
            long long nd = d + g;
            if (nd < dist[static_cast<std::size_t>(next)]) {
                dist[static_cast<std::size_t>(next)] = nd;
                queue.emplace(nd, next);
            }
        }
    }
    return dist;
}

bool is_sum_of_two_nonzero(const NumericalSemigroup& h, int z) {
    for (int x = 1; x <= z / 2; ++x) {
        if (h.contains(x) && h.contains(z - x)) return true;
    }
    return false;
}

} // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<int> raw_generators)
    : raw_(std::move(raw_generators)) {
    if (raw_.empty()) fail(ErrorKind::EmptyGenerators, "generator list is empty");
    for (int g : raw_) {
        if (g <= 0) {
            fail(ErrorKind::PreconditionFailed,
                 "generators must be positive, got " + std::to_string(g));
        }
    }
    int g = 0;
    for (int a : raw_) g = std::gcd(g, a);
    if (g != 1) fail(ErrorKind::GcdNotOne, "generators have gcd " + std::to_string(g));

    std::vector<int> sorted = raw_;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    const int e = sorted.front();
    const auto dist = residue_distances(e, sorted);
    const long long top = *std::max_element(dist.begin(), dist.end());
    frobenius_ = static_cast<int>(top - e);

    member_.assign(static_cast<std::size_t>(frobenius_ + 2), 0);
    for (int z = 0; z <= frobenius_ + 1; ++z) {
        member_[static_cast<std::size_t>(z)] = z >= dist[static_cast<std::size_t>(z % e)];
    }
    for (int a : sorted) {
        if (!is_sum_of_two_nonzero(*this, a)) gens_.push_back(a);
    }
    finish_from_table();
}

NumericalSemigroup NumericalSemigroup::from_membership(const std::vector<std::uint8_t>& table) {
    if (table.empty() || !table[0]) {
        fail(ErrorKind::PreconditionFailed, "membership table must contain 0");
    }
    NumericalSemigroup h;
    int f = -1;
    for (int z = static_cast<int>(table.size()) - 1; z >= 0; --z) {
        if (!table[static_cast<std::size_t>(z)]) {
            f = z;
            break;
        }
    }
    h.frobenius_ = f;
    h.member_.assign(static_cast<std::size_t>(f + 2), 1);
    for (int z = 0; z <= f; ++z) h.member_[static_cast<std::size_t>(z)] = table[static_cast<std::size_t>(z)];

    int e = 1;
    while (!h.contains(e)) ++e;
    for (int z = e; z <= std::max(f + e, e); ++z) {
        if (h.contains(z) && !is_sum_of_two_nonzero(h, z)) h.gens_.push_back(z);
    }
    h.raw_ = h.gens_;
    h.finish_from_table();
    return h;
}

void NumericalSemigroup::finish_from_table() {
    gaps_.clear();
    pf_.clear();
    for (int z = 1; z <= frobenius_; ++z) {
        if (!contains(z)) gaps_.push_back(z);
    }
    for (int z : gaps_) {
        bool pseudo = std::all_of(gens_.begin(), gens_.end(),
                                  [&](int a) { return contains(static_cast<long long>(z) + a); });
        if (pseudo) pf_.push_back(z);
    }
    if (pf_.empty()) pf_.push_back(-1);  // H = ℤ≥0: f = -1, treated as Gorenstein
}

std::vector<int> NumericalSemigroup::apery_set(int e) const {
    if (e <= 0 || !contains(e)) {
        fail(ErrorKind::NotAMember, std::to_string(e) + " is not a nonzero member of " + to_string());
    }
    std::vector<int> result(static_cast<std::size_t>(e), -1);
    int found = 0;
    for (int z = 0; found < e; ++z) {
        auto& slot = result[static_cast<std::size_t>(z % e)];
        if (slot < 0 && contains(z)) {
            slot = z;
            ++found;
        }
    }
    return result;
}

BasicInvariants NumericalSemigroup::invariants() const {
    BasicInvariants inv;
    inv.multiplicity = multiplicity();
    inv.embedding_dimension = embedding_dimension();
    inv.type = type();
    inv.frobenius = frobenius();
    inv.genus = genus();
    inv.is_symmetric = is_symmetric();
    inv.has_minimal_multiplicity = has_minimal_multiplicity();
    return inv;
}

std::string NumericalSemigroup::to_string() const {
    std::ostringstream out;
    out << '<';
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out << ',';
        out << gens_[i];
    }
    out << '>';
    return out.str();
}

NumericalSemigroup make_semigroup(std::vector<int> raw_generators) {
    return NumericalSemigroup(std::move(raw_generators));
}

std::vector<int> apery_set(const NumericalSemigroup& h, int e) { return h.apery_set(e); }

std::vector<int> pseudo_frobenius(const NumericalSemigroup& h) { return h.pseudo_frobenius(); }

BasicInvariants basic_invariants(const NumericalSemigroup& h) { return h.invariants(); }

namespace {

// Decides the gaps of H in increasing order. A gap that is the sum of two
// smaller chosen members is forced in; any other gap may be kept out or
// added. Every overring is reached along exactly one decision path.
class OverringWalker {
public:
    OverringWalker(const NumericalSemigroup& h, const std::function<bool(int)>& allowed)
        : gaps_(h.gaps()), allowed_(allowed) {
        const int size = std::max(1, h.conductor());
        table_.assign(static_cast<std::size_t>(size), 0);
        for (int z = 0; z < size; ++z) table_[static_cast<std::size_t>(z)] = h.contains(z);
    }

    std::vector<NumericalSemigroup> run() {
        walk(0);
        std::sort(found_.begin(), found_.end(), [](const auto& a, const auto& b) {
            if (a.genus() != b.genus()) return a.genus() > b.genus();
            return a.gaps() < b.gaps();
        });
        return std::move(found_);
    }

private:
    bool forced(int x) const {
        for (int y = 1; y <= x / 2; ++y) {
            if (table_[static_cast<std::size_t>(y)] && table_[static_cast<std::size_t>(x - y)]) return true;
        }
        return false;
    }

    void walk(std::size_t index) {
        if (index == gaps_.size()) {
            found_.push_back(NumericalSemigroup::from_membership(table_));
            return;
        }
        const int x = gaps_[index];
        auto& slot = table_[static_cast<std::size_t>(x)];
        if (forced(x)) {
            if (!allowed_(x)) return;
            slot = 1;
            walk(index + 1);
            slot = 0;
            return;
        }
        walk(index + 1);
        if (allowed_(x)) {
            slot = 1;
            walk(index + 1);
            slot = 0;
        }
    }

    const std::vector<int>& gaps_;
    const std::function<bool(int)>& allowed_;
    std::vector<std::uint8_t> table_;
    std::vector<NumericalSemigroup> found_;
};

} // namespace

std::vector<NumericalSemigroup> overrings(const NumericalSemigroup& h) {
    return overrings_within(h, [](int) { return true; });
}

std::vector<NumericalSemigroup> overrings_within(const NumericalSemigroup& h,
                                                 const std::function<bool(int)>& allowed) {
    return OverringWalker(h, allowed).run();
}

} // namespace ggl
