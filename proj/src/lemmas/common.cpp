#include "sr/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

namespace sr {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::stable: return "stable";
        case Verdict::growing: return "growing";
        default: return "inconclusive";
    }
}

std::string to_string(PointStatus s) {
    switch (s) {
        case PointStatus::ok: return "ok";
        case PointStatus::skipped: return "skipped";
        default: return "failed";
    }
}

std::size_t BoundCheck::count(PointStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(grid.begin(), grid.end(), [s](const GridPoint& p) { return p.status == s; }));
}

bool BoundCheck::assertions_ok() const {
    return std::all_of(assertions.begin(), assertions.end(), [](const NamedCheck& c) { return c.ok; });
}

void finalize(BoundCheck& c) {
    c.ratio_sup = 0;
    c.ratio_argmax.clear();
    c.top_block_sup = c.previous_block_sup = 0;
    bool any = false;
    std::optional<int> top;
    for (const auto& p : c.grid) {
        if (p.status != PointStatus::ok) continue;
        if (!any || p.ratio > c.ratio_sup) {
            c.ratio_sup = p.ratio;
            c.ratio_argmax = p.params;
        }
        any = true;
        top = top ? std::max(*top, p.level) : p.level;
    }
    if (!any || c.count(PointStatus::failed) > 0) {
        c.verdict = Verdict::inconclusive;
        return;
    }
    if (c.verdict_rule == "explicit") {
        c.verdict = c.ratio_sup <= 1 ? Verdict::stable : Verdict::growing;
        return;
    }
    const int b = c.block_levels;
    bool prev_seen = false;
    for (const auto& p : c.grid) {
        if (p.status != PointStatus::ok) continue;
        if (p.level > *top - b)
            c.top_block_sup = std::max(c.top_block_sup, p.ratio);
        else if (p.level > *top - 2 * b) {
            c.previous_block_sup = std::max(c.previous_block_sup, p.ratio);
            prev_seen = true;
        }
    }
    if (!prev_seen) {
        c.verdict = Verdict::inconclusive;
        c.notes.push_back("grid has a single dyadic block; no previous block to compare with");
        return;
    }
    c.verdict = c.top_block_sup <= c.stability_factor * c.previous_block_sup ? Verdict::stable : Verdict::growing;
}

std::string bound_check_csv(const BoundCheck& c) {
    std::vector<std::string> keys;
    for (const auto& p : c.grid)
        for (const auto& [k, v] : p.params)
            if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    std::ostringstream os;
    os << std::setprecision(17) << "status,level";
    for (const auto& k : keys) os << ',' << k;
    os << ",quantity,bound,ratio,note\n";
    for (const auto& p : c.grid) {
        os << to_string(p.status) << ',' << p.level;
        for (const auto& k : keys) {
            os << ',';
            for (const auto& [pk, v] : p.params)
                if (pk == k) os << v;
        }
        std::string note = p.note;
        std::replace(note.begin(), note.end(), ',', ';');
        std::replace(note.begin(), note.end(), '\n', ' ');
        os << ',' << p.quantity << ',' << p.bound << ',' << p.ratio << ',' << note << '\n';
    }
    return os.str();
}

}  // namespace sr
