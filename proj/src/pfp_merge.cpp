// pfp_merge.cpp — eBWT assembly from a cyclic prefix-free parse.

#include "cebwt/pfp_merge.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <span>
#include <stdexcept>

#include "cebwt/csais.hpp"
#include "cebwt/detail/cyclic_ops.hpp"
#include "cebwt/strings.hpp"

namespace cebwt {
namespace {

// Streams (rank, char, origin) emissions and collects the run-boundary
// samples exactly as ebwt_from_gca does: per maximal equal-character run,
// the first and last conjugate entries.
struct RunSampler {
    std::vector<GcaSample> samples;
    bool open = false;
    char run_char = 0;
    GcaSample head, tail;

    void emit(std::uint64_t rank, char c, const GcaEntry& origin) {
        if (open && c == run_char) {
            tail = {rank, origin};
            return;
        }
        if (open) flush();
        open = true;
        run_char = c;
        head = tail = {rank, origin};
    }
    void flush() {
        if (!open) return;
        samples.push_back(head);
        samples.push_back(tail);
        open = false;
    }
};

}  // namespace

ParseEbwt ebwt_of_parse(const PfpOutput& pfp) {
    const std::size_t m = pfp.parses.size();
    ParseEbwt pe;

    // Root-reduce the parses, sort the roots, expand the array back.
    std::vector<std::vector<std::uint32_t>> roots(m);
    std::vector<std::uint32_t> exponents(m), root_lengths(m);
    for (std::size_t h = 0; h < m; ++h) {
        const auto& parse = pfp.parses[h];
        if (parse.empty()) throw std::invalid_argument("empty parse");
        const auto [period, exp] =
            detail::root_period_t(std::span<const std::uint32_t>(parse));
        roots[h].assign(parse.begin(), parse.begin() + period);
        exponents[h] = exp;
        root_lengths[h] = static_cast<std::uint32_t>(period);
    }
    const std::uint32_t sigma = static_cast<std::uint32_t>(pfp.dict.size()) + 1;
    Gca root_gca = cyclic_gca(roots, sigma);
    std::vector<std::span<const std::uint32_t>> root_views;
    std::vector<std::uint64_t> full_lens;
    root_views.reserve(m);
    full_lens.reserve(m);
    for (std::size_t h = 0; h < m; ++h) {
        root_views.emplace_back(roots[h].data(), roots[h].size());
        full_lens.push_back(pfp.parses[h].size());
    }
    detail::order_power_ties(root_gca, root_views, full_lens);
    pe.gca_p = expand_gca(root_gca, exponents, root_lengths);

    pe.ebwt_p.reserve(pe.gca_p.size());
    for (const GcaEntry& e : pe.gca_p) {
        const auto& parse = pfp.parses[e.doc - 1];
        pe.ebwt_p.push_back(parse[e.pos == 1 ? parse.size() - 1 : e.pos - 2]);
    }
    pe.occ.resize(pfp.dict.size());
    for (std::size_t p = 1; p <= pe.ebwt_p.size(); ++p)
        pe.occ[pe.ebwt_p[p - 1] - 1].push_back(static_cast<std::uint32_t>(p));
    return pe;
}

char f_char(const ParseEbwt& pe, const std::vector<std::string>& dict,
            std::uint32_t w, std::uint64_t p, std::uint32_t k) {
    if (p == 0 || p > pe.ebwt_p.size())
        throw std::out_of_range("parse position out of range");
    const std::string& phrase = dict.at(pe.ebwt_p[p - 1] - 1);
    if (k == 1) return phrase[phrase.size() - w - 1];
    if (k < 2 || k > phrase.size() - w)
        throw std::out_of_range("suffix offset out of range");
    return phrase[k - 2];
}

MergeResult merge(const PfpOutput& pfp, const ParseEbwt& pe,
                  const MergeOptions& options) {
    const std::size_t m = pfp.parses.size();
    const std::uint32_t w = pfp.w;
    const std::vector<SuffixGroup> groups = suffix_set(pfp.dict, w);

    // Document lengths and total output size.
    std::vector<std::uint32_t> doc_len(m, 0);
    std::uint64_t total = 0;
    for (std::size_t h = 0; h < m; ++h) {
        for (std::uint32_t r : pfp.parses[h])
            doc_len[h] += static_cast<std::uint32_t>(pfp.dict[r - 1].size()) - w;
        total += doc_len[h];
    }

    // First-symbol bucket offsets in gca_p: conjugates beginning with
    // phrase d occupy one contiguous range.
    std::vector<std::uint64_t> bucket_start(pfp.dict.size() + 1, 0);
    for (std::size_t d = 0; d < pfp.dict.size(); ++d)
        bucket_start[d + 1] = bucket_start[d] + pe.occ[d].size();
    if (bucket_start.back() != pe.gca_p.size())
        throw std::logic_error("parse occurrence lists do not cover the parse array");

    // Offsets (phrase rank, k) at which some document's first character
    // lives; groups containing one cannot take the constant-run shortcut.
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> flagged;
    for (std::size_t h = 0; h < m; ++h) {
        const auto& mark = pfp.start_marks[h];
        ++flagged[{pfp.parses[h][mark.parse_index - 1], mark.offset}];
    }

    MergeResult mr;
    EbwtResult& res = mr.result;
    res.bwt.reserve(total);
    RunSampler sampler;

    // Conjugate of the original document that follows the suffix emitted
    // at parse position p with offset k: document h, starting position of
    // the owning phrase occurrence advanced by k - 1 (cyclically).
    const auto origin = [&](std::uint32_t p, std::uint32_t k,
                            bool full_phrase) -> GcaEntry {
        const GcaEntry ctx = pe.gca_p[p - 1];
        const std::uint32_t h = ctx.doc;  // 1-based
        const std::size_t q = pfp.parses[h - 1].size();
        const std::uint32_t j =
            full_phrase ? ctx.pos
                        : (ctx.pos == 1 ? static_cast<std::uint32_t>(q) : ctx.pos - 1);
        const std::uint32_t t = pfp.phrase_starts[h - 1][j - 1];
        const std::uint32_t pos =
            static_cast<std::uint32_t>((t - 1 + static_cast<std::uint64_t>(k) - 1) %
                                       doc_len[h - 1]) + 1;
        return {pos, h};
    };

    const auto emit = [&](char c, const GcaEntry& og) {
        res.bwt.push_back(c);
        if (og.pos == 1) res.index_set.push_back(res.bwt.size());
        if (options.samples) sampler.emit(res.bwt.size(), c, og);
    };

    for (const SuffixGroup& g : groups) {
        BlockTrace trace;
        if (options.trace) {
            trace.suffix = g.suffix;
            trace.start = res.bwt.size() + 1;
        }
        if (g.full_phrase) {
            const std::uint32_t d = g.sources.front().first;
            for (std::uint64_t b = bucket_start[d - 1]; b < bucket_start[d]; ++b) {
                const std::uint32_t p = static_cast<std::uint32_t>(b + 1);
                const char c = f_char(pe, pfp.dict, w, p, 1);
                emit(c, origin(p, 1, true));
                if (options.trace) trace.entries.emplace_back(p, c);
            }
        } else {
            bool same_char = true;
            bool has_flag = false;
            std::uint64_t group_size = 0;
            const char c0 =
                pfp.dict[g.sources.front().first - 1][g.sources.front().second - 2];
            for (const auto& [d, k] : g.sources) {
                if (pfp.dict[d - 1][k - 2] != c0) same_char = false;
                if (flagged.count({d, k})) has_flag = true;
                group_size += pe.occ[d - 1].size();
            }
            if (same_char && !has_flag && !options.samples && !options.trace) {
                res.bwt.append(group_size, c0);
            } else {
                // k-way merge of the occurrence lists by parse position.
                using Head = std::pair<std::uint32_t, std::size_t>;  // (p, source idx)
                std::priority_queue<Head, std::vector<Head>, std::greater<>> heap;
                std::vector<std::size_t> cursor(g.sources.size(), 0);
                for (std::size_t s = 0; s < g.sources.size(); ++s) {
                    const auto& list = pe.occ[g.sources[s].first - 1];
                    if (!list.empty()) heap.push({list[0], s});
                }
                while (!heap.empty()) {
                    const auto [p, s] = heap.top();
                    heap.pop();
                    const auto& [d, k] = g.sources[s];
                    const char c = pfp.dict[d - 1][k - 2];
                    emit(c, origin(p, k, false));
                    if (options.trace) trace.entries.emplace_back(p, c);
                    const auto& list = pe.occ[d - 1];
                    if (++cursor[s] < list.size()) heap.push({list[cursor[s]], s});
                }
            }
        }
        if (options.trace) mr.blocks.push_back(std::move(trace));
    }

    if (res.bwt.size() != total)
        throw std::logic_error("merged transform has wrong length");
    if (options.samples) {
        sampler.flush();
        res.samples = std::move(sampler.samples);
    }
    return mr;
}

EbwtResult ebwt_via_pfp(const SeqCollection& coll, const TriggerConfig& config,
                        bool with_samples) {
    coll.validate();
    if (coll.empty()) return {};
    const PfpOutput pfp = parse_collection(coll, config);
    const ParseEbwt pe = ebwt_of_parse(pfp);
    MergeResult mr = merge(pfp, pe, {.samples = with_samples, .trace = false});
    if (mr.result.bwt.size() != coll.total_length())
        throw std::logic_error("transform length differs from collection length");
    return std::move(mr.result);
}

}  // namespace cebwt
