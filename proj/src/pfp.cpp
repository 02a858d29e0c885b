// pfp.cpp — cyclic prefix-free parsing with a Karp-Rabin rolling hash.

#include "cebwt/pfp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace cebwt {
namespace {

constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;  // 2^61 - 1
constexpr std::uint64_t kBase = 256;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kMod);
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) {
    return a >= b ? a - b : a + kMod - b;
}

std::uint64_t fingerprint(std::string_view s) {
    std::uint64_t h = 0;
    for (unsigned char c : s) h = (mulmod(h, kBase) + c) % kMod;
    return h;
}

// Document text extended by w-1 leading characters so every cyclic
// window is a contiguous slice: window(i) = extended[i-1 .. i+w-2].
std::string extend(const std::string& doc, std::uint32_t w) {
    std::string ext = doc;
    for (std::uint32_t k = 0; k + 1 < w; ++k) ext += doc[k % doc.size()];
    return ext;
}

// Calls fn(position) for every cyclic window position 1..n whose window
// triggers. Rolling hash when triggering by residue, direct comparison
// for explicit trigger sets.
template <typename Fn>
void for_each_trigger(const std::string& doc, const TriggerConfig& cfg, Fn&& fn) {
    const std::size_t n = doc.size();
    const std::string ext = extend(doc, cfg.w);
    if (cfg.explicit_triggers) {
        const std::unordered_set<std::string_view> set(cfg.explicit_triggers->begin(),
                                                       cfg.explicit_triggers->end());
        for (std::size_t i = 1; i <= n; ++i)
            if (set.contains(std::string_view(ext).substr(i - 1, cfg.w))) fn(i);
        return;
    }
    std::uint64_t lead = 1;  // kBase^(w-1)
    for (std::uint32_t k = 0; k + 1 < cfg.w; ++k) lead = mulmod(lead, kBase);
    std::uint64_t h = fingerprint(std::string_view(ext).substr(0, cfg.w));
    const auto triggers = [&](std::uint64_t hash) {
        const std::uint64_t res = hash % cfg.p;
        return std::find(cfg.remainders.begin(), cfg.remainders.end(), res) !=
               cfg.remainders.end();
    };
    if (triggers(h)) fn(1);
    for (std::size_t i = 2; i <= n; ++i) {
        h = submod(h, mulmod(static_cast<unsigned char>(ext[i - 2]), lead));
        h = (mulmod(h, kBase) + static_cast<unsigned char>(ext[i + cfg.w - 2])) % kMod;
        if (triggers(h)) fn(i);
    }
}

struct DocParse {
    std::vector<std::string> phrases;         // in parse order
    std::vector<std::uint32_t> starts;        // trigger positions, ascending
    PfpOutput::StartMark mark;
};

DocParse parse_doc(const std::string& doc, const TriggerConfig& cfg) {
    const std::size_t n = doc.size();
    if (n < cfg.w)
        throw std::invalid_argument("prefix-free parsing: document shorter than window");
    DocParse out;
    for_each_trigger(doc, cfg, [&](std::size_t i) {
        out.starts.push_back(static_cast<std::uint32_t>(i));
    });
    if (out.starts.empty())
        throw std::invalid_argument("prefix-free parsing: document has no trigger");
    const std::size_t q = out.starts.size();
    out.phrases.reserve(q);
    for (std::size_t r = 0; r < q; ++r) {
        const std::uint32_t t = out.starts[r];
        const std::uint32_t tn = out.starts[(r + 1) % q];
        const std::size_t owned = (tn + n - t - 1) % n + 1;  // cyclic distance, in [1, n]
        std::string phrase;
        phrase.reserve(owned + cfg.w);
        for (std::size_t k = 0; k < owned + cfg.w; ++k)
            phrase += doc[(t - 1 + k) % n];
        out.phrases.push_back(std::move(phrase));
    }
    if (out.starts.front() == 1)
        out.mark = {1, 1};
    else
        out.mark = {static_cast<std::uint32_t>(q),
                    static_cast<std::uint32_t>(n - out.starts.back() + 2)};
    return out;
}

}  // namespace

std::uint64_t kr_window_hash(std::string_view window, std::uint64_t p) {
    if (p == 0) throw std::invalid_argument("residue modulus must be positive");
    return fingerprint(window) % p;
}

std::vector<std::uint64_t> select_remainders(const SeqCollection& coll,
                                             std::uint32_t w, std::uint64_t p) {
    coll.validate();
    if (w == 0) throw std::invalid_argument("window length must be positive");
    if (p == 0) throw std::invalid_argument("residue modulus must be positive");
    std::vector<std::uint64_t> chosen = {0};
    for (const SeqDoc& d : coll.docs) {
        if (d.seq.size() < w)
            throw std::invalid_argument("prefix-free parsing: document shorter than window");
        const std::string ext = extend(d.seq, w);
        bool covered = false;
        std::uint64_t last = 0;
        for (std::size_t i = 1; i <= d.seq.size(); ++i) {
            last = fingerprint(std::string_view(ext).substr(i - 1, w)) % p;
            if (std::find(chosen.begin(), chosen.end(), last) != chosen.end()) {
                covered = true;
                break;
            }
        }
        if (!covered) chosen.push_back(last);
    }
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    return chosen;
}

PfpOutput parse_collection(const SeqCollection& coll, const TriggerConfig& config) {
    coll.validate();
    if (config.w == 0) throw std::invalid_argument("window length must be positive");
    if (config.explicit_triggers) {
        for (const std::string& t : *config.explicit_triggers)
            if (t.size() != config.w)
                throw std::invalid_argument("explicit trigger length differs from window");
        if (config.explicit_triggers->empty())
            throw std::invalid_argument("explicit trigger set is empty");
    } else {
        if (config.p == 0) throw std::invalid_argument("residue modulus must be positive");
        if (config.remainders.empty())
            throw std::invalid_argument("remainder set is empty");
    }

    const std::size_t m = coll.size();
    std::vector<DocParse> parsed(m);
    const unsigned threads =
        std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(m)));
    if (threads <= 1) {
        for (std::size_t d = 0; d < m; ++d) parsed[d] = parse_doc(coll.docs[d].seq, config);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t]() {
                try {
                    for (std::size_t d = t; d < m; d += threads)
                        parsed[d] = parse_doc(coll.docs[d].seq, config);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    PfpOutput out;
    out.w = config.w;
    std::map<std::string, std::uint32_t> rank;
    for (const DocParse& dp : parsed)
        for (const std::string& ph : dp.phrases) rank.emplace(ph, 0);
    out.dict.reserve(rank.size());
    std::uint32_t next = 0;
    for (auto& [phrase, r] : rank) {
        r = ++next;
        out.dict.push_back(phrase);
    }
    out.parses.resize(m);
    out.start_marks.resize(m);
    out.phrase_starts.resize(m);
    for (std::size_t d = 0; d < m; ++d) {
        out.parses[d].reserve(parsed[d].phrases.size());
        for (const std::string& ph : parsed[d].phrases)
            out.parses[d].push_back(rank.at(ph));
        out.start_marks[d] = parsed[d].mark;
        out.phrase_starts[d] = std::move(parsed[d].starts);
    }
    return out;
}

std::string deparse_doc(const PfpOutput& pfp, std::size_t d) {
    if (d >= pfp.parses.size()) throw std::out_of_range("document index out of range");
    std::string rotated;
    for (std::uint32_t r : pfp.parses[d]) {
        const std::string& phrase = pfp.dict.at(r - 1);
        rotated.append(phrase, 0, phrase.size() - pfp.w);
    }
    // `rotated` starts at the first trigger position; rotate back so the
    // document starts at its own position 1.
    const std::size_t n = rotated.size();
    const std::size_t k = (n + 1 - pfp.phrase_starts[d][0]) % n;
    return rotated.substr(k) + rotated.substr(0, k);
}

std::vector<SuffixGroup> suffix_set(const std::vector<std::string>& dict,
                                    std::uint32_t w) {
    struct Entry {
        std::string_view suffix;
        std::uint32_t rank;
        std::uint32_t k;
    };
    std::vector<Entry> entries;
    std::size_t count = 0;
    for (const std::string& phrase : dict) {
        if (phrase.size() <= w)
            throw std::invalid_argument("phrase no longer than window");
        count += phrase.size() - w;
    }
    entries.reserve(count);
    for (std::uint32_t r = 1; r <= dict.size(); ++r) {
        const std::string_view phrase = dict[r - 1];
        for (std::uint32_t k = 1; k <= phrase.size() - w; ++k)
            entries.push_back({phrase.substr(k - 1), r, k});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.suffix != b.suffix ? a.suffix < b.suffix : a.rank < b.rank;
    });

    std::vector<SuffixGroup> out;
    std::size_t i = 0;
    while (i < entries.size()) {
        std::size_t j = i;
        while (j + 1 < entries.size() && entries[j + 1].suffix == entries[i].suffix) ++j;
        SuffixGroup g;
        g.suffix = std::string(entries[i].suffix);
        for (std::size_t t = i; t <= j; ++t) {
            g.sources.emplace_back(entries[t].rank, entries[t].k);
            if (entries[t].k == 1) g.full_phrase = true;
        }
        if (g.full_phrase && g.sources.size() != 1)
            throw std::logic_error("whole phrase equals a proper suffix of another phrase");
        out.push_back(std::move(g));
        i = j + 1;
    }
    return out;
}

}  // namespace cebwt
