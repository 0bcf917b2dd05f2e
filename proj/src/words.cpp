#include "gpatoms/words.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>

#include "gpatoms/clique_poly.hpp"

namespace gpatoms::words {

namespace {

using IndexWord = std::vector<std::uint8_t>;

IndexWord to_indices(const Graph& g, const Word& w) {
    IndexWord out;
    out.reserve(w.size());
    for (const auto& letter : w) out.push_back(static_cast<std::uint8_t>(g.index_of(letter)));
    return out;
}

Word to_letters(const Graph& g, const IndexWord& w) {
    Word out;
    out.reserve(w.size());
    for (auto i : w) out.push_back(g.vertices()[i]);
    return out;
}

// One reusable scratch buffer for the greedy normal form.
struct Canonicalizer {
    explicit Canonicalizer(const Graph& g) : adj(g.size()) {
        for (std::size_t i = 0; i < g.size(); ++i) adj[i] = g.neighbor_mask(i);
    }

    // Rewrites w into the lexicographically least member of its class:
    // repeatedly front the smallest remaining letter whose occurrence commutes
    // past everything left of it (equal letters never commute, so the choice
    // among occurrences is unambiguous).
    void run(IndexWord& w) {
        out.assign(w.begin(), w.end());
        std::size_t m = w.size();
        auto* rest = out.data();
        for (std::size_t step = 0; step < w.size(); ++step, --m) {
            std::uint64_t before = 0;
            std::size_t best = m;  // index into rest
            for (std::size_t i = 0; i < m; ++i) {
                std::uint8_t letter = rest[i];
                if ((before & ~adj[letter]) == 0 && (best == m || letter < rest[best])) best = i;
                before |= std::uint64_t(1) << letter;
            }
            w[step] = rest[best];
            for (std::size_t i = best; i + 1 < m; ++i) rest[i] = rest[i + 1];
        }
    }

    bool is_canonical(const IndexWord& w) {
        probe = w;
        run(probe);
        return probe == w;
    }

    std::vector<std::uint64_t> adj;
    IndexWord out;
    IndexWord probe;
};

// Blocked-letter mask for incremental reducedness: letter b stays blocked
// until some distinct non-adjacent letter follows it; re-seeing a blocked
// letter breaks reducedness.
bool reduced_step(const std::vector<std::uint64_t>& adj, std::uint64_t& blocked, std::uint8_t letter) {
    std::uint64_t bit = std::uint64_t(1) << letter;
    if (blocked & bit) return false;
    blocked = (blocked & adj[letter]) | bit;
    return true;
}

bool is_reduced_idx(const std::vector<std::uint64_t>& adj, const IndexWord& w) {
    std::uint64_t blocked = 0;
    for (auto letter : w)
        if (!reduced_step(adj, blocked, letter)) return false;
    return true;
}

// Depth-first walk over canonical representatives of reduced classes in lex
// order, all lengths <= max_len.  Visitor gets (word, weight_or_null).  Caps
// the total number of visited classes.
template <typename Visit>
void walk_reduced_classes(const Graph& g, std::size_t max_len, std::size_t total_cap, Visit&& visit) {
    Canonicalizer canon(g);
    std::size_t n = g.size();
    IndexWord word;
    std::vector<std::uint64_t> blocked_stack{0};
    std::size_t visited = 0;
    auto count_one = [&] {
        if (++visited > total_cap)
            throw cap_exceeded("reduced word class enumeration passed " + std::to_string(total_cap) +
                               " classes");
    };
    count_one();
    visit(static_cast<const IndexWord&>(word));
    if (max_len == 0 || n == 0) return;
    struct Frame {
        std::size_t next_letter = 0;
    };
    std::vector<Frame> stack{Frame{}};
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next_letter >= n || word.size() >= max_len) {
            stack.pop_back();
            if (!word.empty()) {
                word.pop_back();
                blocked_stack.pop_back();
            }
            continue;
        }
        std::uint8_t letter = static_cast<std::uint8_t>(f.next_letter++);
        std::uint64_t blocked = blocked_stack.back();
        if (!reduced_step(canon.adj, blocked, letter)) continue;
        word.push_back(letter);
        if (!canon.is_canonical(word)) {
            word.pop_back();
            continue;
        }
        count_one();
        visit(static_cast<const IndexWord&>(word));
        blocked_stack.push_back(blocked);
        stack.push_back(Frame{});
    }
}

TruncatedSeries diagonal_clique_series(const Graph& g, std::size_t order) {
    // K_G(t, ..., t) as a polynomial in t: cliques grouped by size.
    std::vector<Rational> by_size(g.size() + 1, Rational(0));
    for (std::uint64_t m : g.clique_masks()) {
        int d = std::popcount(m);
        by_size[d] += (d % 2 == 1) ? -1 : 1;
    }
    return TruncatedSeries::from_polynomial(UnivariatePolynomial(std::move(by_size)), order);
}

}  // namespace

bool is_reduced(const Graph& g, const Word& w) {
    Canonicalizer canon(g);
    return is_reduced_idx(canon.adj, to_indices(g, w));
}

Word canonical_form(const Graph& g, const Word& w) {
    IndexWord idx = to_indices(g, w);
    Canonicalizer canon(g);
    canon.run(idx);
    return to_letters(g, idx);
}

Word canonical_form_bfs(const Graph& g, const Word& w) {
    IndexWord start = to_indices(g, w);
    Canonicalizer canon(g);
    std::set<IndexWord> seen{start};
    std::queue<IndexWord> queue;
    queue.push(start);
    while (!queue.empty()) {
        IndexWord current = queue.front();
        queue.pop();
        for (std::size_t i = 0; i + 1 < current.size(); ++i) {
            std::uint8_t a = current[i], b = current[i + 1];
            if (!((canon.adj[a] >> b) & 1)) continue;
            std::swap(current[i], current[i + 1]);
            if (seen.insert(current).second) queue.push(current);
            std::swap(current[i], current[i + 1]);
        }
    }
    return to_letters(g, *seen.begin());
}

TruncatedSeries count_reduced_classes_series(const Graph& g, std::size_t max_len) {
    return diagonal_clique_series(g, max_len).substitute_t_over_one_plus_t().reciprocal();
}

std::vector<Word> enumerate_reduced_classes(const Graph& g, std::size_t length, std::size_t cap) {
    TruncatedSeries counts = count_reduced_classes_series(g, length);
    if (counts.coefficient(length) > Rational(static_cast<unsigned long>(cap)))
        throw cap_exceeded("class count at length " + std::to_string(length) + " exceeds cap " +
                           std::to_string(cap));
    std::vector<Word> out;
    walk_reduced_classes(g, length, 8 * cap + 64, [&](const IndexWord& w) {
        if (w.size() == length) out.push_back(to_letters(g, w));
    });
    return out;
}

Rational truncated_weighted_sum(const Graph& g, const std::map<std::string, Rational>& x,
                                std::size_t max_len, std::size_t cap) {
    if (x.size() != g.size()) throw domain_error("assignment must cover every vertex exactly once");
    // Letters with x_v = 0 kill every class containing them; walk the support.
    auto [support, support_x] = restrict_zeros(g, x);
    std::vector<Rational> values(support.size());
    for (const auto& [v, value] : support_x) values[support.index_of(v)] = value;
    Rational total(0);
    std::vector<Rational> product_stack{Rational(1)};
    std::size_t depth_seen = 0;
    walk_reduced_classes(support, max_len, cap, [&](const IndexWord& w) {
        product_stack.resize(w.size() + 1);
        if (w.size() > 0) {
            // DFS order guarantees the parent prefix product sits at w.size()-1
            product_stack[w.size()] = product_stack[w.size() - 1] * values[w.back()];
        }
        total += product_stack[w.size()];
        depth_seen = std::max(depth_seen, w.size());
    });
    return total;
}

std::vector<Rational> count_all_word_classes(const Graph& g, std::size_t max_len, std::size_t cap) {
    std::vector<Rational> counts{Rational(1)};
    if (max_len == 0) return counts;
    std::size_t n = g.size();
    if (n == 0) {
        counts.assign(max_len + 1, Rational(0));
        counts[0] = 1;
        return counts;
    }
    Canonicalizer canon(g);
    if (max_len <= 8) {
        // words pack into one uint64 (one byte per letter)
        std::vector<std::uint64_t> level{0};
        IndexWord scratch, candidate;
        for (std::size_t len = 1; len <= max_len; ++len) {
            std::vector<std::uint64_t> next;
            next.reserve(level.size() * n);
            for (std::uint64_t packed : level) {
                scratch.assign(len, 0);
                for (std::size_t i = 0; i + 1 < len; ++i)
                    scratch[i] = static_cast<std::uint8_t>((packed >> (8 * i)) & 0xff);
                for (std::size_t v = 0; v < n; ++v) {
                    scratch[len - 1] = static_cast<std::uint8_t>(v);
                    candidate = scratch;
                    canon.run(candidate);
                    std::uint64_t repacked = 0;
                    for (std::size_t i = 0; i < len; ++i)
                        repacked |= std::uint64_t(candidate[i]) << (8 * i);
                    next.push_back(repacked);
                }
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            if (next.size() > cap)
                throw cap_exceeded("word class count " + std::to_string(next.size()) +
                                   " exceeds cap " + std::to_string(cap));
            counts.push_back(Rational(static_cast<unsigned long>(next.size())));
            level = std::move(next);
        }
        return counts;
    }
    std::vector<IndexWord> level{IndexWord{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<IndexWord> next;
        next.reserve(level.size() * n);
        for (const IndexWord& w : level) {
            IndexWord candidate = w;
            candidate.push_back(0);
            for (std::size_t v = 0; v < n; ++v) {
                candidate.back() = static_cast<std::uint8_t>(v);
                IndexWord run = candidate;
                canon.run(run);
                next.push_back(std::move(run));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (next.size() > cap)
            throw cap_exceeded("word class count " + std::to_string(next.size()) + " exceeds cap " +
                               std::to_string(cap));
        counts.push_back(Rational(static_cast<unsigned long>(next.size())));
        level = std::move(next);
    }
    return counts;
}

CartierFoataReport cartier_foata_identity_check(const Graph& g, std::size_t max_len,
                                                std::size_t cap) {
    CartierFoataReport report;
    report.reduced_counts.assign(max_len + 1, Rational(0));
    walk_reduced_classes(g, max_len, cap,
                         [&](const IndexWord& w) { report.reduced_counts[w.size()] += 1; });
    report.all_class_counts = count_all_word_classes(g, max_len, cap);

    TruncatedSeries reduced_side(report.reduced_counts);
    TruncatedSeries composed = diagonal_clique_series(g, max_len).substitute_t_over_one_plus_t();
    report.reduced_identity = (composed * reduced_side == TruncatedSeries::one(max_len));

    TruncatedSeries unreduced_side(report.all_class_counts);
    TruncatedSeries plain = diagonal_clique_series(g, max_len);
    report.unreduced_identity = (plain * unreduced_side == TruncatedSeries::one(max_len));
    return report;
}

}  // namespace gpatoms::words
