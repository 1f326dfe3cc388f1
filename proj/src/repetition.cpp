#include "critexp/repetition.hpp"

#include "critexp/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace critexp {

namespace {

using Index = std::uint32_t;

// z[i] = lcp(s, s[i..]), z[0] = |s|.
void z_function(std::span<const std::uint8_t> s, std::span<Index> z) {
    const std::size_t n = s.size();
    if (n == 0) return;
    z[0] = static_cast<Index>(n);
    std::size_t l = 0, r = 0;
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t k = 0;
        if (i < r) k = std::min<std::size_t>(z[i - l], r - i);
        while (i + k < n && s[k] == s[i + k]) ++k;
        z[i] = static_cast<Index>(k);
        if (i + k > r) {
            l = i;
            r = i + k;
        }
    }
}

// out[i] = lcp(pattern, text[i..]) for i < count, given the pattern's Z array.
void lcp_against(std::span<const std::uint8_t> pattern, std::span<const Index> zp, std::span<const std::uint8_t> text,
                 std::span<Index> out, std::size_t count) {
    const std::size_t m = pattern.size();
    const std::size_t n = text.size();
    std::size_t l = 0, r = 0;
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t k = 0;
        if (i < r) k = std::min<std::size_t>(zp[i - l], r - i);
        while (k < m && i + k < n && pattern[k] == text[i + k]) ++k;
        out[i] = static_cast<Index>(k);
        if (i + k > r) {
            l = i;
            r = i + k;
        }
    }
}

struct Candidate {
    std::size_t begin;
    std::size_t end;
    std::size_t period;
};

class RunFinder {
public:
    explicit RunFinder(const Word& w) : n_(w.size()), fwd_(n_), rev_(n_), za_(n_ + 1), zb_(n_ + 1) {
        for (std::size_t i = 0; i < n_; ++i) {
            fwd_[i] = w[i];
            rev_[n_ - 1 - i] = fwd_[i];
        }
    }

    std::vector<Run> run() {
        if (n_ >= 2) solve(0, n_);
        std::sort(runs_.begin(), runs_.end(), [](const Run& a, const Run& b) {
            return a.start != b.start ? a.start < b.start : a.period < b.period;
        });
        return std::move(runs_);
    }

private:
    void solve(std::size_t lo, std::size_t hi) {
        if (hi - lo < 2) return;
        const std::size_t mid = lo + (hi - lo) / 2;
        cross(lo, mid, hi);
        solve(lo, mid);
        solve(mid, hi);
    }

    void cross(std::size_t lo, std::size_t mid, std::size_t hi) {
        const std::size_t lu = mid - lo;
        const std::size_t lv = hi - mid;
        const std::span<const std::uint8_t> fwd(fwd_);
        const std::span<const std::uint8_t> rev(rev_);
        const auto v = fwd.subspan(mid, lv);
        const auto uv = fwd.subspan(lo, lu + lv);
        const auto u_rev = rev.subspan(n_ - mid, lu);
        const auto uv_rev = rev.subspan(n_ - hi, lu + lv);
        const std::span<Index> za(za_), zb(zb_);
        cands_.clear();

        // Segments containing [mid, mid + p): right extension inside v,
        // left extension compares u against uv shifted by p.
        z_function(v, za);
        z_function(u_rev, zb);
        {
            std::vector<Index>& g = ext_;
            g.resize(lv);
            lcp_against(u_rev, zb, uv_rev, g, lv);
            for (std::size_t p = 1; p <= lv; ++p) {
                const std::size_t f = p < lv ? za[p] : 0;
                const std::size_t left = g[lv - p];
                if (left >= 1 && left + f >= p) cands_.push_back({mid - left, mid + p + f, p});
            }
        }
        // Segments containing [mid - p, mid): left extension inside u,
        // right extension compares v against uv shifted by p.
        {
            std::vector<Index>& e = ext_;
            e.resize(lu);
            lcp_against(v, za, uv, e, lu);
            for (std::size_t p = 1; p <= lu; ++p) {
                const std::size_t h = p < lu ? zb[p] : 0;
                const std::size_t right = e[lu - p];
                if (right >= 1 && h + right >= p) cands_.push_back({mid - p - h, mid + right, p});
            }
        }
        if (cands_.empty()) return;

        std::sort(cands_.begin(), cands_.end(), [](const Candidate& a, const Candidate& b) {
            if (a.begin != b.begin) return a.begin < b.begin;
            if (a.end != b.end) return a.end < b.end;
            return a.period < b.period;
        });
        for (std::size_t i = 0; i < cands_.size(); ++i) {
            const Candidate& c = cands_[i];
            if (i > 0 && cands_[i - 1].begin == c.begin && cands_[i - 1].end == c.end) continue;
            if (c.begin == lo && lo > 0 && fwd_[lo - 1] == fwd_[lo - 1 + c.period]) continue;
            if (c.end == hi && hi < n_ && fwd_[hi] == fwd_[hi - c.period]) continue;
            runs_.push_back({c.begin, c.period, c.end - c.begin});
        }
    }

    std::size_t n_;
    std::vector<std::uint8_t> fwd_;
    std::vector<std::uint8_t> rev_;
    std::vector<Index> za_;
    std::vector<Index> zb_;
    std::vector<Index> ext_;
    std::vector<Candidate> cands_;
    std::vector<Run> runs_;
};

void require_alpha_above_two(const Rational& alpha) {
    if (alpha <= Rational(2)) throw precondition_error("alpha must exceed 2 (got " + alpha.str() + ")");
}

} // namespace

bool has_period(const Word& w, std::uint64_t p) { return has_period(w, 0, w.size(), p); }

bool has_period(const Word& w, std::uint64_t start, std::uint64_t len, std::uint64_t p) {
    if (p == 0) throw precondition_error("has_period: period must be positive");
    if (start > w.size() || len > w.size() - start) throw precondition_error("has_period: range out of bounds");
    if (p >= len) return true;
    for (std::uint64_t j = start; j + p < start + len; ++j)
        if (w[j] != w[j + p]) return false;
    return true;
}

std::vector<Run> maximal_repetitions(const Word& w) {
    if (w.size() >= std::numeric_limits<Index>::max() / 2)
        throw size_error("maximal_repetitions: word of " + std::to_string(w.size()) + " letters exceeds 2^31");
    return RunFinder(w).run();
}

std::optional<Run> max_exponent_run(std::span<const Run> runs) {
    std::optional<Run> best;
    for (const Run& r : runs) {
        if (!best) {
            best = r;
            continue;
        }
        // length/period > best.length/best.period, exactly.
        const auto lhs = static_cast<unsigned __int128>(r.length) * best->period;
        const auto rhs = static_cast<unsigned __int128>(best->length) * r.period;
        if (lhs > rhs || (lhs == rhs && (r.start < best->start || (r.start == best->start && r.period < best->period))))
            best = r;
    }
    return best;
}

std::optional<Rational> max_exponent(std::span<const Run> runs) {
    if (auto r = max_exponent_run(runs)) return r->exponent();
    return std::nullopt;
}

std::optional<Rational> max_exponent(const Word& w) { return max_exponent(maximal_repetitions(w)); }

PowerFreeVerdict is_power_free(std::span<const Run> runs, const Rational& alpha) {
    require_alpha_above_two(alpha);
    for (const Run& r : runs)
        if (compare_ratio(r.length, r.period, alpha) >= 0) return {r};
    return {};
}

PowerFreeVerdict is_power_free(const Word& w, const Rational& alpha) {
    require_alpha_above_two(alpha);
    return is_power_free(maximal_repetitions(w), alpha);
}

std::optional<Run> find_power_with_period(const Word& w, const Rational& beta, std::uint64_t p) {
    if (p == 0) throw precondition_error("find_power_with_period: period must be positive");
    if (beta < Rational(2)) throw precondition_error("find_power_with_period: beta must be at least 2");
    const std::uint64_t n = w.size();
    std::uint64_t j = 0;
    while (j + p < n) {
        if (w[j] != w[j + p]) {
            ++j;
            continue;
        }
        const std::uint64_t first = j;
        while (j + p < n && w[j] == w[j + p]) ++j;
        const std::uint64_t len = j - first + p;
        if (compare_ratio(len, p, beta) >= 0) return Run{first, p, len};
    }
    return std::nullopt;
}

std::vector<Run> naive_runs(const Word& w, std::uint64_t bound) {
    const std::uint64_t n = w.size();
    if (n > bound)
        throw size_error("naive oracle refuses " + std::to_string(n) + " letters (bound " + std::to_string(bound) + ")");
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> best; // (start, end) -> least period
    for (std::uint64_t p = 1; 2 * p <= n; ++p) {
        for (std::uint64_t i = 0; i + p < n;) {
            std::uint64_t k = 0;
            while (i + k + p < n && w[i + k] == w[i + k + p]) ++k;
            if (k >= p) {
                auto [it, inserted] = best.try_emplace({i, i + k + p}, p);
                if (!inserted) it->second = std::min(it->second, p);
            }
            i += k + 1;
        }
    }
    std::vector<Run> out;
    for (const auto& [seg, p] : best) out.push_back({seg.first, p, seg.second - seg.first});
    std::sort(out.begin(), out.end(),
              [](const Run& a, const Run& b) { return a.start != b.start ? a.start < b.start : a.period < b.period; });
    return out;
}

std::optional<Rational> naive_max_exponent(const Word& w, std::uint64_t bound) {
    const std::uint64_t n = w.size();
    if (n > bound)
        throw size_error("naive oracle refuses " + std::to_string(n) + " letters (bound " + std::to_string(bound) + ")");
    // For each period, streak[i] = number of j >= i with w[j] = w[j + p]
    // before the first mismatch; the pair (i, p) extends to p + streak[i].
    std::optional<Rational> best;
    std::vector<std::uint64_t> streak(n + 1, 0);
    for (std::uint64_t p = 1; 2 * p <= n; ++p) {
        streak[n - p] = 0;
        for (std::uint64_t i = n - p; i-- > 0;) {
            streak[i] = w[i] == w[i + p] ? streak[i + 1] + 1 : 0;
            const std::uint64_t len = p + streak[i];
            if (len >= 2 * p) {
                Rational e(static_cast<std::int64_t>(len), static_cast<std::int64_t>(p));
                if (!best || e > *best) best = e;
            }
        }
    }
    return best;
}

} // namespace critexp
