#include "cumulantkit/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace ckit {

namespace {

void sort_canonical(std::vector<std::vector<int>>& blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

}  // namespace

Partition Partition::of_blocks(int n, std::vector<std::vector<int>> blocks) {
    if (n < 0) fail(errc::invalid_partition, "negative degree");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    int count = 0;
    for (auto& b : blocks) {
        if (b.empty()) fail(errc::invalid_partition, "empty block");
        for (int x : b) {
            if (x < 1 || x > n) fail(errc::invalid_partition, "element out of range");
            if (seen[static_cast<std::size_t>(x)]) fail(errc::invalid_partition, "repeated element");
            seen[static_cast<std::size_t>(x)] = true;
            ++count;
        }
    }
    if (count != n) fail(errc::invalid_partition, "blocks do not cover [n]");
    sort_canonical(blocks);
    Partition p;
    p.n_ = n;
    p.blocks_ = std::move(blocks);
    return p;
}

Partition Partition::standardized(const std::vector<std::vector<int>>& raw_blocks) {
    std::set<int> all;
    int count = 0;
    for (const auto& b : raw_blocks) {
        for (int x : b) {
            if (x < 1) fail(errc::invalid_partition, "elements must be positive");
            all.insert(x);
            ++count;
        }
    }
    if (static_cast<int>(all.size()) != count)
        fail(errc::invalid_partition, "overlapping blocks");
    std::map<int, int> relabel;
    int next = 1;
    for (int x : all) relabel[x] = next++;
    std::vector<std::vector<int>> blocks;
    for (const auto& b : raw_blocks) {
        if (b.empty()) continue;
        std::vector<int> nb;
        nb.reserve(b.size());
        for (int x : b) nb.push_back(relabel[x]);
        blocks.push_back(std::move(nb));
    }
    return of_blocks(count, std::move(blocks));
}

Partition Partition::coarsest(int n) {
    if (n == 0) return Partition();
    std::vector<int> b(static_cast<std::size_t>(n));
    std::iota(b.begin(), b.end(), 1);
    return of_blocks(n, {b});
}

Partition Partition::finest(int n) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= n; ++i) blocks.push_back({i});
    return of_blocks(n, std::move(blocks));
}

int Partition::block_of(int x) const {
    for (int i = 0; i < block_count(); ++i)
        if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), x)) return i;
    fail(errc::invalid_argument, "element not in partition");
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.blocks_.size() <=> b.blocks_.size(); c != 0) return c;
    if (a.blocks_ < b.blocks_) return std::strong_ordering::less;
    if (b.blocks_ < a.blocks_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool blocks_cross(const std::vector<int>& a, const std::vector<int>& b) {
    // a and b cross iff each meets the convex hull of the other.
    auto meets_hull = [](const std::vector<int>& x, const std::vector<int>& y) {
        auto it = std::lower_bound(y.begin(), y.end(), x.front());
        return it != y.end() && *it < x.back();
    };
    return meets_hull(a, b) && meets_hull(b, a);
}

bool is_noncrossing(const Partition& p) {
    const auto& bs = p.blocks();
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = i + 1; j < bs.size(); ++j)
            if (blocks_cross(bs[i], bs[j])) return false;
    return true;
}

Partition nc_closure(const Partition& p) {
    std::vector<std::vector<int>> blocks = p.blocks();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < blocks.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < blocks.size() && !changed; ++j) {
                if (blocks_cross(blocks[i], blocks[j])) {
                    std::vector<int> merged;
                    std::merge(blocks[i].begin(), blocks[i].end(), blocks[j].begin(),
                               blocks[j].end(), std::back_inserter(merged));
                    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(j));
                    blocks[i] = std::move(merged);
                    changed = true;
                }
            }
        }
    }
    return Partition::of_blocks(p.degree(), std::move(blocks));
}

std::vector<Partition> enumerate_set_partitions(int n) {
    if (n < 0) fail(errc::invalid_argument, "negative degree");
    std::vector<Partition> out;
    std::vector<std::vector<int>> blocks;
    auto rec = [&](auto&& self, int i) -> void {
        if (i > n) {
            out.push_back(Partition::of_blocks(n, blocks));
            return;
        }
        std::size_t count = blocks.size();  // recursion grows the vector
        for (std::size_t bi = 0; bi < count; ++bi) {
            blocks[bi].push_back(i);
            self(self, i + 1);
            blocks[bi].pop_back();
        }
        blocks.push_back({i});
        self(self, i + 1);
        blocks.pop_back();
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Direct generation: the block of the smallest position splits the window into
// independent segments, which is exactly the noncrossing condition.
struct NcGenerator {
    std::vector<std::vector<int>> acc;
    std::function<void()> emit;

    void window(int lo, int hi, const std::function<void()>& k) {
        if (lo > hi) {
            k();
            return;
        }
        std::vector<int> block{lo};
        extend(block, hi, k);
    }

    // The open block may close here or grow by any position beyond its last.
    void extend(std::vector<int>& block, int hi, const std::function<void()>& k) {
        acc.push_back(block);
        segments(block, 0, hi, k);
        acc.pop_back();
        for (int nxt = block.back() + 1; nxt <= hi; ++nxt) {
            block.push_back(nxt);
            extend(block, hi, k);
            block.pop_back();
        }
    }

    // Partition the gaps between consecutive block elements, then the tail.
    void segments(const std::vector<int>& block, std::size_t i, int hi,
                  const std::function<void()>& k) {
        if (i + 1 < block.size())
            window(block[i] + 1, block[i + 1] - 1, [&] { segments(block, i + 1, hi, k); });
        else
            window(block.back() + 1, hi, k);
    }
};

}  // namespace

std::vector<Partition> enumerate_noncrossing_partitions(int n) {
    if (n < 0) fail(errc::invalid_argument, "negative degree");
    std::vector<Partition> out;
    NcGenerator gen;
    gen.window(1, n, [&] { out.push_back(Partition::of_blocks(n, gen.acc)); });
    std::sort(out.begin(), out.end());
    return out;
}

Partition restrict_to(const Partition& p, const std::vector<int>& x) {
    for (int v : x)
        if (v < 1 || v > p.degree()) fail(errc::invalid_subset, "subset not within [n]");
    std::set<int> xs(x.begin(), x.end());
    std::vector<std::vector<int>> raw;
    for (const auto& b : p.blocks()) {
        std::vector<int> inter;
        for (int v : b)
            if (xs.count(v)) inter.push_back(v);
        if (!inter.empty()) raw.push_back(std::move(inter));
    }
    return Partition::standardized(raw);
}

std::vector<std::pair<int, int>> convex_components(const std::vector<int>& x) {
    if (x.empty()) fail(errc::invalid_argument, "empty set has no convex components");
    std::vector<int> s(x);
    std::sort(s.begin(), s.end());
    std::vector<std::pair<int, int>> out;
    int lo = s[0], hi = s[0];
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] == hi + 1) {
            hi = s[i];
        } else {
            out.emplace_back(lo, hi);
            lo = hi = s[i];
        }
    }
    out.emplace_back(lo, hi);
    return out;
}

NestingPreorder nesting_preorder(const Partition& p) {
    int k = p.block_count();
    NestingPreorder pre;
    pre.one_step.assign(static_cast<std::size_t>(k), std::vector<bool>(static_cast<std::size_t>(k), false));
    for (int i = 0; i < k; ++i) {
        const auto& bi = p.block(i);
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            const auto& bj = p.block(j);
            auto it = std::lower_bound(bj.begin(), bj.end(), bi.front());
            pre.one_step[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                it != bj.end() && *it < bi.back();
        }
    }
    pre.closure = pre.one_step;
    for (int m = 0; m < k; ++m)
        for (int i = 0; i < k; ++i)
            if (pre.closure[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)])
                for (int j = 0; j < k; ++j)
                    if (pre.closure[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)])
                        pre.closure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    return pre;
}

bool NestingPreorder::antisymmetric() const {
    for (std::size_t i = 0; i < closure.size(); ++i)
        for (std::size_t j = i + 1; j < closure.size(); ++j)
            if (closure[i][j] && closure[j][i]) return false;
    return true;
}

bool is_lowerset(const Partition& p, const NestingPreorder& pre, unsigned mask) {
    int k = p.block_count();
    for (int j = 0; j < k; ++j) {
        if (!(mask >> j & 1u)) continue;
        for (int i = 0; i < k; ++i)
            if (pre.closure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
                !(mask >> i & 1u))
                return false;
    }
    return true;
}

std::vector<Cut> enumerate_cuts(const Partition& p) {
    int k = p.block_count();
    if (k > 31) fail(errc::invalid_argument, "too many blocks for cut enumeration");
    NestingPreorder pre = nesting_preorder(p);
    std::vector<Cut> cuts;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (!is_lowerset(p, pre, mask)) continue;
        Cut c;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1u) c.lowerset.push_back(i);
        cuts.push_back(std::move(c));
    }
    return cuts;
}

Partition lowerset_partition(const Partition& p, const Cut& cut) {
    std::vector<std::vector<int>> raw;
    for (int i : cut.lowerset) raw.push_back(p.block(i));
    return Partition::standardized(raw);
}

Partition upperset_partition(const Partition& p, const Cut& cut) {
    std::vector<bool> in_lower(static_cast<std::size_t>(p.block_count()), false);
    for (int i : cut.lowerset) in_lower[static_cast<std::size_t>(i)] = true;
    std::vector<std::vector<int>> raw;
    for (int i = 0; i < p.block_count(); ++i)
        if (!in_lower[static_cast<std::size_t>(i)]) raw.push_back(p.block(i));
    return Partition::standardized(raw);
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& f : factors_) d += f.degree();
    return d;
}

int Monomial::total_blocks() const {
    int k = 0;
    for (const auto& f : factors_) k += f.block_count();
    return k;
}

bool Monomial::has_empty_factor() const {
    for (const auto& f : factors_)
        if (f.empty()) return true;
    return false;
}

Monomial Monomial::reduced() const {
    std::vector<Partition> fs;
    for (const auto& f : factors_)
        if (!f.empty()) fs.push_back(f);
    return Monomial(std::move(fs));
}

Monomial Monomial::concat(const Monomial& o) const {
    std::vector<Partition> fs = factors_;
    fs.insert(fs.end(), o.factors_.begin(), o.factors_.end());
    return Monomial(std::move(fs));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.factors_ < b.factors_) return std::strong_ordering::less;
    if (b.factors_ < a.factors_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

CMonomial::CMonomial(std::vector<Partition> factors) : factors_(std::move(factors)) {
    for (const auto& f : factors_)
        if (f.empty()) fail(errc::invalid_argument, "empty partition is not a commutative generator");
    std::sort(factors_.begin(), factors_.end());
}

int CMonomial::total_degree() const {
    int d = 0;
    for (const auto& f : factors_) d += f.degree();
    return d;
}

int CMonomial::total_blocks() const {
    int k = 0;
    for (const auto& f : factors_) k += f.block_count();
    return k;
}

CMonomial CMonomial::mul(const CMonomial& o) const {
    std::vector<Partition> fs = factors_;
    fs.insert(fs.end(), o.factors_.begin(), o.factors_.end());
    return CMonomial(std::move(fs));
}

std::strong_ordering operator<=>(const CMonomial& a, const CMonomial& b) {
    if (a.factors_ < b.factors_) return std::strong_ordering::less;
    if (b.factors_ < a.factors_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Monomial gap_monomial(const Partition& p, const Cut& cut) {
    // Elements carried by the lowerset split [n] into |X|+1 intervals; the
    // upperset restricts to each interval because blocks in the complement
    // cannot straddle lowerset elements.
    std::vector<int> xs;
    for (int i : cut.lowerset)
        xs.insert(xs.end(), p.block(i).begin(), p.block(i).end());
    std::sort(xs.begin(), xs.end());
    std::vector<Partition> gaps;
    int lo = 1;
    for (std::size_t i = 0; i <= xs.size(); ++i) {
        int hi = (i < xs.size()) ? xs[i] - 1 : p.degree();
        std::vector<int> window;
        for (int v = lo; v <= hi; ++v) window.push_back(v);
        gaps.push_back(restrict_to(p, window));
        if (i < xs.size()) lo = xs[i] + 1;
    }
    return Monomial(std::move(gaps));
}

Monomial reduced_gap_monomial(const Partition& p, const Cut& cut) {
    return gap_monomial(p, cut).reduced();
}

bool finer_or_equal(const Partition& p, const Partition& q) {
    if (p.degree() != q.degree()) return false;
    for (const auto& b : p.blocks()) {
        int home = q.block_of(b.front());
        for (int x : b)
            if (q.block_of(x) != home) return false;
    }
    return true;
}

CMonomial fibre(const Partition& p, const Partition& q) {
    if (!finer_or_equal(p, q)) fail(errc::not_comparable, "fibre requires p <= q");
    std::vector<Partition> factors;
    factors.reserve(q.blocks().size());
    for (const auto& tau : q.blocks()) factors.push_back(restrict_to(p, tau));
    return CMonomial(std::move(factors));
}

std::vector<Partition> enumerate_coarsenings(const Partition& p, bool noncrossing_only) {
    int k = p.block_count();
    std::vector<Partition> out;
    for (const Partition& grouping : enumerate_set_partitions(k)) {
        std::vector<std::vector<int>> merged;
        for (const auto& g : grouping.blocks()) {
            std::vector<int> u;
            for (int bi : g) {
                const auto& b = p.block(bi - 1);
                u.insert(u.end(), b.begin(), b.end());
            }
            std::sort(u.begin(), u.end());
            merged.push_back(std::move(u));
        }
        Partition q = Partition::of_blocks(p.degree(), std::move(merged));
        if (noncrossing_only && !is_noncrossing(q)) continue;
        out.push_back(std::move(q));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Partition ordinal_sum(const Partition& p, const Partition& q) {
    std::vector<std::vector<int>> blocks = p.blocks();
    for (const auto& b : q.blocks()) {
        std::vector<int> nb;
        nb.reserve(b.size());
        for (int x : b) nb.push_back(x + p.degree());
        blocks.push_back(std::move(nb));
    }
    return Partition::of_blocks(p.degree() + q.degree(), std::move(blocks));
}

std::vector<Partition> irreducible_components(const Partition& p) {
    if (!is_noncrossing(p)) fail(errc::unsupported_for_crossing, "irreducible components need a noncrossing partition");
    std::vector<Partition> out;
    int lo = 1;
    while (lo <= p.degree()) {
        int hi = p.block(p.block_of(lo)).back();
        std::vector<int> window;
        for (int v = lo; v <= hi; ++v) window.push_back(v);
        out.push_back(restrict_to(p, window));
        lo = hi + 1;
    }
    return out;
}

bool is_irreducible(const Partition& p) {
    if (p.empty()) return false;
    if (!is_noncrossing(p)) fail(errc::unsupported_for_crossing, "irreducibility needs a noncrossing partition");
    return p.block_of(1) == p.block_of(p.degree());
}

bool is_boolean(const Partition& p) {
    for (const Partition& e : irreducible_components(p))
        if (e.block_count() != 1) return false;
    return true;
}

namespace {

Integer heap_order_count_rec(const Partition& p, std::map<Partition, Integer>& memo) {
    if (p.block_count() <= 1) return 1;
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    NestingPreorder pre = nesting_preorder(p);
    int k = p.block_count();
    Integer total = 0;
    for (int i = 0; i < k; ++i) {
        // Upper-blocks (nothing nested inside) can take the last number.
        bool maximal = true;
        for (int j = 0; j < k && maximal; ++j)
            if (pre.one_step[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) maximal = false;
        if (!maximal) continue;
        std::vector<int> rest;
        for (const auto& b : p.blocks())
            if (&b != &p.block(i)) rest.insert(rest.end(), b.begin(), b.end());
        std::sort(rest.begin(), rest.end());
        total += heap_order_count_rec(restrict_to(p, rest), memo);
    }
    memo[p] = total;
    return total;
}

}  // namespace

Integer heap_order_count(const Partition& p) {
    if (!is_noncrossing(p)) fail(errc::unsupported_for_crossing, "heap orderings need a noncrossing partition");
    static std::map<Partition, Integer> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    return heap_order_count_rec(p, memo);
}

}  // namespace ckit
