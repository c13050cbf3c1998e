#include "tevtrop/hurwitz.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

namespace tevtrop {

namespace {

using Partition = std::vector<int>;

struct Canon {
    int d = 1;
    std::array<Partition, 3> p{}; // (sigma1, sigma2, sigma3) cycle types
};

int count_ones(const Partition& v) {
    return static_cast<int>(std::count(v.begin(), v.end(), 1));
}

// Ordering key used to pick the third slot: most unit parts, then most
// parts, then lexicographically largest.
std::tuple<int, size_t, Partition> slot_key(const Partition& v) {
    return {count_ones(v), v.size(), v};
}

bool is_transposition(const Partition& v, int d) {
    return !v.empty() && v[0] == 2 && count_ones(v) == static_cast<int>(v.size()) - 1 &&
           std::accumulate(v.begin(), v.end(), 0) == d;
}

Canon canonicalize(const LocalHurwitzQuery& q) {
    if (q.d < 1) throw DomainError("local Hurwitz query needs d >= 1");
    std::array<Partition, 3> parts;
    for (int i = 0; i < 3; ++i) {
        parts[i] = q.profiles[i].parts;
        std::sort(parts[i].begin(), parts[i].end(), std::greater<>());
        int sum = 0;
        for (int part : parts[i]) {
            if (part < 1)
                throw DomainError("cycle type parts must be positive");
            sum += part;
        }
        if (sum != q.d)
            throw DomainError("cycle type does not partition d=" +
                              std::to_string(q.d));
    }
    std::array<int, 3> order{0, 1, 2};
    // The transposition profile, if present, is the second slot.
    int t = -1;
    for (int i = 0; i < 3 && t < 0; ++i)
        if (is_transposition(parts[i], q.d)) t = i;
    if (t >= 0) {
        std::array<int, 2> rest{};
        int r = 0;
        for (int i = 0; i < 3; ++i)
            if (i != t) rest[r++] = i;
        if (slot_key(parts[rest[0]]) > slot_key(parts[rest[1]]))
            std::swap(rest[0], rest[1]);
        order = {rest[0], t, rest[1]};
    } else {
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return slot_key(parts[a]) < slot_key(parts[b]);
        });
    }
    return Canon{q.d, {parts[order[0]], parts[order[1]], parts[order[2]]}};
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt conjugacy_class_size(const Partition& type, int d) {
    // d! / (prod of parts * prod of multiplicities!)
    BigInt denom = 1;
    for (int part : type) denom *= part;
    int run = 1;
    for (size_t i = 1; i <= type.size(); ++i) {
        if (i < type.size() && type[i] == type[i - 1]) {
            ++run;
        } else {
            denom *= factorial(run);
            run = 1;
        }
    }
    return factorial(d) / denom;
}

Partition cycle_type_of(const std::vector<int>& perm) {
    const int d = static_cast<int>(perm.size());
    std::vector<bool> seen(d, false);
    Partition type;
    for (int s = 0; s < d; ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (int x = s; !seen[x]; x = perm[x]) {
            seen[x] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<>());
    return type;
}

// Canonical representative of a cycle type: consecutive blocks cycled.
std::vector<int> representative(const Partition& type, int d) {
    std::vector<int> perm(d);
    int base = 0;
    for (int len : type) {
        for (int i = 0; i < len; ++i)
            perm[base + i] = base + (i + 1) % len;
        base += len;
    }
    return perm;
}

bool generates_transitively(const std::vector<int>& a, const std::vector<int>& b) {
    const int d = static_cast<int>(a.size());
    std::vector<int> parent(d);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int x = 0; x < d; ++x) {
        parent[find(x)] = find(a[x]);
        parent[find(x)] = find(b[x]);
    }
    int root = find(0);
    for (int x = 1; x < d; ++x)
        if (find(x) != root) return false;
    return true;
}

bool is_head_with_ones(const Partition& v, int head) {
    // (head, 1, 1, ..., 1) with head >= 2
    if (head < 2 || v.empty() || v[0] != head) return false;
    return count_ones(v) == static_cast<int>(v.size()) - 1;
}

} // namespace

std::optional<BigRat> local_hurwitz_catalog(const LocalHurwitzQuery& q) {
    const Canon c = canonicalize(q);
    const int d = c.d;
    const auto& l1 = c.p[0];
    const auto& l2 = c.p[1];
    const auto& l3 = c.p[2];
    const bool l1_full_cycle = l1.size() == 1 && l1[0] == d;
    const bool l3_all_ones = count_ones(l3) == d;

    if (d == 1) return BigRat(1);
    if (l1_full_cycle && l2 == l1 && l3_all_ones)
        return q.marked ? BigRat(1) : BigRat(BigInt(1), BigInt(d));
    if (d >= 3 && l1_full_cycle && is_head_with_ones(l2, 2) &&
        l3 == Partition{d - 1, 1})
        return BigRat(1);
    if (q.marked) return std::nullopt; // remaining shapes are unmarked-only
    if (l1_full_cycle && is_head_with_ones(l2, 2) && l3.size() == 2 &&
        l3[1] >= 2 && l3[0] != l3[1])
        return BigRat(1);
    if (l1_full_cycle && is_head_with_ones(l2, l2.empty() ? 0 : l2[0]) &&
        is_head_with_ones(l3, l3.empty() ? 0 : l3[0]) && l2[0] + l3[0] == d + 1)
        return BigRat(1);
    if (d >= 2 && l1 == Partition{d - 1, 1} &&
        is_head_with_ones(l2, l2.empty() ? 0 : l2[0]) &&
        is_head_with_ones(l3, l3.empty() ? 0 : l3[0]) && l2[0] + l3[0] == d + 2)
        return BigRat(1);
    return std::nullopt;
}

BigRat local_hurwitz_oracle(const LocalHurwitzQuery& q) {
    const Canon c = canonicalize(q);
    const int d = c.d;
    if (d > 7)
        throw OracleRangeError("permutation-triple oracle limited to d <= 7, got d=" +
                               std::to_string(d));
    const std::vector<int> s1 = representative(c.p[0], d);
    const BigInt weight = conjugacy_class_size(c.p[0], d);

    std::vector<int> s2(d);
    std::iota(s2.begin(), s2.end(), 0);
    BigInt triples = 0;
    BigInt fixed_weighted = 0;
    std::vector<int> s3(d);
    do {
        if (cycle_type_of(s2) != c.p[1]) continue;
        for (int x = 0; x < d; ++x) s3[s1[s2[x]]] = x; // s3 = (s1*s2)^{-1}
        if (cycle_type_of(s3) != c.p[2]) continue;
        if (!generates_transitively(s1, s2)) continue;
        triples += 1;
        int fixed = 0;
        for (int x = 0; x < d; ++x)
            if (s3[x] == x) ++fixed;
        fixed_weighted += fixed;
    } while (std::next_permutation(s2.begin(), s2.end()));

    const BigInt numerator = (q.marked ? fixed_weighted : triples) * weight;
    return BigRat(numerator, factorial(d));
}

BigRat local_hurwitz(const LocalHurwitzQuery& q) {
    if (auto value = local_hurwitz_catalog(q)) return *value;
    return local_hurwitz_oracle(q);
}

std::vector<std::vector<int>> partitions_of(int d) {
    if (d < 0) throw DomainError("partitions_of expects d >= 0");
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

} // namespace tevtrop
