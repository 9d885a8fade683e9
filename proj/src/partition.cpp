#include "wlpoly/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

#include "wlpoly/errors.hpp"

namespace wlpoly {

Partition::Partition(std::vector<int> parts) {
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        if (parts[i] < parts[i + 1])
            throw MalformedPartition("parts must be weakly decreasing");
    }
    if (!parts.empty() && parts.back() < 0)
        throw MalformedPartition("parts must be non-negative");
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    parts_ = std::move(parts);
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    const auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t");
        if (b == std::string::npos) return std::string();
        const auto e = s.find_last_not_of(" \t");
        return s.substr(b, e - b + 1);
    };
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string token =
            trim(text.substr(pos, comma == std::string::npos ? std::string::npos
                                                             : comma - pos));
        if (token.empty()) {
            if (!parts.empty() || comma != std::string::npos)
                throw MalformedPartition("empty token in partition '" + text + "'");
        } else {
            int value = 0;
            const auto [ptr, ec] =
                std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
                throw MalformedPartition("bad part '" + token + "'");
            parts.push_back(value);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string Partition::to_text() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::string Partition::to_json_text() const { return "[" + to_text() + "]"; }

std::string DegreeVector::to_text() const {
    std::string out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(entries[i]);
    }
    return out;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        gen_partitions(remaining - p, p, current, out);
        current.pop_back();
    }
}

// Beta set b_j = λ_j + L - j (1-based j) for a fixed padded length L.
// Border-strip moves are single-beta shifts by k; the strip's height is the
// number of other betas strictly between the old and new value.
std::vector<int> beta_set(const Partition& p, int padded_length) {
    std::vector<int> beta(padded_length);
    for (int i = 0; i < padded_length; ++i) {
        const int part = i < p.length() ? p.parts()[i] : 0;
        beta[i] = part + padded_length - 1 - i;
    }
    return beta;
}

Partition partition_from_betas(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    const int len = static_cast<int>(beta.size());
    std::vector<int> parts(len);
    for (int i = 0; i < len; ++i) parts[i] = beta[i] - (len - 1 - i);
    return Partition(std::move(parts));
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> current;
    gen_partitions(n, n, current, out);
    return out;
}

DegreeVector degree_vector(const Partition& p) {
    const int r = p.length();
    DegreeVector dv;
    dv.entries.resize(r);
    for (int i = 0; i < r; ++i) dv.entries[i] = p.parts()[i] + r - (i + 1);
    return dv;
}

Partition partition_from_degree_vector(const DegreeVector& dv) {
    const int r = static_cast<int>(dv.entries.size());
    std::vector<int> parts(r);
    for (int i = 0; i < r; ++i) parts[i] = dv.entries[i] - r + (i + 1);
    return Partition(std::move(parts));
}

std::vector<CoverStep> covers_down(const Partition& p) {
    if (p.empty()) throw EmptyPartition("covers_down: empty partition");
    std::vector<CoverStep> out;
    const auto& parts = p.parts();
    const int r = p.length();
    for (int i = 0; i < r; ++i) {
        const bool removable = (i + 1 == r) || (parts[i] > parts[i + 1]);
        if (!removable) continue;
        std::vector<int> smaller = parts;
        smaller[i] -= 1;
        out.push_back(CoverStep{p, Partition(std::move(smaller)), i + 1,
                                parts[i] - (i + 1)});
    }
    return out;
}

std::vector<CoverStep> covers_up(const Partition& p) {
    std::vector<CoverStep> out;
    const auto& parts = p.parts();
    const int r = p.length();
    for (int i = 0; i < r; ++i) {
        const bool addable = (i == 0) || (parts[i] < parts[i - 1]);
        if (!addable) continue;
        std::vector<int> larger = parts;
        larger[i] += 1;
        out.push_back(CoverStep{Partition(std::move(larger)), p, i + 1,
                                parts[i] + 1 - (i + 1)});
    }
    std::vector<int> larger = parts;
    larger.push_back(1);
    out.push_back(CoverStep{Partition(std::move(larger)), p, r + 1, -r});
    return out;
}

std::vector<BorderStrip> border_strips_down(const Partition& p, int k) {
    if (k < 1) throw std::invalid_argument("border_strips_down: k must be >= 1");
    std::vector<BorderStrip> out;
    const int len = p.length();
    if (len == 0) return out;
    const auto beta = beta_set(p, len);
    const std::set<int> occupied(beta.begin(), beta.end());
    for (int i = 0; i < len; ++i) {
        const int target = beta[i] - k;
        if (target < 0 || occupied.count(target)) continue;
        int height = 0;
        for (int b : occupied) {
            if (b > target && b < beta[i]) ++height;
        }
        auto moved = beta;
        moved[i] = target;
        out.push_back(BorderStrip{p, partition_from_betas(std::move(moved)),
                                  k, height});
    }
    return out;
}

std::vector<BorderStrip> border_strips_up(const Partition& p, int k) {
    if (k < 1) throw std::invalid_argument("border_strips_up: k must be >= 1");
    std::vector<BorderStrip> out;
    const int len = p.length() + k;
    const auto beta = beta_set(p, len);
    const std::set<int> occupied(beta.begin(), beta.end());
    for (int i = 0; i < len; ++i) {
        const int target = beta[i] + k;
        if (occupied.count(target)) continue;
        int height = 0;
        for (int b : occupied) {
            if (b > beta[i] && b < target) ++height;
        }
        auto moved = beta;
        moved[i] = target;
        out.push_back(BorderStrip{partition_from_betas(std::move(moved)), p,
                                  k, height});
    }
    return out;
}

Int f_count(const Partition& p) {
    const auto dv = degree_vector(p).entries;
    const int r = static_cast<int>(dv.size());
    Int num = factorial(p.size());
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) num *= Int(dv[i] - dv[j]);
    }
    Int den(1);
    for (int e : dv) den *= factorial(e);
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw InexactDivision("f_count: formula division left a remainder");
    Int out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

Int f_count_oracle(const Partition& p, int max_size) {
    if (p.size() > max_size)
        throw OracleBoundExceeded("f_count_oracle: partition size " +
                                  std::to_string(p.size()) + " exceeds bound " +
                                  std::to_string(max_size));
    std::map<Partition, Int> memo;
    const auto count = [&](auto&& self, const Partition& q) -> Int {
        if (q.empty()) return Int(1);
        auto it = memo.find(q);
        if (it != memo.end()) return it->second;
        Int total(0);
        for (const auto& step : covers_down(q)) total += self(self, step.smaller);
        memo.emplace(q, total);
        return total;
    };
    return count(count, p);
}

std::pair<Partition, Partition> meet_join(const Partition& a, const Partition& b) {
    const int la = a.length(), lb = b.length();
    std::vector<int> meet(std::min(la, lb)), join(std::max(la, lb));
    for (std::size_t i = 0; i < meet.size(); ++i)
        meet[i] = std::min(a.parts()[i], b.parts()[i]);
    for (std::size_t i = 0; i < join.size(); ++i) {
        const int pa = static_cast<int>(i) < la ? a.parts()[i] : 0;
        const int pb = static_cast<int>(i) < lb ? b.parts()[i] : 0;
        join[i] = std::max(pa, pb);
    }
    return {Partition(std::move(meet)), Partition(std::move(join))};
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return Partition();
    std::vector<int> parts(p.parts()[0]);
    for (int j = 0; j < p.parts()[0]; ++j) {
        int count = 0;
        for (int part : p.parts()) {
            if (part >= j + 1) ++count;
        }
        parts[j] = count;
    }
    return Partition(std::move(parts));
}

} // namespace wlpoly
