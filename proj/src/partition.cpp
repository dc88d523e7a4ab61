#include "spechtstab/partition.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>

#include "spechtstab/errors.hpp"

namespace spechtstab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            fail(ErrorCode::bad_input, "partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            fail(ErrorCode::bad_input, "partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::row(int n) {
    if (n < 0) fail(ErrorCode::bad_input, "row partition of negative size");
    if (n == 0) return Partition{};
    return Partition{std::vector<int>{n}};
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition{};
    std::vector<int> conj(static_cast<size_t>(parts_[0]), 0);
    for (int part : parts_)
        for (int j = 0; j < part; ++j) ++conj[static_cast<size_t>(j)];
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.rows() > rows()) return false;
    for (int i = 0; i < mu.rows(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "()";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (!s.empty() && ((s.front() == '[' && s.back() == ']') ||
                       (s.front() == '(' && s.back() == ')')))
        s = s.substr(1, s.size() - 2);
    if (s.empty()) return Partition{};
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
        if (tok.empty()) fail(ErrorCode::bad_input, "empty part in partition '" + text + "'");
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            fail(ErrorCode::bad_input, "invalid part '" + tok + "' in partition");
        }
        if (used != tok.size())
            fail(ErrorCode::bad_input, "invalid part '" + tok + "' in partition");
        parts.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

bool canonical_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

bool dominates(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size())
        fail(ErrorCode::size_mismatch,
             "dominance compares equal sizes only: |" + mu.to_string() + "| = " +
                 std::to_string(mu.size()) + " vs |" + lambda.to_string() + "| = " +
                 std::to_string(lambda.size()));
    int rows = std::max(mu.rows(), lambda.rows());
    long long pm = 0, pl = 0;
    for (int i = 0; i < rows; ++i) {
        pm += mu.part(i);
        pl += lambda.part(i);
        if (pm < pl) return false;
    }
    return true;
}

bool stable_dominates(const Partition& a, const Partition& b) {
    // pad(a,N) >= pad(b,N) iff every tail sum of a is <= the matching tail
    // sum of b (the N's cancel in each prefix-sum comparison).
    int rows = std::max(a.rows(), b.rows());
    for (int k = 0; k <= rows; ++k) {
        long long tail_a = 0, tail_b = 0;
        for (int i = k; i < rows; ++i) {
            tail_a += a.part(i);
            tail_b += b.part(i);
        }
        if (tail_a > tail_b) return false;
    }
    return true;
}

bool is_p_regular(const Partition& lambda, long long p) {
    if (p == 0) return true;
    int run = 1;
    for (int i = 1; i < lambda.rows(); ++i) {
        if (lambda.part(i) == lambda.part(i - 1)) {
            if (++run >= p) return false;
        } else {
            run = 1;
        }
    }
    return true;
}

int min_pad_level(const Partition& lambda) { return lambda.size() + lambda.part(0); }

Partition pad(const Partition& lambda, int n) {
    if (n < min_pad_level(lambda))
        fail(ErrorCode::level_too_small,
             "symbol " + lambda.to_string() + " is not realizable at level " +
                 std::to_string(n) + " (needs n >= " + std::to_string(min_pad_level(lambda)) + ")");
    std::vector<int> parts;
    parts.reserve(static_cast<size_t>(lambda.rows()) + 1);
    parts.push_back(n - lambda.size());
    for (int part : lambda.parts()) parts.push_back(part);
    return Partition(std::move(parts));
}

std::vector<Partition> horizontal_strip_removals(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> current;
    // Row i of mu ranges over [lambda_{i+1}, lambda_i]; rows with value 0 end mu.
    auto rec = [&](auto&& self, int i) -> void {
        if (i == lambda.rows()) {
            std::vector<int> trimmed = current;
            while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
            out.emplace_back(std::move(trimmed));
            return;
        }
        int lo = lambda.part(i + 1), hi = lambda.part(i);
        for (int v = hi; v >= lo; --v) {
            current.push_back(v);
            self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

long long hook_dimension(const Partition& lambda) {
    int n = lambda.size();
    if (n > 20)
        fail(ErrorCode::size_limit,
             "hook dimension exceeds exact 64-bit range for |lambda| > 20");
    Partition conj = lambda.conjugate();
    unsigned __int128 hooks = 1;
    for (int i = 0; i < lambda.rows(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) {
            int arm = lambda.part(i) - j - 1;
            int leg = conj.part(j) - i - 1;
            hooks *= static_cast<unsigned>(arm + leg + 1);
        }
    unsigned __int128 fact = 1;
    for (int k = 2; k <= n; ++k) fact *= static_cast<unsigned>(k);
    return static_cast<long long>(fact / hooks);
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) fail(ErrorCode::bad_input, "partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int v = std::min(remaining, max_part); v >= 1; --v) {
            current.push_back(v);
            self(self, remaining - v, v);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= static_cast<unsigned>(n - k + i);
        r /= static_cast<unsigned>(i);
    }
    if (r > static_cast<unsigned __int128>(INT64_MAX))
        fail(ErrorCode::size_limit, "binomial exceeds 64-bit range");
    return static_cast<long long>(r);
}

long long factorial(int n) {
    if (n > 20) fail(ErrorCode::size_limit, "factorial exceeds 64-bit range");
    long long r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

} // namespace spechtstab
