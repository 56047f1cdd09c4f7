#include "torilab/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>

#include "torilab/coinvariant.hpp"

namespace torilab {

namespace {

using PartVec = std::vector<int>;

// First-column hook lengths ("beta set") beta_j = lambda_j + (len-1-j),
// strictly decreasing. Removing a border strip of length L corresponds to
// replacing some beta_j by beta_j - L, provided the result stays distinct;
// the strip height is the number of beta values jumped over.
PartVec beta_set(const PartVec& lambda) {
    int len = static_cast<int>(lambda.size());
    PartVec beta(lambda.begin(), lambda.end());
    for (int j = 0; j < len; ++j) beta[static_cast<size_t>(j)] += len - 1 - j;
    return beta;
}

PartVec partition_from_beta(PartVec beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    int len = static_cast<int>(beta.size());
    PartVec parts;
    for (int j = 0; j < len; ++j) {
        int p = beta[static_cast<size_t>(j)] - (len - 1 - j);
        if (p > 0) parts.push_back(p);
    }
    return parts;
}

std::mutex g_mn_mutex;
std::map<std::pair<PartVec, PartVec>, long long> g_mn_cache;

long long mn_rec(const PartVec& lambda, const PartVec& mu) {
    if (lambda.empty()) return 1;
    {
        std::lock_guard<std::mutex> lk(g_mn_mutex);
        auto it = g_mn_cache.find({lambda, mu});
        if (it != g_mn_cache.end()) return it->second;
    }
    int strip = mu.front();
    PartVec rest(mu.begin() + 1, mu.end());
    PartVec beta = beta_set(lambda);
    long long total = 0;
    for (size_t j = 0; j < beta.size(); ++j) {
        int target = beta[j] - strip;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int height = 0;
        for (int b : beta) {
            if (b > target && b < beta[j]) ++height;
        }
        PartVec nb = beta;
        nb[j] = target;
        long long sub = mn_rec(partition_from_beta(std::move(nb)), rest);
        total += (height % 2 == 0) ? sub : -sub;
    }
    std::lock_guard<std::mutex> lk(g_mn_mutex);
    g_mn_cache.emplace(std::make_pair(lambda, mu), total);
    return total;
}

} // namespace

long long mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) {
        throw std::invalid_argument("mn_character: |lambda| != |mu|");
    }
    return mn_rec(lambda.parts(), mu.parts());
}

std::vector<int> StandardTableau::descent_set() const {
    int n = shape.size();
    std::vector<int> row_of(static_cast<size_t>(n) + 1, 0);
    for (size_t r = 0; r < rows.size(); ++r) {
        for (int v : rows[r]) row_of[static_cast<size_t>(v)] = static_cast<int>(r);
    }
    std::vector<int> d;
    for (int i = 1; i < n; ++i) {
        if (row_of[static_cast<size_t>(i + 1)] > row_of[static_cast<size_t>(i)]) d.push_back(i);
    }
    return d;
}

int StandardTableau::major_index() const {
    auto d = descent_set();
    return std::accumulate(d.begin(), d.end(), 0);
}

std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& shape) {
    std::vector<StandardTableau> out;
    int n = shape.size();
    const auto& parts = shape.parts();
    std::vector<int> filled(parts.size(), 0);
    std::vector<std::vector<int>> rows(parts.size());
    std::function<void(int)> place = [&](int next) {
        if (next > n) {
            StandardTableau t;
            t.shape = shape;
            t.rows = rows;
            out.push_back(std::move(t));
            return;
        }
        for (size_t r = 0; r < parts.size(); ++r) {
            if (filled[r] >= parts[r]) continue;
            if (r > 0 && filled[r] >= filled[r - 1]) continue; // column would decrease
            rows[r].push_back(next);
            ++filled[r];
            place(next + 1);
            --filled[r];
            rows[r].pop_back();
        }
    };
    place(1);
    return out;
}

std::map<int, long long> f_lambda_i(const Partition& lambda) {
    std::map<int, long long> tally;
    for (const auto& t : enumerate_standard_tableaux(lambda)) tally[t.major_index()] += 1;
    return tally;
}

Integer count_syt_hook(const Partition& lambda) {
    const auto& parts = lambda.parts();
    int rows = lambda.num_parts();
    Integer denom(1);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < parts[static_cast<size_t>(r)]; ++c) {
            int arm = parts[static_cast<size_t>(r)] - c - 1;
            int leg = 0;
            for (int r2 = r + 1; r2 < rows; ++r2) {
                if (parts[static_cast<size_t>(r2)] > c) ++leg;
            }
            denom *= Integer(arm + leg + 1);
        }
    }
    return factorial(lambda.size()) / denom;
}

MultiplicityReport verify_multiplicity_lemma(int n) {
    MultiplicityReport rep;
    rep.n = n;
    if (n < 1) {
        rep.detail = "n must be >= 1";
        return rep;
    }
    GradedCharacter g = graded_char_a(n);
    int top = g.top_degree();
    for (const auto& lambda : enumerate_partitions(n)) {
        ClassFunction chi{Family::A, n, {}};
        chi.values.reserve(g.classes.size());
        for (const auto& c : g.classes) {
            chi.values.push_back(Rational(mn_character(lambda, c.label.positive)));
        }
        auto fmap = f_lambda_i(lambda);
        for (int i = 0; i <= top; ++i) {
            Rational mult = inner_product(chi, g.coefficient(i));
            auto it = fmap.find(i);
            Rational expected(it == fmap.end() ? 0 : it->second);
            if (mult != expected) {
                std::ostringstream os;
                os << "multiplicity mismatch at lambda=" << lambda.str() << ", i=" << i << ": inner product "
                   << mult.str() << " vs f_{lambda,i} " << expected.str();
                rep.detail = os.str();
                return rep;
            }
        }
    }
    rep.ok = true;
    rep.detail = "multiplicities match f_{lambda,i} for all lambda of " + std::to_string(n);
    return rep;
}

} // namespace torilab
