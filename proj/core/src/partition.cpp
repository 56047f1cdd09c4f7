#include "torilab/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace torilab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) throw std::invalid_argument("Partition: parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) throw std::invalid_argument("Partition: empty part in '" + text + "'");
        size_t pos = 0;
        int v = std::stoi(token, &pos);
        if (pos != token.size()) throw std::invalid_argument("Partition: bad part '" + token + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int r) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), r));
}

std::string Partition::str() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s;
}

DoublePartition DoublePartition::parse(const std::string& text) {
    auto bar = text.find('|');
    if (bar == std::string::npos) {
        throw std::invalid_argument("DoublePartition: missing '|' in '" + text + "'");
    }
    return {Partition::parse(text.substr(0, bar)), Partition::parse(text.substr(bar + 1))};
}

namespace {

// Reverse-lexicographic generation: largest first part first.
void gen_partitions(int n, int max_part, std::vector<int>& acc, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(n - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n == 0 ? 1 : n, acc, out);
    return out;
}

std::vector<DoublePartition> enumerate_double_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_double_partitions: n must be nonnegative");
    std::vector<DoublePartition> out;
    for (int k = n; k >= 0; --k) {
        auto mus = enumerate_partitions(k);
        auto lambdas = enumerate_partitions(n - k);
        for (const auto& mu : mus) {
            for (const auto& lam : lambdas) out.push_back({mu, lam});
        }
    }
    return out;
}

Integer z_lambda(const Partition& lambda) {
    Integer z(1);
    int prev = 0;
    for (size_t i = 0; i < lambda.parts().size(); ++i) {
        int r = lambda.parts()[i];
        if (r != prev) {
            int m = lambda.multiplicity(r);
            z *= factorial(m) * int_pow(Integer(r), static_cast<unsigned long>(m));
            prev = r;
        }
    }
    return z;
}

Integer v_mu(const Partition& mu) {
    Integer v(1);
    int prev = 0;
    for (size_t i = 0; i < mu.parts().size(); ++i) {
        int r = mu.parts()[i];
        if (r != prev) {
            int m = mu.multiplicity(r);
            v *= factorial(m) * int_pow(Integer(2 * r), static_cast<unsigned long>(m));
            prev = r;
        }
    }
    return v;
}

Integer class_size_a(const Partition& lambda) {
    Integer size = factorial(lambda.size()) / z_lambda(lambda);
    return size;
}

Integer class_size_bc(const DoublePartition& c) {
    int n = c.size();
    Integer order = int_pow(Integer(2), static_cast<unsigned long>(n)) * factorial(n);
    return order / (v_mu(c.positive) * v_mu(c.negative));
}

} // namespace torilab
