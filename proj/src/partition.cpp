#include "hurwitz/partition.hpp"

#include <algorithm>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

bool is_valid_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

void require_partition(const Partition& p) {
    if (!is_valid_partition(p))
        throw ValidationError("not a partition (needs weakly decreasing positive parts): " +
                              partition_to_string(p));
}

std::vector<Partition> partitions_of(int N) {
    if (N < 0) throw DomainError("partitions_of: negative weight");
    std::vector<Partition> out;
    Partition cur;
    // Descent with bounded first part emits reverse-lexicographic order directly.
    auto rec = [&](auto&& self, int remaining, int maxPart) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(remaining, maxPart); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, N, N);
    return out;
}

Rat z_mu(const Partition& mu) {
    require_partition(mu);
    Int z = 1;
    int run = 0;
    for (size_t i = 0; i < mu.size(); ++i) {
        ++run;
        z *= mu[i];
        bool lastOfRun = (i + 1 == mu.size()) || mu[i + 1] != mu[i];
        if (lastOfRun) {
            z *= factorial(run);
            run = 0;
        }
    }
    return Rat(z);
}

Int class_size(const Partition& mu) {
    Rat size = Rat(factorial(weight(mu))) / z_mu(mu);
    return size.get_num(); // z_mu divides N! exactly
}

Int hook_product(const Partition& la) {
    require_partition(la);
    Int h = 1;
    int rows = part_count(la);
    // Column lengths read off the conjugate partition.
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < la[i]; ++j) {
            int arm = la[i] - j - 1;
            int leg = 0;
            for (int r = i + 1; r < rows && la[r] > j; ++r) ++leg;
            h *= arm + leg + 1;
        }
    }
    return h;
}

std::vector<int> contents(const Partition& la) {
    require_partition(la);
    std::vector<int> cs;
    cs.reserve(weight(la));
    for (int i = 0; i < part_count(la); ++i)
        for (int j = 0; j < la[i]; ++j) cs.push_back(j - i);
    return cs;
}

Partition union_partitions(const Partition& a, const Partition& b) {
    Partition u;
    u.reserve(a.size() + b.size());
    u.insert(u.end(), a.begin(), a.end());
    u.insert(u.end(), b.begin(), b.end());
    std::sort(u.begin(), u.end(), std::greater<int>());
    return u;
}

std::string partition_to_string(const Partition& p) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ',';
        os << p[i];
    }
    os << ')';
    return os.str();
}

Partition partition_from_string(const std::string& s) {
    std::string body;
    for (char ch : s)
        if (!isspace(static_cast<unsigned char>(ch))) body.push_back(ch);
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    Partition p;
    if (body.empty()) return p;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw ValidationError("bad partition part: '" + tok + "'");
        }
        if (pos != tok.size()) throw ValidationError("bad partition part: '" + tok + "'");
        p.push_back(v);
    }
    require_partition(p);
    return p;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat q;
    try {
        q = Rat(s, 10);
    } catch (const std::invalid_argument&) {
        throw ValidationError("bad rational: '" + s + "'");
    }
    if (q.get_den() == 0) throw ValidationError("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace hurwitz
