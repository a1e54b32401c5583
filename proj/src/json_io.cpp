#include "hurwitz/json_io.hpp"

#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Json rat_json(const Rat& q) {
    Json j;
    j["num"] = q.get_num().get_str();
    j["den"] = q.get_den().get_str();
    return j;
}

Json partition_json(const Partition& p) {
    return Json(p);
}

Json permutation_json(const Permutation& g) {
    Json j = Json::array();
    for (int image : g)
        j.push_back(image + 1);
    return j;
}

Json poly_json(const ParamPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, q] : p.terms()) {
        Json term;
        term["c"] = std::vector<int>(e.begin(), e.begin() + p.L());
        term["d"] = std::vector<int>(e.begin() + p.L(), e.end());
        term["num"] = q.get_num().get_str();
        term["den"] = q.get_den().get_str();
        terms.push_back(std::move(term));
    }
    return terms;
}

Json series_json(const BetaSeries& s) {
    Json j;
    j["order"] = s.order();
    Json coeffs = Json::array();
    for (int d = 0; d <= s.order(); ++d)
        coeffs.push_back(poly_json(s.coeff(d)));
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json table_json(const PQSeries& tau) {
    Json rows = Json::array();
    for (int N = 0; N <= tau.Nmax(); ++N) {
        const auto parts = partitions_of(N);
        for (const auto& mu : parts)
            for (const auto& nu : parts) {
                Json row;
                row["N"] = N;
                row["mu"] = partition_json(mu);
                row["nu"] = partition_json(nu);
                row["series"] = series_json(tau.entry(PQKey{N, mu, nu}));
                rows.push_back(std::move(row));
            }
    }
    return rows;
}

Json constellation_json(const Constellation& c) {
    Json j;
    j["N"] = c.N;
    j["L"] = c.spectrum.L;
    j["J"] = c.spectrum.J;
    Json factors = Json::array();
    const auto slots = cf_slots(c.spectrum);
    for (size_t i = 0; i < slots.size(); ++i) {
        Json f;
        f["colour"] = slots[i].colour;
        f["flavour"] = slots[i].flavour;
        f["perm"] = permutation_json(c.factors[i]);
        factors.push_back(std::move(f));
    }
    j["factors"] = std::move(factors);
    return j;
}

Json census_json(const Census& census) {
    Json j;
    j["method"] = census.method;
    Json rows = Json::array();
    for (const auto& row : census.rows) {
        Json r;
        Json key = Json::array();
        for (const auto& p : row.key)
            key.push_back(partition_json(p));
        r["key"] = std::move(key);
        r["count"] = row.count;
        r["chi"] = row.chi;
        if (row.genus)
            r["genus"] = *row.genus;
        else
            r["genus"] = nullptr;
        r["weight"] = poly_json(row.weight);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json report_json(const HcizReport& r) {
    Json j;
    j["n"] = r.n;
    j["gamma"] = r.gamma;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["rel_err"] = r.rel_err;
    j["N_max"] = r.NMax;
    return j;
}

std::vector<Partition> parse_profiles(const std::string& text) {
    std::vector<Partition> out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ';')) {
        bool blank = true;
        for (char ch : tok)
            if (!isspace(static_cast<unsigned char>(ch)))
                blank = false;
        if (blank)
            throw ValidationError("empty profile in list: '" + text + "'");
        out.push_back(partition_from_string(tok));
    }
    if (out.empty())
        throw ValidationError("no profiles given");
    return out;
}

} // namespace hurwitz
