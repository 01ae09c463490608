#include "graphevade/encoder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace graphevade {

std::size_t FeatureEncoder::one_hot_width() const {
    std::size_t w = 0;
    for (const auto& f : numeric) w += f.n_buckets();
    return w + 2 * apps.size();
}

std::vector<std::string> FeatureEncoder::one_hot_names() const {
    std::vector<std::string> names;
    names.reserve(one_hot_width());
    for (const auto& f : numeric)
        for (std::size_t b = 0; b < f.n_buckets(); ++b)
            names.push_back(f.name + "__b" + std::to_string(b));
    for (const auto& a : apps) {
        names.push_back(a + "__present");
        names.push_back(a + "__absent");
    }
    return names;
}

std::optional<std::size_t> FeatureEncoder::numeric_index(const std::string& name) const {
    for (std::size_t i = 0; i < numeric.size(); ++i)
        if (numeric[i].name == name) return i;
    return std::nullopt;
}

std::vector<double> fit_buckets(std::vector<double> column, int n) {
    if (n < 2) throw std::invalid_argument("fit_buckets: need at least 2 buckets");
    if (column.empty()) throw std::invalid_argument("fit_buckets: empty column");
    std::sort(column.begin(), column.end());
    const std::size_t N = column.size();
    std::vector<double> boundaries;
    for (int k = 1; k < n; ++k) {
        double pos = static_cast<double>(k) / n * static_cast<double>(N - 1);
        std::size_t lo = static_cast<std::size_t>(std::floor(pos));
        double frac = pos - static_cast<double>(lo);
        double q = frac == 0.0 ? column[lo]
                               : column[lo] * (1.0 - frac) + column[lo + 1] * frac;
        if (boundaries.empty() || q > boundaries.back()) boundaries.push_back(q);
    }
    return boundaries;
}

FeatureEncoder fit_encoder(const std::vector<RawRow>& rows,
                           std::vector<std::string> numeric_names,
                           std::vector<std::string> app_vocab, int n_buckets) {
    if (rows.empty()) throw std::invalid_argument("fit_encoder: no training rows");
    FeatureEncoder enc;
    enc.requested_buckets = n_buckets;
    enc.apps = std::move(app_vocab);
    for (std::size_t i = 0; i < numeric_names.size(); ++i) {
        std::vector<double> column;
        column.reserve(rows.size());
        for (const auto& r : rows) {
            if (i >= r.numeric.size())
                throw std::invalid_argument("fit_encoder: row is missing feature " +
                                            numeric_names[i]);
            column.push_back(r.numeric[i]);
        }
        FeatureEncoder::NumericFeature f;
        f.name = std::move(numeric_names[i]);
        // A constant column collapses to a single bucket.
        if (std::all_of(column.begin(), column.end(),
                        [&](double v) { return v == column.front(); }))
            f.boundaries = {};
        else
            f.boundaries = fit_buckets(std::move(column), n_buckets);
        enc.numeric.push_back(std::move(f));
    }
    return enc;
}

int bucket_of(const FeatureEncoder::NumericFeature& f, double value) {
    // upper_bound over "boundary <= value": first boundary strictly greater.
    auto it = std::upper_bound(f.boundaries.begin(), f.boundaries.end(), value,
                               [](double v, double b) { return v < b; });
    return static_cast<int>(it - f.boundaries.begin());
}

BucketedExample encode(std::shared_ptr<const FeatureEncoder> enc, const RawRow& row,
                       bool keep_raw) {
    if (row.numeric.size() != enc->numeric.size())
        throw std::invalid_argument("encode: row has " + std::to_string(row.numeric.size()) +
                                    " numeric features, encoder declares " +
                                    std::to_string(enc->numeric.size()));
    BucketedExample x;
    x.encoder = enc;
    x.buckets.reserve(enc->numeric.size());
    for (std::size_t i = 0; i < enc->numeric.size(); ++i)
        x.buckets.push_back(bucket_of(enc->numeric[i], row.numeric[i]));
    x.app_bits.assign(enc->apps.size(), false);
    for (const auto& a : row.app_list) {
        auto it = std::find(enc->apps.begin(), enc->apps.end(), a);
        if (it == enc->apps.end())
            throw std::invalid_argument("encode: unknown app '" + a + "'");
        x.app_bits[static_cast<std::size_t>(it - enc->apps.begin())] = true;
    }
    if (keep_raw) x.raw = row.numeric;
    return x;
}

std::vector<double> one_hot(const BucketedExample& x) {
    const FeatureEncoder& enc = *x.encoder;
    std::vector<double> v(enc.one_hot_width(), 0.0);
    std::size_t off = 0;
    for (std::size_t i = 0; i < enc.numeric.size(); ++i) {
        v[off + static_cast<std::size_t>(x.buckets[i])] = 1.0;
        off += enc.numeric[i].n_buckets();
    }
    for (std::size_t a = 0; a < enc.apps.size(); ++a) {
        v[off + (x.app_bits[a] ? 0 : 1)] = 1.0;
        off += 2;
    }
    return v;
}

namespace {

std::string fmt_num(double v) {
    char tmp[48];
    std::snprintf(tmp, sizeof tmp, "%g", v);
    return tmp;
}

}  // namespace

std::string bucket_interval(const FeatureEncoder::NumericFeature& f, int bucket) {
    const auto n = static_cast<int>(f.n_buckets());
    if (bucket < 0 || bucket >= n)
        throw std::out_of_range("bucket_interval: bucket index out of range");
    if (n == 1) return "[min, max]";
    if (bucket == 0) return "[min, " + fmt_num(f.boundaries.front()) + "]";
    if (bucket == n - 1) return "(" + fmt_num(f.boundaries.back()) + ", max]";
    return "(" + fmt_num(f.boundaries[bucket - 1]) + ", " +
           fmt_num(f.boundaries[bucket]) + "]";
}

DecodedExample decode(const BucketedExample& x) {
    const FeatureEncoder& enc = *x.encoder;
    DecodedExample d;
    for (std::size_t i = 0; i < enc.numeric.size(); ++i)
        d.intervals.emplace_back(enc.numeric[i].name,
                                 bucket_interval(enc.numeric[i], x.buckets[i]));
    for (std::size_t a = 0; a < enc.apps.size(); ++a)
        if (x.app_bits[a]) d.present_apps.push_back(enc.apps[a]);
    return d;
}

namespace {

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == delim) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<RawRow> load_csv(const std::string& path, const CsvSchema& schema) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open data file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");

    auto header = split(line, ',');
    for (auto& h : header) h = strip(h);

    auto col_of = [&](const std::string& name) {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end())
            throw std::runtime_error(path + ": missing column '" + name + "'");
        return static_cast<std::size_t>(it - header.begin());
    };

    std::vector<std::size_t> numeric_cols;
    for (const auto& n : schema.numeric_names) numeric_cols.push_back(col_of(n));
    std::optional<std::size_t> app_col;
    if (schema.app_column) app_col = col_of(*schema.app_column);

    std::vector<RawRow> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (strip(line).empty()) continue;
        auto cells = split(line, ',');
        if (cells.size() != header.size())
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected " + std::to_string(header.size()) +
                                     " cells, got " + std::to_string(cells.size()));
        RawRow row;
        for (std::size_t i = 0; i < numeric_cols.size(); ++i) {
            const std::string cell = strip(cells[numeric_cols[i]]);
            try {
                std::size_t used = 0;
                row.numeric.push_back(std::stod(cell, &used));
                if (used != cell.size()) throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                         ": cannot parse '" + cell + "' in column '" +
                                         schema.numeric_names[i] + "'");
            }
        }
        if (app_col) {
            const std::string cell = strip(cells[*app_col]);
            if (!cell.empty())
                for (auto& a : split(cell, '|')) row.app_list.push_back(strip(a));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CsvSchema infer_csv_schema(const std::string& path, const std::string& app_column) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open data file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
    CsvSchema schema;
    for (auto& h : split(line, ',')) {
        h = strip(h);
        if (h == app_column)
            schema.app_column = h;
        else
            schema.numeric_names.push_back(h);
    }
    return schema;
}

using nlohmann::json;

std::string save_encoder_json(const FeatureEncoder& enc) {
    json features = json::object();
    json order = json::array();
    for (const auto& f : enc.numeric) {
        features[f.name] = f.boundaries;
        order.push_back(f.name);
    }
    json j;
    j["features"] = features;
    j["feature_order"] = order;
    j["apps"] = enc.apps;
    j["n_buckets"] = enc.requested_buckets;
    return j.dump(2);
}

FeatureEncoder load_encoder_json(const std::string& text) {
    json j = json::parse(text);
    FeatureEncoder enc;
    enc.requested_buckets = j.value("n_buckets", 20);
    enc.apps = j.at("apps").get<std::vector<std::string>>();
    const json& features = j.at("features");
    for (const auto& name : j.at("feature_order")) {
        FeatureEncoder::NumericFeature f;
        f.name = name.get<std::string>();
        f.boundaries = features.at(f.name).get<std::vector<double>>();
        for (std::size_t i = 1; i < f.boundaries.size(); ++i)
            if (!(f.boundaries[i] > f.boundaries[i - 1]))
                throw std::invalid_argument("encoder file: boundaries of '" + f.name +
                                            "' are not strictly increasing");
        enc.numeric.push_back(std::move(f));
    }
    return enc;
}

FeatureEncoder load_encoder_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open encoder file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_encoder_json(ss.str());
}

}  // namespace graphevade
