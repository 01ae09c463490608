#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace graphevade {

// Quantile bucketizer plus app-presence vocabulary. Boundaries are the
// k/n quantiles of the training column, deduplicated, so tied quantiles
// collapse into fewer effective buckets.
struct FeatureEncoder {
    struct NumericFeature {
        std::string name;
        std::vector<double> boundaries;  // strictly increasing
        std::size_t n_buckets() const { return boundaries.size() + 1; }
    };

    std::vector<NumericFeature> numeric;
    std::vector<std::string> apps;
    int requested_buckets = 20;

    std::size_t one_hot_width() const;
    // "<feature>__b<i>" per bucket, then "<app>__present"/"<app>__absent".
    std::vector<std::string> one_hot_names() const;
    std::optional<std::size_t> numeric_index(const std::string& name) const;
};

// Boundaries at the k/n quantiles, k = 1..n-1, using the linear-interpolation
// quantile definition; duplicates collapsed.
std::vector<double> fit_buckets(std::vector<double> column, int n);

// One typed dataset row in encoder order.
struct RawRow {
    std::vector<double> numeric;
    std::vector<std::string> app_list;
};

struct BucketedExample {
    std::vector<int> buckets;      // per numeric feature
    std::vector<bool> app_bits;    // presence per app
    std::vector<double> raw;       // raw numeric values; empty unless needed
    std::shared_ptr<const FeatureEncoder> encoder;
};

FeatureEncoder fit_encoder(const std::vector<RawRow>& rows,
                           std::vector<std::string> numeric_names,
                           std::vector<std::string> app_vocab, int n_buckets);

// Bucket index = number of boundaries <= value: a value equal to a cut point
// goes to the higher bucket.
int bucket_of(const FeatureEncoder::NumericFeature& f, double value);

BucketedExample encode(std::shared_ptr<const FeatureEncoder> enc, const RawRow& row,
                       bool keep_raw = false);

std::vector<double> one_hot(const BucketedExample& x);

// Interval rendered in the "(a, b]" style, with "min"/"max" at the extremes.
std::string bucket_interval(const FeatureEncoder::NumericFeature& f, int bucket);

struct DecodedExample {
    std::vector<std::pair<std::string, std::string>> intervals;  // feature -> interval
    std::vector<std::string> present_apps;
};

DecodedExample decode(const BucketedExample& x);

// CSV schema: header must contain every numeric feature; the app column is
// optional and uses '|' between app names.
struct CsvSchema {
    std::vector<std::string> numeric_names;
    std::optional<std::string> app_column;
};

std::vector<RawRow> load_csv(const std::string& path, const CsvSchema& schema);

// Reads the header of a CSV to build a default schema: every column except
// `app_column` (if present) is numeric.
CsvSchema infer_csv_schema(const std::string& path, const std::string& app_column);

std::string save_encoder_json(const FeatureEncoder& enc);
FeatureEncoder load_encoder_json(const std::string& text);
FeatureEncoder load_encoder_file(const std::string& path);

}  // namespace graphevade
