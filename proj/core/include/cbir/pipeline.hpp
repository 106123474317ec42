#ifndef CBIR_PIPELINE_HPP
#define CBIR_PIPELINE_HPP

#include <string>
#include <vector>

#include "cbir/features.hpp"
#include "cbir/index.hpp"
#include "cbir/query.hpp"
#include "cbir/segment.hpp"

namespace cbir {

/// Knobs of the end-to-end workflow, mirrored by the CLI flags.
struct PipelineConfig {
    int threshold = 1;       // nonzero = object
    int connectivity = 8;
    int min_area = 4;
    double tau = 0.5;        // entropy gate, bits
    std::size_t k = 10;      // result count
    EntropyScope scope = EntropyScope::foreground;
};

/// Threshold + connected components with the configured parameters.
std::vector<Region> segment_image(const GrayImage& img, const PipelineConfig& cfg);

/// Features of one region: zero-padded sub-image (margin 1), then the
/// standard descriptor.
FeatureVector region_features(const GrayImage& img, const Region& region,
                              const PipelineConfig& cfg);

/// One record per region, ids "<id_base>#<region-index>".
std::vector<IndexRecord> index_image(const GrayImage& img, const std::string& id_base,
                                     const std::string& source,
                                     const PipelineConfig& cfg);

/// Features of the largest region (most pixels; ties broken by region
/// order). Throws EmptySample if the image has no region.
FeatureVector template_features(const GrayImage& img, const PipelineConfig& cfg);

} // namespace cbir

#endif
