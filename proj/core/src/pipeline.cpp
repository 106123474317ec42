#include "cbir/pipeline.hpp"

namespace cbir {

std::vector<Region> segment_image(const GrayImage& img, const PipelineConfig& cfg) {
    return connected_components(threshold_mask(img, cfg.threshold), cfg.connectivity,
                                cfg.min_area);
}

FeatureVector region_features(const GrayImage& img, const Region& region,
                              const PipelineConfig& cfg) {
    return extract_features(extract_subimage(img, region, 1), cfg.scope);
}

std::vector<IndexRecord> index_image(const GrayImage& img, const std::string& id_base,
                                     const std::string& source,
                                     const PipelineConfig& cfg) {
    std::vector<IndexRecord> records;
    const std::vector<Region> regions = segment_image(img, cfg);
    for (std::size_t i = 0; i < regions.size(); ++i) {
        const FeatureVector fv = region_features(img, regions[i], cfg);
        IndexRecord rec;
        rec.id = id_base + "#" + std::to_string(i);
        rec.source = source;
        rec.entropy = fv.entropy;
        rec.phi = fv.phi;
        records.push_back(std::move(rec));
    }
    return records;
}

FeatureVector template_features(const GrayImage& img, const PipelineConfig& cfg) {
    const std::vector<Region> regions = segment_image(img, cfg);
    if (regions.empty())
        throw EmptySample("template image has no region");
    const Region* largest = &regions.front();
    for (const Region& r : regions)
        if (r.pixels.size() > largest->pixels.size())
            largest = &r;
    return region_features(img, *largest, cfg);
}

} // namespace cbir
