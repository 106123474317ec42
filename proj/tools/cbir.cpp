// cbir: index synthetic or real PGM shape images and retrieve them by
// example through the entropy-gate / moment-distance pipeline.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cbir/pipeline.hpp"
#include "cbir/raster.hpp"
#include "cbir/synth.hpp"

namespace fs = std::filesystem;

namespace {

struct GlobalOpts {
    std::string db_path = "cbir.idx";
    cbir::PipelineConfig cfg;
    std::string scope = "foreground";
};

void apply_scope(GlobalOpts& g) {
    g.cfg.scope = g.scope == "whole" ? cbir::EntropyScope::whole
                                     : cbir::EntropyScope::foreground;
}

int cmd_index(const GlobalOpts& g, const std::vector<std::string>& paths) {
    cbir::IndexDb db;
    if (fs::exists(g.db_path))
        db = cbir::db_load_file(g.db_path);
    for (const std::string& path : paths) {
        cbir::GrayImage img;
        try {
            img = cbir::read_pgm_file(path);
        } catch (const cbir::Error& e) {
            std::cerr << "error: " << path << ": " << e.what() << "\n";
            return 1;
        }
        const auto records =
            cbir::index_image(img, fs::path(path).filename().string(), path, g.cfg);
        if (records.empty()) {
            std::cerr << "warning: " << path << ": no regions found, nothing indexed\n";
            continue;
        }
        for (const cbir::IndexRecord& rec : records) {
            try {
                db.add(rec);
            } catch (const cbir::DuplicateId& e) {
                std::cerr << "error: " << path << ": " << e.what() << "\n";
                return 1;  // db file left untouched
            }
            std::printf("indexed\t%s\t%.6f", rec.id.c_str(), rec.entropy);
            for (const double p : rec.phi)
                std::printf("\t%.6f", p);
            std::printf("\n");
        }
    }
    cbir::db_save_file(db, g.db_path);
    return 0;
}

int cmd_query(const GlobalOpts& g, const std::string& template_path) {
    const cbir::IndexDb db = cbir::db_load_file(g.db_path);
    const cbir::GrayImage img = cbir::read_pgm_file(template_path);
    const cbir::FeatureVector fv = cbir::template_features(img, g.cfg);
    const auto results = cbir::query(db, fv, g.cfg.tau, g.cfg.k);
    int rank = 1;
    for (const cbir::QueryResult& r : results)
        std::printf("%d\t%s\t%.6f\t%.6f\t%s\n", rank++, r.id.c_str(), r.distance,
                    r.entropy_gap, r.source.c_str());
    return 0;
}

int cmd_features(const GlobalOpts& g, const std::string& image_path) {
    const cbir::GrayImage img = cbir::read_pgm_file(image_path);
    const auto regions = cbir::segment_image(img, g.cfg);
    for (std::size_t i = 0; i < regions.size(); ++i) {
        const cbir::FeatureVector fv = cbir::region_features(img, regions[i], g.cfg);
        std::printf("%zu\t%.6f", i, fv.entropy);
        for (const double p : fv.phi)
            std::printf("\t%.6f", p);
        for (const double p : fv.psi)
            std::printf("\t%.6f", p);
        std::printf("\n");
    }
    return 0;
}

int cmd_oracle(const GlobalOpts&, const std::string& image_path) {
    const cbir::GrayImage img = cbir::read_pgm_file(image_path);
    const cbir::MomentSet trap = cbir::raw_moments_trap(img);
    const cbir::MomentSet sum = cbir::raw_moments_sum(img);
    double max_gap = 0.0;
    std::printf("p\tq\ttrapezoidal\tsummation\trel_gap\n");
    for (int p = 0; p < 4; ++p) {
        for (int q = 0; q < 4 - p; ++q) {
            const double a = trap.m[p][q], b = sum.m[p][q];
            const double gap = std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
            max_gap = std::max(max_gap, gap);
            std::printf("%d\t%d\t%.17g\t%.17g\t%.3g\n", p, q, a, b, gap);
        }
    }
    std::printf("max_rel_gap\t%.3g\n", max_gap);
    return 0;
}

struct GenOpts {
    std::string shape;
    std::string in_path;
    int corpus_n = -1;
    double radius = 40.0;
    double inner_ratio = 0.5;
    int width = 60, height = 30;
    std::vector<double> vertices;
    int fg = 1;
    double rot = 0.0;
    bool force_bilinear = false;
    double scl = 1.0;
    std::vector<int> shift;
    std::string out_path;
};

int cmd_gen(const GenOpts& o) {
    cbir::GrayImage img;
    if (!o.in_path.empty()) {
        img = cbir::read_pgm_file(o.in_path);
    } else if (o.corpus_n >= 0) {
        const auto entries = cbir::corpus();
        if (o.corpus_n >= static_cast<int>(entries.size())) {
            std::cerr << "error: corpus index out of range (0.."
                      << entries.size() - 1 << ")\n";
            return 1;
        }
        img = cbir::render(entries[static_cast<std::size_t>(o.corpus_n)].spec);
    } else {
        cbir::ShapeSpec spec;
        const auto fg = static_cast<std::uint8_t>(o.fg);
        if (o.shape == "disk") {
            spec = cbir::disk_spec(o.radius, fg);
        } else if (o.shape == "annulus") {
            spec = cbir::annulus_spec(o.radius, o.inner_ratio, fg);
        } else if (o.shape == "rect") {
            spec = cbir::rect_spec(o.width, o.height, fg);
        } else if (o.shape == "triangle") {
            if (o.vertices.size() != 6) {
                std::cerr << "error: triangle needs --vertices ax ay bx by tx ty\n";
                return 2;
            }
            spec = cbir::triangle_spec(o.vertices[0], o.vertices[1], o.vertices[2],
                                       o.vertices[3], o.vertices[4], o.vertices[5], fg);
        } else {
            std::cerr << "error: gen needs --shape, --corpus or --in\n";
            return 2;
        }
        img = cbir::render(spec);
    }
    if (o.rot != 0.0 || o.force_bilinear)
        img = cbir::rotate(img, o.rot, o.force_bilinear);
    if (o.scl != 1.0)
        img = cbir::scale(img, o.scl);
    if (o.shift.size() == 2)
        img = cbir::translate(img, o.shift[0], o.shift[1]);
    cbir::write_pgm_file(img, o.out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"query-by-example shape retrieval over entropy and moment invariants"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--db", g.db_path, "index database path");
    app.add_option("--threshold", g.cfg.threshold, "foreground threshold")
        ->check(CLI::Range(0, 255));
    app.add_option("--connectivity", g.cfg.connectivity, "pixel connectivity")
        ->check(CLI::IsMember({4, 8}));
    app.add_option("--min-area", g.cfg.min_area, "minimum region area in pixels");
    app.add_option("--tau", g.cfg.tau, "entropy gate half-width in bits");
    app.add_option("--top", g.cfg.k, "maximum number of query results");
    app.add_option("--entropy-scope", g.scope, "entropy scope")
        ->check(CLI::IsMember({"foreground", "whole"}));

    std::vector<std::string> index_paths;
    auto* sub_index = app.add_subcommand("index", "segment images and add their regions");
    sub_index->add_option("images", index_paths, "PGM images")->required();

    std::string template_path;
    auto* sub_query = app.add_subcommand("query", "rank indexed regions against a template");
    sub_query->add_option("template", template_path, "template PGM image")->required();

    std::string features_path;
    auto* sub_features = app.add_subcommand("features", "print per-region descriptors");
    sub_features->add_option("image", features_path, "PGM image")->required();

    std::string oracle_path;
    auto* sub_oracle =
        app.add_subcommand("oracle", "compare trapezoidal and summation moments");
    sub_oracle->add_option("image", oracle_path, "PGM image")->required();

    GenOpts go;
    auto* sub_gen = app.add_subcommand("gen", "render or transform synthetic shapes");
    sub_gen->add_option("--shape", go.shape, "disk|rect|triangle|annulus");
    sub_gen->add_option("--in", go.in_path, "transform an existing PGM instead");
    sub_gen->add_option("--corpus", go.corpus_n, "render the nth corpus shape");
    sub_gen->add_option("--radius", go.radius, "disk/annulus outer radius");
    sub_gen->add_option("--inner-ratio", go.inner_ratio, "annulus inner/outer ratio");
    sub_gen->add_option("--width", go.width, "rect width");
    sub_gen->add_option("--height", go.height, "rect height");
    sub_gen->add_option("--vertices", go.vertices, "triangle vertices ax ay bx by tx ty")
        ->expected(6);
    sub_gen->add_option("--fg", go.fg,
                        "foreground intensity (default 1; binary shapes keep their "
                        "foreground entropy stable under rotation and scaling)")
        ->check(CLI::Range(1, 255));
    sub_gen->add_option("--rotate", go.rot, "rotation angle in degrees");
    sub_gen->add_flag("--force-bilinear", go.force_bilinear,
                      "use the bilinear path even for multiples of 90");
    sub_gen->add_option("--scale", go.scl, "scale factor");
    sub_gen->add_option("--translate", go.shift, "integer shift dx dy")->expected(2);
    sub_gen->add_option("out", go.out_path, "output PGM path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    apply_scope(g);
    try {
        if (sub_index->parsed())
            return cmd_index(g, index_paths);
        if (sub_query->parsed())
            return cmd_query(g, template_path);
        if (sub_features->parsed())
            return cmd_features(g, features_path);
        if (sub_oracle->parsed())
            return cmd_oracle(g, oracle_path);
        if (sub_gen->parsed())
            return cmd_gen(go);
    } catch (const cbir::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
