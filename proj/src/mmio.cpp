#include "svdref/mmio.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace svdref {

namespace fs = std::filesystem;
using nlohmann::json;

int roundtrip_digits(prec_t bits) {
    return static_cast<int>(std::ceil(static_cast<double>(bits) * 0.302)) + 2;
}

void write_matrix_market(const fs::path& path, const MpMatrix& M) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    const int digits = roundtrip_digits(M.precision_bits());
    out << "%%MatrixMarket matrix array complex general\n";
    out << "% precision_bits: " << M.precision_bits() << "\n";
    out << M.rows() << " " << M.cols() << "\n";
    // column-major per the format
    for (index_t j = 0; j < M.cols(); ++j)
        for (index_t i = 0; i < M.rows(); ++i)
            out << M(i, j).real().to_string(digits) << " " << M(i, j).imag().to_string(digits)
                << "\n";
    if (!out) throw IoError("write failed: " + path.string());
}

MpMatrix read_matrix_market(const fs::path& path, prec_t bits) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::string header;
    std::getline(in, header);
    if (header.rfind("%%MatrixMarket", 0) != 0)
        throw IoError(path.string() + ": missing MatrixMarket banner");
    std::istringstream hs(header);
    std::string tag, obj, fmt, field, sym;
    hs >> tag >> obj >> fmt >> field >> sym;
    if (obj != "matrix" || fmt != "array")
        throw IoError(path.string() + ": only dense array format is supported");
    const bool complex_field = (field == "complex");
    if (!complex_field && field != "real" && field != "integer")
        throw IoError(path.string() + ": unsupported field " + field);

    std::string line;
    index_t m = 0, n = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '%') continue;
        std::istringstream ls(line);
        if (!(ls >> m >> n)) throw IoError(path.string() + ": bad size line");
        break;
    }
    MpMatrix M(m, n, bits);
    index_t count = 0;
    while (count < m * n && std::getline(in, line)) {
        if (line.empty() || line[0] == '%') continue;
        std::istringstream ls(line);
        std::string re_s, im_s;
        if (!(ls >> re_s)) throw IoError(path.string() + ": truncated data");
        MpReal re = MpReal::from_str(re_s, bits);
        MpReal im(bits);
        if (complex_field) {
            if (!(ls >> im_s)) throw IoError(path.string() + ": missing imaginary part");
            im = MpReal::from_str(im_s, bits);
        }
        const index_t j = count / m, i = count % m;
        M(i, j) = MpComplex(std::move(re), std::move(im));
        ++count;
    }
    if (count != m * n) throw IoError(path.string() + ": expected " + std::to_string(m * n) +
                                      " entries, found " + std::to_string(count));
    return M;
}

void write_triplet(const fs::path& dir, const SvdTriplet& T) {
    fs::create_directories(dir);
    write_matrix_market(dir / "U.mtx", T.U);
    write_matrix_market(dir / "V.mtx", T.V);
    {
        std::ofstream out(dir / "Sigma.txt");
        if (!out) throw IoError("cannot open Sigma.txt for writing");
        const int digits = roundtrip_digits(T.sigma.precision_bits());
        for (index_t i = 0; i < T.sigma.q(); ++i) out << T.sigma.value(i).to_string(digits) << "\n";
    }
    json manifest;
    manifest["m"] = T.m();
    manifest["ell"] = T.ell();
    manifest["n"] = T.n();
    manifest["q"] = T.q();
    manifest["precision_bits"] = static_cast<long>(T.U.precision_bits());
    manifest["mode"] = T.mode == TripletMode::Cluster ? "cluster" : "regular";
    if (T.mode == TripletMode::Cluster) {
        std::vector<std::size_t> mult;
        for (std::size_t b = 0; b < T.partition->blocks(); ++b)
            mult.push_back(T.partition->multiplicity(b));
        manifest["multiplicities"] = mult;
        manifest["delta"] = T.partition->delta().to_string(20);
        write_matrix_market(dir / "SigmaBlock.mtx", T.sigma_block);
    }
    std::ofstream mf(dir / "manifest.json");
    if (!mf) throw IoError("cannot open manifest.json for writing");
    mf << manifest.dump(2) << "\n";
}

SvdTriplet read_triplet(const fs::path& dir) {
    std::ifstream mf(dir / "manifest.json");
    if (!mf) throw IoError("cannot open " + (dir / "manifest.json").string());
    json manifest = json::parse(mf);
    const prec_t bits = manifest.at("precision_bits").get<long>();
    const index_t ell = manifest.at("ell").get<index_t>();
    const index_t q = manifest.at("q").get<index_t>();

    MpMatrix U = read_matrix_market(dir / "U.mtx", bits);
    MpMatrix V = read_matrix_market(dir / "V.mtx", bits);
    DiagonalMatrix sigma(ell, q, bits);
    {
        std::ifstream in(dir / "Sigma.txt");
        if (!in) throw IoError("cannot open Sigma.txt");
        std::string line;
        index_t i = 0;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            if (i >= q) throw IoError("Sigma.txt has more values than the manifest's q");
            sigma.set_value(i++, MpReal::from_str(line, bits));
        }
        if (i != q) throw IoError("Sigma.txt has fewer values than the manifest's q");
    }

    if (manifest.at("mode").get<std::string>() == "cluster") {
        std::vector<std::size_t> mult =
            manifest.at("multiplicities").get<std::vector<std::size_t>>();
        MpReal delta = MpReal::from_str(manifest.at("delta").get<std::string>(), bits);
        SvdTriplet t = SvdTriplet::cluster(std::move(U), std::move(V), std::move(sigma),
                                           ClusterPartition(std::move(mult), std::move(delta)));
        t.sigma_block = read_matrix_market(dir / "SigmaBlock.mtx", bits);
        t.validate();
        return t;
    }
    return SvdTriplet::regular(std::move(U), std::move(V), std::move(sigma));
}

}  // namespace svdref
