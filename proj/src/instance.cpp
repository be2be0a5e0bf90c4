#include "qms/instance.hpp"

#include <fstream>

#include "qms/error.hpp"
#include "qms/json_io.hpp"
#include "qms/random.hpp"

namespace qms {

using json = ordered_json;

GenMode parse_gen_mode(const std::string& s) {
    if (s == "raw") return GenMode::raw;
    if (s == "consistent-three") return GenMode::consistent_three;
    if (s == "consistent-four") return GenMode::consistent_four;
    throw FormatError("unknown generation mode \"" + s + "\"");
}

std::string to_string(GenMode mode) {
    switch (mode) {
        case GenMode::raw: return "raw";
        case GenMode::consistent_three: return "consistent-three";
        case GenMode::consistent_four: return "consistent-four";
    }
    return "?";
}

InstanceDims dims_of(const SevenInput& in) {
    InstanceDims d;
    d.m = in.A.rows();
    d.n = in.A.cols();
    d.p1 = in.B.cols();
    d.p2 = in.C.cols();
    d.p3 = in.D.cols();
    d.q1 = in.E.rows();
    d.q2 = in.F.rows();
    d.q3 = in.G.rows();
    return d;
}

void validate_dims(const SevenInput& in) {
    const int m = in.A.rows(), n = in.A.cols();
    auto expect = [](bool ok, const std::string& what) {
        if (!ok) throw FormatError("dimension mismatch: " + what);
    };
    expect(in.B.rows() == m, "B.rows = " + std::to_string(in.B.rows()) +
                                 " but A.rows = " + std::to_string(m));
    expect(in.C.rows() == m, "C.rows = " + std::to_string(in.C.rows()) +
                                 " but A.rows = " + std::to_string(m));
    expect(in.D.rows() == m, "D.rows = " + std::to_string(in.D.rows()) +
                                 " but A.rows = " + std::to_string(m));
    expect(in.E.cols() == n, "E.cols = " + std::to_string(in.E.cols()) +
                                 " but A.cols = " + std::to_string(n));
    expect(in.F.cols() == n, "F.cols = " + std::to_string(in.F.cols()) +
                                 " but A.cols = " + std::to_string(n));
    expect(in.G.cols() == n, "G.cols = " + std::to_string(in.G.cols()) +
                                 " but A.cols = " + std::to_string(n));
}

std::string instance_to_json(const SevenInput& in) {
    json j;
    j["A"] = matrix_to_json(in.A);
    j["B"] = matrix_to_json(in.B);
    j["C"] = matrix_to_json(in.C);
    j["D"] = matrix_to_json(in.D);
    j["E"] = matrix_to_json(in.E);
    j["F"] = matrix_to_json(in.F);
    j["G"] = matrix_to_json(in.G);
    return j.dump(2) + "\n";
}

SevenInput instance_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& err) {
        throw FormatError(std::string("invalid JSON: ") + err.what());
    }
    SevenInput in;
    for (const char* name : {"A", "B", "C", "D", "E", "F", "G"})
        if (!j.contains(name))
            throw FormatError(std::string("missing matrix \"") + name + "\"");
    in.A = matrix_from_json(j["A"], "A");
    in.B = matrix_from_json(j["B"], "B");
    in.C = matrix_from_json(j["C"], "C");
    in.D = matrix_from_json(j["D"], "D");
    in.E = matrix_from_json(j["E"], "E");
    in.F = matrix_from_json(j["F"], "F");
    in.G = matrix_from_json(j["G"], "G");
    validate_dims(in);
    return in;
}

SevenInput load_instance(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(f)),
                     std::istreambuf_iterator<char>());
    return instance_from_json(text);
}

void save_instance(const std::string& path, const SevenInput& in) {
    std::ofstream f(path);
    if (!f) throw Error("cannot open " + path + " for writing");
    f << instance_to_json(in);
    if (!f) throw Error("write to " + path + " failed");
}

SevenInput gen_instance(std::uint64_t seed, const InstanceDims& d, GenMode mode) {
    Rng rng(seed);
    SevenInput in;
    in.B = rng.matrix(d.m, d.p1);
    in.C = rng.matrix(d.m, d.p2);
    in.D = rng.matrix(d.m, d.p3);
    in.E = rng.matrix(d.q1, d.n);
    in.F = rng.matrix(d.q2, d.n);
    in.G = rng.matrix(d.q3, d.n);
    switch (mode) {
        case GenMode::raw:
            in.A = rng.matrix(d.m, d.n);
            break;
        case GenMode::consistent_three:
            in.A = in.B * rng.matrix(d.p1, d.q1) * in.E +
                   in.C * rng.matrix(d.p2, d.q2) * in.F +
                   in.D * rng.matrix(d.p3, d.q3) * in.G;
            break;
        case GenMode::consistent_four:
            in.A = in.B * rng.matrix(d.p1, d.n) + rng.matrix(d.m, d.q1) * in.E +
                   in.C * rng.matrix(d.p2, d.q2) * in.F +
                   in.D * rng.matrix(d.p3, d.q3) * in.G;
            break;
    }
    return in;
}

}  // namespace qms
