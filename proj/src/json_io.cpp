#include "sinetype/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sinetype {

namespace {

using nlohmann::json;

Complex parse_complex(const json& node, const std::string& where) {
    if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number())
        throw std::invalid_argument("expected [re, im] at " + where);
    return Complex(node[0].get<double>(), node[1].get<double>());
}

json dump_complex(Complex z) { return json::array({z.real(), z.imag()}); }

} // namespace

ThetaFunction parse_theta(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed function JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("function JSON must be an object");

    if (!doc.contains("base") || !doc["base"].is_object())
        throw std::invalid_argument("missing object at base");
    const json& base = doc["base"];
    if (base.value("kind", "") != std::string("sin"))
        throw std::invalid_argument("base.kind must be \"sin\"");
    if (!base.contains("b") || !base["b"].is_number())
        throw std::invalid_argument("base.b must be a number");
    double b = base["b"].get<double>();
    if (!(b > 0.0)) throw std::invalid_argument("base.b must be positive");

    std::vector<Complex> poly;
    if (doc.contains("poly")) {
        if (!doc["poly"].is_array()) throw std::invalid_argument("poly must be an array");
        for (std::size_t i = 0; i < doc["poly"].size(); ++i)
            poly.push_back(parse_complex(doc["poly"][i], "poly[" + std::to_string(i) + "]"));
    }
    if (poly.empty()) poly.push_back(1.0);

    int M = 0;
    std::map<int, Complex> modes;
    if (doc.contains("tail")) {
        const json& tail = doc["tail"];
        if (!tail.is_object()) throw std::invalid_argument("tail must be an object");
        if (!tail.contains("M") || !tail["M"].is_number_integer())
            throw std::invalid_argument("tail.M must be an integer");
        M = tail["M"].get<int>();
        if (M < 0) throw std::invalid_argument("tail.M must be >= 0");
        if (tail.contains("modes")) {
            if (!tail["modes"].is_object())
                throw std::invalid_argument("tail.modes must be an object");
            for (const auto& item : tail["modes"].items()) {
                int k = 0;
                try {
                    std::size_t used = 0;
                    k = std::stoi(item.key(), &used);
                    if (used != item.key().size()) throw std::invalid_argument("");
                } catch (const std::exception&) {
                    throw std::invalid_argument("tail.modes key is not an integer: " + item.key());
                }
                if (k < -M || k > M)
                    throw std::invalid_argument("tail.modes key outside |k| <= M: " + item.key());
                modes[k] = parse_complex(item.value(), "tail.modes[" + item.key() + "]");
            }
        }
    }

    return ThetaFunction(MainPart(SineTypeBase::sin_scaled(b), std::move(poly)),
                         FourierTail(b, M, modes));
}

ThetaFunction read_theta(const std::string& path) {
    return parse_theta(read_text_file(path));
}

namespace {

json tail_node(const FourierTail& tail) {
    json modes = json::object();
    for (int k = -tail.cutoff(); k <= tail.cutoff(); ++k) {
        Complex c = tail.mode(k);
        if (c == 0.0) continue;
        modes[std::to_string(k)] = dump_complex(c);
    }
    return json{{"M", tail.cutoff()}, {"modes", modes}};
}

} // namespace

std::string theta_to_json(const ThetaFunction& theta) {
    json doc;
    doc["base"] = {{"kind", "sin"}, {"b", theta.main().base().type()}};
    json poly = json::array();
    for (Complex c : theta.main().poly_coeffs()) poly.push_back(dump_complex(c));
    doc["poly"] = poly;
    doc["tail"] = tail_node(theta.tail());
    return doc.dump(2) + "\n";
}

std::string tail_to_json(const FourierTail& tail) { return tail_node(tail).dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::invalid_argument("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace sinetype
