#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <string>

#include "spinon/aminus.hpp"
#include "spinon/errors.hpp"

namespace spinon {

namespace {

double direct_log_ratio(double x, const QuadratureSpec& quad) {
    return -a_minus_exponent({x, 0.0}, quad) - 2.0 * std::log(x);
}

constexpr const char* kCacheFile = "aminus_table.csv";

}  // namespace

double AMinusTable::phi(int i) const { return i >= 0 ? phi_[i] : phi_[-i - 1]; }

AMinusTable AMinusTable::build(double step, double x_max, const QuadratureSpec& quad) {
    if (!(step > 0.0) || !(x_max > 4.0 * step)) throw DomainError("AMinusTable: bad layout");
    quad.validate();
    AMinusTable t;
    t.step_ = step;
    t.quad_ = quad;
    int n = static_cast<int>(std::ceil(x_max / step));
    t.x_max_ = (n - 2) * step;
    t.phi_.resize(n);
    t.node_error_.assign(n, 0.0);
    for (int i = 0; i < n; ++i) t.phi_[i] = direct_log_ratio((i + 0.5) * step, quad);
    // midpoints are the worst case for cubic interpolation on a uniform grid
    for (int i = 0; i + 2 < n; ++i) {
        double x = (i + 1) * step;
        double exact = a_minus_sq_real(x, quad);
        double rel = std::abs(t(x) / exact - 1.0);
        t.node_error_[i] = std::max(t.node_error_[i], rel);
        t.node_error_[i + 1] = std::max(t.node_error_[i + 1], rel);
        t.max_error_ = std::max(t.max_error_, rel);
    }
    return t;
}

double AMinusTable::operator()(double x) const {
    x = std::abs(x);
    if (x == 0.0) return 0.0;
    double s = x / step_ - 0.5;
    int i = static_cast<int>(std::floor(s));
    if (x >= x_max_ || i + 2 >= static_cast<int>(phi_.size())) return a_minus_sq_real(x, quad_);
    double u = s - i;
    double lm = -u * (u - 1.0) * (u - 2.0) / 6.0;
    double l0 = (u + 1.0) * (u - 1.0) * (u - 2.0) / 2.0;
    double l1 = -(u + 1.0) * u * (u - 2.0) / 2.0;
    double l2 = (u + 1.0) * u * (u - 1.0) / 6.0;
    double p = lm * phi(i - 1) + l0 * phi(i) + l1 * phi(i + 1) + l2 * phi(i + 2);
    return x * x * std::exp(p);
}

void AMinusTable::write_csv(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw Error("AMinusTable: cannot write " + path.string());
    char buf[128];
    std::snprintf(buf, sizeof buf, "# step=%.17g max_interpolation_error=%.17g\n", step_, max_error_);
    out << buf << "x,value,est_error\n";
    for (std::size_t i = 0; i < phi_.size(); ++i) {
        double x = (i + 0.5) * step_;
        double v = x * x * std::exp(phi_[i]);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", x, v, v * node_error_[i]);
        out << buf;
    }
}

AMinusTable AMinusTable::read_csv(const std::filesystem::path& path, double step,
                                  const QuadratureSpec& quad) {
    std::ifstream in(path);
    if (!in) throw Error("AMinusTable: cannot read " + path.string());
    AMinusTable t;
    t.step_ = step;
    t.quad_ = quad;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'x') continue;
        if (line[0] == '#') {
            double s = 0.0, e = 0.0;
            if (std::sscanf(line.c_str(), "# step=%lf max_interpolation_error=%lf", &s, &e) == 2) {
                if (s != step) throw Error("AMinusTable: cached table has a different step");
                t.max_error_ = e;
            }
            continue;
        }
        double x = 0.0, v = 0.0, e = 0.0;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &v, &e) != 3 || !(v > 0.0))
            throw Error("AMinusTable: malformed row in " + path.string());
        if (std::abs(x - (t.phi_.size() + 0.5) * step) > 1e-9 * step)
            throw Error("AMinusTable: node mismatch in " + path.string());
        t.phi_.push_back(std::log(v / (x * x)));
        t.node_error_.push_back(e / v);
    }
    if (t.phi_.size() < 4) throw Error("AMinusTable: cached table too short");
    t.x_max_ = (static_cast<double>(t.phi_.size()) - 2.0) * step;
    return t;
}

const AMinusTable& AMinusTable::shared() {
    static std::once_flag once;
    static AMinusTable table;
    std::call_once(once, [] {
        const char* dir = std::getenv("SPINON_DSF_CACHE");
        if (dir != nullptr && *dir != '\0') {
            std::filesystem::path p = std::filesystem::path(dir) / kCacheFile;
            int expected = static_cast<int>(std::ceil(kDefaultXMax / kDefaultStep));
            if (std::filesystem::exists(p)) {
                try {
                    AMinusTable t = read_csv(p, kDefaultStep);
                    if (static_cast<int>(t.size()) == expected) {
                        table = std::move(t);
                        return;
                    }
                } catch (const Error&) {
                }
            }
            table = build();
            std::error_code ec;
            std::filesystem::create_directories(dir, ec);
            try {
                table.write_csv(p);
            } catch (const Error&) {
            }
            return;
        }
        table = build();
    });
    return table;
}

}  // namespace spinon
