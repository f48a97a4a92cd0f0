#include "crossfree/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "json.hpp"

namespace crossfree {

VerifyReport verify(const VerifyOptions& options) {
    if (options.max_n < 1) throw std::invalid_argument("max_n must be >= 1");
    const auto start = std::chrono::steady_clock::now();

    VerifyReport report;
    for (int n = 1; n <= options.max_n; ++n) {
        const int top = options.max_k ? std::min(n - 1, *options.max_k) : n - 1;
        for (int k = 0; k <= top; ++k) report.cells.push_back({n, k});
    }
    const BiSeries gf = rhs_series(options.max_n);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < report.cells.size(); i = next++) {
            VerifyCell& cell = report.cells[i];
            try {
                cell.p = count_class({ClassKind::P, cell.n, cell.k}, options.mode);
                cell.s = count_class({ClassKind::S, cell.n, cell.k}, options.mode);
                cell.ct = count_class({ClassKind::CT, cell.n, cell.k}, EnumMode::Filter);
                cell.gf = gf.coeff(cell.n, cell.k);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const unsigned workers = std::max(1U, options.workers);
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    for (const VerifyCell& cell : report.cells) {
        if (cell.agree()) continue;
        ++report.mismatches;
        if (!report.first_mismatch) report.first_mismatch = cell;
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string cell_json(const VerifyCell& cell) {
    nlohmann::ordered_json j;
    j["n"] = cell.n;
    j["k"] = cell.k;
    j["P"] = cell.p;
    j["S"] = cell.s;
    j["CT"] = cell.ct;
    if (cell.gf >= 0 && cell.gf <= std::numeric_limits<std::uint64_t>::max()) {
        j["gf"] = cell.gf.convert_to<std::uint64_t>();
    } else {
        j["gf"] = cell.gf.str();
    }
    j["ok"] = cell.agree();
    return j.dump();
}

}  // namespace crossfree
