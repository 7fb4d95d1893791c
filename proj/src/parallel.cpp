#include "permlab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace permlab {

int thread_cap() {
    const char* env = std::getenv("PERMLAB_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    return n >= 1 ? n : 1;
}

Report basis_scan(int n, const std::function<void(int, Report&)>& body) {
    const int cap = std::min({thread_cap(), n, int(std::thread::hardware_concurrency())});
    std::vector<Report> parts(std::max(n, 0));
    if (cap <= 1 || n < 4) {
        for (int i = 0; i < n; ++i) body(i, parts[i]);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(cap);
        for (int w = 0; w < cap; ++w)
            workers.emplace_back([&, w] {
                for (int i = w; i < n; i += cap) body(i, parts[i]);
            });
        for (auto& t : workers) t.join();
    }
    Report merged;
    for (const auto& part : parts) merged.merge(part);
    return merged;
}

}  // namespace permlab
