#include "hlb/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace hlb::fft {
namespace {

// rank, n0, n1, howmany, stride, dist, sign
using PlanKey = std::tuple<int, int, int, int, int, int, int>;

class PlanCache {
public:
    ~PlanCache()
    {
        for (auto& [key, plan] : plans_)
            fftw_destroy_plan(plan);
    }

    fftw_plan get(const PlanKey& key)
    {
        std::lock_guard lock(mutex_);
        if (auto it = plans_.find(key); it != plans_.end())
            return it->second;
        auto [rank, n0, n1, howmany, stride, dist, sign] = key;
        const int dims[2] = {n0, n1};
        const std::size_t points = static_cast<std::size_t>(n0) * (rank == 2 ? n1 : 1);
        const std::size_t total = (points - 1) * static_cast<std::size_t>(stride)
            + static_cast<std::size_t>(howmany - 1) * static_cast<std::size_t>(dist) + 1;
        auto* buf = fftw_alloc_complex(total);
        fftw_plan plan = fftw_plan_many_dft(rank, dims, howmany, buf, nullptr, stride, dist, buf,
            nullptr, stride, dist, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(buf);
        plans_.emplace(key, plan);
        return plan;
    }

private:
    std::mutex mutex_;
    std::map<PlanKey, fftw_plan> plans_;
};

PlanCache& cache()
{
    static PlanCache instance;
    return instance;
}

void run(const PlanKey& key, std::complex<double>* data)
{
    auto* p = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(cache().get(key), p, p);
}

int as_int(std::size_t v) { return static_cast<int>(v); }

} // namespace

void forward(std::complex<double>* data, std::size_t n)
{
    run({1, as_int(n), 1, 1, 1, as_int(n), FFTW_FORWARD}, data);
}

void backward(std::complex<double>* data, std::size_t n)
{
    run({1, as_int(n), 1, 1, 1, as_int(n), FFTW_BACKWARD}, data);
}

void forward_2d(std::complex<double>* data, std::size_t rows, std::size_t cols)
{
    run({2, as_int(rows), as_int(cols), 1, 1, as_int(rows * cols), FFTW_FORWARD}, data);
}

void backward_2d(std::complex<double>* data, std::size_t rows, std::size_t cols)
{
    run({2, as_int(rows), as_int(cols), 1, 1, as_int(rows * cols), FFTW_BACKWARD}, data);
}

void forward_many(std::complex<double>* data, std::size_t n, std::size_t howmany)
{
    run({1, as_int(n), 1, as_int(howmany), 1, as_int(n), FFTW_FORWARD}, data);
}

void backward_many(std::complex<double>* data, std::size_t n, std::size_t howmany)
{
    run({1, as_int(n), 1, as_int(howmany), 1, as_int(n), FFTW_BACKWARD}, data);
}

void forward_columns(std::complex<double>* data, std::size_t rows, std::size_t cols)
{
    run({1, as_int(rows), 1, as_int(cols), as_int(cols), 1, FFTW_FORWARD}, data);
}

void backward_columns(std::complex<double>* data, std::size_t rows, std::size_t cols)
{
    run({1, as_int(rows), 1, as_int(cols), as_int(cols), 1, FFTW_BACKWARD}, data);
}

} // namespace hlb::fft
