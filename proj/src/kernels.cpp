#include "dqsym/kernels.hpp"

#include <omp.h>

#include <exception>
#include <mutex>
#include <vector>

#include "dqsym/identities.hpp"

namespace dqsym {

namespace {

// Exceptions may not escape an OpenMP region; keep the first and rethrow after.
class ErrorSlot {
public:
    template <class F>
    void run(F&& f) noexcept {
        try {
            f();
        } catch (...) {
            std::lock_guard lock(mu_);
            if (!error_) error_ = std::current_exception();
        }
    }
    void rethrow() const {
        if (error_) std::rethrow_exception(error_);
    }

private:
    std::mutex mu_;
    std::exception_ptr error_;
};

}  // namespace

Element sum_psi_sigma_serial(std::span<const Permutation> perms) {
    Element out;
    for (const Permutation& s : perms) out += psi_sigma(s);
    return out;
}

Element sum_psi_sigma_parallel(std::span<const Permutation> perms) {
    const auto count = static_cast<std::ptrdiff_t>(perms.size());
    std::vector<Element> partial(static_cast<std::size_t>(omp_get_max_threads()));
    ErrorSlot errors;
#pragma omp parallel
    {
        Element& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 16)
        for (std::ptrdiff_t i = 0; i < count; ++i)
            errors.run([&] { local += psi_sigma(perms[static_cast<std::size_t>(i)]); });
    }
    errors.rethrow();
    Element out;
    for (const Element& e : partial) out += e;
    return out;
}

Element sum_psi_sigma(std::span<const Permutation> perms, Execution exec) {
    return exec == Execution::kParallel ? sum_psi_sigma_parallel(perms) : sum_psi_sigma_serial(perms);
}

Element sum_biword_grid_serial(std::span<const Permutation> bottoms, std::span<const Permutation> tops) {
    Element out;
    for (const Permutation& t : bottoms)
        for (const Permutation& s : tops) out.add_term(Biword(t, s.word()), 1);
    return out;
}

Element sum_biword_grid_parallel(std::span<const Permutation> bottoms, std::span<const Permutation> tops) {
    const auto count = static_cast<std::ptrdiff_t>(bottoms.size());
    std::vector<Element> partial(static_cast<std::size_t>(omp_get_max_threads()));
    ErrorSlot errors;
#pragma omp parallel
    {
        Element& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < count; ++i)
            errors.run([&] {
                for (const Permutation& s : tops) local.add_term(Biword(bottoms[static_cast<std::size_t>(i)], s.word()), 1);
            });
    }
    errors.rethrow();
    Element out;
    for (const Element& e : partial) out += e;
    return out;
}

int max_threads() { return omp_get_max_threads(); }

void set_num_threads(int n) {
    if (n > 0) omp_set_num_threads(n);
}

}  // namespace dqsym
