#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "mzv/carlitz.hpp"

namespace mzv {

// Everything that depends on the choice of q, bundled: the field, the
// Carlitz quantities, and memo caches for per-degree values.  The caches
// are an implementation detail; results never depend on their state.
class Ctx {
public:
    explicit Ctx(const FieldSpec& spec) : fq_(Fq::make(spec)), car_(fq_) {}
    explicit Ctx(unsigned q) : fq_(Fq::make(q)), car_(fq_) {}

    const Fq* F() const { return fq_.get(); }
    const std::shared_ptr<const Fq>& fq() const { return fq_; }
    const Carlitz& car() const { return car_; }
    unsigned q() const { return fq_->q(); }

    const TPoly* memo_find(const std::string& key) const {
        std::lock_guard<std::mutex> lk(memo_mu_);
        auto it = memo_.find(key);
        return it == memo_.end() ? nullptr : &it->second;
    }
    void memo_put(const std::string& key, TPoly value) const {
        std::lock_guard<std::mutex> lk(memo_mu_);
        memo_.emplace(std::move(key), std::move(value));
    }

private:
    std::shared_ptr<const Fq> fq_;
    Carlitz car_;
    mutable std::mutex memo_mu_;
    mutable std::map<std::string, TPoly> memo_;
};

}  // namespace mzv
