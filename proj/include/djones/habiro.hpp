// Cyclotomic expansion of the colored Jones polynomials: kernels, inversion,
// and the built-in coefficient sequences for the knots 3_1, 4_1 and 5_2.
#ifndef DJONES_HABIRO_HPP
#define DJONES_HABIRO_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "djones/bilaurent.hpp"
#include "djones/laurent.hpp"
#include "djones/rational_laurent.hpp"

namespace djones {

// kernel c_{n,k}(q) = q^{-kn} (q^{n+1};q)_k (q^{n-1};q^{-1})_k
Laurent kernel_cnk(long n, long k);
// two-variable kernel c_k(x,q) = x^{-k} (qx;q)_k (q^{-1}x;q^{-1})_k
BiLaurent kernel_x(long k);
// inversion kernel gamma_{k,n}(q); zero for n >= k+2
RationalLaurent gamma_kn(long k, long n);

// closed forms for the built-in knots
Laurent habiro_31(long k);
Laurent habiro_41(long k);
Laurent habiro_52(long k);
// the same sequence for 5_2 through its three-term recursion (valid for all
// integer k, zero for k < 0)
Laurent habiro_recursion_52(long k);

class HabiroSequence {
  public:
    static HabiroSequence builtin(const std::string& knot);
    static HabiroSequence recursion_52();
    static HabiroSequence user(std::string name, std::vector<Laurent> hs);
    static HabiroSequence from_file(const std::string& path);
    static HabiroSequence mirror(const HabiroSequence& seq);

    const std::string& name() const { return name_; }
    const Laurent& h(long k) const;

  private:
    HabiroSequence(std::string name, std::function<Laurent(long)> gen)
        : name_(std::move(name)), gen_(std::move(gen)),
          cache_(std::make_shared<std::vector<Laurent>>()) {}
    std::string name_;
    std::function<Laurent(long)> gen_;
    std::shared_ptr<std::vector<Laurent>> cache_;
};

// J_n(q) = sum_{k<n} c_{n,k}(q) H_k(q), n >= 1
Laurent jones_from_habiro(const HabiroSequence& seq, long n);
// H_k(q) = sum_{n=1}^{k+1} gamma_{k,n}(q) J_n(q); jones[i] = J_{i+1};
// throws when the rational expression fails to cancel to an integral polynomial
Laurent habiro_from_jones(const std::vector<Laurent>& jones, long k);

Laurent mirror_habiro(const HabiroSequence& seq, long k);

}  // namespace djones

#endif
