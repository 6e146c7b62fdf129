//! Exact integer arithmetic and the p-adic valuation toolkit.
//!
//! Everything here is exact: binomial coefficients over arbitrary-precision
//! integers (with the generalized convention `C(n, k) = 0` for `k < 0`),
//! p-adic valuations with a distinguished infinite value for zero, carry
//! counting in base p (Kummer), and digitwise binomials mod p (Lucas).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A prime number, verified by trial division at construction.
///
/// All primes in scope are small, so trial division is both sufficient and
/// deterministic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 {
            return Err(Error::NotPrime(p));
        }
        let mut d = 2u64;
        while d * d <= p {
            if p % d == 0 {
                return Err(Error::NotPrime(p));
            }
            d += 1;
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.0)
    }
}

impl std::fmt::Display for Prime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A p-adic valuation: either a finite exponent or infinite (valuation of 0).
///
/// Zero values are legitimate in the audits (e.g. a third Chern class can
/// vanish outright), and "divisible by every power" is the right semantics
/// for them, so infinity is a value rather than an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn is_at_least(self, bound: u64) -> bool {
        match self {
            Valuation::Finite(v) => v >= bound,
            Valuation::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl std::fmt::Display for Valuation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Binomial coefficient `C(n, k)` for arbitrary integer `n` and `k`.
///
/// Returns 0 for `k < 0` and for `0 <= n < k`; for negative `n` it is the
/// generalized coefficient `n(n-1)...(n-k+1)/k!`. The zero conventions make
/// expansions like `C(n-3, i-3)` uniform over all `i >= 1` without branching
/// at the call sites.
pub fn binomial<N, K>(n: N, k: K) -> BigInt
where
    N: Into<BigInt>,
    K: Into<BigInt>,
{
    let n: BigInt = n.into();
    let k: BigInt = k.into();
    if k.is_negative() {
        return BigInt::zero();
    }
    if !n.is_negative() && k > n {
        return BigInt::zero();
    }
    let steps = k
        .to_u64()
        .expect("binomial: k exceeds the supported range");
    let mut acc = BigInt::one();
    let mut factor = n;
    for j in 1..=steps {
        acc *= &factor;
        // exact: the running product is C(n, j) * j! / j! at each step
        acc /= BigInt::from(j);
        factor -= 1;
    }
    acc
}

/// Largest `e` with `p^e | x`; `Infinite` for `x = 0`.
pub fn padic_valuation(p: Prime, x: &BigInt) -> Valuation {
    if x.is_zero() {
        return Valuation::Infinite;
    }
    let p = p.to_bigint();
    let mut m = x.abs();
    let mut v = 0u64;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return Valuation::Finite(v);
        }
        v += 1;
        m = q;
    }
}

fn base_digits(p: u64, x: &BigInt) -> Vec<u64> {
    let p = BigInt::from(p);
    let mut m = x.clone();
    let mut digits = Vec::new();
    while !m.is_zero() {
        let (q, r) = m.div_rem(&p);
        digits.push(r.to_u64().expect("digit fits u64"));
        m = q;
    }
    digits
}

/// Number of carries when adding `a` and `b` in base `p`.
///
/// By Kummer's theorem this equals `padic_valuation(p, binomial(a + b, a))`;
/// the equality is enforced by a property test rather than assumed here.
pub fn kummer_carries(p: Prime, a: &BigInt, b: &BigInt) -> Result<u64> {
    if a.is_negative() || b.is_negative() {
        return Err(Error::NegativeInput("kummer_carries"));
    }
    let base = p.get();
    let da = base_digits(base, a);
    let db = base_digits(base, b);
    let mut carries = 0u64;
    let mut carry = 0u64;
    for i in 0..da.len().max(db.len()) {
        let s = da.get(i).copied().unwrap_or(0) + db.get(i).copied().unwrap_or(0) + carry;
        carry = if s >= base { 1 } else { 0 };
        carries += carry;
    }
    Ok(carries)
}

/// `C(n, k) mod p` as the product of digitwise binomials in base `p`
/// (Lucas's theorem).
pub fn lucas_binomial_mod(p: Prime, n: &BigInt, k: &BigInt) -> Result<u64> {
    if n.is_negative() || k.is_negative() {
        return Err(Error::NegativeInput("lucas_binomial_mod"));
    }
    let base = p.get();
    let dn = base_digits(base, n);
    let dk = base_digits(base, k);
    let p_big = p.to_bigint();
    let mut acc = BigInt::one();
    for i in 0..dn.len().max(dk.len()) {
        let nd = dn.get(i).copied().unwrap_or(0);
        let kd = dk.get(i).copied().unwrap_or(0);
        if kd > nd {
            return Ok(0);
        }
        acc = (acc * binomial(nd, kd)) % &p_big;
        if acc.is_zero() {
            return Ok(0);
        }
    }
    Ok(acc.to_u64().expect("residue fits u64"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn prime_construction() {
        for p in [2u64, 3, 5, 7, 11, 13, 101] {
            assert!(Prime::new(p).is_ok());
        }
        for p in [0u64, 1, 4, 6, 9, 15, 91] {
            assert!(matches!(Prime::new(p), Err(Error::NotPrime(_))));
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(6, 2), big(15));
        assert_eq!(binomial(23, 4), big(8855));
        assert_eq!(binomial(4, 0), big(1));
    }

    #[test]
    fn binomial_out_of_range_conventions() {
        // the splitting-principle expansion relies on C(n-3, i-3) = 0 for i < 3
        assert_eq!(binomial(3, -1), big(0));
        assert_eq!(binomial(3, -2), big(0));
        assert_eq!(binomial(2, 5), big(0));
        assert_eq!(binomial(0, 0), big(1));
        // generalized values for negative upper argument
        assert_eq!(binomial(-1, 2), big(1));
        assert_eq!(binomial(-2, 3), big(-4));
    }

    #[test]
    fn valuation_values() {
        let p5 = Prime::new(5).unwrap();
        let p3 = Prime::new(3).unwrap();
        let p2 = Prime::new(2).unwrap();
        assert_eq!(padic_valuation(p5, &big(8855)), Valuation::Finite(1));
        assert_eq!(padic_valuation(p3, &big(27)), Valuation::Finite(3));
        assert_eq!(padic_valuation(p2, &big(0)), Valuation::Infinite);
        assert_eq!(padic_valuation(p3, &big(-54)), Valuation::Finite(3));
    }

    #[test]
    fn valuation_ordering() {
        assert!(Valuation::Finite(2) < Valuation::Finite(3));
        assert!(Valuation::Finite(100) < Valuation::Infinite);
        assert!(Valuation::Infinite.is_at_least(1_000_000));
        assert!(Valuation::Finite(3).is_at_least(3));
        assert!(!Valuation::Finite(2).is_at_least(3));
    }

    #[test]
    fn kummer_examples() {
        let p2 = Prime::new(2).unwrap();
        let p3 = Prime::new(3).unwrap();
        let p5 = Prime::new(5).unwrap();
        assert_eq!(kummer_carries(p2, &big(2), &big(2)).unwrap(), 1);
        assert_eq!(kummer_carries(p3, &big(1), &big(2)).unwrap(), 1);
        assert_eq!(kummer_carries(p5, &big(7), &big(0)).unwrap(), 0);
        assert!(matches!(
            kummer_carries(p2, &big(-1), &big(2)),
            Err(Error::NegativeInput(_))
        ));
    }

    #[test]
    fn lucas_examples() {
        let p2 = Prime::new(2).unwrap();
        let p3 = Prime::new(3).unwrap();
        let p5 = Prime::new(5).unwrap();
        assert_eq!(lucas_binomial_mod(p2, &big(6), &big(2)).unwrap(), 1);
        assert_eq!(lucas_binomial_mod(p3, &big(6), &big(1)).unwrap(), 0);
        assert_eq!(lucas_binomial_mod(p5, &big(0), &big(0)).unwrap(), 1);
        assert!(matches!(
            lucas_binomial_mod(p2, &big(3), &big(-1)),
            Err(Error::NegativeInput(_))
        ));
    }

    /// Legendre's formula, used as an independent oracle for the carry count.
    fn legendre_factorial_valuation(p: u64, n: u64) -> u64 {
        let mut total = 0u64;
        let mut q = p;
        while q <= n {
            total += n / q;
            match q.checked_mul(p) {
                Some(next) => q = next,
                None => break,
            }
        }
        total
    }

    #[test]
    fn legendre_oracle_cross_check_small() {
        // exhaustive over the quantified range from the module invariants
        for &p in &[2u64, 3, 5, 7, 11, 13] {
            let prime = Prime::new(p).unwrap();
            for n in 0u64..=200 {
                for k in 0..=n {
                    let by_legendre = legendre_factorial_valuation(p, n)
                        - legendre_factorial_valuation(p, k)
                        - legendre_factorial_valuation(p, n - k);
                    let by_carries =
                        kummer_carries(prime, &BigInt::from(k), &BigInt::from(n - k)).unwrap();
                    assert_eq!(by_carries, by_legendre, "p={p} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn lucas_observations_for_multiples_of_ell() {
        // for n = k*ell: ell | C(n-2, i-1) when ell | i, and ell | C(n, i) when ell !| i
        for &ell in &[2u64, 3, 5, 7, 11, 13] {
            let p = Prime::new(ell).unwrap();
            for k in 1u64..=8 {
                let n = k * ell;
                for i in 1..n {
                    if i % ell == 0 {
                        let b = binomial(n - 2, i - 1);
                        assert!(
                            padic_valuation(p, &b).is_at_least(1),
                            "ell={ell} k={k} i={i}: C(n-2, i-1)={b}"
                        );
                    } else {
                        let b = binomial(n, i);
                        assert!(
                            padic_valuation(p, &b).is_at_least(1),
                            "ell={ell} k={k} i={i}: C(n, i)={b}"
                        );
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn kummer_equals_binomial_valuation(p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]),
                                            n in 0u64..=200, k in 0u64..=200) {
            prop_assume!(k <= n);
            let prime = Prime::new(p).unwrap();
            let carries = kummer_carries(prime, &BigInt::from(k), &BigInt::from(n - k)).unwrap();
            let val = padic_valuation(prime, &binomial(n, k));
            prop_assert_eq!(Valuation::Finite(carries), val);
        }

        #[test]
        fn lucas_equals_binomial_mod(p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]),
                                     n in 0u64..=200, k in 0u64..=200) {
            let prime = Prime::new(p).unwrap();
            let lucas = lucas_binomial_mod(prime, &BigInt::from(n), &BigInt::from(k)).unwrap();
            let direct = binomial(n, k).mod_floor(&BigInt::from(p));
            prop_assert_eq!(BigInt::from(lucas), direct);
        }
    }
}
